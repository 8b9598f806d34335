// JSON encodings of all engine values.  Element payloads: shift-z as a
// sorted array of [index, value], free-shift as an array of
// [generatorIndex, +-1], times2 as a plain integer.  Rationals are strings
// "p/q".
#ifndef ENDOSTAR_JSON_IO_HPP
#define ENDOSTAR_JSON_IO_HPP

#include <json.hpp>

#include "endostar/certify.hpp"
#include "endostar/ktheory.hpp"

namespace endostar {

using json = nlohmann::json;

json to_json(const GroupInstance& G, const GroupElement& g);
GroupElement element_from_json(const GroupInstance& G, const json& j);

json to_json(const GroupInstance& G, const LatticeSubgroup& L);
LatticeSubgroup subgroup_from_json(const GroupInstance& G, const json& j);

json to_json(const GroupInstance& G, const BasicCoset& c);
BasicCoset coset_from_json(const GroupInstance& G, const json& j);

json to_json(const GroupInstance& G, const VirtualIndicator& v);

json to_json(const Scalar& c);
Scalar scalar_from_json(const json& j);

json to_json(const GroupInstance& G, const Monomial& t);
Monomial monomial_from_json(const GroupInstance& G, const json& j);

json to_json(const GroupInstance& G, const AlgebraElement& x);
AlgebraElement algebra_from_json(const GroupInstance& G, const json& j);

json to_json(const GroupInstance& G, const SemigroupElement& p);
json to_json(const GroupInstance& G, const EnvElement& x);
json to_json(const GroupInstance& G, const RightIdeal& I);

json to_json(const CoeffGroup& A);
json to_json(const CoeffGroup& A, const FinSeq& s);

json to_json(const GroupInstance& G, const Certificate& cert);

}  // namespace endostar

#endif
