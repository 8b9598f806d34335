// Computable group instances: elements, multiplication, an injective
// endomorphism phi, and the oracles the coset machinery needs (membership,
// canonical coset representatives, index classification, enumeration).
//
// Three instances are provided:
//   shift-z    G = direct sum of Z over N, phi = index shift.  Extra base
//              subgroup "H" = { x : x_0 even }.
//   free-shift G = free group on a_1, a_2, ..., phi(a_i) = a_{i+1}.
//   times2     G = Z, phi(x) = 2x.  Extra base subgroup "H3" = 3Z (for which
//              no power of phi lands inside -- a deliberate contrast case).
#ifndef ENDOSTAR_GROUP_HPP
#define ENDOSTAR_GROUP_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "endostar/error.hpp"

namespace endostar {

// ---------------------------------------------------------------------------
// Elements

// shift-z payload: finitely supported map index -> value, sorted by index,
// no zero values.
using VecZ = std::vector<std::pair<int32_t, int64_t>>;
// free-shift payload: reduced word, letters are signed generator indices
// (+i = a_i, -i = a_i^{-1}), no adjacent cancelling pair.
using Word = std::vector<int32_t>;

struct GroupElement {
    std::variant<VecZ, Word, int64_t> payload;

    GroupElement() : payload(int64_t{0}) {}
    explicit GroupElement(VecZ v) : payload(std::move(v)) {}
    explicit GroupElement(Word w) : payload(std::move(w)) {}
    explicit GroupElement(int64_t n) : payload(n) {}

    bool operator==(const GroupElement& o) const { return payload == o.payload; }
    bool operator!=(const GroupElement& o) const { return payload != o.payload; }
    bool operator<(const GroupElement& o) const { return payload < o.payload; }

    // Injective text encoding; used as hash/map key and in diagnostics.
    std::string key() const;
};

// ---------------------------------------------------------------------------
// Subgroup lattice descriptors
//
// A lattice subgroup is an intersection of terms phi^n(X) where X is one of
// the instance's base subgroups (base 0 is always G itself).  For all the
// provided instances such intersections collapse to a single term, which is
// what canonicalized descriptors hold.

struct LatticeTerm {
    int n = 0;    // power of phi applied to the base
    int base = 0; // index into the instance's base list; 0 = G

    bool operator==(const LatticeTerm& o) const { return n == o.n && base == o.base; }
    bool operator<(const LatticeTerm& o) const {
        if (n != o.n) return n < o.n;
        return base < o.base;
    }
};

struct LatticeSubgroup {
    std::vector<LatticeTerm> terms; // canonical form: exactly one term

    LatticeSubgroup() : terms{LatticeTerm{0, 0}} {}
    explicit LatticeSubgroup(LatticeTerm t) : terms{t} {}

    const LatticeTerm& term() const { return terms.front(); }
    bool is_whole_group() const { return terms.size() == 1 && terms[0].n == 0 && terms[0].base == 0; }

    bool operator==(const LatticeSubgroup& o) const { return terms == o.terms; }
    bool operator!=(const LatticeSubgroup& o) const { return terms != o.terms; }
    bool operator<(const LatticeSubgroup& o) const { return terms < o.terms; }
};

// A left coset rep * sub with rep the instance's canonical representative.
struct BasicCoset {
    GroupElement rep;
    LatticeSubgroup sub;

    bool operator==(const BasicCoset& o) const { return rep == o.rep && sub == o.sub; }
    bool operator!=(const BasicCoset& o) const { return !(*this == o); }
    bool operator<(const BasicCoset& o) const {
        if (sub != o.sub) return sub < o.sub;
        return rep < o.rep;
    }
};

// #[ L / (L cap M) ] classification.
struct IndexClass {
    enum Kind { One, Finite, Infinite } kind = One;
    int64_t count = 1; // meaningful for Finite (and One, where it is 1)

    static IndexClass one() { return {One, 1}; }
    static IndexClass finite(int64_t m) { return {Finite, m}; }
    static IndexClass infinite() { return {Infinite, 0}; }
    bool is_one() const { return kind == One; }
    bool is_finite() const { return kind == Finite; }
    bool is_infinite() const { return kind == Infinite; }
    bool in_one_or_infinite() const { return kind != Finite; }
};

// ---------------------------------------------------------------------------
// Deterministic element enumeration (duplicate-free, starts at the identity,
// exhausts the group: every element appears at some finite position).

class Enumerator {
public:
    virtual ~Enumerator() = default;
    virtual GroupElement next() = 0;
};

// ---------------------------------------------------------------------------
// Instance interface

class GroupInstance {
public:
    virtual ~GroupInstance() = default;

    virtual const std::string& id() const = 0;
    // Base subgroup names; index 0 is "G".  Selection made at construction.
    virtual const std::vector<std::string>& bases() const = 0;

    virtual GroupElement identity() const = 0;
    virtual GroupElement mul(const GroupElement& a, const GroupElement& b) const = 0;
    virtual GroupElement inv(const GroupElement& a) const = 0;

    virtual GroupElement phi(const GroupElement& g) const = 0;
    virtual std::optional<GroupElement> phi_inv(const GroupElement& g) const = 0;

    // g in phi^n(base)?
    virtual bool member_term(const GroupElement& g, const LatticeTerm& t) const = 0;
    // Intersection of two terms, again a single term (holds for all instances
    // here; the base families are closed enough under lcm-style merges).
    virtual LatticeTerm term_intersect(const LatticeTerm& a, const LatticeTerm& b) const = 0;
    // phi^{n_a}(X_a) contains phi^{n_b}(X_b)?
    virtual bool term_contains(const LatticeTerm& a, const LatticeTerm& b) const = 0;
    // Canonical representative of the left coset g*L.
    virtual GroupElement coset_rep(const GroupElement& g, const LatticeSubgroup& L) const = 0;
    // #[ L / (L cap M) ].
    virtual IndexClass index_class(const LatticeSubgroup& L, const LatticeSubgroup& M) const = 0;
    // Representatives of the cosets of S inside L; requires S <= L with finite
    // index.  First representative is the identity.
    virtual std::vector<GroupElement> coset_transversal(const LatticeSubgroup& L,
                                                        const LatticeSubgroup& S) const = 0;
    // Least m with phi^m(G) inside L, or absent if none exists.
    virtual std::optional<int> min_phi_power_inside(const LatticeSubgroup& L) const = 0;

    virtual std::unique_ptr<Enumerator> enumerate() const = 0;
    // Enumerates the elements of L (same order as enumerate(), transported
    // through an isomorphism G -> L).
    virtual std::unique_ptr<Enumerator> enumerate_subgroup(const LatticeSubgroup& L) const = 0;

    // Intersection of two basic cosets: a basic coset or empty.
    virtual std::optional<BasicCoset> coset_intersect(const BasicCoset& a,
                                                      const BasicCoset& b) const = 0;

    // JSON payload round trip (format is instance specific, see encode_json).
    virtual std::string element_brief(const GroupElement& g) const = 0;

    // --- derived helpers -----------------------------------------------

    GroupElement phi_pow(const GroupElement& g, int n) const;
    std::optional<GroupElement> phi_preimage(const GroupElement& g, int n) const;
    bool member(const GroupElement& g, const LatticeSubgroup& L) const;
    bool member_coset(const GroupElement& g, const BasicCoset& c) const;
    LatticeSubgroup subgroup_intersect(const LatticeSubgroup& a, const LatticeSubgroup& b) const;
    // Canonicalizes a list of terms by folding pairwise intersections.
    LatticeSubgroup make_subgroup(const std::vector<LatticeTerm>& terms) const;
    LatticeSubgroup phi_power_subgroup(int n) const { return LatticeSubgroup(LatticeTerm{n, 0}); }
    LatticeSubgroup whole_group() const { return phi_power_subgroup(0); }
    BasicCoset make_coset(const GroupElement& rep, const LatticeSubgroup& sub) const;
    BasicCoset coset_translate(const BasicCoset& c, const GroupElement& g) const;
    BasicCoset coset_phi(const BasicCoset& c, int k) const;
    // phi^{-k} of a coset whose terms all have depth >= k.
    BasicCoset coset_phi_inv(const BasicCoset& c, int k) const;
    int base_index(const std::string& name) const;
};

std::unique_ptr<GroupInstance> make_instance(const std::string& id,
                                             const std::vector<std::string>& bases);
// Default base selections: shift-z -> {G,H}, times2 -> {G}, free-shift -> {G}.
std::unique_ptr<GroupInstance> make_instance(const std::string& id);

// ---------------------------------------------------------------------------
// Probes

struct PurityReport {
    int max_power = 0;          // N
    size_t sampled = 0;
    int deepest_survival = 0;   // largest n <= N with some sampled g != e in phi^n(G)
    std::vector<GroupElement> violators; // elements in phi^n(G) for every n <= N
    bool ok() const { return violators.empty(); }
};

// Checks that no non-identity element of the sample lies in phi^n(G) for all
// n <= max_power.  The sample is the first `sample_size` enumerated elements.
PurityReport purity_probe(const GroupInstance& G, int max_power, size_t sample_size);

struct HypothesisReport {
    bool holds = false;
    int k = 0; // least k with phi^k(G) inside every base subgroup, when holds
    // For each failing base: name and a witness in phi^n(G) \ base for each
    // probed n (empty witness list means the oracle alone decided).
    std::vector<std::pair<std::string, std::vector<GroupElement>>> failures;
};

// Does some phi^k(G) sit inside the intersection of all base subgroups?
HypothesisReport check_phi_power_hypothesis(const GroupInstance& G, int probe_depth = 6,
                                            size_t probe_elems = 4000);

}  // namespace endostar

#endif
