// The semidirect-product semigroup S = G x| N with (g,n)(h,m) =
// (g phi^n(h), n+m), its enveloping group (direct limit of G under phi,
// extended by Z), and the constructible right ideals (g,n)S.
#ifndef ENDOSTAR_SEMIGROUP_HPP
#define ENDOSTAR_SEMIGROUP_HPP

#include "endostar/group.hpp"

namespace endostar {

struct SemigroupElement {
    GroupElement g;
    int n = 0;

    bool operator==(const SemigroupElement& o) const { return n == o.n && g == o.g; }
    bool operator<(const SemigroupElement& o) const {
        if (n != o.n) return n < o.n;
        return g < o.g;
    }
};

SemigroupElement s_mul(const GroupInstance& G, const SemigroupElement& p,
                       const SemigroupElement& q);

// (c_p, c_q) with c_p * p == c_q * q; both products equal (e, p.n + q.n).
std::pair<SemigroupElement, SemigroupElement> common_left_multiple(const GroupInstance& G,
                                                                   const SemigroupElement& p,
                                                                   const SemigroupElement& q);

// Element of the enveloping group: a group element remembered at a level of
// the direct limit (g at level i stands for the class of phi^{-i}(g)), plus
// an integer power of the extended automorphism.  Normal form pushes the
// level down while g lies in phi(G).
struct EnvElement {
    GroupElement g;
    int level = 0;
    int z = 0;

    bool operator==(const EnvElement& o) const {
        return level == o.level && z == o.z && g == o.g;
    }
};

EnvElement env_normalize(const GroupInstance& G, EnvElement x);
EnvElement env_identity(const GroupInstance& G);
EnvElement env_mul(const GroupInstance& G, const EnvElement& x, const EnvElement& y);
EnvElement env_inv(const GroupInstance& G, const EnvElement& x);
EnvElement embed(const GroupInstance& G, const SemigroupElement& p);
// (p, q) with embed(p)^{-1} * embed(q) == x.
std::pair<SemigroupElement, SemigroupElement> env_factor(const GroupInstance& G,
                                                         const EnvElement& x);

// ---------------------------------------------------------------------------

struct RightIdeal {
    bool empty = true;
    SemigroupElement gen; // meaningful when !empty: the ideal (g,n)S

    static RightIdeal none() { return RightIdeal{}; }
    static RightIdeal principal(SemigroupElement p) { return RightIdeal{false, std::move(p)}; }
    bool operator==(const RightIdeal& o) const {
        if (empty != o.empty) return false;
        return empty || gen == o.gen;
    }
};

// Canonical-generator form: the representative (g,n) itself generates, and
// membership is p >= n together with g^{-1} x in phi^n(G).
bool ideal_member(const GroupInstance& G, const SemigroupElement& x, const RightIdeal& I);
RightIdeal ideal_intersect(const GroupInstance& G, const RightIdeal& I, const RightIdeal& J);
// p^{-1} I  =  { x in S : p x in I }.
RightIdeal ideal_preimage(const GroupInstance& G, const SemigroupElement& p, const RightIdeal& I);

}  // namespace endostar

#endif
