// The dense *-algebra: finite linear combinations of canonical monomials
//
//     t(n, a, L, b, m)  =  s*^n  u_a  e_[L]  u_b  s^m
//
// over exact Gaussian-rational scalars.  Canonical labels absorb the
// effective domain/range constraints into L, reduce the isometry depth as far
// as possible, and normalize a to the canonical representative of a*L; with
// that, products, adjoints, the conditional expectation and degree map are
// all exact label computations.
#ifndef ENDOSTAR_ALGEBRA_HPP
#define ENDOSTAR_ALGEBRA_HPP

#include <map>

#include "endostar/coset.hpp"
#include "endostar/scalar.hpp"
#include "endostar/semigroup.hpp"

namespace endostar {

struct Monomial {
    int n = 0;
    GroupElement a;
    LatticeSubgroup L;
    GroupElement b;
    int m = 0;

    bool operator==(const Monomial& o) const {
        return n == o.n && m == o.m && L == o.L && a == o.a && b == o.b;
    }
    bool operator<(const Monomial& o) const {
        if (n != o.n) return n < o.n;
        if (m != o.m) return m < o.m;
        if (L != o.L) return L < o.L;
        if (a != o.a) return a < o.a;
        return b < o.b;
    }
};

// Canonical form of a raw label whose set part is the coset X (a subgroup is
// the coset of its identity).  Returns nothing when the monomial is zero.
std::optional<Monomial> canonicalize(const GroupInstance& G, int n, const GroupElement& a,
                                     const BasicCoset& X, const GroupElement& b, int m);

std::optional<Monomial> mono_mul(const GroupInstance& G, const Monomial& x, const Monomial& y);
Monomial mono_adjoint(const GroupInstance& G, const Monomial& x);
EnvElement degree(const GroupInstance& G, const Monomial& x);

class AlgebraElement {
public:
    AlgebraElement() = default;

    static AlgebraElement zero() { return AlgebraElement(); }
    static AlgebraElement monomial(Monomial t, Scalar c = Scalar::integer(1));

    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    const std::map<Monomial, Scalar>& terms() const { return terms_; }

    void add_term(const Monomial& t, const Scalar& c);

    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    bool operator==(const AlgebraElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const AlgebraElement& o) const { return terms_ != o.terms_; }

private:
    std::map<Monomial, Scalar> terms_; // no zero coefficients
};

AlgebraElement scale(const Scalar& c, const AlgebraElement& x);
AlgebraElement mul(const GroupInstance& G, const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement adjoint(const GroupInstance& G, const AlgebraElement& x);

// Convenient generators.
AlgebraElement alg_one(const GroupInstance& G);
AlgebraElement alg_u(const GroupInstance& G, const GroupElement& g);
AlgebraElement alg_s(const GroupInstance& G, int power = 1);
AlgebraElement alg_s_star(const GroupInstance& G, int power = 1);
AlgebraElement alg_e(const GroupInstance& G, const LatticeSubgroup& L);
AlgebraElement alg_e_coset(const GroupInstance& G, const BasicCoset& c);

// u_g s^n ( x ) s*^n u_{g^-1}
AlgebraElement act_alpha(const GroupInstance& G, const SemigroupElement& p,
                         const AlgebraElement& x);

// Conditional expectation: keeps exactly the terms of identity degree.
AlgebraElement theta(const GroupInstance& G, const AlgebraElement& x);
bool is_identity_degree(const GroupInstance& G, const Monomial& t);

// A term of identity degree is a diagonal projection e_[coset]; this returns
// that coset.
BasicCoset diagonal_coset(const GroupInstance& G, const Monomial& t);

// Scalar-weighted coset combination of a diagonal element.
std::map<BasicCoset, Scalar> diagonal_parts(const GroupInstance& G, const AlgebraElement& x);

// Operator norm of a diagonal element: the maximal |coefficient| over the
// nonempty atoms of its coset family.  Exact as a squared modulus; the plain
// value is reported too whenever the square root is rational.
struct DiagonalNorm {
    Rational norm_sq;
    std::optional<Rational> norm;

    bool operator==(const DiagonalNorm& o) const { return norm_sq == o.norm_sq; }
};
DiagonalNorm diagonal_norm(const GroupInstance& G, const AlgebraElement& x,
                           size_t witness_cap = kDefaultWitnessCap);

// Generator bridge for the semigroup picture: v_(g,n) = u_g s^n and the
// range projection of a principal right ideal.
AlgebraElement li_generator(const GroupInstance& G, const SemigroupElement& p);
AlgebraElement li_ideal_projection(const GroupInstance& G, const RightIdeal& I);

}  // namespace endostar

#endif
