#include "endostar/algebra.hpp"

#include <algorithm>

namespace endostar {

std::optional<Monomial> canonicalize(const GroupInstance& G, int n, const GroupElement& a_in,
                                     const BasicCoset& X_in, const GroupElement& b_in, int m) {
    if (n < 0 || m < 0) throw Error(ErrorCode::InvalidArgument, "negative isometry power");
    GroupElement a = a_in, b = b_in;
    BasicCoset X = X_in;

    LatticeSubgroup L = X.sub;
    for (;;) {
        // effective set: X cut down to the range of u_b s^m and the domain of
        // s*^n u_a
        auto X1 = G.coset_intersect(X, G.make_coset(b, G.phi_power_subgroup(m)));
        if (!X1) return std::nullopt;
        auto X2 = G.coset_intersect(*X1, G.make_coset(G.inv(a), G.phi_power_subgroup(n)));
        if (!X2) return std::nullopt;

        // factor X2 = t * L and absorb t into the unitaries
        const GroupElement& t = X2->rep;
        L = X2->sub;
        a = G.mul(a, t);
        b = G.mul(G.inv(t), b);

        // depth reduction
        LatticeSubgroup phiG = G.phi_power_subgroup(1);
        bool reducible = n >= 1 && m >= 1 && G.member(a, phiG) && G.member(b, phiG);
        if (reducible) {
            for (const auto& term : L.terms) reducible = reducible && term.n >= 1;
        }
        if (!reducible) break;
        --n;
        --m;
        a = *G.phi_preimage(a, 1);
        b = *G.phi_preimage(b, 1);
        LatticeSubgroup L0 = L;
        for (auto& term : L0.terms) --term.n;
        L = L0;
        X = BasicCoset{G.identity(), L};
    }

    // normalize a to the canonical representative of a*L
    GroupElement r = G.coset_rep(a, L);
    GroupElement t = G.mul(G.inv(a), r);
    a = r;
    b = G.mul(G.inv(t), b);
    return Monomial{n, a, L, b, m};
}

std::optional<Monomial> mono_mul(const GroupInstance& G, const Monomial& x, const Monomial& y) {
    // s*^{n1} u_{a1} e_{L1} u_{b1} s^{m1} * s*^{n2} u_{a2} e_{L2} u_{b2} s^{m2}
    // = s*^{n1+n2} u_{phi^{n2}(a1 b1)}
    //     e_[ phi^{n2}(b1^{-1} L1) ^ phi^{n2+m1}(G) ^ phi^{m1}(a2 L2) ]
    //   u_{phi^{m1}(a2 b2)} s^{m1+m2}
    BasicCoset c1 = G.coset_phi(G.make_coset(G.inv(x.b), x.L), y.n);
    BasicCoset c2 = BasicCoset{G.identity(), G.phi_power_subgroup(y.n + x.m)};
    BasicCoset c3 = G.coset_phi(G.make_coset(y.a, y.L), x.m);
    auto X = G.coset_intersect(c1, c2);
    if (!X) return std::nullopt;
    X = G.coset_intersect(*X, c3);
    if (!X) return std::nullopt;
    GroupElement A = G.phi_pow(G.mul(x.a, x.b), y.n);
    GroupElement B = G.phi_pow(G.mul(y.a, y.b), x.m);
    return canonicalize(G, x.n + y.n, A, *X, B, x.m + y.m);
}

Monomial mono_adjoint(const GroupInstance& G, const Monomial& x) {
    auto t = canonicalize(G, x.m, G.inv(x.b), BasicCoset{G.identity(), x.L}, G.inv(x.a), x.n);
    if (!t) throw Error(ErrorCode::InvalidArgument, "adjoint of a canonical monomial vanished");
    return *t;
}

EnvElement degree(const GroupInstance& G, const Monomial& x) {
    // class of a*b at level n, paired with m - n
    return env_normalize(G, EnvElement{G.mul(x.a, x.b), x.n, x.m - x.n});
}

// ---------------------------------------------------------------------------

AlgebraElement AlgebraElement::monomial(Monomial t, Scalar c) {
    AlgebraElement x;
    x.add_term(t, c);
    return x;
}

void AlgebraElement::add_term(const Monomial& t, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(t);
    if (it == terms_.end()) {
        terms_.emplace(t, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    AlgebraElement out = *this;
    for (auto& [t, c] : o.terms_) out.add_term(t, c);
    return out;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
    AlgebraElement out = *this;
    for (auto& [t, c] : o.terms_) out.add_term(t, -c);
    return out;
}

AlgebraElement scale(const Scalar& c, const AlgebraElement& x) {
    AlgebraElement out;
    for (auto& [t, k] : x.terms()) out.add_term(t, c * k);
    return out;
}

AlgebraElement mul(const GroupInstance& G, const AlgebraElement& x, const AlgebraElement& y) {
    AlgebraElement out;
    for (auto& [tx, cx] : x.terms())
        for (auto& [ty, cy] : y.terms()) {
            auto t = mono_mul(G, tx, ty);
            if (t) out.add_term(*t, cx * cy);
        }
    return out;
}

AlgebraElement adjoint(const GroupInstance& G, const AlgebraElement& x) {
    AlgebraElement out;
    for (auto& [t, c] : x.terms()) out.add_term(mono_adjoint(G, t), c.conj());
    return out;
}

AlgebraElement alg_one(const GroupInstance& G) {
    return AlgebraElement::monomial(Monomial{0, G.identity(), G.whole_group(), G.identity(), 0});
}

AlgebraElement alg_u(const GroupInstance& G, const GroupElement& g) {
    auto t = canonicalize(G, 0, g, BasicCoset{G.identity(), G.whole_group()}, G.identity(), 0);
    return AlgebraElement::monomial(*t);
}

AlgebraElement alg_s(const GroupInstance& G, int power) {
    auto t = canonicalize(G, 0, G.identity(), BasicCoset{G.identity(), G.whole_group()},
                          G.identity(), power);
    return AlgebraElement::monomial(*t);
}

AlgebraElement alg_s_star(const GroupInstance& G, int power) {
    auto t = canonicalize(G, power, G.identity(), BasicCoset{G.identity(), G.whole_group()},
                          G.identity(), 0);
    return AlgebraElement::monomial(*t);
}

AlgebraElement alg_e(const GroupInstance& G, const LatticeSubgroup& L) {
    auto t = canonicalize(G, 0, G.identity(), BasicCoset{G.identity(), L}, G.identity(), 0);
    return AlgebraElement::monomial(*t);
}

AlgebraElement alg_e_coset(const GroupInstance& G, const BasicCoset& c) {
    auto t = canonicalize(G, 0, c.rep, BasicCoset{G.identity(), c.sub}, G.inv(c.rep), 0);
    return AlgebraElement::monomial(*t);
}

AlgebraElement act_alpha(const GroupInstance& G, const SemigroupElement& p,
                         const AlgebraElement& x) {
    AlgebraElement left = mul(G, alg_u(G, p.g), alg_s(G, p.n));
    return mul(G, left, mul(G, x, adjoint(G, left)));
}

bool is_identity_degree(const GroupInstance& G, const Monomial& t) {
    EnvElement d = degree(G, t);
    return d.z == 0 && d.level == 0 && d.g == G.identity();
}

AlgebraElement theta(const GroupInstance& G, const AlgebraElement& x) {
    AlgebraElement out;
    for (auto& [t, c] : x.terms())
        if (is_identity_degree(G, t)) out.add_term(t, c);
    return out;
}

BasicCoset diagonal_coset(const GroupInstance& G, const Monomial& t) {
    if (!is_identity_degree(G, t))
        throw Error(ErrorCode::NotDiagonal, "term does not have identity degree");
    BasicCoset c = G.make_coset(t.a, t.L);
    // canonical identity-degree labels have n = m = 0; tolerate deeper labels
    if (t.n > 0) c = G.coset_phi_inv(c, t.n);
    return c;
}

std::map<BasicCoset, Scalar> diagonal_parts(const GroupInstance& G, const AlgebraElement& x) {
    std::map<BasicCoset, Scalar> out;
    for (auto& [t, c] : x.terms()) {
        BasicCoset d = diagonal_coset(G, t);
        auto it = out.find(d);
        if (it == out.end())
            out.emplace(d, c);
        else {
            it->second += c;
            if (it->second.is_zero()) out.erase(it);
        }
    }
    return out;
}

DiagonalNorm diagonal_norm(const GroupInstance& G, const AlgebraElement& x, size_t witness_cap) {
    auto parts = diagonal_parts(G, x);
    DiagonalNorm out;
    out.norm_sq = Rational(0);
    if (parts.empty()) {
        out.norm = Rational(0);
        return out;
    }
    std::vector<BasicCoset> cosets;
    std::vector<Scalar> coeffs;
    for (auto& [c, k] : parts) {
        cosets.push_back(c);
        coeffs.push_back(k);
    }
    Scalar best;
    for (const Atom& a : orthogonalize(G, cosets, witness_cap)) {
        Scalar v;
        for (size_t i = 0; i < cosets.size(); ++i)
            if (a.support >> i & 1) v += coeffs[i];
        if (v.abs_sq() > out.norm_sq) {
            out.norm_sq = v.abs_sq();
            best = v;
        }
    }
    out.norm = rational_sqrt_exact(out.norm_sq);
    return out;
}

AlgebraElement li_generator(const GroupInstance& G, const SemigroupElement& p) {
    return mul(G, alg_u(G, p.g), alg_s(G, p.n));
}

AlgebraElement li_ideal_projection(const GroupInstance& G, const RightIdeal& I) {
    if (I.empty) return AlgebraElement::zero();
    BasicCoset c = G.make_coset(I.gen.g, G.phi_power_subgroup(I.gen.n));
    return alg_e_coset(G, c);
}

}  // namespace endostar
