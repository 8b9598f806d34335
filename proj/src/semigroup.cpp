#include "endostar/semigroup.hpp"

namespace endostar {

SemigroupElement s_mul(const GroupInstance& G, const SemigroupElement& p,
                       const SemigroupElement& q) {
    return SemigroupElement{G.mul(p.g, G.phi_pow(q.g, p.n)), p.n + q.n};
}

std::pair<SemigroupElement, SemigroupElement> common_left_multiple(const GroupInstance& G,
                                                                   const SemigroupElement& p,
                                                                   const SemigroupElement& q) {
    SemigroupElement cp{G.phi_pow(G.inv(p.g), q.n), q.n};
    SemigroupElement cq{G.phi_pow(G.inv(q.g), p.n), p.n};
    return {cp, cq};
}

EnvElement env_normalize(const GroupInstance& G, EnvElement x) {
    while (x.level > 0) {
        auto p = G.phi_inv(x.g);
        if (!p) break;
        x.g = *p;
        --x.level;
    }
    return x;
}

EnvElement env_identity(const GroupInstance& G) { return EnvElement{G.identity(), 0, 0}; }

namespace {

// class of x lifted to the given level (>= x.level)
GroupElement lift(const GroupInstance& G, const EnvElement& x, int level) {
    return G.phi_pow(x.g, level - x.level);
}

// applies the extended automorphism z times (z may be negative) to the group
// part, producing a raw (unnormalized) element
EnvElement phibar(const GroupInstance& G, const EnvElement& x, int z) {
    EnvElement out = x;
    out.level = x.level + (z < 0 ? -z : 0);
    if (z > 0) {
        if (x.level >= z)
            out.level = x.level - z;
        else {
            out.level = 0;
            out.g = G.phi_pow(x.g, z - x.level);
        }
    }
    return env_normalize(G, out);
}

}  // namespace

EnvElement env_mul(const GroupInstance& G, const EnvElement& x, const EnvElement& y) {
    EnvElement ys = phibar(G, EnvElement{y.g, y.level, 0}, x.z);
    int level = std::max(x.level, ys.level);
    EnvElement out;
    out.g = G.mul(lift(G, x, level), lift(G, ys, level));
    out.level = level;
    out.z = x.z + y.z;
    return env_normalize(G, out);
}

EnvElement env_inv(const GroupInstance& G, const EnvElement& x) {
    EnvElement raw{G.inv(x.g), x.level, 0};
    EnvElement shifted = phibar(G, raw, -x.z);
    shifted.z = -x.z;
    return env_normalize(G, shifted);
}

EnvElement embed(const GroupInstance& G, const SemigroupElement& p) {
    return env_normalize(G, EnvElement{p.g, 0, p.n});
}

std::pair<SemigroupElement, SemigroupElement> env_factor(const GroupInstance& G,
                                                         const EnvElement& x) {
    int level = std::max(x.level, -x.z);
    SemigroupElement p{G.inv(lift(G, x, level)), level};
    SemigroupElement q{G.identity(), x.z + level};
    return {p, q};
}

// ---------------------------------------------------------------------------

bool ideal_member(const GroupInstance& G, const SemigroupElement& x, const RightIdeal& I) {
    if (I.empty) return false;
    if (x.n < I.gen.n) return false;
    return G.member(G.mul(G.inv(I.gen.g), x.g), G.phi_power_subgroup(I.gen.n));
}

RightIdeal ideal_intersect(const GroupInstance& G, const RightIdeal& I, const RightIdeal& J) {
    if (I.empty || J.empty) return RightIdeal::none();
    const SemigroupElement &a = I.gen.n <= J.gen.n ? I.gen : J.gen,
                           &b = I.gen.n <= J.gen.n ? J.gen : I.gen;
    if (!G.member(G.mul(G.inv(a.g), b.g), G.phi_power_subgroup(a.n))) return RightIdeal::none();
    return RightIdeal::principal(b);
}

RightIdeal ideal_preimage(const GroupInstance& G, const SemigroupElement& p, const RightIdeal& I) {
    if (I.empty) return RightIdeal::none();
    const auto& [g, n] = I.gen;
    GroupElement d = G.mul(G.inv(p.g), g); // p.g^{-1} g
    if (p.n >= n) {
        // p x lands deep enough automatically; the congruence is on d alone
        if (G.member(G.inv(d), G.phi_power_subgroup(n)))
            return RightIdeal::principal(SemigroupElement{G.identity(), 0});
        return RightIdeal::none();
    }
    auto d0 = G.phi_preimage(d, p.n);
    if (!d0) return RightIdeal::none();
    return RightIdeal::principal(SemigroupElement{*d0, n - p.n});
}

}  // namespace endostar
