#include "endostar/coset.hpp"

#include <algorithm>

namespace endostar {

int64_t VirtualIndicator::eval(const GroupInstance& G, const GroupElement& g) const {
    int64_t v = 0;
    for (auto& [c, k] : terms)
        if (G.member_coset(g, c)) v += k;
    return v;
}

VirtualIndicator indicator_restrict(const GroupInstance& G, const VirtualIndicator& v,
                                    const BasicCoset& c) {
    VirtualIndicator out;
    for (auto& [d, k] : v.terms) {
        auto meet = G.coset_intersect(c, d);
        if (meet) out.add(*meet, k);
    }
    return out;
}

GroupElement witness_outside(const GroupInstance& G, const BasicCoset& D,
                             const std::vector<BasicCoset>& excluded, size_t cap) {
    auto en = G.enumerate_subgroup(D.sub);
    for (size_t i = 0; i < cap; ++i) {
        GroupElement g = G.mul(D.rep, en->next());
        bool hit = false;
        for (const auto& c : excluded)
            if (G.member_coset(g, c)) {
                hit = true;
                break;
            }
        if (!hit) return g;
    }
    throw Error(ErrorCode::NotFound,
                "witness_outside: no witness within " + std::to_string(cap) + " elements");
}

namespace {

// Decides emptiness of  core \ union(excluded)  and certifies a nonempty atom
// with a witness and an inner subgroup.  The excluded cosets are proper
// subcosets of core.  Finite-index exclusions are handled by enumerating the
// finitely many cosets of their common intersection inside core; what is left
// faces only infinite-index exclusions, which can never cover a coset.
bool certify_atom(const GroupInstance& G, const BasicCoset& core,
                  const std::vector<BasicCoset>& excluded, size_t witness_cap, GroupElement& witness,
                  LatticeSubgroup& inner) {
    LatticeSubgroup L = core.sub;
    std::vector<BasicCoset> fin, inf;
    for (const auto& c : excluded) {
        auto cls = G.index_class(L, c.sub);
        (cls.is_finite() ? fin : inf).push_back(c);
    }
    inner = L;
    for (const auto& c : excluded) inner = G.subgroup_intersect(inner, c.sub);

    if (fin.empty()) {
        witness = witness_outside(G, core, inf, witness_cap);
        return true;
    }
    LatticeSubgroup fine = L;
    for (const auto& c : fin) fine = G.subgroup_intersect(fine, c.sub);
    for (const auto& r : G.coset_transversal(L, fine)) {
        BasicCoset cell = G.make_coset(G.mul(core.rep, r), fine);
        bool covered = false;
        for (const auto& c : fin)
            if (G.member_coset(cell.rep, c)) {
                covered = true;
                break;
            }
        if (covered) continue;
        witness = inf.empty() ? cell.rep : witness_outside(G, cell, inf, witness_cap);
        LatticeSubgroup lam = fine;
        for (const auto& c : inf) lam = G.subgroup_intersect(lam, c.sub);
        inner = lam;
        return true;
    }
    return false;
}

}  // namespace

std::vector<Atom> orthogonalize(const GroupInstance& G, const std::vector<BasicCoset>& cosets,
                                size_t witness_cap) {
    const size_t n = cosets.size();
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "orthogonalize: empty family");
    if (n > 20) throw Error(ErrorCode::InvalidArgument, "orthogonalize: family too large");

    std::vector<Atom> atoms;
    for (uint32_t mask = 1; mask < (1u << n); ++mask) {
        // intersection over the support
        std::optional<BasicCoset> core;
        bool ok = true;
        for (size_t i = 0; i < n && ok; ++i) {
            if (!(mask >> i & 1)) continue;
            core = core ? G.coset_intersect(*core, cosets[i]) : cosets[i];
            if (!core) ok = false;
        }
        if (!ok) continue;

        // proper intersections with the complement; core fully inside one of
        // them kills the atom
        std::vector<BasicCoset> excluded;
        std::vector<size_t> excl_idx;
        bool dead = false;
        for (size_t j = 0; j < n && !dead; ++j) {
            if (mask >> j & 1) continue;
            auto meet = G.coset_intersect(*core, cosets[j]);
            if (!meet) continue;
            if (*meet == *core) {
                dead = true;
                break;
            }
            excluded.push_back(*meet);
            excl_idx.push_back(j);
        }
        if (dead) continue;

        Atom a;
        a.support = mask;
        a.core = *core;
        a.excluded = excluded;
        if (!certify_atom(G, a.core, a.excluded, witness_cap, a.witness, a.inner)) continue;

        // inclusion-exclusion over subsets of the excluded list
        const size_t m = excluded.size();
        for (uint32_t sub = 0; sub < (1u << m); ++sub) {
            std::optional<BasicCoset> cut = *core;
            int sign = 1;
            for (size_t j = 0; j < m && cut; ++j) {
                if (!(sub >> j & 1)) continue;
                sign = -sign;
                cut = G.coset_intersect(*cut, excluded[j]);
            }
            if (cut) a.indicator.add(*cut, sign);
        }
        atoms.push_back(std::move(a));
    }
    return atoms;
}

std::vector<LatticeSubgroup> refine_family(const GroupInstance& G,
                                           const std::vector<LatticeSubgroup>& family) {
    std::vector<LatticeSubgroup> out;
    for (const auto& K_in : family) {
        // shrink the newcomer against the placed subgroups
        LatticeSubgroup K = K_in;
        for (const auto& J : out) {
            if (G.index_class(K, J).is_finite()) K = G.subgroup_intersect(K, J);
        }
        // second pass: shrink the placed subgroups against the newcomer
        for (auto& J : out) {
            if (G.index_class(J, K).is_finite()) J = G.subgroup_intersect(J, K);
        }
        out.push_back(K);
    }
    return out;
}

}  // namespace endostar
