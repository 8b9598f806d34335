#include "endostar/group.hpp"

#include <functional>
#include <sstream>

#include "instances.hpp"

namespace endostar {

std::string GroupElement::key() const {
    std::ostringstream os;
    if (const auto* v = std::get_if<VecZ>(&payload)) {
        os << "z|";
        for (auto& [i, c] : *v) os << i << ":" << c << ",";
    } else if (const auto* w = std::get_if<Word>(&payload)) {
        os << "w|";
        for (int32_t l : *w) os << l << ",";
    } else {
        os << "i|" << std::get<int64_t>(payload);
    }
    return os.str();
}

GroupElement GroupInstance::phi_pow(const GroupElement& g, int n) const {
    GroupElement r = g;
    for (int i = 0; i < n; ++i) r = phi(r);
    return r;
}

std::optional<GroupElement> GroupInstance::phi_preimage(const GroupElement& g, int n) const {
    GroupElement r = g;
    for (int i = 0; i < n; ++i) {
        auto p = phi_inv(r);
        if (!p) return std::nullopt;
        r = *p;
    }
    return r;
}

bool GroupInstance::member(const GroupElement& g, const LatticeSubgroup& L) const {
    for (const auto& t : L.terms)
        if (!member_term(g, t)) return false;
    return true;
}

bool GroupInstance::member_coset(const GroupElement& g, const BasicCoset& c) const {
    return member(mul(inv(c.rep), g), c.sub);
}

LatticeSubgroup GroupInstance::subgroup_intersect(const LatticeSubgroup& a,
                                                  const LatticeSubgroup& b) const {
    std::vector<LatticeTerm> ts = a.terms;
    ts.insert(ts.end(), b.terms.begin(), b.terms.end());
    return make_subgroup(ts);
}

LatticeSubgroup GroupInstance::make_subgroup(const std::vector<LatticeTerm>& terms) const {
    if (terms.empty()) throw Error(ErrorCode::InvalidArgument, "empty term list");
    LatticeTerm acc = terms.front();
    for (size_t i = 1; i < terms.size(); ++i) acc = term_intersect(acc, terms[i]);
    return LatticeSubgroup(acc);
}

BasicCoset GroupInstance::make_coset(const GroupElement& rep, const LatticeSubgroup& sub) const {
    return BasicCoset{coset_rep(rep, sub), sub};
}

BasicCoset GroupInstance::coset_translate(const BasicCoset& c, const GroupElement& g) const {
    return make_coset(mul(g, c.rep), c.sub);
}

BasicCoset GroupInstance::coset_phi(const BasicCoset& c, int k) const {
    LatticeSubgroup L = c.sub;
    for (auto& t : L.terms) t.n += k;
    return make_coset(phi_pow(c.rep, k), L);
}

BasicCoset GroupInstance::coset_phi_inv(const BasicCoset& c, int k) const {
    LatticeSubgroup L = c.sub;
    for (auto& t : L.terms) {
        if (t.n < k)
            throw Error(ErrorCode::InvalidArgument, "coset_phi_inv: term depth below requested power");
        t.n -= k;
    }
    auto r = phi_preimage(c.rep, k);
    if (!r)
        throw Error(ErrorCode::InvalidArgument, "coset_phi_inv: representative not in image of phi^k");
    return make_coset(*r, L);
}

int GroupInstance::base_index(const std::string& name) const {
    const auto& bs = bases();
    for (size_t i = 0; i < bs.size(); ++i)
        if (bs[i] == name) return static_cast<int>(i);
    throw Error(ErrorCode::InvalidArgument, id() + ": unknown base subgroup '" + name + "'");
}

std::optional<BasicCoset> chain_coset_intersect(const GroupInstance& G, const BasicCoset& a,
                                                const BasicCoset& b) {
    const LatticeTerm &ta = a.sub.term(), &tb = b.sub.term();
    // larger subgroup first
    const BasicCoset *big = &a, *small = &b;
    if (G.term_contains(tb, ta)) {
        big = &b;
        small = &a;
    } else if (!G.term_contains(ta, tb)) {
        throw Error(ErrorCode::UnsupportedPair, G.id() + ": lattice terms not comparable");
    }
    GroupElement d = G.mul(G.inv(big->rep), small->rep);
    if (!G.member(d, big->sub)) return std::nullopt;
    return *small;
}

// ---------------------------------------------------------------------------

std::unique_ptr<GroupInstance> make_instance(const std::string& id,
                                             const std::vector<std::string>& bases) {
    if (bases.empty() || bases[0] != "G")
        throw Error(ErrorCode::InvalidArgument, "base family must start with G");
    if (id == "shift-z") return make_shiftz(bases);
    if (id == "free-shift") return make_freeshift(bases);
    if (id == "times2") return make_times2(bases);
    throw Error(ErrorCode::InvalidArgument, "unknown instance '" + id + "'");
}

std::unique_ptr<GroupInstance> make_instance(const std::string& id) {
    if (id == "shift-z") return make_instance(id, {"G", "H"});
    return make_instance(id, {"G"});
}

// ---------------------------------------------------------------------------

PurityReport purity_probe(const GroupInstance& G, int max_power, size_t sample_size) {
    PurityReport rep;
    rep.max_power = max_power;
    auto en = G.enumerate();
    GroupElement e = G.identity();
    for (size_t i = 0; i < sample_size; ++i) {
        GroupElement g = en->next();
        if (g == e) continue;
        ++rep.sampled;
        int depth = 0;
        GroupElement cur = g;
        while (depth < max_power) {
            auto p = G.phi_inv(cur);
            if (!p) break;
            cur = *p;
            ++depth;
        }
        rep.deepest_survival = std::max(rep.deepest_survival, depth);
        if (depth >= max_power) rep.violators.push_back(g);
    }
    return rep;
}

HypothesisReport check_phi_power_hypothesis(const GroupInstance& G, int probe_depth,
                                            size_t probe_elems) {
    HypothesisReport rep;
    int k = 0;
    bool holds = true;
    for (size_t b = 0; b < G.bases().size(); ++b) {
        LatticeSubgroup base(LatticeTerm{0, static_cast<int>(b)});
        auto m = G.min_phi_power_inside(base);
        if (m) {
            k = std::max(k, *m);
            continue;
        }
        holds = false;
        // Certify the failure: for each probed power exhibit an element of
        // phi^n(G) outside the base subgroup.
        std::vector<GroupElement> witnesses;
        for (int n = 0; n <= probe_depth; ++n) {
            auto en = G.enumerate_subgroup(G.phi_power_subgroup(n));
            for (size_t i = 0; i < probe_elems; ++i) {
                GroupElement g = en->next();
                if (!G.member(g, base)) {
                    witnesses.push_back(g);
                    break;
                }
            }
        }
        rep.failures.push_back({G.bases()[b], std::move(witnesses)});
    }
    rep.holds = holds;
    rep.k = holds ? k : 0;
    return rep;
}

}  // namespace endostar
