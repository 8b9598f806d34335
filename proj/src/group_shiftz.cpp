// shift-z: G = direct sum of Z over N (finitely supported integer vectors),
// phi shifts every index up by one.  Base subgroups: G and optionally
// H = { x : x_0 even }.  The lattice { phi^n(G), phi^n(H) } is a chain
//   G > H > phi(G) > phi(H) > phi^2(G) > ...
// so term containment reduces to a rank comparison.
#include <algorithm>
#include <cstdlib>
#include <functional>

#include "instances.hpp"

namespace endostar {
namespace {

const VecZ& vec(const GroupElement& g) { return std::get<VecZ>(g.payload); }

GroupElement from_vec(VecZ v) {
    std::erase_if(v, [](const auto& p) { return p.second == 0; });
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return GroupElement(std::move(v));
}

int64_t value_at(const VecZ& v, int32_t idx) {
    for (auto& [i, c] : v)
        if (i == idx) return c;
    return 0;
}

// chain rank: phi^n(G) -> 2n, phi^n(H) -> 2n+1; smaller rank = larger subgroup
int rank_of(const LatticeTerm& t) { return 2 * t.n + (t.base == 1 ? 1 : 0); }
LatticeTerm term_of_rank(int r) { return LatticeTerm{r / 2, r % 2}; }

// value order inside enumeration classes: small magnitude first, positive first
bool value_less(int64_t a, int64_t b) {
    if (std::llabs(a) != std::llabs(b)) return std::llabs(a) < std::llabs(b);
    return a > b;
}

bool vec_less(const VecZ& a, const VecZ& b) {
    int64_t sa = 0, sb = 0;
    for (auto& [i, c] : a) sa += std::llabs(c);
    for (auto& [i, c] : b) sb += std::llabs(c);
    if (sa != sb) return sa < sb;
    int32_t ma = a.empty() ? -1 : a.back().first, mb = b.empty() ? -1 : b.back().first;
    if (ma != mb) return ma < mb;
    for (size_t k = 0; k < std::min(a.size(), b.size()); ++k) {
        if (a[k].first != b[k].first) return a[k].first < b[k].first;
        if (a[k].second != b[k].second) return value_less(a[k].second, b[k].second);
    }
    return a.size() < b.size();
}

// Enumerates by size classes s = max(top index + 1, sum of |values|), so every
// prefix is finite and every element eventually appears.
class ShiftZEnumerator : public Enumerator {
public:
    GroupElement next() override {
        while (pos_ >= batch_.size()) {
            ++size_;
            fill_class();
            pos_ = 0;
        }
        return GroupElement(batch_[pos_++]);
    }

private:
    void fill_class() {
        batch_.clear();
        VecZ cur;
        gen(0, size_, cur);
        std::sort(batch_.begin(), batch_.end(), vec_less);
    }
    void gen(int32_t idx, int64_t budget, VecZ& cur) {
        if (idx == size_) {
            int64_t sum = 0;
            for (auto& [i, c] : cur) sum += std::llabs(c);
            int32_t top = cur.empty() ? -1 : cur.back().first;
            if (std::max<int64_t>(top + 1, sum) == size_) batch_.push_back(cur);
            return;
        }
        for (int64_t v = -budget; v <= budget; ++v) {
            if (v != 0) cur.push_back({idx, v});
            gen(idx + 1, budget - std::llabs(v), cur);
            if (v != 0) cur.pop_back();
        }
    }

    int size_ = -1;
    size_t pos_ = 0;
    std::vector<VecZ> batch_;
};

class ShiftZ : public InstanceBase {
public:
    explicit ShiftZ(std::vector<std::string> bases) : InstanceBase("shift-z", std::move(bases)) {
        for (size_t i = 1; i < bases_.size(); ++i)
            if (bases_[i] != "H")
                throw Error(ErrorCode::InvalidArgument, "shift-z: unknown base " + bases_[i]);
    }

    GroupElement identity() const override { return GroupElement(VecZ{}); }

    GroupElement mul(const GroupElement& a, const GroupElement& b) const override {
        VecZ out;
        const VecZ &va = vec(a), &vb = vec(b);
        size_t i = 0, j = 0;
        while (i < va.size() || j < vb.size()) {
            if (j == vb.size() || (i < va.size() && va[i].first < vb[j].first))
                out.push_back(va[i++]);
            else if (i == va.size() || vb[j].first < va[i].first)
                out.push_back(vb[j++]);
            else {
                int64_t s = va[i].second + vb[j].second;
                if (s != 0) out.push_back({va[i].first, s});
                ++i, ++j;
            }
        }
        return GroupElement(std::move(out));
    }

    GroupElement inv(const GroupElement& a) const override {
        VecZ out = vec(a);
        for (auto& [i, c] : out) c = -c;
        return GroupElement(std::move(out));
    }

    GroupElement phi(const GroupElement& g) const override {
        VecZ out = vec(g);
        for (auto& [i, c] : out) ++i;
        return GroupElement(std::move(out));
    }

    std::optional<GroupElement> phi_inv(const GroupElement& g) const override {
        VecZ out = vec(g);
        for (auto& [i, c] : out)
            if (i == 0) return std::nullopt;
        for (auto& [i, c] : out) --i;
        return GroupElement(std::move(out));
    }

    bool member_term(const GroupElement& g, const LatticeTerm& t) const override {
        require_base(t.base);
        const VecZ& v = vec(g);
        for (auto& [i, c] : v)
            if (i < t.n) return false;
        if (t.base == 1 && value_at(v, t.n) % 2 != 0) return false;
        return true;
    }

    LatticeTerm term_intersect(const LatticeTerm& a, const LatticeTerm& b) const override {
        require_base(a.base);
        require_base(b.base);
        return term_of_rank(std::max(rank_of(a), rank_of(b)));
    }

    bool term_contains(const LatticeTerm& a, const LatticeTerm& b) const override {
        return rank_of(a) <= rank_of(b);
    }

    GroupElement coset_rep(const GroupElement& g, const LatticeSubgroup& L) const override {
        const LatticeTerm& t = L.term();
        VecZ out;
        for (auto& [i, c] : vec(g)) {
            if (i < t.n)
                out.push_back({i, c});
            else if (i == t.n && t.base == 1 && (c % 2 != 0))
                out.push_back({i, 1});
        }
        return from_vec(std::move(out));
    }

    IndexClass index_class(const LatticeSubgroup& L, const LatticeSubgroup& M) const override {
        int rl = rank_of(L.term());
        int rn = rank_of(term_intersect(L.term(), M.term()));
        if (rn == rl) return IndexClass::one();
        if (rn == rl + 1 && rl % 2 == 0) return IndexClass::finite(2); // phi^n(G) over phi^n(H)
        return IndexClass::infinite();
    }

    std::vector<GroupElement> coset_transversal(const LatticeSubgroup& L,
                                                const LatticeSubgroup& S) const override {
        auto cls = index_class(L, S);
        if (cls.is_one()) return {identity()};
        if (!cls.is_finite())
            throw Error(ErrorCode::UnsupportedPair, "shift-z: infinite transversal requested");
        return {identity(), GroupElement(VecZ{{L.term().n, 1}})};
    }

    std::optional<int> min_phi_power_inside(const LatticeSubgroup& L) const override {
        const LatticeTerm& t = L.term();
        return t.n + (t.base == 1 ? 1 : 0);
    }

    std::unique_ptr<Enumerator> enumerate() const override {
        return std::make_unique<ShiftZEnumerator>();
    }

    std::unique_ptr<Enumerator> enumerate_subgroup(const LatticeSubgroup& L) const override {
        const LatticeTerm t = L.term();
        require_base(t.base);
        auto fn = [this, t](const GroupElement& g) {
            GroupElement h = g;
            if (t.base == 1) { // G -> H, double coordinate 0
                VecZ v = vec(h);
                for (auto& [i, c] : v)
                    if (i == 0) c *= 2;
                h = GroupElement(std::move(v));
            }
            return phi_pow(h, t.n);
        };
        return std::make_unique<MappedEnumerator>(std::make_unique<ShiftZEnumerator>(), fn);
    }

    std::optional<BasicCoset> coset_intersect(const BasicCoset& a,
                                              const BasicCoset& b) const override {
        return chain_coset_intersect(*this, a, b);
    }

    std::string element_brief(const GroupElement& g) const override {
        std::string s = "{";
        bool first = true;
        for (auto& [i, c] : vec(g)) {
            if (!first) s += ",";
            first = false;
            s += std::to_string(i) + ":" + std::to_string(c);
        }
        return s + "}";
    }
};

}  // namespace

std::unique_ptr<GroupInstance> make_shiftz(const std::vector<std::string>& bases) {
    return std::make_unique<ShiftZ>(bases);
}

}  // namespace endostar
