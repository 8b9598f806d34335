// times2: G = Z with phi(x) = 2x.  Every phi^n(G) = 2^n Z has finite index,
// which makes this the contrast instance: index classification never returns
// "infinite", and coset intersection is plain CRT.  Optional base subgroup
// "H3" = 3Z; no power of phi lands inside it.
#include <algorithm>
#include <numeric>

#include "instances.hpp"

namespace endostar {
namespace {

int64_t val(const GroupElement& g) { return std::get<int64_t>(g.payload); }

int64_t mod_pos(int64_t x, int64_t m) { return ((x % m) + m) % m; }

// extended gcd: returns g and x with a*x = g (mod b)
int64_t egcd(int64_t a, int64_t b, int64_t& x, int64_t& y) {
    if (b == 0) {
        x = 1;
        y = 0;
        return a;
    }
    int64_t x1, y1;
    int64_t g = egcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

class Times2Enumerator : public Enumerator {
public:
    GroupElement next() override {
        int64_t v = cur_;
        if (cur_ > 0)
            cur_ = -cur_;
        else
            cur_ = -cur_ + 1;
        return GroupElement(v);
    }

private:
    int64_t cur_ = 0;
};

class Times2 : public InstanceBase {
public:
    explicit Times2(std::vector<std::string> bases) : InstanceBase("times2", std::move(bases)) {
        for (size_t i = 1; i < bases_.size(); ++i)
            if (bases_[i] != "H3")
                throw Error(ErrorCode::InvalidArgument, "times2: unknown base " + bases_[i]);
    }

    int64_t divisor(const LatticeTerm& t) const {
        require_base(t.base);
        if (t.n > 40) throw Error(ErrorCode::InvalidArgument, "times2: phi power too large");
        return (int64_t{1} << t.n) * (t.base == 1 ? 3 : 1);
    }

    GroupElement identity() const override { return GroupElement(int64_t{0}); }
    GroupElement mul(const GroupElement& a, const GroupElement& b) const override {
        return GroupElement(val(a) + val(b));
    }
    GroupElement inv(const GroupElement& a) const override { return GroupElement(-val(a)); }
    GroupElement phi(const GroupElement& g) const override { return GroupElement(2 * val(g)); }

    std::optional<GroupElement> phi_inv(const GroupElement& g) const override {
        if (val(g) % 2 != 0) return std::nullopt;
        return GroupElement(val(g) / 2);
    }

    bool member_term(const GroupElement& g, const LatticeTerm& t) const override {
        return val(g) % divisor(t) == 0;
    }

    LatticeTerm term_intersect(const LatticeTerm& a, const LatticeTerm& b) const override {
        require_base(a.base);
        require_base(b.base);
        return LatticeTerm{std::max(a.n, b.n), std::max(a.base, b.base)};
    }

    bool term_contains(const LatticeTerm& a, const LatticeTerm& b) const override {
        return divisor(b) % divisor(a) == 0;
    }

    GroupElement coset_rep(const GroupElement& g, const LatticeSubgroup& L) const override {
        return GroupElement(mod_pos(val(g), divisor(L.term())));
    }

    IndexClass index_class(const LatticeSubgroup& L, const LatticeSubgroup& M) const override {
        int64_t dl = divisor(L.term());
        int64_t dn = divisor(term_intersect(L.term(), M.term()));
        return dn == dl ? IndexClass::one() : IndexClass::finite(dn / dl);
    }

    std::vector<GroupElement> coset_transversal(const LatticeSubgroup& L,
                                                const LatticeSubgroup& S) const override {
        int64_t dl = divisor(L.term()), ds = divisor(S.term());
        if (ds % dl != 0)
            throw Error(ErrorCode::UnsupportedPair, "times2: transversal of non-subgroup");
        std::vector<GroupElement> out;
        for (int64_t k = 0; k * dl < ds; ++k) out.push_back(GroupElement(k * dl));
        return out;
    }

    std::optional<int> min_phi_power_inside(const LatticeSubgroup& L) const override {
        if (L.term().base == 1) return std::nullopt; // 2^m is never divisible by 3
        return L.term().n;
    }

    std::unique_ptr<Enumerator> enumerate() const override {
        return std::make_unique<Times2Enumerator>();
    }

    std::unique_ptr<Enumerator> enumerate_subgroup(const LatticeSubgroup& L) const override {
        int64_t d = divisor(L.term());
        auto fn = [d](const GroupElement& g) { return GroupElement(val(g) * d); };
        return std::make_unique<MappedEnumerator>(std::make_unique<Times2Enumerator>(), fn);
    }

    std::optional<BasicCoset> coset_intersect(const BasicCoset& a,
                                              const BasicCoset& b) const override {
        int64_t d1 = divisor(a.sub.term()), d2 = divisor(b.sub.term());
        int64_t r1 = val(a.rep), r2 = val(b.rep);
        int64_t x, y;
        int64_t g = egcd(d1, d2, x, y);
        if ((r2 - r1) % g != 0) return std::nullopt;
        int64_t l = d1 / g * d2;
        // r1 + d1 * t with t = ((r2 - r1)/g) * x mod (d2/g)
        int64_t m = d2 / g;
        __int128 t = (__int128)mod_pos((r2 - r1) / g, m) * mod_pos(x, m) % m;
        int64_t r = mod_pos(r1 + d1 * (int64_t)t, l);
        LatticeSubgroup sub = subgroup_intersect(a.sub, b.sub);
        return make_coset(GroupElement(r), sub);
    }

    std::string element_brief(const GroupElement& g) const override {
        return std::to_string(val(g));
    }
};

}  // namespace

std::unique_ptr<GroupInstance> make_times2(const std::vector<std::string>& bases) {
    return std::make_unique<Times2>(bases);
}

}  // namespace endostar
