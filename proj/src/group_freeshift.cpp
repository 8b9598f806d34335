// free-shift: G = free group on a_1, a_2, ..., with phi(a_i) = a_{i+1}.
// Words are stored reduced; letters are signed generator indices.  phi^n(G)
// is the subgroup generated by letters of index > n, so the lattice is again
// a chain.
#include <algorithm>
#include <cstdlib>

#include "instances.hpp"

namespace endostar {
namespace {

const Word& word(const GroupElement& g) { return std::get<Word>(g.payload); }

GroupElement reduce_concat(const Word& a, const Word& b) {
    Word out = a;
    for (int32_t l : b) {
        if (!out.empty() && out.back() == -l)
            out.pop_back();
        else
            out.push_back(l);
    }
    return GroupElement(std::move(out));
}

// letter order a_1 < a_1^{-1} < a_2 < a_2^{-1} < ...
bool letter_less(int32_t a, int32_t b) {
    if (std::abs(a) != std::abs(b)) return std::abs(a) < std::abs(b);
    return a > b;
}

bool word_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return letter_less(a[i], b[i]);
    return false;
}

// size class s = max(word length, largest generator index in the word)
class FreeShiftEnumerator : public Enumerator {
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
        if (size_ == 0) {
            batch_.push_back(Word{});
            return;
        }
        Word cur;
        gen(cur);
        std::sort(batch_.begin(), batch_.end(), word_less);
    }
    void gen(Word& cur) {
        if (!cur.empty()) {
            int32_t maxg = 0;
            for (int32_t l : cur) maxg = std::max(maxg, std::abs(l));
            if (std::max<int32_t>(static_cast<int32_t>(cur.size()), maxg) == size_)
                batch_.push_back(cur);
        }
        if (static_cast<int>(cur.size()) == size_) return;
        for (int32_t g = 1; g <= size_; ++g) {
            for (int32_t l : {g, -g}) {
                if (!cur.empty() && cur.back() == -l) continue;
                cur.push_back(l);
                gen(cur);
                cur.pop_back();
            }
        }
    }

    int size_ = -1;
    size_t pos_ = 0;
    std::vector<Word> batch_;
};

class FreeShift : public InstanceBase {
public:
    explicit FreeShift(std::vector<std::string> bases)
        : InstanceBase("free-shift", std::move(bases)) {
        if (bases_.size() != 1)
            throw Error(ErrorCode::InvalidArgument, "free-shift: only base G is supported");
    }

    GroupElement identity() const override { return GroupElement(Word{}); }

    GroupElement mul(const GroupElement& a, const GroupElement& b) const override {
        return reduce_concat(word(a), word(b));
    }

    GroupElement inv(const GroupElement& a) const override {
        Word out(word(a).rbegin(), word(a).rend());
        for (int32_t& l : out) l = -l;
        return GroupElement(std::move(out));
    }

    GroupElement phi(const GroupElement& g) const override {
        Word out = word(g);
        for (int32_t& l : out) l += (l > 0 ? 1 : -1);
        return GroupElement(std::move(out));
    }

    std::optional<GroupElement> phi_inv(const GroupElement& g) const override {
        Word out = word(g);
        for (int32_t& l : out) {
            if (std::abs(l) < 2) return std::nullopt;
            l -= (l > 0 ? 1 : -1);
        }
        return GroupElement(std::move(out));
    }

    bool member_term(const GroupElement& g, const LatticeTerm& t) const override {
        require_base(t.base);
        for (int32_t l : word(g))
            if (std::abs(l) <= t.n) return false;
        return true;
    }

    LatticeTerm term_intersect(const LatticeTerm& a, const LatticeTerm& b) const override {
        return LatticeTerm{std::max(a.n, b.n), 0};
    }

    bool term_contains(const LatticeTerm& a, const LatticeTerm& b) const override {
        return a.n <= b.n;
    }

    GroupElement coset_rep(const GroupElement& g, const LatticeSubgroup& L) const override {
        // strip the maximal suffix lying in phi^n(G)
        const Word& w = word(g);
        size_t end = w.size();
        while (end > 0 && std::abs(w[end - 1]) > L.term().n) --end;
        return GroupElement(Word(w.begin(), w.begin() + end));
    }

    IndexClass index_class(const LatticeSubgroup& L, const LatticeSubgroup& M) const override {
        if (L.term().n >= M.term().n) return IndexClass::one();
        return IndexClass::infinite();
    }

    std::vector<GroupElement> coset_transversal(const LatticeSubgroup& L,
                                                const LatticeSubgroup& S) const override {
        if (L.term().n == S.term().n) return {identity()};
        throw Error(ErrorCode::UnsupportedPair, "free-shift: infinite transversal requested");
    }

    std::optional<int> min_phi_power_inside(const LatticeSubgroup& L) const override {
        return L.term().n;
    }

    std::unique_ptr<Enumerator> enumerate() const override {
        return std::make_unique<FreeShiftEnumerator>();
    }

    std::unique_ptr<Enumerator> enumerate_subgroup(const LatticeSubgroup& L) const override {
        int n = L.term().n;
        auto fn = [this, n](const GroupElement& g) { return phi_pow(g, n); };
        return std::make_unique<MappedEnumerator>(std::make_unique<FreeShiftEnumerator>(), fn);
    }

    std::optional<BasicCoset> coset_intersect(const BasicCoset& a,
                                              const BasicCoset& b) const override {
        return chain_coset_intersect(*this, a, b);
    }

    std::string element_brief(const GroupElement& g) const override {
        if (word(g).empty()) return "e";
        std::string s;
        for (int32_t l : word(g)) {
            s += "a" + std::to_string(std::abs(l));
            if (l < 0) s += "'";
        }
        return s;
    }
};

}  // namespace

std::unique_ptr<GroupInstance> make_freeshift(const std::vector<std::string>& bases) {
    return std::make_unique<FreeShift>(bases);
}

}  // namespace endostar
