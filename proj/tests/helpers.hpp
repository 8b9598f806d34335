// Shared test helpers: element builders and brute-force oracles that stay
// independent of the code paths they check.
#ifndef ENDOSTAR_TEST_HELPERS_HPP
#define ENDOSTAR_TEST_HELPERS_HPP

#include <set>

#include "endostar/algebra.hpp"
#include "endostar/window.hpp"

namespace endostar::testing {

inline GroupElement zv(std::initializer_list<std::pair<int32_t, int64_t>> entries) {
    VecZ v(entries);
    std::sort(v.begin(), v.end());
    std::erase_if(v, [](const auto& p) { return p.second == 0; });
    return GroupElement(std::move(v));
}

inline GroupElement fw(std::initializer_list<int32_t> letters) {
    Word w;
    for (int32_t l : letters) {
        if (!w.empty() && w.back() == -l)
            w.pop_back();
        else
            w.push_back(l);
    }
    return GroupElement(std::move(w));
}

inline GroupElement iv(int64_t v) { return GroupElement(v); }

inline LatticeSubgroup phiG(int n) { return LatticeSubgroup(LatticeTerm{n, 0}); }
inline LatticeSubgroup phiH(int n) { return LatticeSubgroup(LatticeTerm{n, 1}); }

// Brute-force membership set of a coset over a window, as sorted keys.
inline std::set<std::string> coset_points(const GroupInstance& G, const BasicCoset& c,
                                          const std::vector<GroupElement>& universe) {
    std::set<std::string> out;
    for (const auto& g : universe)
        if (G.member_coset(g, c)) out.insert(g.key());
    return out;
}

// First `count` enumerated elements.
inline std::vector<GroupElement> enumerate_n(const GroupInstance& G, size_t count) {
    std::vector<GroupElement> out;
    auto en = G.enumerate();
    for (size_t i = 0; i < count; ++i) out.push_back(en->next());
    return out;
}

}  // namespace endostar::testing

#endif
