// Coset combinatorics on top of the instance oracles: integer indicator
// combinations, orthogonalization of a coset family into disjoint atoms
// (inclusion-exclusion with certified nonemptiness), witness search outside
// excluded cosets, and the index-refinement pass that turns an arbitrary
// finite subgroup family into one with pairwise index 1 or infinity.
#ifndef ENDOSTAR_COSET_HPP
#define ENDOSTAR_COSET_HPP

#include <cstdint>
#include <map>

#include "endostar/group.hpp"

namespace endostar {

// Integer combination of basic-coset indicator functions.
struct VirtualIndicator {
    std::map<BasicCoset, int64_t> terms; // no zero coefficients

    void add(const BasicCoset& c, int64_t coeff) {
        if (coeff == 0) return;
        auto it = terms.find(c);
        if (it == terms.end()) {
            terms.emplace(c, coeff);
        } else if ((it->second += coeff) == 0) {
            terms.erase(it);
        }
    }
    void add(const VirtualIndicator& o) {
        for (auto& [c, k] : o.terms) add(c, k);
    }
    bool is_zero() const { return terms.empty(); }
    int64_t eval(const GroupInstance& G, const GroupElement& g) const;
    bool operator==(const VirtualIndicator& o) const { return terms == o.terms; }
};

// Pointwise product of an indicator with a single coset indicator.
VirtualIndicator indicator_restrict(const GroupInstance& G, const VirtualIndicator& v,
                                    const BasicCoset& c);

constexpr size_t kDefaultWitnessCap = 1'000'000;

// First element of D (in enumeration order) lying in none of the excluded
// cosets.  Complete search; throws NotFound when the cap is reached.
GroupElement witness_outside(const GroupInstance& G, const BasicCoset& D,
                             const std::vector<BasicCoset>& excluded,
                             size_t cap = kDefaultWitnessCap);

// One atom of the Boolean algebra generated by the input cosets:
// everything in the cosets indexed by `support` and in no other input coset.
struct Atom {
    uint32_t support = 0;             // bitmask over input indices
    BasicCoset core;                  // intersection over the support
    std::vector<BasicCoset> excluded; // nonempty proper intersections with the rest
    GroupElement witness;             // certified element of the atom
    LatticeSubgroup inner;            // witness * inner  is contained in the atom
    VirtualIndicator indicator;       // inclusion-exclusion expansion
};

// Nonempty atoms of the Boolean algebra generated by `cosets` (at most 20 of
// them).  Atoms are pairwise disjoint and their indicators sum to the
// indicator of the union.
std::vector<Atom> orthogonalize(const GroupInstance& G, const std::vector<BasicCoset>& cosets,
                                size_t witness_cap = kDefaultWitnessCap);

// Same-length refinement of a subgroup family after which every pairwise
// index class is 1 or infinity.  Runs the element-insertion recursion: the
// incoming subgroup is successively intersected down, then a second pass
// shrinks the previously placed subgroups against the newcomer.
std::vector<LatticeSubgroup> refine_family(const GroupInstance& G,
                                           const std::vector<LatticeSubgroup>& family);

}  // namespace endostar

#endif
