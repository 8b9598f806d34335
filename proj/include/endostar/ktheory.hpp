// Shift bookkeeping on finitely supported sequences over a finitely
// generated abelian coefficient group: the map 1 - sigma (sigma the index
// shift), its trivial kernel, and the cokernel identification by coordinate
// sum.
#ifndef ENDOSTAR_KTHEORY_HPP
#define ENDOSTAR_KTHEORY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace endostar {

// Z^rank  (+)  Z/t_1 (+) ... (+) Z/t_k
struct CoeffGroup {
    int rank = 1;
    std::vector<int64_t> torsion;

    using Element = std::vector<int64_t>; // rank free coords then torsion coords

    size_t dims() const { return rank + torsion.size(); }
    Element zero() const { return Element(dims(), 0); }
    Element reduce(Element v) const;
    Element add(const Element& a, const Element& b) const;
    Element neg(const Element& a) const;
    bool is_zero(const Element& a) const;
};

// finitely supported sequence of coefficient-group elements
struct FinSeq {
    std::map<int, CoeffGroup::Element> entries; // no zero entries

    bool is_zero() const { return entries.empty(); }
    bool operator==(const FinSeq& o) const { return entries == o.entries; }
};

FinSeq make_finseq(const CoeffGroup& A, std::vector<std::pair<int, CoeffGroup::Element>> raw);

// y_k = x_k - x_{k-1}
FinSeq one_minus_sigma(const CoeffGroup& A, const FinSeq& x);
// unique x with (1 - sigma) x = y, when y lies in the image (iff the
// coordinate sum vanishes); partial sums give the inverse
std::optional<FinSeq> solve_one_minus_sigma(const CoeffGroup& A, const FinSeq& y);
// sum of coordinates: the cokernel class
CoeffGroup::Element cokernel_class(const CoeffGroup& A, const FinSeq& x);

struct KernelProbeReport {
    size_t samples = 0;
    size_t nonzero_mapped_to_zero = 0;   // must stay 0
    size_t recurrence_failures = 0;      // solve(one_minus_sigma(x)) != x
    bool ok() const { return nonzero_mapped_to_zero == 0 && recurrence_failures == 0; }
};

KernelProbeReport kernel_probe(const CoeffGroup& A, size_t samples, uint64_t seed);

struct SixTermSummary {
    CoeffGroup coeff;
    bool kernel_trivial = false;
    bool image_is_sum_zero = false; // both inclusions, sampled + solved exactly
    bool section_ok = false;        // cokernel_class((a,0,...)) == a
    size_t samples = 0;
    std::string conclusion;         // human-readable statement of the isomorphism
    bool ok() const { return kernel_trivial && image_is_sum_zero && section_ok; }
};

SixTermSummary six_term_summary(const CoeffGroup& A, size_t samples, uint64_t seed);

}  // namespace endostar

#endif
