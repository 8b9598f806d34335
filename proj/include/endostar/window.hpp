// Finite truncations of the left regular representation.  A window is an
// ordered slice of the canonical basis of l^2(G); the safe core is the set of
// columns guaranteed to stay inside the window under every monomial of the
// configured depth (isometry powers and translation words), so identities
// verified there are exact.  Matrices additionally track columns where an
// image fell outside the window, and comparisons are restricted to columns
// certified faithful for all operands.
#ifndef ENDOSTAR_WINDOW_HPP
#define ENDOSTAR_WINDOW_HPP

#include <set>
#include <unordered_map>

#include "endostar/algebra.hpp"

namespace endostar {

struct WindowParams {
    // box parameters: shift-z: indices < a, |values| <= b;  free-shift:
    // length <= a, generator index <= b;  times2: |x| <= a.
    int a = 4;
    int b = 2;
    // monomial depth the safe core must survive
    int max_power = 2; // isometry powers n, m
    int max_word = 1;  // translation parts as products of <= max_word moves
};

class Window {
public:
    static Window build(const GroupInstance& G, const WindowParams& params,
                        const std::vector<GroupElement>& moves);

    const std::vector<GroupElement>& basis() const { return basis_; }
    const std::vector<size_t>& core() const { return core_; }
    bool in_core(size_t idx) const { return is_core_[idx] != 0; }
    std::optional<size_t> index_of(const GroupElement& g) const; // binary search, basis is sorted
    size_t size() const { return basis_.size(); }

private:
    std::vector<GroupElement> basis_;
    std::vector<char> is_core_;
    std::vector<size_t> core_;
};

// The partial map of a monomial on an arbitrary basis vector of l^2(G);
// absent means the vector is annihilated.
std::optional<GroupElement> monomial_apply(const GroupInstance& G, const Monomial& t,
                                           const GroupElement& g);
// Image of a general element: finitely many basis points with exact scalars.
std::map<GroupElement, Scalar> algebra_apply(const GroupInstance& G, const AlgebraElement& x,
                                             const GroupElement& g);

// Sparse exact matrix over the window basis; absent entries are zero.  A
// column lands in `lost` when some genuinely nonzero image fell outside the
// window; such columns are excluded from comparisons.
class PartialMapMatrix {
public:
    explicit PartialMapMatrix(size_t cols = 0) : data_(cols) {}

    static PartialMapMatrix identity(size_t cols);

    size_t cols() const { return data_.size(); }
    const std::vector<std::pair<size_t, Scalar>>& column(size_t j) const { return data_[j]; }
    void add_entry(size_t col, size_t row, const Scalar& c);
    void mark_lost(size_t col) { lost_.insert(col); }
    const std::set<size_t>& lost() const { return lost_; }
    bool faithful(size_t col) const { return !lost_.count(col); }

    PartialMapMatrix operator*(const PartialMapMatrix& o) const;
    PartialMapMatrix operator+(const PartialMapMatrix& o) const;
    PartialMapMatrix scaled(const Scalar& c) const;
    // product computed only on the given columns (cheap when comparisons are
    // restricted to the safe core anyway)
    static PartialMapMatrix compose_on(const PartialMapMatrix& a, const PartialMapMatrix& b,
                                       const std::vector<size_t>& cols);

    bool is_zero() const;
    bool equal_on(const PartialMapMatrix& o, const std::vector<size_t>& cols) const;
    // first column from `cols` where the two matrices differ (lost columns on
    // either side are skipped)
    std::optional<size_t> first_mismatch(const PartialMapMatrix& o,
                                         const std::vector<size_t>& cols) const;
    // subset of `cols` faithful in every listed matrix
    static std::vector<size_t> faithful_columns(const std::vector<size_t>& cols,
                                                std::initializer_list<const PartialMapMatrix*> ms);

private:
    std::vector<std::vector<std::pair<size_t, Scalar>>> data_; // per column, sorted by row
    std::set<size_t> lost_;
};

PartialMapMatrix represent(const GroupInstance& G, const AlgebraElement& x, const Window& w);
PartialMapMatrix represent_monomial(const GroupInstance& G, const Monomial& t, const Window& w,
                                    const Scalar& coeff = Scalar::integer(1));

// Elementary generator matrices, built directly from the defining action
// (independent of the symbolic layer).
PartialMapMatrix matrix_u(const GroupInstance& G, const GroupElement& g, const Window& w);
PartialMapMatrix matrix_s(const GroupInstance& G, const Window& w, int power = 1);
PartialMapMatrix matrix_s_star(const GroupInstance& G, const Window& w, int power = 1);
PartialMapMatrix matrix_e_coset(const GroupInstance& G, const BasicCoset& c, const Window& w);
PartialMapMatrix matrix_indicator(const GroupInstance& G, const VirtualIndicator& v,
                                  const Window& w);

// ---------------------------------------------------------------------------
// Relation checking

struct RelationFailure {
    std::string relation;
    std::string witness; // basis element where the two sides differ
};

struct RelationReport {
    std::map<std::string, size_t> checked; // relation -> number of identity instances
    std::vector<RelationFailure> failures;
    size_t min_columns = SIZE_MAX; // smallest certified column set used
    bool ok() const { return failures.empty(); }
};

struct RelationSampleConfig {
    int max_power = 2;    // isometry powers n, m
    size_t samples = 500; // identity instances per relation
    uint64_t seed = 1;
};

// Exercises the five defining relations as exact matrix identities on the
// safe core, drawing unitaries from `pool` and projections from the coset
// family generated by the configured bases.
RelationReport check_relations(const GroupInstance& G, const Window& w,
                               const std::vector<GroupElement>& pool,
                               const RelationSampleConfig& cfg);

}  // namespace endostar

#endif
