#include "endostar/window.hpp"

#include <algorithm>
#include <functional>

#include "endostar/rng.hpp"

namespace endostar {

namespace {

std::vector<GroupElement> window_basis(const GroupInstance& G, const WindowParams& p) {
    std::vector<GroupElement> out;
    const std::string& id = G.id();
    if (id == "shift-z") {
        // all vectors with support in [0, a) and values in [-b, b]
        VecZ cur;
        std::function<void(int)> gen = [&](int idx) {
            if (idx == p.a) {
                out.push_back(GroupElement(cur));
                return;
            }
            for (int64_t v = -p.b; v <= p.b; ++v) {
                if (v != 0) cur.push_back({idx, v});
                gen(idx + 1);
                if (v != 0) cur.pop_back();
            }
        };
        gen(0);
    } else if (id == "free-shift") {
        // reduced words of length <= a over generators up to index b
        std::vector<Word> cur{Word{}};
        out.push_back(GroupElement(Word{}));
        for (int len = 1; len <= p.a; ++len) {
            std::vector<Word> next;
            for (const Word& w : cur)
                for (int32_t g = 1; g <= p.b; ++g)
                    for (int32_t l : {g, -g}) {
                        if (!w.empty() && w.back() == -l) continue;
                        Word e = w;
                        e.push_back(l);
                        out.push_back(GroupElement(e));
                        next.push_back(std::move(e));
                    }
            cur = std::move(next);
        }
    } else if (id == "times2") {
        for (int64_t v = -p.a; v <= p.a; ++v) out.push_back(GroupElement(v));
    } else {
        throw Error(ErrorCode::InvalidArgument, "window_basis: unknown instance " + id);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// products of at most `len` factors from moves (and their inverses)
std::vector<GroupElement> move_ball(const GroupInstance& G, const std::vector<GroupElement>& moves,
                                    int len) {
    std::vector<GroupElement> out{G.identity()};
    std::vector<GroupElement> frontier = out;
    for (int d = 0; d < len; ++d) {
        std::vector<GroupElement> next;
        for (const auto& w : frontier)
            for (const auto& m : moves) {
                next.push_back(G.mul(m, w));
                next.push_back(G.mul(G.inv(m), w));
            }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

Window Window::build(const GroupInstance& G, const WindowParams& params,
                     const std::vector<GroupElement>& moves) {
    Window w;
    w.basis_ = window_basis(G, params);

    // safe core: columns whose image under every monomial shape
    // phi^{-n}( word * phi^m(.) ), n,m <= max_power, word a product of at
    // most 2*max_word moves, stays inside the window whenever defined
    std::vector<GroupElement> words = move_ball(G, moves, 2 * params.max_word);
    w.is_core_.assign(w.basis_.size(), 1);
    for (size_t j = 0; j < w.basis_.size(); ++j) {
        bool safe = true;
        for (int m = 0; m <= params.max_power && safe; ++m) {
            GroupElement shifted = G.phi_pow(w.basis_[j], m);
            for (const auto& word : words) {
                if (!safe) break;
                GroupElement p = G.mul(word, shifted);
                for (int n = 0; n <= params.max_power; ++n) {
                    auto q = G.phi_preimage(p, n);
                    if (!q) break; // deeper preimages stay undefined
                    if (!w.index_of(*q)) {
                        safe = false;
                        break;
                    }
                }
            }
        }
        w.is_core_[j] = safe;
    }
    for (size_t i = 0; i < w.basis_.size(); ++i)
        if (w.is_core_[i]) w.core_.push_back(i);
    if (w.core_.empty())
        throw Error(ErrorCode::InvalidArgument, "window too small: safe core is empty");
    return w;
}

std::optional<size_t> Window::index_of(const GroupElement& g) const {
    auto it = std::lower_bound(basis_.begin(), basis_.end(), g);
    if (it == basis_.end() || !(*it == g)) return std::nullopt;
    return static_cast<size_t>(it - basis_.begin());
}

// ---------------------------------------------------------------------------

std::optional<GroupElement> monomial_apply(const GroupInstance& G, const Monomial& t,
                                           const GroupElement& g) {
    GroupElement p = G.mul(t.b, G.phi_pow(g, t.m));
    if (!G.member(p, t.L)) return std::nullopt;
    return G.phi_preimage(G.mul(t.a, p), t.n);
}

std::map<GroupElement, Scalar> algebra_apply(const GroupInstance& G, const AlgebraElement& x,
                                             const GroupElement& g) {
    std::map<GroupElement, Scalar> out;
    for (const auto& [t, c] : x.terms()) {
        auto q = monomial_apply(G, t, g);
        if (!q) continue;
        auto it = out.find(*q);
        if (it == out.end())
            out.emplace(*q, c);
        else {
            it->second += c;
            if (it->second.is_zero()) out.erase(it);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

PartialMapMatrix PartialMapMatrix::identity(size_t cols) {
    PartialMapMatrix m(cols);
    for (size_t j = 0; j < cols; ++j) m.add_entry(j, j, Scalar::integer(1));
    return m;
}

void PartialMapMatrix::add_entry(size_t col, size_t row, const Scalar& c) {
    if (c.is_zero()) return;
    auto& v = data_[col];
    auto it = std::lower_bound(v.begin(), v.end(), row,
                               [](const auto& p, size_t r) { return p.first < r; });
    if (it != v.end() && it->first == row) {
        it->second += c;
        if (it->second.is_zero()) v.erase(it);
    } else {
        v.insert(it, {row, c});
    }
}

PartialMapMatrix PartialMapMatrix::operator*(const PartialMapMatrix& o) const {
    PartialMapMatrix out(o.cols());
    out.lost_ = o.lost_;
    for (size_t j = 0; j < o.cols(); ++j) {
        for (const auto& [p, beta] : o.data_[j]) {
            if (lost_.count(p)) out.lost_.insert(j);
            for (const auto& [r, alpha] : data_[p]) out.add_entry(j, r, alpha * beta);
        }
    }
    return out;
}

PartialMapMatrix PartialMapMatrix::operator+(const PartialMapMatrix& o) const {
    PartialMapMatrix out = *this;
    for (size_t j = 0; j < o.cols(); ++j)
        for (const auto& [r, c] : o.data_[j]) out.add_entry(j, r, c);
    out.lost_.insert(o.lost_.begin(), o.lost_.end());
    return out;
}

PartialMapMatrix PartialMapMatrix::compose_on(const PartialMapMatrix& a, const PartialMapMatrix& b,
                                              const std::vector<size_t>& cols) {
    PartialMapMatrix out(b.cols());
    for (size_t j : cols) {
        if (b.lost_.count(j)) {
            out.lost_.insert(j);
            continue;
        }
        for (const auto& [p, beta] : b.data_[j]) {
            if (a.lost_.count(p)) out.lost_.insert(j);
            for (const auto& [r, alpha] : a.data_[p]) out.add_entry(j, r, alpha * beta);
        }
    }
    return out;
}

PartialMapMatrix PartialMapMatrix::scaled(const Scalar& c) const {
    PartialMapMatrix out(cols());
    out.lost_ = lost_;
    if (c.is_zero()) return out;
    out.data_ = data_;
    for (auto& col : out.data_)
        for (auto& [r, v] : col) v *= c;
    return out;
}

bool PartialMapMatrix::is_zero() const {
    for (const auto& col : data_)
        if (!col.empty()) return false;
    return true;
}

bool PartialMapMatrix::equal_on(const PartialMapMatrix& o, const std::vector<size_t>& cols) const {
    return !first_mismatch(o, cols).has_value();
}

std::optional<size_t> PartialMapMatrix::first_mismatch(const PartialMapMatrix& o,
                                                       const std::vector<size_t>& cols) const {
    for (size_t j : cols) {
        if (lost_.count(j) || o.lost_.count(j)) continue;
        if (data_[j] != o.data_[j]) return j;
    }
    return std::nullopt;
}

std::vector<size_t> PartialMapMatrix::faithful_columns(
    const std::vector<size_t>& cols, std::initializer_list<const PartialMapMatrix*> ms) {
    std::vector<size_t> out;
    for (size_t j : cols) {
        bool ok = true;
        for (const auto* m : ms)
            if (!m->faithful(j)) {
                ok = false;
                break;
            }
        if (ok) out.push_back(j);
    }
    return out;
}

// ---------------------------------------------------------------------------

PartialMapMatrix represent_monomial(const GroupInstance& G, const Monomial& t, const Window& w,
                                    const Scalar& coeff) {
    PartialMapMatrix out(w.size());
    for (size_t j = 0; j < w.size(); ++j) {
        auto q = monomial_apply(G, t, w.basis()[j]);
        if (!q) continue;
        auto r = w.index_of(*q);
        if (!r) {
            out.mark_lost(j);
            continue;
        }
        out.add_entry(j, *r, coeff);
    }
    return out;
}

PartialMapMatrix represent(const GroupInstance& G, const AlgebraElement& x, const Window& w) {
    PartialMapMatrix out(w.size());
    for (const auto& [t, c] : x.terms()) out = out + represent_monomial(G, t, w, c);
    return out;
}

PartialMapMatrix matrix_u(const GroupInstance& G, const GroupElement& g, const Window& w) {
    PartialMapMatrix out(w.size());
    for (size_t j = 0; j < w.size(); ++j) {
        auto r = w.index_of(G.mul(g, w.basis()[j]));
        if (r)
            out.add_entry(j, *r, Scalar::integer(1));
        else
            out.mark_lost(j);
    }
    return out;
}

PartialMapMatrix matrix_s(const GroupInstance& G, const Window& w, int power) {
    PartialMapMatrix out(w.size());
    for (size_t j = 0; j < w.size(); ++j) {
        auto r = w.index_of(G.phi_pow(w.basis()[j], power));
        if (r)
            out.add_entry(j, *r, Scalar::integer(1));
        else
            out.mark_lost(j);
    }
    return out;
}

PartialMapMatrix matrix_s_star(const GroupInstance& G, const Window& w, int power) {
    PartialMapMatrix out(w.size());
    for (size_t j = 0; j < w.size(); ++j) {
        auto p = G.phi_preimage(w.basis()[j], power);
        if (!p) continue;
        auto r = w.index_of(*p);
        if (r)
            out.add_entry(j, *r, Scalar::integer(1));
        else
            out.mark_lost(j);
    }
    return out;
}

PartialMapMatrix matrix_e_coset(const GroupInstance& G, const BasicCoset& c, const Window& w) {
    PartialMapMatrix out(w.size());
    for (size_t j = 0; j < w.size(); ++j)
        if (G.member_coset(w.basis()[j], c)) out.add_entry(j, j, Scalar::integer(1));
    return out;
}

PartialMapMatrix matrix_indicator(const GroupInstance& G, const VirtualIndicator& v,
                                  const Window& w) {
    PartialMapMatrix out(w.size());
    for (size_t j = 0; j < w.size(); ++j) {
        int64_t val = v.eval(G, w.basis()[j]);
        if (val != 0) out.add_entry(j, j, Scalar::integer(val));
    }
    return out;
}

// ---------------------------------------------------------------------------

RelationReport check_relations(const GroupInstance& G, const Window& w,
                               const std::vector<GroupElement>& pool,
                               const RelationSampleConfig& cfg) {
    RelationReport rep;
    Rng rng(cfg.seed);
    auto pick = [&]() { return pool[rng.below(pool.size())]; };
    auto pick_coset = [&]() {
        int n = static_cast<int>(rng.below(cfg.max_power + 1));
        int base = static_cast<int>(rng.below(G.bases().size()));
        return G.make_coset(pick(), LatticeSubgroup(LatticeTerm{n, base}));
    };

    // memoized generator matrices
    std::map<GroupElement, PartialMapMatrix> u_cache;
    auto U = [&](const GroupElement& g) -> const PartialMapMatrix& {
        auto it = u_cache.find(g);
        if (it == u_cache.end()) it = u_cache.emplace(g, matrix_u(G, g, w)).first;
        return it->second;
    };
    std::map<BasicCoset, PartialMapMatrix> e_cache;
    auto E = [&](const BasicCoset& c) -> const PartialMapMatrix& {
        auto it = e_cache.find(c);
        if (it == e_cache.end()) it = e_cache.emplace(c, matrix_e_coset(G, c, w)).first;
        return it->second;
    };
    std::vector<PartialMapMatrix> S, Sstar;
    for (int k = 0; k <= 2 * cfg.max_power; ++k) {
        S.push_back(matrix_s(G, w, k));
        Sstar.push_back(matrix_s_star(G, w, k));
    }

    auto chain = [&](std::initializer_list<const PartialMapMatrix*> ms) {
        // rightmost factor first
        auto it = ms.end();
        --it;
        PartialMapMatrix acc = **it;
        while (it != ms.begin()) {
            --it;
            acc = PartialMapMatrix::compose_on(**it, acc, w.core());
        }
        return acc;
    };
    auto compare = [&](const std::string& rel, const PartialMapMatrix& lhs,
                       const PartialMapMatrix& rhs) {
        auto cols = PartialMapMatrix::faithful_columns(w.core(), {&lhs, &rhs});
        rep.min_columns = std::min(rep.min_columns, cols.size());
        auto bad = lhs.first_mismatch(rhs, cols);
        if (bad) rep.failures.push_back({rel, G.element_brief(w.basis()[*bad])});
        ++rep.checked[rel.substr(0, rel.find(' '))];
    };

    for (size_t it = 0; it < cfg.samples; ++it) {
        {
            // (i)  u_g s^n u_h s^m = u_{g phi^n(h)} s^{n+m}
            GroupElement g = pick(), h = pick();
            int n = static_cast<int>(rng.below(cfg.max_power + 1));
            int m = static_cast<int>(rng.below(cfg.max_power + 1));
            auto lhs = chain({&U(g), &S[n], &U(h), &S[m]});
            auto rhs = chain({&U(G.mul(g, G.phi_pow(h, n))), &S[n + m]});
            compare("(i) isometry-unitary composition", lhs, rhs);
        }
        {
            // (ii)  u_g s^n e_X s*^n u_{g^-1} = e_{g phi^n(X)}
            GroupElement g = pick();
            int n = static_cast<int>(rng.below(cfg.max_power + 1));
            BasicCoset X = pick_coset();
            auto lhs = chain({&U(g), &S[n], &E(X), &Sstar[n], &U(G.inv(g))});
            compare("(ii) projection conjugation", lhs,
                    E(G.coset_translate(G.coset_phi(X, n), g)));
        }
        {
            // (iii)  e_G = 1
            compare("(iii) unit projection", E(BasicCoset{G.identity(), G.whole_group()}),
                    PartialMapMatrix::identity(w.size()));
        }
        {
            // (iv)  e_X e_Y = e_{X cap Y}
            BasicCoset X = pick_coset(), Y = pick_coset();
            auto lhs = PartialMapMatrix::compose_on(E(X), E(Y), w.core());
            auto meet = G.coset_intersect(X, Y);
            auto rhs = meet ? E(*meet) : PartialMapMatrix(w.size());
            compare("(iv) projection product", lhs, rhs);
        }
        {
            // (v)  e_X + e_Y = e_{X u Y} + e_{X cap Y}, union evaluated pointwise
            BasicCoset X = pick_coset(), Y = pick_coset();
            auto lhs = E(X) + E(Y);
            PartialMapMatrix uni(w.size());
            for (size_t j = 0; j < w.size(); ++j)
                if (G.member_coset(w.basis()[j], X) || G.member_coset(w.basis()[j], Y))
                    uni.add_entry(j, j, Scalar::integer(1));
            auto meet = G.coset_intersect(X, Y);
            auto rhs = meet ? uni + E(*meet) : uni;
            compare("(v) union-intersection exchange", lhs, rhs);
        }
    }
    return rep;
}

}  // namespace endostar
