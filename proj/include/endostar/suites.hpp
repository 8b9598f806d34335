// Batch suites: each one runs a family of exact checks and returns a JSON
// report (deterministic for a fixed config and seed) plus a pass flag.
// The CLI subcommands and the acceptance harness both drive these.
#ifndef ENDOSTAR_SUITES_HPP
#define ENDOSTAR_SUITES_HPP

#include "endostar/json_io.hpp"
#include "endostar/rng.hpp"

namespace endostar {

struct RunConfig {
    std::string instance = "shift-z";
    std::vector<std::string> bases; // empty = instance default
    uint64_t seed = 1;
    int depth = 0;                  // 0 = instance default window
    size_t samples = 500;
    size_t witness_cap = kDefaultWitnessCap;

    json echo() const;
};

std::unique_ptr<GroupInstance> configured_instance(const RunConfig& cfg);
WindowParams default_window(const GroupInstance& G, int depth);
// Small deterministic move/translation pool used for sampling unitaries and
// building safe cores.
std::vector<GroupElement> default_pool(const GroupInstance& G);
// The one-step translation alphabet windows are built around.
std::vector<GroupElement> default_moves(const GroupInstance& G);

// Random canonical monomial / element generation (seeded, retrying on zero).
std::optional<Monomial> random_monomial(const GroupInstance& G, Rng& rng,
                                        const std::vector<GroupElement>& pool, int max_power);
AlgebraElement random_element(const GroupInstance& G, Rng& rng,
                              const std::vector<GroupElement>& pool, size_t terms, int max_power);

struct SuiteResult {
    bool pass = false;
    json report;
};

SuiteResult suite_relations(const RunConfig& cfg);
SuiteResult suite_oracle(const RunConfig& cfg);
SuiteResult suite_normal_form(const RunConfig& cfg);
SuiteResult suite_theta(const RunConfig& cfg);
SuiteResult suite_ore(const RunConfig& cfg);
SuiteResult suite_ideals(const RunConfig& cfg);
SuiteResult suite_lemma(const RunConfig& cfg);
SuiteResult suite_certify(const RunConfig& cfg, size_t certificates);
SuiteResult suite_purity(const RunConfig& cfg, int max_power);
SuiteResult suite_ktheory(const CoeffGroup& A, size_t samples, uint64_t seed);
SuiteResult suite_all(const RunConfig& cfg);

}  // namespace endostar

#endif
