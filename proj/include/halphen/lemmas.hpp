// Finite verification of the inequality lemmas underlying the construction:
// each catalog entry carries a hypothesis sampler and an exact conclusion
// check.  Sampling is seeded and reproducible; comparisons of rational
// expressions are cross-multiplied, never floating point.  Entries with an
// explicit largeness threshold are additionally probed just below it; failed
// probes are recorded as informational, not as counterexamples.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "halphen/ints.hpp"

namespace halphen {

struct LemmaBudget {
    long samples = 10000;
    std::uint64_t seed = 0;
    bool exhaustive = false;  // sweep the box below instead of sampling
    long box_t_lo = 4, box_t_hi = 20;
    long box_k_lo = 4;        // k runs up to min(t, box_t_hi)
    long box_steps = 10;      // rows per (t, k)
};

struct LemmaSpec {
    std::string id;
    std::string statement;
    std::string notes;
    bool self_test = false;          // deliberately weakened; must fail
    bool supports_exhaustive = false;
};

struct LemmaReport {
    std::string id;
    std::string statement;
    std::string notes;
    std::uint64_t seed = 0;
    long tested = 0;                 // tuples satisfying the hypothesis
    long probed = 0;                 // below-threshold tuples
    std::vector<std::string> failures;       // conclusion failures (capped at 20)
    long failure_count = 0;
    std::vector<std::string> informational;  // below-threshold conclusion failures
    long informational_count = 0;
    bool self_test = false;

    /* a self-test entry passes by producing witnesses */
    bool passed() const { return self_test ? failure_count > 0 : failure_count == 0; }
};

const std::vector<LemmaSpec>& lemma_catalog();

/* throws std::invalid_argument for an unknown id */
LemmaReport verify_lemma(const std::string& id, const LemmaBudget& budget);

}  // namespace halphen
