// Turns a target triple (d, m, g) in the lower part of range A into a
// step-by-step construction plan: base curve pair selection, the run of
// grid-extension steps, the switch point y, the remaining steps up to level
// m-3 and the final attachment data, together with an exhaustive list of
// validity checks.  Checks are always reported, never silently dropped.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "halphen/ints.hpp"
#include "halphen/sequence.hpp"

namespace halphen {

enum class PlanMode { Strict, Exploratory };

struct ValidityCheck {
    std::string name;
    bool pass = true;
    bool informational = false;
    std::string witness;  // first offending value, empty when passing
};

struct PlanStep {
    long s = 0;
    char kind = 'A';  // 'A', 'B' or 'F' (final)
    Int a;            // a(s) on A-steps, u(s) on B-steps, u(m-3) on the final step
    Int b;            // b(s) resp. v(s)
    Int g;            // accumulated genus of the growing curve
    Int delta;        // degree added by the step
    std::optional<long> e;
    std::string case_tag;  // A-steps: a / b / c / empty-grid / unclassified
};

struct GenusContext {
    Int d, m, g;
    Int g_max_a;  // sharp bound for range A at (d, m)
    Int alpha;
    bool small_genus = false;  // below the threshold where the step machinery starts
};

struct ConstructionPlan {
    GenusContext ctx;
    PlanMode mode = PlanMode::Strict;
    long t = 0, k = 0, y = 0;
    BaseCurveParams base;
    std::vector<PlanStep> a_steps, b_steps;
    PlanStep final_step;
    std::optional<long> attach_t_index;  // line index meeting the larger base curve
    std::optional<long> attach_k_index;  // line index meeting the smaller one
    std::vector<ValidityCheck> validity;

    bool all_green() const;  // every non-informational check passes
};

/* genus threshold below which the plan delegates to the separate small-genus
 * construction: 0.34e15 */
extern const Int kSmallGenusThreshold;

/* reference floor g_{1000,1000} = 2 (1 + 1000*1001*1995/6) */
extern const Int kReferenceGenusFloor;

/* maximal t with 10^6 g_t <= 999999 g; 0 when g < 0 */
long select_t(const Int& g);

/* maximal k <= t with g_t + g_k <= g and t + k = m (mod 2); 0 when none */
long select_k(const Int& g, long t, const Int& m);

/* maximal s = t+k+1 (mod 2) with g_t + g_k + g(s) <= g, found by a forward
 * scan capped at scan_cap (returns the capped s and sets *capped) */
long select_y_scan(const BaseCurveParams& p, const Int& g, const Int& alpha,
                   long scan_cap, bool* capped);

/* same value by bisection on the closed-form rows; meaningful in the regime
 * where g(s) is eventually monotone (t + k >= 1000, alpha >= 0) */
long select_y_bisect(const BaseCurveParams& p, const Int& g, const Int& alpha);

ConstructionPlan plan(const Int& d, const Int& m, const Int& g, PlanMode mode,
                      const Int& alpha = Int(202));

}  // namespace halphen
