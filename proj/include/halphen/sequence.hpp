// Integer recursion attached to a pair of determinantal base curves: the
// degree-excess sequence a(s), remainder b(s) and genus increment g(s) that
// drive the step-by-step curve construction, plus the companion uv-sequence
// and the grid parameter search.  Everything is exact; a(s) and friends grow
// cubically so all values are arbitrary precision.
#pragma once

#include <optional>
#include <vector>

#include "halphen/ints.hpp"

namespace halphen {

struct BaseCurveParams {
    long t = 0, k = 0;  // t >= k >= 1
    Int d_tk;           // t(t+1)/2 + k(k+1)/2
    Int g_t, g_k, g_tk; // sectional genera, g_tk = g_t + g_k

    static BaseCurveParams make(long t, long k);
};

/* genus of the degree-t(t+1)/2 determinantal curve: 1 + t(t+1)(2t-5)/6 */
Int curve_genus(long t);

/* degree of that curve: t(t+1)/2 */
Int curve_degree(long t);

struct SeqRow {
    Int a, b, g;
    bool out_of_model = false;  // a went negative; values kept, row flagged
};

/* Rows exist for s = t+k+1, t+k+3, ...  Row t+k+1 solves
 *   (t+k+1)(d_tk + a) + 3 - g_tk + b = binom(t+k+4, 3),  0 <= b <= t+k,
 * with g = 0.  Later rows solve
 *   2(d_tk + a(s-2)) + (s-1)(a(s) - a(s-2)) + alpha + b(s) - b(s-2) = (s+1)^2
 * with 0 <= b(s) <= s-2 and g(s) = g(s-2) + a(s) - a(s-2) - alpha.
 * The invariant
 *   s(d_tk + a(s)) + 3 - g_tk - g(s) + b(s) = binom(s+3, 3)
 * is checked on every row and a violation throws. */
class SequenceTable {
public:
    SequenceTable(BaseCurveParams p, Int alpha);

    const BaseCurveParams& params() const { return p_; }
    const Int& alpha() const { return alpha_; }
    long s_min() const { return s_min_; }
    long s_max() const { return s_min_ + 2 * (long(rows_.size()) - 1); }

    void extend_to(long s);
    const SeqRow& row(long s);  // extends on demand
    Int delta(long s);          // a(s+2) - a(s)

private:
    BaseCurveParams p_;
    Int alpha_;
    long s_min_;
    Int binom_next_;  // binom(s+3,3) for the next row to be built
    std::vector<SeqRow> rows_;

    void push_next_row();
};

/* O(1) row access through the equivalent division form
 *   (s-1) a(s) + b(s) = binom(s+3,3) - 3 + g_tk - s d_tk - a(t+k+1) - alpha u,
 * valid for s >= t+k+3 (row t+k+1 is the base division).  Agrees with the
 * recursion on every row. */
SeqRow closed_form_row(const BaseCurveParams& p, const Int& alpha, long s);

/* cumulative cell count
 *   I(s) = (s-t-k+1)/6 [ (s-t-k+3)(s-t-k+2) + 3(t+k)(s-t-k+2) + 6kt ],
 * defined for s >= t+k-1 (where it vanishes) */
Int big_I(const BaseCurveParams& p, long s);

struct UVRow {
    Int u, v;
};

/* x(d_tk + u(x)) + 3 - g + v(x) = binom(x+3,3), 0 <= v <= x-1 */
UVRow uv_row(const BaseCurveParams& p, const Int& g, long x);

/* d_tk + u(x) */
Int total_degree_at(const BaseCurveParams& p, const Int& g, long x);

enum class GridEVariant {
    AMax,     // maximal e with b > threshold(e) and e <= delta/2
    BMax,     // maximal e with b > threshold(e) and e <  delta/2
    MinScan,  // minimal e in [1, delta] with b <= threshold(e)
};

/* threshold(e) = (e-1)(delta - e - 1 + offset); offset 0 gives the
 * (e-1)(delta-e-1) threshold, offset 1 gives (e-1)(delta-e).
 * Returns nullopt when no e qualifies (e.g. b = 0 under AMax). */
std::optional<long> grid_e(const Int& b, const Int& delta, GridEVariant variant,
                           int offset = 0);

/* counting identity behind the trace of one construction step: with
 * delta = a(s+2) - a(s), e' = e+1 and psi = 2a(s) - b(s) + (e-1)delta
 * - e^2 - 2e + alpha - 1 in case 'a', e' = e and psi = 2a(s) - b(s)
 * + (e-2)delta - e^2 + alpha in cases 'b' and 'c':
 *   2 d_tk + psi + b(s+2) = (s+3-e')(s+3-delta+e')               */
bool claim1_identity(const BaseCurveParams& p, const Int& alpha, long s, long e,
                     char case_tag);

}  // namespace halphen
