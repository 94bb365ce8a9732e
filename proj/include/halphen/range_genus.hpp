// Classification of degree/section pairs (d, m) into the Halphen ranges and
// the sharp genus bounds attached to the outer two ranges.  All comparisons
// are exact; the range boundaries are rationals with denominators 6 and 3.
#pragma once

#include <optional>
#include <string>

#include "halphen/ints.hpp"

namespace halphen {

enum class Range { Empty, A, B, C };

struct RangeClass {
    Range tag;
    /* boundary values for this m: d ranges are
     *   Empty:  d <  (m^2+4m+6)/6
     *   A:      (m^2+4m+6)/6 <= d < (m^2+4m+6)/3
     *   B:      (m^2+4m+6)/3 <= d <= m^2-m
     *   C:      d > m^2-m          */
    Rat lower_a;   // (m^2+4m+6)/6
    Rat lower_b;   // (m^2+4m+6)/3
    Int lower_c;   // m^2-m
};

std::string range_name(Range r);

/* pre: m >= 3, d >= 1 */
RangeClass classify(const Int& d, const Int& m);

/* 1 + (m-1)d - binom(m+2,3); defined for every (d, m), negative exactly on
 * the Empty range */
Int genus_bound_A(const Int& d, const Int& m);

struct GenusBoundC {
    Int genus;
    Int r;  // unique r in [0, m-1] with d + r = 0 mod m
};

/* 1 + (d(d+m^2-4m) - r(m-r)(m-1)) / 2m; the division is always exact */
GenusBoundC genus_bound_C(const Int& d, const Int& m);

/* the middle range has no closed-form bound here */
inline std::optional<Int> genus_bound_B(const Int&, const Int&) { return std::nullopt; }

}  // namespace halphen
