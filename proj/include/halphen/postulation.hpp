// Exact postulation computations over a large prime field: dimension of the
// degree-s piece of the ideal of a union of points, double points, lines,
// determinantal curves and grids of ruling lines on the quadric x0 x3 = x1 x2,
// together with the trace/residual bookkeeping for one specialization step.
//
// Wire conventions (also used by the JSON layer): monomials of degree s in
// x0..x3 are ordered lexicographically by descending exponents of (x0,x1,x2);
// bidegree (a,b) monomials u^i v^{a-i} w^j z^{b-j} are ordered by descending
// (i, j).  Field elements serialize as decimal strings.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "halphen/ints.hpp"
#include "halphen/prime_field.hpp"

namespace halphen {

using Coord = std::array<std::uint64_t, 4>;   // point of P^3
using Param = std::array<std::uint64_t, 2>;   // point of P^1

/* point of the quadric in ruling coordinates ([u:v],[w:z]); the Segre map
 * sends it to [uw : uz : vw : vz] */
struct QuadricPoint {
    Param a, b;
};

Coord segre(const QuadricPoint& qp, const PrimeField& F);

struct PointSpec { Coord c; };
struct DoublePointSpec { Coord c; };        // square of the maximal ideal: 4 conditions
struct LineSpec { Coord p, q; };            // conditions: s+1 distinct points
struct RulingLineSpec { int family; Param param; };  // family 1 fixes [u:v], 2 fixes [w:z]
struct GridSpec {
    std::vector<Param> fam1, fam2;          // e resp. f ruling lines
};
struct DetCurveSpec {
    long t = 0;
    /* t x (t+1) matrix of linear forms, each row-major entry holding the four
     * coefficients; the ideal is generated by the t x t minors */
    std::vector<std::vector<Coord>> rows;
};

using Component = std::variant<PointSpec, DoublePointSpec, LineSpec, RulingLineSpec,
                               GridSpec, DetCurveSpec>;

struct SchemeSpec {
    std::uint64_t prime = kDefaultPrime;
    std::vector<Component> components;
};

/* h^0 of the degree-s piece of the ideal of the union.  Exact for the given
 * scheme; a determinantal component of type t > s forces the answer 0. */
long h0_ideal(const SchemeSpec& Z, long s);

/* expected value for one determinantal curve in general position:
 * (t+1) binom(s-t+3,3) - t binom(s-t+2,3), zero for s < t */
Int det_curve_expected_h0(long t, long s);

Int det_curve_degree(long t);
Int det_curve_genus(long t);

/* h^0 of bidegree (a,b) forms on the quadric vanishing on the grid lines and
 * at the given points.  The grid factors out (residual bidegree
 * (a-e, b-f)); points sitting on a grid line are dropped with a note. */
long h0_quadric(const std::vector<QuadricPoint>& pts, const GridSpec& grid,
                long a, long b, std::uint64_t prime,
                std::vector<std::string>* notes = nullptr);

/* one specialization step: X away from the quadric with its marked
 * transversal intersection points, an adapted grid, double points supported
 * at grid nodes and extra simple points on the quadric, all at level s */
struct HoraceConfig {
    SchemeSpec off_quadric;
    std::vector<QuadricPoint> marked;       // X meets the quadric here
    GridSpec grid;
    std::vector<std::array<int, 2>> chi;    // node indices (fam1, fam2)
    std::vector<QuadricPoint> extra;
    long level = 3;
};

/* off-quadric part plus one reduced point per nilpotent; throws if a double
 * point of the config sits on the quadric away from a grid node */
SchemeSpec residual_scheme(const HoraceConfig& cfg);

/* everything embedded in P^3 at level s */
SchemeSpec full_scheme(const HoraceConfig& cfg);

struct HoraceReport {
    long h0_trace = 0, h0_residual = 0, h0_full = 0;
    bool additive = false;                  // h0_full == h0_trace + h0_residual
    bool trace_matches = true, residual_matches = true;
    std::vector<std::string> notes;
};

HoraceReport horace_check(const HoraceConfig& cfg,
                          std::optional<long> expected_trace = std::nullopt,
                          std::optional<long> expected_residual = std::nullopt);

/* exact degree bookkeeping for one specialization step: the conditions a
 * config imposes at its level split between the residual at level-2 and the
 * trace on the quadric.  Off-quadric components must be points, double points
 * or lines; a grid node already accounts for the tangent directions of its
 * two lines, so a nilpotent there adds exactly its residual unit. */
struct ConditionCounts {
    Int full, residual, trace;
    bool additive = false;  // full == residual + trace
};

ConditionCounts condition_counts(const HoraceConfig& cfg);

/* helpers for building random general configurations */
DetCurveSpec random_det_curve(long t, const PrimeField& F, std::mt19937_64& rng);
QuadricPoint random_quadric_point(const PrimeField& F, std::mt19937_64& rng);

}  // namespace halphen
