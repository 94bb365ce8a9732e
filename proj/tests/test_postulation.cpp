#include <doctest.h>

#include <random>

#include "halphen/postulation.hpp"
#include "halphen/sequence.hpp"

using namespace halphen;

namespace {

long dim3(long s) { return to_long(binom3(Int(s) + 3)); }

LineSpec random_line(const PrimeField& F, std::mt19937_64& rng) {
    LineSpec l;
    for (auto& c : l.p) c = F.random(rng);
    for (auto& c : l.q) c = F.random(rng);
    return l;
}

Coord random_point(const PrimeField& F, std::mt19937_64& rng) {
    Coord c;
    for (auto& x : c) x = F.random(rng);
    return c;
}

/* chord of the quadric through two of its points: transversal for generic
 * ruling parameters */
LineSpec transversal_line(const QuadricPoint& p1, const QuadricPoint& p2,
                          const PrimeField& F) {
    return {segre(p1, F), segre(p2, F)};
}

}  // namespace

TEST_CASE("free series and simple schemes") {
    PrimeField F;
    std::mt19937_64 rng(2);
    SchemeSpec empty;
    CHECK(h0_ideal(empty, 3) == 20);
    CHECK(h0_ideal(empty, 0) == 1);

    SchemeSpec one_point;
    one_point.components.push_back(PointSpec{random_point(F, rng)});
    CHECK(h0_ideal(one_point, 2) == 9);

    for (long s = 1; s <= 4; ++s) {
        SchemeSpec dp;
        dp.components.push_back(DoublePointSpec{random_point(F, rng)});
        CHECK(h0_ideal(dp, s) == dim3(s) - 4);
    }
}

TEST_CASE("a line imposes s+1 conditions") {
    PrimeField F;
    std::mt19937_64 rng(3);
    for (long s = 1; s <= 5; ++s) {
        SchemeSpec Z;
        Z.components.push_back(random_line(F, rng));
        CHECK(h0_ideal(Z, s) == dim3(s) - (s + 1));
    }
    /* same count for a ruling line given in grid coordinates */
    SchemeSpec R;
    R.components.push_back(RulingLineSpec{1, {5, 1}});
    CHECK(h0_ideal(R, 3) == 20 - 4);
    SchemeSpec G;
    GridSpec grid;
    grid.fam1.push_back({5, 1});
    grid.fam2.push_back({7, 1});
    G.components.push_back(grid);
    /* two meeting lines: 2(s+1) - 1 conditions at s = 3 */
    CHECK(h0_ideal(G, 3) == 20 - 7);
}

TEST_CASE("determinantal stand-ins match their resolution counts") {
    for (std::uint64_t seed : {0, 1, 2}) {
        PrimeField F;
        std::mt19937_64 rng(seed);
        for (long t = 2; t <= 5; ++t) {
            DetCurveSpec cv = random_det_curve(t, F, rng);
            SchemeSpec Z;
            Z.components.push_back(cv);
            CHECK(h0_ideal(Z, t - 1) == 0);
            for (long s = t; s <= t + 3; ++s)
                CHECK(Int(h0_ideal(Z, s)) == det_curve_expected_h0(t, s));
        }
    }
    CHECK(det_curve_degree(3) == curve_degree(3));
    CHECK(det_curve_genus(3) == curve_genus(3));
}

TEST_CASE("pairs of stand-ins have no common surface below the critical level") {
    PrimeField F;
    std::mt19937_64 rng(11);
    const long pairs[][2] = {{1, 1}, {2, 1}, {2, 2}, {3, 2}, {3, 3}};
    for (auto [t, k] : pairs) {
        SchemeSpec Z;
        Z.components.push_back(random_det_curve(t, F, rng));
        Z.components.push_back(random_det_curve(k, F, rng));
        CHECK(h0_ideal(Z, t + k - 1) == 0);
    }
}

TEST_CASE("forms on the quadric") {
    PrimeField F;
    std::mt19937_64 rng(13);

    SUBCASE("two points in bidegree (1,0)") {
        std::vector<QuadricPoint> pts{random_quadric_point(F, rng),
                                      random_quadric_point(F, rng)};
        CHECK(h0_quadric(pts, {}, 1, 0, F.modulus()) == 0);
    }
    SUBCASE("grid (1,1) in bidegree (1,1)") {
        GridSpec grid;
        grid.fam1.push_back({3, 1});
        grid.fam2.push_back({4, 1});
        CHECK(h0_quadric({}, grid, 1, 1, F.modulus()) == 1);
    }
    SUBCASE("general points impose independent conditions") {
        for (long a = 0; a <= 4; ++a)
            for (long b = 0; b <= 4; ++b)
                for (long n : {1L, (a + 1) * (b + 1) / 2, (a + 1) * (b + 1) + 2}) {
                    std::vector<QuadricPoint> pts;
                    for (long i = 0; i < n; ++i) pts.push_back(random_quadric_point(F, rng));
                    long want = std::max(0L, (a + 1) * (b + 1) - n);
                    CHECK(h0_quadric(pts, {}, a, b, F.modulus()) == want);
                }
    }
    SUBCASE("points on grid lines are dropped with a note") {
        GridSpec grid;
        grid.fam1.push_back({3, 1});
        std::vector<QuadricPoint> pts{{{3, 1}, {9, 1}}};
        std::vector<std::string> notes;
        CHECK(h0_quadric(pts, grid, 2, 2, F.modulus(), &notes) == 6);
        CHECK(notes.size() == 1);
    }
}

TEST_CASE("toy specialization step: two transversal lines and a (1,1) grid") {
    PrimeField F;
    QuadricPoint p11{{2, 1}, {3, 1}}, p12{{5, 1}, {7, 1}};
    QuadricPoint p21{{11, 1}, {13, 1}}, p22{{17, 1}, {19, 1}};
    HoraceConfig cfg;
    cfg.level = 3;
    cfg.off_quadric.components.push_back(transversal_line(p11, p12, F));
    cfg.off_quadric.components.push_back(transversal_line(p21, p22, F));
    cfg.marked = {p11, p12, p21, p22};
    cfg.grid.fam1.push_back({2, 1});    // through p11
    cfg.grid.fam2.push_back({13, 1});   // through p21
    HoraceReport rep = horace_check(cfg, 7, 0);
    CHECK(rep.h0_trace == 7);
    CHECK(rep.h0_residual == 0);
    CHECK(rep.trace_matches);
    CHECK(rep.residual_matches);
    CHECK(rep.notes.size() == 2);  // the two absorbed intersection points

    ConditionCounts cc = condition_counts(cfg);
    CHECK(cc.additive);
    CHECK(cc.full == 2 * 4 + 2 * 4 - 1);  // two lines, two grid lines, shared node
}

TEST_CASE("empty configuration is trivially additive") {
    HoraceConfig cfg;
    cfg.level = 3;
    HoraceReport rep = horace_check(cfg);
    CHECK(rep.h0_full == 20);
    CHECK(rep.h0_trace == 16);
    CHECK(rep.h0_residual == 4);
    CHECK(rep.additive);
}

TEST_CASE("residual scheme construction") {
    PrimeField F;
    HoraceConfig cfg;
    cfg.level = 4;
    cfg.grid.fam1.push_back({2, 1});
    cfg.grid.fam2.push_back({3, 1});
    cfg.chi.push_back({0, 0});
    SchemeSpec res = residual_scheme(cfg);
    REQUIRE(res.components.size() == 1);
    auto* pt = std::get_if<PointSpec>(&res.components[0]);
    REQUIRE(pt != nullptr);
    CHECK(pt->c == segre(QuadricPoint{{2, 1}, {3, 1}}, F));

    SUBCASE("a double point on the quadric off the nodes is rejected") {
        HoraceConfig bad;
        bad.off_quadric.components.push_back(
            DoublePointSpec{segre(QuadricPoint{{5, 1}, {7, 1}}, F)});
        CHECK_THROWS_AS(residual_scheme(bad), std::domain_error);
    }
    SUBCASE("a chi index outside the grid is rejected") {
        HoraceConfig bad;
        bad.chi.push_back({0, 0});
        CHECK_THROWS_AS(residual_scheme(bad), std::domain_error);
    }
}
