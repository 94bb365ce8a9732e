#include <doctest.h>

#include <random>

#include "halphen/planner.hpp"
#include "halphen/range_genus.hpp"

using namespace halphen;

namespace {

Int boundary_degree(const Int& m) {
    Int q = m * m + 4 * m + 6;
    return -fdiv_q(-q, Int(6));  // ceiling
}

}  // namespace

TEST_CASE("base pair selection") {
    CHECK(select_t(0) == 2);  // the genus of the two smallest curves is 0
    CHECK(select_t(-1) == 0);
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        Int g = Int(1) + long(rng() % 1000000) * Int(1000000000);
        long t = select_t(g);
        CHECK(1000000 * curve_genus(t) <= 999999 * g);
        CHECK(1000000 * curve_genus(t + 1) > 999999 * g);
        for (long m_par = 0; m_par <= 1; ++m_par) {
            Int m(1380000 + m_par);
            long k = select_k(g, t, m);
            if (k >= 1) {
                CHECK(curve_genus(t) + curve_genus(k) <= g);
                CHECK((t + k) % 2 == m_par % 2);
            }
        }
    }
}

TEST_CASE("switch point search: scan and bisection agree") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 5; ++trial) {
        long t = 900 + long(rng() % 300);
        long k = 200 + long(rng() % (t - 200));
        BaseCurveParams p = BaseCurveParams::make(t, k);
        Int g = p.g_tk + Int(1000000) + long(rng() % 100000000);
        bool capped = true;
        long y_scan = select_y_scan(p, g, 202, t + k + 100001, &capped);
        long y_bis = select_y_bisect(p, g, 202);
        CHECK(!capped);
        CHECK(y_scan == y_bis);
    }
    CHECK_THROWS_AS(select_y_bisect(BaseCurveParams::make(10, 10), Int(100000), 202),
                    std::domain_error);
}

TEST_CASE("strict small-genus plans delegate and stay green") {
    Int m(1380000);
    Int d = boundary_degree(m);
    Int g = genus_bound_A(d, m);
    CHECK(g == 0);
    ConstructionPlan P = plan(d, m, g, PlanMode::Strict);
    CHECK(P.ctx.small_genus);
    CHECK(P.all_green());
    CHECK(P.a_steps.empty());
    CHECK(P.b_steps.empty());
}

TEST_CASE("full-scale plan is all green and exactly accounted") {
    Int m(1380000);
    Int d("400000000000");
    Int g = genus_bound_A(d, m);
    ConstructionPlan P = plan(d, m, g, PlanMode::Strict);
    CHECK(P.all_green());
    CHECK(!P.ctx.small_genus);
    CHECK(P.t >= 1);
    CHECK(P.k >= 1);
    CHECK((P.t + P.k) % 2 == 0);  // m is even
    CHECK(Int(P.y) <= m - 7);

    /* every A-step is classified and within the grid bound */
    for (const auto& st : P.a_steps) {
        CHECK((st.case_tag == "a" || st.case_tag == "b" || st.case_tag == "c" ||
               st.case_tag == "empty-grid"));
        if (st.e) CHECK(*st.e <= 201);
        CHECK(st.delta >= 202);
    }
    /* degree bookkeeping ends at d */
    CHECK(P.base.d_tk + P.final_step.a + P.final_step.delta == d);
    CHECK(P.attach_t_index.has_value());
    CHECK(P.attach_k_index.has_value());
}

TEST_CASE("plans outside range A are flagged, not fatal") {
    ConstructionPlan P = plan(25, 6, 5, PlanMode::Exploratory);
    CHECK(!P.all_green());
    bool saw_range_fail = false;
    for (const auto& c : P.validity)
        if (c.name == "range-a-membership" && !c.pass) saw_range_fail = true;
    CHECK(saw_range_fail);
}

TEST_CASE("exploratory mode runs the machinery even at toy scale") {
    ConstructionPlan P = plan(12, 6, 5, PlanMode::Exploratory);
    CHECK(!P.ctx.small_genus);
    CHECK(!P.validity.empty());
}
