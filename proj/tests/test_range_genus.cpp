#include <doctest.h>

#include "halphen/range_genus.hpp"

using namespace halphen;

TEST_CASE("classification boundaries at m = 6") {
    CHECK(classify(10, 6).tag == Range::Empty);
    CHECK(classify(11, 6).tag == Range::A);
    CHECK(classify(21, 6).tag == Range::A);
    CHECK(classify(22, 6).tag == Range::B);
    CHECK(classify(30, 6).tag == Range::B);
    CHECK(classify(31, 6).tag == Range::C);

    RangeClass rc = classify(11, 6);
    CHECK(rc.lower_a == 11);
    CHECK(rc.lower_b == 22);
    CHECK(rc.lower_c == 30);
}

TEST_CASE("classification rejects bad input") {
    CHECK_THROWS_AS(classify(5, 2), std::domain_error);
    CHECK_THROWS_AS(classify(0, 6), std::domain_error);
}

TEST_CASE("range A bound values") {
    CHECK(genus_bound_A(11, 6) == 0);
    CHECK(genus_bound_A(12, 6) == 5);
    CHECK(genus_bound_A(10, 6) == -5);  // negative on the empty range
}

TEST_CASE("range C bound values") {
    GenusBoundC b31 = genus_bound_C(31, 6);
    CHECK(b31.genus == 110);
    CHECK(b31.r == 5);
    GenusBoundC b36 = genus_bound_C(36, 6);
    CHECK(b36.genus == 145);
    CHECK(b36.r == 0);
}

TEST_CASE("range B has no closed-form bound") {
    CHECK(!genus_bound_B(25, 6).has_value());
}

TEST_CASE("empty range is exactly where the A bound is negative") {
    for (long m = 3; m <= 60; ++m)
        for (long d = 1; d <= m * m + 1; ++d) {
            bool empty = classify(d, m).tag == Range::Empty;
            CHECK(empty == (genus_bound_A(d, m) < 0));
        }
}

TEST_CASE("range C division is always exact") {
    for (long m = 3; m <= 40; ++m) {
        long lo = m * m - m + 1;
        for (long d = lo; d <= lo + 3 * m; ++d) {
            GenusBoundC b = genus_bound_C(d, m);
            CHECK(b.r >= 0);
            CHECK(b.r < m);
            CHECK((Int(d) + b.r) % m == 0);
        }
    }
}
