#include <doctest.h>

#include <random>

#include "halphen/field_matrix.hpp"

using namespace halphen;

namespace {

FieldMatrix random_matrix(const PrimeField& F, std::size_t r, std::size_t c,
                          std::mt19937_64& rng) {
    FieldMatrix m(F, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = F.random(rng);
    return m;
}

}  // namespace

TEST_CASE("prime field arithmetic") {
    PrimeField F;
    CHECK(F.modulus() == kDefaultPrime);
    CHECK(PrimeField::probable_prime(kDefaultPrime));
    CHECK(!PrimeField::probable_prime((std::uint64_t(1) << 61) + 1));
    CHECK(F.mul(F.modulus() - 1, F.modulus() - 1) == 1);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        std::uint64_t a = F.random_nonzero(rng);
        CHECK(F.mul(a, F.inv(a)) == 1);
        CHECK(F.add(a, F.neg(a)) == 0);
    }
    CHECK(F.from_int(-1) == F.modulus() - 1);
    CHECK_THROWS_AS(PrimeField(15), std::domain_error);
    PrimeField small(101);
    CHECK(small.pow(2, 100) == 1);  // Fermat
}

TEST_CASE("rank, rref and kernel on a known matrix") {
    PrimeField F;
    FieldMatrix m(F, 3, 4);
    /* row3 = row1 + row2 */
    std::uint64_t vals[3][4] = {{1, 2, 3, 4}, {2, 0, 1, 1}, {3, 2, 4, 5}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = vals[i][j];
    CHECK(m.rank() == 2);
    FieldMatrix ker = m.kernel_basis();
    CHECK(ker.rows() == 2);
    FieldMatrix prod = m.multiply(ker.transpose());
    for (std::size_t i = 0; i < prod.rows(); ++i)
        for (std::size_t j = 0; j < prod.cols(); ++j) CHECK(prod(i, j) == 0);
}

TEST_CASE("rank plus nullity equals column count") {
    PrimeField F;
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t r = 1 + rng() % 12, c = 1 + rng() % 12;
        FieldMatrix m = random_matrix(F, r, c, rng);
        CHECK(m.rank() + m.kernel_basis().rows() == c);
    }
}

TEST_CASE("kernel vectors annihilate the matrix") {
    PrimeField F;
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        FieldMatrix m = random_matrix(F, 6, 9, rng);
        FieldMatrix prod = m.multiply(m.kernel_basis().transpose());
        for (std::size_t i = 0; i < prod.rows(); ++i)
            for (std::size_t j = 0; j < prod.cols(); ++j) CHECK(prod(i, j) == 0);
    }
}

TEST_CASE("subspace intersection") {
    PrimeField F;
    std::mt19937_64 rng(17);

    SUBCASE("intersect a space with itself") {
        FieldMatrix a = random_matrix(F, 3, 8, rng);
        FieldMatrix both = intersect_subspaces(a, a);
        CHECK(both.rows() == a.rank());
    }
    SUBCASE("two random 5-dim subspaces of F^8 meet in dimension 2") {
        FieldMatrix a = random_matrix(F, 5, 8, rng);
        FieldMatrix b = random_matrix(F, 5, 8, rng);
        FieldMatrix both = intersect_subspaces(a, b);
        CHECK(both.rows() == 2);
        /* every intersection vector lies in both row spaces */
        for (std::size_t i = 0; i < both.rows(); ++i) {
            FieldMatrix stacked_a = a;
            stacked_a.append_row(both.row(i));
            CHECK(stacked_a.rank() == a.rank());
            FieldMatrix stacked_b = b;
            stacked_b.append_row(both.row(i));
            CHECK(stacked_b.rank() == b.rank());
        }
    }
    SUBCASE("disjoint coordinate subspaces meet trivially") {
        FieldMatrix a(F, 2, 6), b(F, 2, 6);
        a(0, 0) = 1;
        a(1, 1) = 1;
        b(0, 2) = 1;
        b(1, 3) = 1;
        CHECK(intersect_subspaces(a, b).rows() == 0);
    }
}
