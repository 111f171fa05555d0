#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fp.hpp"

using namespace heller;

namespace {

FpMatrix random_matrix(uint32_t p, size_t r, size_t c, std::mt19937_64& rng) {
    FpMatrix m(p, r, c);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < c; ++j) m.set(i, j, static_cast<uint32_t>(rng() % p));
    return m;
}

}  // namespace

TEST_CASE("field helpers") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(997));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(4));
    CHECK_FALSE(is_prime(995));
    for (uint32_t p : {2u, 3u, 5u, 7u, 997u})
        for (uint32_t x = 1; x < std::min(p, 50u); ++x) CHECK(fp_inv(x, p) * x % p == 1);
}

TEST_CASE("arithmetic and shape operations") {
    std::mt19937_64 rng(11);
    for (uint32_t p : {2u, 3u, 5u, 997u}) {
        FpMatrix a = random_matrix(p, 4, 5, rng);
        FpMatrix b = random_matrix(p, 5, 3, rng);
        FpMatrix c = random_matrix(p, 3, 2, rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * FpMatrix::identity(p, 5) == a);
        CHECK(FpMatrix::identity(p, 4) * a == a);
        CHECK(a + a - a == a);
        CHECK(a.scaled(0).is_zero());
        CHECK((a * b).transpose() == b.transpose() * a.transpose());
        FpMatrix s = random_matrix(p, 4, 4, rng);
        CHECK(s.pow(3) == s * s * s);
        CHECK(s.pow(0) == FpMatrix::identity(p, 4));
        CHECK(FpMatrix::vstack(a, a).rows() == 8);
        CHECK(FpMatrix::hstack(a, a).cols() == 10);
        CHECK(a.vec().rows() == 1);
        CHECK(a.vec().cols() == 20);
        CHECK(a.block(1, 1, 2, 3).at(0, 0) == a.at(1, 1));
    }
}

TEST_CASE("rref, rank and kernel against first principles") {
    std::mt19937_64 rng(23);
    for (uint32_t p : {2u, 3u, 7u}) {
        for (int trial = 0; trial < 40; ++trial) {
            size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
            FpMatrix m = random_matrix(p, r, c, rng);
            RrefResult rr = rref(m);
            CHECK(rr.rank == rr.pivot_cols.size());
            CHECK(rank(m) == rr.rank);
            // row space unchanged by rref
            CHECK(row_space_contains(row_space(m), rr.r.rows_slice([&] {
                std::vector<size_t> idx;
                for (size_t i = 0; i < rr.rank; ++i) idx.push_back(i);
                return idx;
            }())));
            FpMatrix k = left_kernel(m);
            CHECK((k * m).is_zero());
            CHECK(k.rows() + rr.rank == r);  // rank-nullity
            // kernel rows are independent
            CHECK(rank(k) == k.rows());
        }
    }
}

TEST_CASE("solve_row finds solutions exactly when they exist") {
    std::mt19937_64 rng(37);
    for (uint32_t p : {2u, 5u}) {
        for (int trial = 0; trial < 40; ++trial) {
            size_t n = 1 + rng() % 5, c = 1 + rng() % 5;
            FpMatrix a = random_matrix(p, n, c, rng);
            FpMatrix x = random_matrix(p, 2, n, rng);
            FpMatrix b = x * a;
            auto sol = solve_row(a, b);
            REQUIRE(sol.has_value());
            CHECK(*sol * a == b);
            // perturb b off the row space when the row space is proper
            if (rank(a) < c) {
                FpMatrix outside = extend_basis(row_space(a), FpMatrix::identity(p, c));
                REQUIRE(outside.rows() > 0);
                FpMatrix bad = b;
                for (size_t j = 0; j < c; ++j)
                    bad.set(0, j, (bad.at(0, j) + outside.at(0, j)) % p);
                CHECK_FALSE(solve_row(a, bad).has_value());
            }
        }
    }
}

TEST_CASE("inverse") {
    std::mt19937_64 rng(41);
    for (uint32_t p : {2u, 3u, 997u}) {
        for (int trial = 0; trial < 30; ++trial) {
            size_t n = 1 + rng() % 5;
            FpMatrix m = random_matrix(p, n, n, rng);
            auto inv = inverse(m);
            CHECK(inv.has_value() == is_invertible(m));
            CHECK(inv.has_value() == (rank(m) == n));
            if (inv) {
                CHECK(*inv * m == FpMatrix::identity(p, n));
                CHECK(m * *inv == FpMatrix::identity(p, n));
            }
        }
    }
}

TEST_CASE("extend_basis completes to the ambient row space") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 30; ++trial) {
        uint32_t p = 3;
        FpMatrix amb = random_matrix(p, 6, 6, rng);
        FpMatrix base = row_space(amb.rows_slice({0, 1}));
        FpMatrix extra = extend_basis(base, amb);
        FpMatrix full = FpMatrix::vstack(base, extra);
        CHECK(rank(full) == base.rows() + extra.rows());
        CHECK(rank(full) == rank(FpMatrix::vstack(base, amb)));
        CHECK(row_space_contains(row_space(full), amb) ==
              row_space_contains(row_space(FpMatrix::vstack(base, amb)), amb));
    }
}

TEST_CASE("dimension mismatches throw") {
    FpMatrix a(3, 2, 3), b(3, 2, 3);
    CHECK_THROWS_AS(a * b, dim_mismatch);
    FpMatrix c(5, 2, 3);
    CHECK_THROWS_AS(a + c, dim_mismatch);
}
