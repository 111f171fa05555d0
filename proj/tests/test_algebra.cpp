#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "algebra.hpp"
#include "json_io.hpp"

using namespace heller;

TEST_CASE("builtin algebras validate at several primes") {
    for (const auto& name : builtin_algebra_names()) {
        for (uint32_t p : {2u, 3u, 5u, 997u}) {
            CAPTURE(name);
            CAPTURE(p);
            AlgebraPtr a = builtin_algebra(name, p);
            ValidationReport rep = validate_algebra(*a);
            CHECK_MESSAGE(rep.ok(), rep.to_string());
            TriangleParams t = builtin_params(name);
            CHECK(a->dim == t.n + t.m + t.k);
            CHECK(a->idempotents.size() == 2);
            REQUIRE(a->triangle.has_value());
            CHECK(a->triangle->n == t.n);
        }
    }
}

TEST_CASE("multiplication structure") {
    AlgebraPtr a = builtin_algebra("A", 5);
    // unit acts as identity on both sides of every basis element
    FpMatrix one = a->unit_row();
    for (int i = 0; i < a->dim; ++i) {
        CHECK(a->multiply(one, a->basis_row(i)) == a->basis_row(i));
        CHECK(a->multiply(a->basis_row(i), one) == a->basis_row(i));
    }
    // associativity over all basis triples
    for (int i = 0; i < a->dim; ++i)
        for (int j = 0; j < a->dim; ++j)
            for (int k = 0; k < a->dim; ++k)
                CHECK(a->multiply(a->multiply(a->basis_row(i), a->basis_row(j)), a->basis_row(k)) ==
                      a->multiply(a->basis_row(i), a->multiply(a->basis_row(j), a->basis_row(k))));
    // right_regular is the matrix of right multiplication
    for (int j = 0; j < a->dim; ++j) {
        FpMatrix rr = a->right_regular_basis(j);
        for (int i = 0; i < a->dim; ++i)
            CHECK(a->basis_row(i) * rr == a->multiply(a->basis_row(i), a->basis_row(j)));
    }
}

TEST_CASE("idempotents are orthogonal and sum to one") {
    for (const auto& name : builtin_algebra_names()) {
        AlgebraPtr a = builtin_algebra(name, 3);
        FpMatrix sum(3, 1, a->dim);
        for (int e : a->idempotents) {
            CHECK(a->multiply(a->basis_row(e), a->basis_row(e)) == a->basis_row(e));
            sum = sum + a->basis_row(e);
        }
        CHECK(sum == a->unit_row());
        int e = a->idempotents[0], f = a->idempotents[1];
        CHECK(a->multiply(a->basis_row(e), a->basis_row(f)).is_zero());
        CHECK(a->multiply(a->basis_row(f), a->basis_row(e)).is_zero());
    }
}

TEST_CASE("radical is nilpotent and an ideal") {
    AlgebraPtr a = builtin_algebra("B", 2);
    // every product of dim radical elements vanishes
    for (int r : a->radical) {
        FpMatrix x = a->basis_row(r);
        FpMatrix acc = x;
        for (int i = 0; i < a->dim; ++i) acc = a->multiply(acc, x);
        CHECK(acc.is_zero());
    }
    CHECK(a->radical.size() + a->idempotents.size() == static_cast<size_t>(a->dim));
}

TEST_CASE("generators determine the algebra") {
    AlgebraPtr a = builtin_algebra("A", 3);
    CHECK(a->generators().size() ==
          a->idempotents.size() + static_cast<size_t>(a->radical_generator_count()));
}

TEST_CASE("json roundtrip") {
    for (const auto& name : {"A", "C3", "C7"}) {
        AlgebraPtr a = builtin_algebra(name, 7);
        json j = algebra_to_json(*a);
        AlgebraPtr b = algebra_from_json(j);
        CHECK(b->p == a->p);
        CHECK(b->dim == a->dim);
        CHECK(b->idempotents == a->idempotents);
        for (int i = 0; i < a->dim; ++i) CHECK(b->mul[i] == a->mul[i]);
        CHECK(validate_algebra(*b).ok());
    }
}

TEST_CASE("triangle family rejects bad parameters") {
    CHECK_THROWS(triangle_algebra(2, 0, 1, 1));
    CHECK_THROWS(triangle_algebra(4, 1, 1, 1));  // modulus not prime
    CHECK_THROWS(builtin_algebra("Z9", 2));
}
