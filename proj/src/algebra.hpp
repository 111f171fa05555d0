#ifndef HELLER_ALGEBRA_HPP
#define HELLER_ALGEBRA_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fp.hpp"

namespace heller {

struct TriangleParams {
    int n = 0, m = 0, k = 0;  // pi-nilpotency degrees at e, at f, and on the arrow
};

// Finite-dimensional based algebra over F_p: basis, structure constants,
// primitive orthogonal idempotents and a radical basis, all explicit.
// Only basic split algebras of this shape are supported.
class BasedAlgebra {
public:
    uint32_t p = 2;
    int dim = 0;
    std::vector<std::string> basis_labels;
    // mul[i] is a dim x dim matrix; row j holds the coefficients of b_i * b_j.
    std::vector<FpMatrix> mul;
    std::vector<int> idempotents;
    std::vector<int> radical;
    std::optional<TriangleParams> triangle;  // set for the built-in family

    // x * y on coefficient rows.
    FpMatrix multiply(const FpMatrix& x, const FpMatrix& y) const;

    // Matrix of right multiplication by the element with coefficient row c,
    // acting on the algebra itself (rows = basis elements).
    FpMatrix right_regular(const FpMatrix& c) const;
    FpMatrix right_regular_basis(int j) const;

    FpMatrix unit_row() const;  // coefficients of 1 = sum of idempotents
    FpMatrix basis_row(int i) const;

    // Coefficient rows of a small generating set: idempotents plus a basis of
    // rad/rad^2. Intertwining with these generators determines module maps.
    const std::vector<FpMatrix>& generators() const;

    int radical_generator_count() const;

private:
    mutable std::vector<FpMatrix> gens_;
};

using AlgebraPtr = std::shared_ptr<const BasedAlgebra>;

struct ValidationReport {
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
    std::string to_string() const;
};

// The triangle-algebra family Lambda(n,m,k): two loops of nilpotency n and m
// on the vertices of an A2 quiver and an arrow killed by pi^k.
AlgebraPtr triangle_algebra(uint32_t p, int n, int m, int k);

// A, B, C1..C8 as members of the family.
AlgebraPtr builtin_algebra(const std::string& name, uint32_t p);
std::vector<std::string> builtin_algebra_names();
TriangleParams builtin_params(const std::string& name);

ValidationReport validate_algebra(const BasedAlgebra& alg);

}  // namespace heller

#endif
