#ifndef HELLER_FP_HPP
#define HELLER_FP_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace heller {

// Dense matrix over F_p, p prime <= 997. Entries are residues in [0, p-1].
// Vectors are rows; maps act by right multiplication, so composing
// "f then g" is mat(f) * mat(g).
class FpMatrix {
public:
    FpMatrix() : p_(2), rows_(0), cols_(0) {}
    FpMatrix(uint32_t p, size_t rows, size_t cols);
    FpMatrix(uint32_t p, size_t rows, size_t cols, std::vector<uint32_t> entries);

    static FpMatrix identity(uint32_t p, size_t n);
    static FpMatrix zero(uint32_t p, size_t rows, size_t cols) { return FpMatrix(p, rows, cols); }

    uint32_t p() const { return p_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    uint32_t at(size_t i, size_t j) const { return a_[i * cols_ + j]; }
    void set(size_t i, size_t j, uint32_t v) { a_[i * cols_ + j] = v % p_; }
    const std::vector<uint32_t>& data() const { return a_; }

    FpMatrix operator*(const FpMatrix& o) const;
    FpMatrix operator+(const FpMatrix& o) const;
    FpMatrix operator-(const FpMatrix& o) const;
    FpMatrix scaled(uint32_t c) const;
    FpMatrix transpose() const;
    FpMatrix pow(uint64_t e) const;  // square matrices only

    bool operator==(const FpMatrix& o) const = default;
    bool is_zero() const;

    FpMatrix row(size_t i) const;
    FpMatrix rows_slice(const std::vector<size_t>& idx) const;
    void set_block(size_t r0, size_t c0, const FpMatrix& b);
    FpMatrix block(size_t r0, size_t c0, size_t nr, size_t nc) const;

    static FpMatrix vstack(const FpMatrix& a, const FpMatrix& b);
    static FpMatrix hstack(const FpMatrix& a, const FpMatrix& b);

    // Row-major flattening into a single row vector.
    FpMatrix vec() const;

    std::string to_string() const;

private:
    uint32_t p_;
    size_t rows_, cols_;
    std::vector<uint32_t> a_;
};

struct RrefResult {
    FpMatrix r;
    size_t rank = 0;
    std::vector<size_t> pivot_cols;
};

RrefResult rref(const FpMatrix& m);
size_t rank(const FpMatrix& m);

// Basis (as rows) of { x : x * m = 0 }.
FpMatrix left_kernel(const FpMatrix& m);

// Solves x * a = b for x (rows(b) x rows(a)); canonical solution with free
// variables set to zero. Empty optional if inconsistent.
std::optional<FpMatrix> solve_row(const FpMatrix& a, const FpMatrix& b);

std::optional<FpMatrix> inverse(const FpMatrix& m);
bool is_invertible(const FpMatrix& m);

// Row space basis in rref form.
FpMatrix row_space(const FpMatrix& m);

// True if every row of sub lies in the row space of space.
bool row_space_contains(const FpMatrix& space, const FpMatrix& sub);

// Extends the (independent) rows of base to a basis of the row space of
// ambient; returns the added rows, picked greedily from the rows of ambient.
FpMatrix extend_basis(const FpMatrix& base, const FpMatrix& ambient);

uint32_t fp_inv(uint32_t x, uint32_t p);
bool is_prime(uint32_t n);

class dim_mismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace heller

#endif
