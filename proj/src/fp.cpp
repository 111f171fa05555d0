#include "fp.hpp"

#include <sstream>

namespace heller {

bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

uint32_t fp_inv(uint32_t x, uint32_t p) {
    if (x % p == 0) throw std::invalid_argument("fp_inv: zero");
    // p is prime, so x^(p-2) works; p <= 997 keeps everything in 64 bit.
    uint64_t r = 1, b = x % p, e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<uint32_t>(r);
}

FpMatrix::FpMatrix(uint32_t p, size_t rows, size_t cols)
    : p_(p), rows_(rows), cols_(cols), a_(rows * cols, 0) {
    if (!is_prime(p) || p > 997) throw std::invalid_argument("FpMatrix: modulus must be prime <= 997");
}

FpMatrix::FpMatrix(uint32_t p, size_t rows, size_t cols, std::vector<uint32_t> entries)
    : p_(p), rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (!is_prime(p) || p > 997) throw std::invalid_argument("FpMatrix: modulus must be prime <= 997");
    if (a_.size() != rows * cols) throw dim_mismatch("FpMatrix: entry count");
    for (auto& v : a_) v %= p_;
}

FpMatrix FpMatrix::identity(uint32_t p, size_t n) {
    FpMatrix m(p, n, n);
    for (size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

FpMatrix FpMatrix::operator*(const FpMatrix& o) const {
    if (cols_ != o.rows_ || p_ != o.p_) throw dim_mismatch("FpMatrix::operator*");
    FpMatrix r(p_, rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < o.cols_; ++j) {
            uint64_t s = 0;
            for (size_t k = 0; k < cols_; ++k)
                s += static_cast<uint64_t>(a_[i * cols_ + k]) * o.a_[k * o.cols_ + j];
            r.a_[i * o.cols_ + j] = static_cast<uint32_t>(s % p_);
        }
    return r;
}

FpMatrix FpMatrix::operator+(const FpMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_) throw dim_mismatch("FpMatrix::operator+");
    FpMatrix r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = (a_[i] + o.a_[i]) % p_;
    return r;
}

FpMatrix FpMatrix::operator-(const FpMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_) throw dim_mismatch("FpMatrix::operator-");
    FpMatrix r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = (a_[i] + p_ - o.a_[i]) % p_;
    return r;
}

FpMatrix FpMatrix::scaled(uint32_t c) const {
    FpMatrix r = *this;
    c %= p_;
    for (auto& v : r.a_) v = static_cast<uint32_t>(static_cast<uint64_t>(v) * c % p_);
    return r;
}

FpMatrix FpMatrix::transpose() const {
    FpMatrix r(p_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.a_[j * rows_ + i] = a_[i * cols_ + j];
    return r;
}

FpMatrix FpMatrix::pow(uint64_t e) const {
    if (rows_ != cols_) throw dim_mismatch("FpMatrix::pow");
    FpMatrix r = identity(p_, rows_), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool FpMatrix::is_zero() const {
    for (auto v : a_)
        if (v) return false;
    return true;
}

FpMatrix FpMatrix::row(size_t i) const {
    FpMatrix r(p_, 1, cols_);
    for (size_t j = 0; j < cols_; ++j) r.a_[j] = a_[i * cols_ + j];
    return r;
}

FpMatrix FpMatrix::rows_slice(const std::vector<size_t>& idx) const {
    FpMatrix r(p_, idx.size(), cols_);
    for (size_t i = 0; i < idx.size(); ++i)
        for (size_t j = 0; j < cols_; ++j) r.a_[i * cols_ + j] = a_[idx[i] * cols_ + j];
    return r;
}

void FpMatrix::set_block(size_t r0, size_t c0, const FpMatrix& b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw dim_mismatch("FpMatrix::set_block");
    for (size_t i = 0; i < b.rows_; ++i)
        for (size_t j = 0; j < b.cols_; ++j) a_[(r0 + i) * cols_ + c0 + j] = b.a_[i * b.cols_ + j];
}

FpMatrix FpMatrix::block(size_t r0, size_t c0, size_t nr, size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw dim_mismatch("FpMatrix::block");
    FpMatrix r(p_, nr, nc);
    for (size_t i = 0; i < nr; ++i)
        for (size_t j = 0; j < nc; ++j) r.a_[i * nc + j] = a_[(r0 + i) * cols_ + c0 + j];
    return r;
}

FpMatrix FpMatrix::vstack(const FpMatrix& a, const FpMatrix& b) {
    if (a.cols_ != b.cols_ || a.p_ != b.p_) throw dim_mismatch("FpMatrix::vstack");
    FpMatrix r(a.p_, a.rows_ + b.rows_, a.cols_);
    r.set_block(0, 0, a);
    r.set_block(a.rows_, 0, b);
    return r;
}

FpMatrix FpMatrix::hstack(const FpMatrix& a, const FpMatrix& b) {
    if (a.rows_ != b.rows_ || a.p_ != b.p_) throw dim_mismatch("FpMatrix::hstack");
    FpMatrix r(a.p_, a.rows_, a.cols_ + b.cols_);
    r.set_block(0, 0, a);
    r.set_block(0, a.cols_, b);
    return r;
}

FpMatrix FpMatrix::vec() const {
    FpMatrix r(p_, 1, rows_ * cols_, a_.empty() ? std::vector<uint32_t>{} : a_);
    return r;
}

std::string FpMatrix::to_string() const {
    std::ostringstream os;
    os << rows_ << "x" << cols_ << " mod " << p_ << "\n";
    for (size_t i = 0; i < rows_; ++i) {
        os << "[";
        for (size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j);
        os << "]\n";
    }
    return os.str();
}

RrefResult rref(const FpMatrix& m) {
    RrefResult res{m, 0, {}};
    FpMatrix& r = res.r;
    const uint32_t p = m.p();
    size_t lead = 0;
    for (size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
        size_t piv = lead;
        while (piv < m.rows() && r.at(piv, col) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != lead)
            for (size_t j = 0; j < m.cols(); ++j) {
                uint32_t t = r.at(lead, j);
                r.set(lead, j, r.at(piv, j));
                r.set(piv, j, t);
            }
        uint32_t inv = fp_inv(r.at(lead, col), p);
        for (size_t j = col; j < m.cols(); ++j)
            r.set(lead, j, static_cast<uint32_t>(static_cast<uint64_t>(r.at(lead, j)) * inv % p));
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == lead) continue;
            uint32_t c = r.at(i, col);
            if (!c) continue;
            for (size_t j = col; j < m.cols(); ++j) {
                uint64_t v = r.at(i, j) + static_cast<uint64_t>(p - c) * r.at(lead, j) % p;
                r.set(i, j, static_cast<uint32_t>(v % p));
            }
        }
        res.pivot_cols.push_back(col);
        ++lead;
    }
    res.rank = res.pivot_cols.size();
    return res;
}

size_t rank(const FpMatrix& m) { return rref(m).rank; }

FpMatrix left_kernel(const FpMatrix& m) {
    // rref of [m | I]; rows whose m-part vanished carry the kernel basis.
    FpMatrix aug = FpMatrix::hstack(m, FpMatrix::identity(m.p(), m.rows()));
    RrefResult rr = rref(aug);
    std::vector<size_t> zero_rows;
    for (size_t i = 0; i < m.rows(); ++i) {
        bool z = true;
        for (size_t j = 0; j < m.cols() && z; ++j)
            if (rr.r.at(i, j)) z = false;
        if (z) zero_rows.push_back(i);
    }
    FpMatrix tail = rr.r.block(0, m.cols(), m.rows(), m.rows());
    return tail.rows_slice(zero_rows);
}

std::optional<FpMatrix> solve_row(const FpMatrix& a, const FpMatrix& b) {
    if (a.cols() != b.cols() || a.p() != b.p()) throw dim_mismatch("solve_row: cols(b) != cols(a)");
    // x * a = b  <=>  a^T x^T = b^T, one column of x per row of b.
    FpMatrix at = a.transpose();
    FpMatrix bt = b.transpose();
    RrefResult rr = rref(FpMatrix::hstack(at, bt));
    // inconsistent iff some pivot lands in the augmented part
    for (size_t pc : rr.pivot_cols)
        if (pc >= at.cols()) return std::nullopt;
    FpMatrix x(a.p(), b.rows(), a.rows());
    for (size_t t = 0; t < rr.pivot_cols.size(); ++t) {
        size_t var = rr.pivot_cols[t];
        for (size_t j = 0; j < bt.cols(); ++j) x.set(j, var, rr.r.at(t, at.cols() + j));
    }
    return x;
}

std::optional<FpMatrix> inverse(const FpMatrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    RrefResult rr = rref(FpMatrix::hstack(m, FpMatrix::identity(m.p(), m.rows())));
    // the identity block keeps the stacked rank full; m is invertible exactly
    // when all pivots land in the left block
    for (size_t c : rr.pivot_cols)
        if (c >= m.cols()) return std::nullopt;
    return rr.r.block(0, m.cols(), m.rows(), m.rows());
}

bool is_invertible(const FpMatrix& m) {
    return m.rows() == m.cols() && rank(m) == m.rows();
}

FpMatrix row_space(const FpMatrix& m) {
    RrefResult rr = rref(m);
    std::vector<size_t> idx(rr.rank);
    for (size_t i = 0; i < rr.rank; ++i) idx[i] = i;
    return rr.r.rows_slice(idx);
}

bool row_space_contains(const FpMatrix& space, const FpMatrix& sub) {
    if (sub.rows() == 0) return true;
    return rank(FpMatrix::vstack(space, sub)) == rank(space);
}

FpMatrix extend_basis(const FpMatrix& base, const FpMatrix& ambient) {
    FpMatrix cur = base;
    FpMatrix added(base.p(), 0, base.cols());
    size_t r = rank(cur);
    for (size_t i = 0; i < ambient.rows(); ++i) {
        FpMatrix cand = FpMatrix::vstack(cur, ambient.row(i));
        size_t nr = rank(cand);
        if (nr > r) {
            cur = cand;
            added = FpMatrix::vstack(added, ambient.row(i));
            r = nr;
        }
    }
    return added;
}

}  // namespace heller
