#include "algebra.hpp"

#include <map>
#include <sstream>

namespace heller {

FpMatrix BasedAlgebra::multiply(const FpMatrix& x, const FpMatrix& y) const {
    FpMatrix out(p, 1, dim);
    for (int i = 0; i < dim; ++i) {
        uint32_t xi = x.at(0, i);
        if (!xi) continue;
        // x_i * (y * mul[i]) accumulated: row y times mul[i] gives coeffs of b_i * y
        FpMatrix contrib = (y * mul[i]).scaled(xi);
        out = out + contrib;
    }
    return out;
}

FpMatrix BasedAlgebra::right_regular(const FpMatrix& c) const {
    FpMatrix m(p, dim, dim);
    for (int i = 0; i < dim; ++i) {
        FpMatrix r = multiply(basis_row(i), c);
        m.set_block(i, 0, r);
    }
    return m;
}

FpMatrix BasedAlgebra::right_regular_basis(int j) const {
    FpMatrix m(p, dim, dim);
    for (int i = 0; i < dim; ++i) m.set_block(i, 0, mul[i].row(j));
    return m;
}

FpMatrix BasedAlgebra::unit_row() const {
    FpMatrix u(p, 1, dim);
    for (int e : idempotents) u.set(0, e, (u.at(0, e) + 1) % p);
    return u;
}

FpMatrix BasedAlgebra::basis_row(int i) const {
    FpMatrix r(p, 1, dim);
    r.set(0, i, 1);
    return r;
}

const std::vector<FpMatrix>& BasedAlgebra::generators() const {
    if (!gens_.empty()) return gens_;
    for (int e : idempotents) gens_.push_back(basis_row(e));
    // basis of rad / rad^2
    FpMatrix rad(p, radical.size(), dim);
    for (size_t i = 0; i < radical.size(); ++i) rad.set(i, radical[i], 1);
    // rad^2 = span of products of radical basis elements
    FpMatrix rad2(p, 0, dim);
    for (int r1 : radical)
        for (int r2 : radical) {
            FpMatrix prod = mul[r1].row(r2);
            if (!prod.is_zero()) rad2 = FpMatrix::vstack(rad2, prod);
        }
    FpMatrix rad2b = row_space(rad2);
    FpMatrix lift = extend_basis(rad2b, rad);
    for (size_t i = 0; i < lift.rows(); ++i) gens_.push_back(lift.row(i));
    return gens_;
}

int BasedAlgebra::radical_generator_count() const {
    return static_cast<int>(generators().size() - idempotents.size());
}

std::string ValidationReport::to_string() const {
    if (ok()) return "ok";
    std::ostringstream os;
    for (auto& f : failures) os << f << "\n";
    return os.str();
}

AlgebraPtr triangle_algebra(uint32_t p, int n, int m, int k) {
    if (!is_prime(p) || p > 997) throw std::invalid_argument("triangle_algebra: p must be prime <= 997");
    if (n < 1 || m < 1 || k < 1 || k > std::min(n, m))
        throw std::invalid_argument("triangle_algebra: need n,m >= 1 and 1 <= k <= min(n,m)");

    auto alg = std::make_shared<BasedAlgebra>();
    alg->p = p;
    alg->dim = n + m + k;
    alg->triangle = TriangleParams{n, m, k};

    // basis order: pi^s e (s < n), pi^t f (t < m), pi^r a (r < k)
    auto e_idx = [&](int s) { return s; };
    auto f_idx = [&](int t) { return n + t; };
    auto a_idx = [&](int r) { return n + m + r; };

    for (int s = 0; s < n; ++s)
        alg->basis_labels.push_back(s == 0 ? "e" : "pi^" + std::to_string(s) + "*e");
    for (int t = 0; t < m; ++t)
        alg->basis_labels.push_back(t == 0 ? "f" : "pi^" + std::to_string(t) + "*f");
    for (int r = 0; r < k; ++r)
        alg->basis_labels.push_back(r == 0 ? "a" : "pi^" + std::to_string(r) + "*a");

    alg->mul.assign(alg->dim, FpMatrix(p, alg->dim, alg->dim));
    for (int s = 0; s < n; ++s) {
        for (int s2 = 0; s2 < n; ++s2)
            if (s + s2 < n) alg->mul[e_idx(s)].set(e_idx(s2), e_idx(s + s2), 1);
        for (int r = 0; r < k; ++r)
            if (s + r < k) alg->mul[e_idx(s)].set(a_idx(r), a_idx(s + r), 1);
    }
    for (int t = 0; t < m; ++t)
        for (int t2 = 0; t2 < m; ++t2)
            if (t + t2 < m) alg->mul[f_idx(t)].set(f_idx(t2), f_idx(t + t2), 1);
    for (int r = 0; r < k; ++r)
        for (int t = 0; t < m; ++t)
            if (r + t < k) alg->mul[a_idx(r)].set(f_idx(t), a_idx(r + t), 1);

    alg->idempotents = {e_idx(0), f_idx(0)};
    for (int s = 1; s < n; ++s) alg->radical.push_back(e_idx(s));
    for (int t = 1; t < m; ++t) alg->radical.push_back(f_idx(t));
    for (int r = 0; r < k; ++r) alg->radical.push_back(a_idx(r));

    ValidationReport rep = validate_algebra(*alg);
    if (!rep.ok()) throw std::logic_error("triangle_algebra failed validation: " + rep.to_string());
    return alg;
}

static const std::map<std::string, TriangleParams>& builtin_table() {
    static const std::map<std::string, TriangleParams> t = {
        {"A", {3, 3, 3}},  {"B", {3, 3, 2}},  {"C1", {3, 2, 2}}, {"C2", {3, 1, 1}},
        {"C3", {2, 2, 2}}, {"C4", {3, 3, 1}}, {"C5", {3, 2, 1}}, {"C6", {2, 3, 2}},
        {"C7", {1, 3, 1}}, {"C8", {2, 3, 1}},
    };
    return t;
}

std::vector<std::string> builtin_algebra_names() {
    std::vector<std::string> names;
    for (auto& [k, v] : builtin_table()) names.push_back(k);
    return names;
}

TriangleParams builtin_params(const std::string& name) {
    auto it = builtin_table().find(name);
    if (it == builtin_table().end()) throw std::invalid_argument("unknown algebra name: " + name);
    return it->second;
}

AlgebraPtr builtin_algebra(const std::string& name, uint32_t p) {
    TriangleParams t = builtin_params(name);
    return triangle_algebra(p, t.n, t.m, t.k);
}

ValidationReport validate_algebra(const BasedAlgebra& alg) {
    ValidationReport rep;
    const int d = alg.dim;
    if (static_cast<int>(alg.mul.size()) != d) {
        rep.failures.push_back("structure constant table has wrong size");
        return rep;
    }
    for (int i = 0; i < d; ++i)
        if (alg.mul[i].rows() != static_cast<size_t>(d) || alg.mul[i].cols() != static_cast<size_t>(d)) {
            rep.failures.push_back("structure constant matrix " + std::to_string(i) + " has wrong shape");
            return rep;
        }

    // associativity on basis triples: (b_i b_j) b_k == b_i (b_j b_k)
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            FpMatrix ij = alg.mul[i].row(j);
            for (int k = 0; k < d; ++k) {
                FpMatrix lhs = alg.multiply(ij, alg.basis_row(k));
                FpMatrix rhs = alg.multiply(alg.basis_row(i), alg.mul[j].row(k));
                if (!(lhs == rhs)) {
                    rep.failures.push_back("associativity fails at basis triple (" + std::to_string(i) +
                                           "," + std::to_string(j) + "," + std::to_string(k) + ")");
                    i = j = d;  // one witness is enough
                    break;
                }
            }
        }

    // idempotents: orthogonal idempotents summing to the identity
    for (size_t s = 0; s < alg.idempotents.size(); ++s)
        for (size_t t = 0; t < alg.idempotents.size(); ++t) {
            int ei = alg.idempotents[s], ej = alg.idempotents[t];
            FpMatrix prod = alg.mul[ei].row(ej);
            FpMatrix expect(alg.p, 1, d);
            if (s == t) expect.set(0, ei, 1);
            if (!(prod == expect))
                rep.failures.push_back("idempotents not orthogonal idempotents at pair (" +
                                       std::to_string(ei) + "," + std::to_string(ej) + ")");
        }
    FpMatrix u = alg.unit_row();
    for (int i = 0; i < d; ++i) {
        if (!(alg.multiply(u, alg.basis_row(i)) == alg.basis_row(i)) ||
            !(alg.multiply(alg.basis_row(i), u) == alg.basis_row(i))) {
            rep.failures.push_back("sum of idempotents is not the identity (fails on basis " +
                                   std::to_string(i) + ")");
            break;
        }
    }

    // radical: two-sided ideal, nilpotent
    FpMatrix rad(alg.p, alg.radical.size(), d);
    for (size_t i = 0; i < alg.radical.size(); ++i) rad.set(i, alg.radical[i], 1);
    FpMatrix radspan = row_space(rad);
    bool ideal_ok = true;
    for (int r : alg.radical)
        for (int b = 0; b < d && ideal_ok; ++b) {
            if (!row_space_contains(radspan, alg.mul[r].row(b)) ||
                !row_space_contains(radspan, alg.mul[b].row(r))) {
                rep.failures.push_back("radical basis does not span a two-sided ideal (element " +
                                       std::to_string(r) + " times basis " + std::to_string(b) + ")");
                ideal_ok = false;
            }
        }
    if (ideal_ok) {
        FpMatrix power = radspan;
        bool nilpotent = false;
        for (int step = 0; step <= d; ++step) {
            if (power.rows() == 0) {
                nilpotent = true;
                break;
            }
            FpMatrix next(alg.p, 0, d);
            for (size_t i = 0; i < power.rows(); ++i)
                for (size_t j = 0; j < radspan.rows(); ++j) {
                    FpMatrix prod = alg.multiply(power.row(i), radspan.row(j));
                    if (!prod.is_zero()) next = FpMatrix::vstack(next, prod);
                }
            next = row_space(next);
            if (next.rows() == power.rows()) break;  // stabilized nonzero
            power = next;
        }
        if (!nilpotent) rep.failures.push_back("radical ideal is not nilpotent");
    }

    // basis = idempotents union radical, disjointly
    std::vector<int> seen(d, 0);
    for (int e : alg.idempotents) seen[e]++;
    for (int r : alg.radical) seen[r]++;
    for (int i = 0; i < d; ++i)
        if (seen[i] != 1) {
            rep.failures.push_back("basis is not the disjoint union of idempotents and radical basis");
            break;
        }

    return rep;
}

}  // namespace heller
