#include "krull_schmidt.hpp"

#include <algorithm>

namespace heller {

// --- small polynomial arithmetic over F_p (coefficients low to high) --------

namespace {

using Poly = std::vector<uint32_t>;

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = static_cast<uint32_t>((c[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % p);
    trim(c);
    return c;
}

// a mod b, b nonzero
Poly poly_mod(Poly a, const Poly& b, uint32_t p) {
    trim(a);
    uint32_t lead_inv = fp_inv(b.back(), p);
    while (a.size() >= b.size()) {
        uint32_t c = static_cast<uint32_t>(static_cast<uint64_t>(a.back()) * lead_inv % p);
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) {
            uint64_t sub = static_cast<uint64_t>(c) * b[i] % p;
            a[shift + i] = static_cast<uint32_t>((a[shift + i] + p - sub) % p);
        }
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

Poly poly_divide_exact(Poly a, const Poly& b, uint32_t p) {
    trim(a);
    Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    uint32_t lead_inv = fp_inv(b.back(), p);
    while (a.size() >= b.size()) {
        uint32_t c = static_cast<uint32_t>(static_cast<uint64_t>(a.back()) * lead_inv % p);
        size_t shift = a.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) {
            uint64_t sub = static_cast<uint64_t>(c) * b[i] % p;
            a[shift + i] = static_cast<uint32_t>((a[shift + i] + p - sub) % p);
        }
        trim(a);
        if (a.empty()) break;
    }
    trim(q);
    return q;
}

Poly make_monic(Poly f, uint32_t p) {
    trim(f);
    if (f.empty()) return f;
    uint32_t inv = fp_inv(f.back(), p);
    for (auto& c : f) c = static_cast<uint32_t>(static_cast<uint64_t>(c) * inv % p);
    return f;
}

Poly poly_gcd(Poly a, Poly b, uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = b;
        b = r;
    }
    return make_monic(a, p);
}

Poly poly_powmod(const Poly& base, uint64_t e, const Poly& mod, uint32_t p) {
    Poly r = {1}, b = poly_mod(base, mod, p);
    while (e) {
        if (e & 1) r = poly_mod(poly_mul(r, b, p), mod, p);
        b = poly_mod(poly_mul(b, b, p), mod, p);
        e >>= 1;
    }
    return r;
}

FpMatrix poly_eval(const Poly& f, const FpMatrix& x) {
    const uint32_t p = x.p();
    FpMatrix r(p, x.rows(), x.cols());
    // Horner
    for (size_t i = f.size(); i-- > 0;) {
        r = r * x;
        for (size_t d = 0; d < x.rows(); ++d) r.set(d, d, (r.at(d, d) + f[i]) % p);
    }
    return r;
}

Poly min_poly(const FpMatrix& x) {
    const uint32_t p = x.p();
    const size_t n = x.rows();
    FpMatrix powers(p, 0, n * n);
    FpMatrix cur = FpMatrix::identity(p, n);
    for (size_t d = 0;; ++d) {
        FpMatrix cand = FpMatrix::vstack(powers, cur.vec());
        if (rank(cand) < cand.rows()) {
            // x^d depends on lower powers: solve coefficients
            auto sol = solve_row(powers, cur.vec());
            Poly f(d + 1, 0);
            for (size_t i = 0; i < d; ++i) f[i] = (p - sol->at(0, i)) % p;
            f[d] = 1;
            return f;
        }
        powers = cand;
        cur = cur * x;
        if (d > n) throw std::logic_error("min_poly: no relation found");
    }
}

// coprime factorization m = u * w with both nontrivial, via distinct-degree
// separation; empty result when none found this way
std::optional<std::pair<Poly, Poly>> coprime_split(const Poly& m, uint32_t p) {
    const size_t deg = m.size() - 1;
    Poly x = {0, 1};
    for (size_t d = 1; d <= deg; ++d) {
        // gcd(m, x^{p^d} - x) picks out the degree-d irreducible factors
        Poly xp = x;
        for (size_t i = 0; i < d; ++i) xp = poly_powmod(xp, p, m, p);
        Poly diff = xp;
        diff.resize(std::max<size_t>(diff.size(), 2), 0);
        diff[1] = (diff[1] + p - 1) % p;
        trim(diff);
        Poly h = poly_gcd(m, diff, p);
        if (h.size() <= 1 || h.size() == m.size()) continue;
        // lift h to full multiplicity: w = m with all h-factors removed
        Poly w = m;
        while (true) {
            Poly g = poly_gcd(w, h, p);
            if (g.size() <= 1) break;
            w = poly_divide_exact(w, g, p);
        }
        if (w.size() <= 1 || w.size() == m.size()) continue;
        Poly u = poly_divide_exact(m, w, p);
        return std::make_pair(u, w);
    }
    return std::nullopt;
}

}  // namespace

// --- End algebra -------------------------------------------------------------

EndData end_algebra(ModulePtr m) {
    EndData out;
    out.basis = hom_basis(m, m);
    const uint32_t p = m->alg->p;
    const size_t n = out.basis.size();
    FpMatrix vecs(p, n, static_cast<size_t>(m->dim) * m->dim);
    for (size_t i = 0; i < n; ++i) vecs.set_block(i, 0, out.basis[i].mat.vec());
    out.table = FpMatrix(p, n * n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            auto c = solve_row(vecs, (out.basis[i].mat * out.basis[j].mat).vec());
            if (!c) throw std::logic_error("end_algebra: composition left the Hom space");
            out.table.set_block(i * n + j, 0, *c);
        }
    return out;
}

// --- splitting ----------------------------------------------------------------

namespace {

std::optional<std::pair<FpMatrix, FpMatrix>> split_from_endo(const FpMatrix& phi, int dim) {
    // Fitting: stabilize phi^N for N >= dim
    uint64_t n2 = 1;
    while (n2 < static_cast<uint64_t>(dim)) n2 <<= 1;
    FpMatrix st = phi.pow(n2);
    size_t r = rank(st);
    if (r > 0 && r < static_cast<size_t>(dim))
        return std::make_pair(row_space(st), left_kernel(st));
    // minimal polynomial: a coprime factorization yields a splitting
    Poly mp = min_poly(phi);
    auto cs = coprime_split(mp, phi.p());
    if (cs) {
        FpMatrix a = left_kernel(poly_eval(cs->first, phi));
        FpMatrix b = left_kernel(poly_eval(cs->second, phi));
        if (a.rows() > 0 && b.rows() > 0 && a.rows() + b.rows() == static_cast<size_t>(dim))
            return std::make_pair(a, b);
    }
    return std::nullopt;
}

bool locality_certificate(const std::vector<ModuleMap>& basis, int dim) {
    if (basis.empty()) return false;
    const uint32_t p = basis[0].mat.p();
    uint64_t n2 = 1;
    while (n2 < static_cast<uint64_t>(dim)) n2 <<= 1;
    // collect nilpotent elements, shifting invertible basis elements by scalars
    FpMatrix nil(p, 0, static_cast<size_t>(dim) * dim);
    for (auto& h : basis) {
        FpMatrix cand = h.mat;
        bool nilp = cand.pow(n2).is_zero();
        if (!nilp) {
            for (uint32_t c = 0; c < p && !nilp; ++c) {
                FpMatrix sh = cand - FpMatrix::identity(p, dim).scaled(c);
                if (sh.pow(n2).is_zero()) {
                    cand = sh;
                    nilp = true;
                }
            }
        }
        if (nilp && !cand.is_zero()) nil = FpMatrix::vstack(nil, cand.vec());
    }
    FpMatrix nspan = row_space(nil);
    if (nspan.rows() + 1 != basis.size()) return false;
    // closure under both-sided multiplication by End
    auto unvec = [&](const FpMatrix& v) {
        FpMatrix m(p, dim, dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) m.set(i, j, v.at(0, static_cast<size_t>(i) * dim + j));
        return m;
    };
    for (size_t i = 0; i < nspan.rows(); ++i) {
        FpMatrix x = unvec(nspan.row(i));
        for (auto& h : basis) {
            if (!row_space_contains(nspan, (x * h.mat).vec()) ||
                !row_space_contains(nspan, (h.mat * x).vec()))
                return false;
        }
    }
    // the ideal must be nilpotent
    FpMatrix power = nspan;
    for (int step = 0; step <= dim * dim; ++step) {
        if (power.rows() == 0) return true;
        FpMatrix next(p, 0, static_cast<size_t>(dim) * dim);
        for (size_t i = 0; i < power.rows(); ++i)
            for (size_t j = 0; j < nspan.rows(); ++j) {
                FpMatrix prod = unvec(power.row(i)) * unvec(nspan.row(j));
                if (!prod.is_zero()) next = FpMatrix::vstack(next, prod.vec());
            }
        next = row_space(next);
        if (next.rows() == power.rows()) return false;
        power = next;
    }
    return false;
}

}  // namespace

SplitResult find_splitting(ModulePtr m, uint64_t seed) {
    SplitResult res;
    if (m->dim == 0) {
        res.exhaustive = true;
        return res;
    }
    auto basis = hom_basis(m, m);
    const uint32_t p = m->alg->p;

    auto try_phi = [&](const FpMatrix& phi) -> bool {
        auto s = split_from_endo(phi, m->dim);
        if (s) {
            res.split_found = true;
            res.part_a = s->first;
            res.part_b = s->second;
            return true;
        }
        return false;
    };

    for (auto& h : basis)
        if (try_phi(h.mat)) return res;

    std::mt19937_64 rng((static_cast<uint64_t>(m->dim) << 20) ^ seed ^ 0x5deece66dULL);
    std::uniform_int_distribution<uint32_t> dist(0, p - 1);
    for (int t = 0; t < 64; ++t) {
        FpMatrix c(p, 1, basis.size());
        for (size_t i = 0; i < basis.size(); ++i) c.set(0, i, dist(rng));
        if (try_phi(hom_combination(basis, c).mat)) return res;
    }

    // exhaustive idempotent search when feasible
    double total = 1;
    for (size_t i = 0; i < basis.size(); ++i) total *= p;
    if (total <= 1e6) {
        res.exhaustive = true;
        const uint64_t count = static_cast<uint64_t>(total);
        std::vector<uint32_t> c(basis.size());
        for (uint64_t idx = 1; idx < count; ++idx) {
            uint64_t v = idx;
            for (size_t i = 0; i < basis.size(); ++i) {
                c[i] = static_cast<uint32_t>(v % p);
                v /= p;
            }
            FpMatrix cm(p, 1, basis.size(), std::vector<uint32_t>(c));
            FpMatrix e = hom_combination(basis, cm).mat;
            if (e * e == e && !e.is_zero() && !(e == FpMatrix::identity(p, m->dim))) {
                res.split_found = true;
                res.part_a = row_space(e);
                res.part_b = left_kernel(e);
                return res;
            }
        }
        return res;
    }

    res.locality_certificate = locality_certificate(basis, m->dim);
    if (!res.locality_certificate)
        throw std::runtime_error(
            "find_splitting: neither a splitting nor an indecomposability certificate found");
    return res;
}

std::optional<ModuleMap> find_idempotent(ModulePtr m, uint64_t seed) {
    SplitResult s = find_splitting(m, seed);
    if (!s.split_found) return std::nullopt;
    const uint32_t p = m->alg->p;
    FpMatrix basis = FpMatrix::vstack(s.part_a, s.part_b);
    auto binv = inverse(basis);
    if (!binv) throw std::logic_error("find_idempotent: parts do not span");
    FpMatrix d(p, m->dim, m->dim);
    for (size_t i = 0; i < s.part_a.rows(); ++i) d.set(i, i, 1);
    return ModuleMap{m, m, *binv * d * basis};
}

Decomposition decompose(ModulePtr m, uint64_t seed) {
    // gather indecomposable pieces with their embeddings into m
    std::vector<std::pair<ModulePtr, FpMatrix>> pieces;
    struct Item {
        ModulePtr mod;
        FpMatrix emb;  // rows of m spanning the piece, also the inclusion matrix
    };
    std::vector<Item> stack;
    if (m->dim > 0) stack.push_back({m, FpMatrix::identity(m->alg->p, m->dim)});
    while (!stack.empty()) {
        Item it = stack.back();
        stack.pop_back();
        SplitResult s = find_splitting(it.mod, seed);
        if (!s.split_found) {
            pieces.push_back({it.mod, it.emb});
            continue;
        }
        auto [sa, ia] = submodule(it.mod, s.part_a);
        auto [sb, ib] = submodule(it.mod, s.part_b);
        stack.push_back({sa, ia.mat * it.emb});
        stack.push_back({sb, ib.mat * it.emb});
    }

    // group by isomorphism, deterministically ordered
    std::stable_sort(pieces.begin(), pieces.end(), [](const auto& a, const auto& b) {
        return module_sort_key(*a.first) < module_sort_key(*b.first);
    });
    Decomposition out;
    std::vector<ModulePtr> order;  // one entry per copy, for the witness
    std::vector<FpMatrix> blocks;
    for (auto& [mod, emb] : pieces) {
        bool matched = false;
        for (auto& [rep, mult] : out.summands) {
            auto iso = is_isomorphic(rep, mod, seed);
            if (iso) {
                ++mult;
                order.push_back(rep);
                blocks.push_back(iso->mat * emb);
                matched = true;
                break;
            }
        }
        if (!matched) {
            out.summands.push_back({mod, 1});
            order.push_back(mod);
            blocks.push_back(emb);
        }
    }
    // group copies of the same representative together
    std::vector<ModulePtr> ordered_mods;
    std::vector<FpMatrix> ordered_blocks;
    for (auto& [rep, mult] : out.summands)
        for (size_t i = 0; i < order.size(); ++i)
            if (order[i].get() == rep.get()) {
                ordered_mods.push_back(order[i]);
                ordered_blocks.push_back(blocks[i]);
            }
    DirectSum ds = direct_sum(m->alg, ordered_mods);
    FpMatrix w(m->alg->p, ds.sum->dim, m->dim);
    int off = 0;
    for (size_t i = 0; i < ordered_mods.size(); ++i) {
        w.set_block(off, 0, ordered_blocks[i]);
        off += ordered_mods[i]->dim;
    }
    if (!is_invertible(w)) throw std::logic_error("decompose: witness map not invertible");
    out.witness = ModuleMap{ds.sum, m, w};
    return out;
}

std::vector<int> identify(ModulePtr m, const std::vector<LabeledModule>& catalog, uint64_t seed) {
    Decomposition d = decompose(m, seed);
    std::vector<int> mults(catalog.size(), 0);
    for (auto& [rep, mult] : d.summands) {
        bool matched = false;
        for (size_t i = 0; i < catalog.size(); ++i) {
            if (is_isomorphic(catalog[i].mod, rep, seed)) {
                mults[i] += mult;
                matched = true;
                break;
            }
        }
        if (!matched)
            throw unknown_summand("identify: summand of dim " + std::to_string(rep->dim) +
                                      " matches no catalog entry",
                                  rep);
    }
    return mults;
}

}  // namespace heller
