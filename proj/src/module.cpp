#include "module.hpp"

#include <algorithm>
#include <sstream>

namespace heller {

FpMatrix Module::act(const FpMatrix& coeff_row) const {
    FpMatrix r(alg->p, dim, dim);
    for (int j = 0; j < alg->dim; ++j) {
        uint32_t c = coeff_row.at(0, j);
        if (c) r = r + action[j].scaled(c);
    }
    return r;
}

FpMatrix Module::radical_rows() const {
    FpMatrix acc(alg->p, 0, dim);
    for (int r : alg->radical) acc = FpMatrix::vstack(acc, action[r]);
    return row_space(acc);
}

bool ModuleMap::is_intertwiner() const {
    for (const FpMatrix& g : src->alg->generators()) {
        if (!(src->act(g) * mat == mat * dst->act(g))) return false;
    }
    return true;
}

ModuleMap ModuleMap::then(const ModuleMap& g) const {
    if (dst.get() != g.src.get() && !(dst->dim == g.src->dim && dst->action == g.src->action))
        throw dim_mismatch("ModuleMap::then: middle modules differ");
    return ModuleMap{src, g.dst, mat * g.mat};
}

ModulePtr zero_module(AlgebraPtr alg) {
    auto m = std::make_shared<Module>();
    m->alg = alg;
    m->dim = 0;
    m->action.assign(alg->dim, FpMatrix(alg->p, 0, 0));
    return m;
}

ValidationReport validate_module(const Module& m) {
    ValidationReport rep;
    const auto& alg = *m.alg;
    if (static_cast<int>(m.action.size()) != alg.dim) {
        rep.failures.push_back("wrong number of action matrices");
        return rep;
    }
    for (int i = 0; i < alg.dim; ++i)
        if (m.action[i].rows() != static_cast<size_t>(m.dim) ||
            m.action[i].cols() != static_cast<size_t>(m.dim)) {
            rep.failures.push_back("action matrix has wrong shape");
            return rep;
        }
    for (int i = 0; i < alg.dim; ++i)
        for (int j = 0; j < alg.dim; ++j) {
            FpMatrix lhs = m.action[i] * m.action[j];
            FpMatrix rhs(alg.p, m.dim, m.dim);
            for (int k = 0; k < alg.dim; ++k) {
                uint32_t c = alg.mul[i].at(j, k);
                if (c) rhs = rhs + m.action[k].scaled(c);
            }
            if (!(lhs == rhs)) {
                rep.failures.push_back("action violates structure constants at pair (" +
                                       std::to_string(i) + "," + std::to_string(j) + ")");
                i = alg.dim;
                break;
            }
        }
    FpMatrix s(alg.p, m.dim, m.dim);
    for (int e : alg.idempotents) {
        s = s + m.action[e];
        if (!(m.action[e] * m.action[e] == m.action[e]))
            rep.failures.push_back("idempotent does not act idempotently");
    }
    if (!(s == FpMatrix::identity(alg.p, m.dim)))
        rep.failures.push_back("idempotents do not sum to the identity action");
    return rep;
}

ModuleMap identity_map(ModulePtr m) {
    return ModuleMap{m, m, FpMatrix::identity(m->alg->p, m->dim)};
}

ModuleMap zero_map(ModulePtr src, ModulePtr dst) {
    return ModuleMap{src, dst, FpMatrix(src->alg->p, src->dim, dst->dim)};
}

std::pair<ModulePtr, ModuleMap> submodule(ModulePtr m, const FpMatrix& b) {
    if (rank(b) != b.rows()) throw std::invalid_argument("submodule: rows not independent");
    auto sub = std::make_shared<Module>();
    sub->alg = m->alg;
    sub->dim = static_cast<int>(b.rows());
    for (int i = 0; i < m->alg->dim; ++i) {
        auto s = solve_row(b, b * m->action[i]);
        if (!s) throw std::invalid_argument("submodule: row space not invariant");
        sub->action.push_back(*s);
    }
    return {sub, ModuleMap{sub, m, b}};
}

std::pair<ModulePtr, ModuleMap> quotient_module(ModulePtr m, const FpMatrix& k) {
    const uint32_t p = m->alg->p;
    FpMatrix kb = row_space(k);
    FpMatrix comp = extend_basis(kb, FpMatrix::identity(p, m->dim));
    FpMatrix basis = FpMatrix::vstack(kb, comp);
    auto binv = inverse(basis);
    if (!binv) throw std::logic_error("quotient_module: basis completion failed");
    const size_t q = comp.rows();
    FpMatrix proj = binv->block(0, kb.rows(), m->dim, q);
    auto quo = std::make_shared<Module>();
    quo->alg = m->alg;
    quo->dim = static_cast<int>(q);
    for (int i = 0; i < m->alg->dim; ++i) {
        FpMatrix a = comp * m->action[i] * proj;
        quo->action.push_back(a);
    }
    ValidationReport rep = validate_module(*quo);
    if (!rep.ok()) throw std::invalid_argument("quotient_module: subspace not invariant");
    return {quo, ModuleMap{m, quo, proj}};
}

DirectSum direct_sum(AlgebraPtr alg, const std::vector<ModulePtr>& parts) {
    DirectSum out;
    int total = 0;
    for (auto& m : parts) total += m->dim;
    auto sum = std::make_shared<Module>();
    sum->alg = alg;
    sum->dim = total;
    for (int i = 0; i < alg->dim; ++i) {
        FpMatrix a(alg->p, total, total);
        int off = 0;
        for (auto& m : parts) {
            a.set_block(off, off, m->action[i]);
            off += m->dim;
        }
        sum->action.push_back(a);
    }
    out.sum = sum;
    int off = 0;
    for (auto& m : parts) {
        FpMatrix inj(alg->p, m->dim, total);
        FpMatrix prj(alg->p, total, m->dim);
        for (int i = 0; i < m->dim; ++i) {
            inj.set(i, off + i, 1);
            prj.set(off + i, i, 1);
        }
        out.inject.push_back(ModuleMap{m, sum, inj});
        out.project.push_back(ModuleMap{sum, m, prj});
        off += m->dim;
    }
    return out;
}

// --- pair form --------------------------------------------------------------

static FpMatrix nilpotent_jordan(uint32_t p, const std::vector<int>& parts) {
    int d = 0;
    for (int l : parts) d += l;
    FpMatrix n(p, d, d);
    int off = 0;
    for (int l : parts) {
        for (int u = 0; u + 1 < l; ++u) n.set(off + u, off + u + 1, 1);
        off += l;
    }
    return n;
}

ModulePtr make_pair_module(AlgebraPtr alg, const FpMatrix& pi_e, const FpMatrix& pi_f,
                           const FpMatrix& arrow) {
    if (!alg->triangle) throw std::invalid_argument("make_pair_module: needs a triangle algebra");
    const auto t = *alg->triangle;
    const uint32_t p = alg->p;
    const size_t de = pi_e.rows(), df = pi_f.rows();
    auto m = std::make_shared<Module>();
    m->alg = alg;
    m->dim = static_cast<int>(de + df);
    m->action.assign(alg->dim, FpMatrix(p, m->dim, m->dim));
    // basis order matches triangle_algebra: pi^s e, pi^t f, pi^r a
    for (int s = 0; s < t.n; ++s) {
        FpMatrix blk = pi_e.pow(s);
        m->action[s].set_block(0, 0, blk);
    }
    for (int u = 0; u < t.m; ++u) {
        FpMatrix blk = pi_f.pow(u);
        m->action[t.n + u].set_block(de, de, blk);
    }
    for (int r = 0; r < t.k; ++r) {
        FpMatrix blk = pi_e.pow(r) * arrow;
        m->action[t.n + t.m + r].set_block(0, de, blk);
    }
    ValidationReport rep = validate_module(*m);
    if (!rep.ok())
        throw std::invalid_argument("make_pair_module: invalid pair data: " + rep.to_string());
    return m;
}

// Block of the map R/pi^src_len -> R/pi^dst_len given by right multiplication
// with the residue g; entry (u, v) = coefficient of pi^v in pi^u * g.
static FpMatrix residue_block(uint32_t p, int src_len, int dst_len, const Residue& g) {
    FpMatrix b(p, src_len, dst_len);
    for (int u = 0; u < src_len; ++u)
        for (size_t c = 0; c < g.size(); ++c) {
            int v = u + static_cast<int>(c);
            if (v < dst_len) {
                int64_t val = g[c] % static_cast<int64_t>(p);
                if (val < 0) val += p;
                b.set(u, v, static_cast<uint32_t>(val));
            }
        }
    return b;
}

static int parts_sum(const std::vector<int>& v) {
    int s = 0;
    for (int x : v) s += x;
    return s;
}

ModulePtr module_from_pair(AlgebraPtr alg, const PairData& pd) {
    if (!alg->triangle) throw std::invalid_argument("module_from_pair: needs a triangle algebra");
    const auto t = *alg->triangle;
    for (int l : pd.e_part)
        if (l < 1 || l > t.n) throw std::invalid_argument("module_from_pair: e-part out of range");
    for (int l : pd.f_part)
        if (l < 1 || l > t.m) throw std::invalid_argument("module_from_pair: f-part out of range");
    const uint32_t p = alg->p;
    const int de = parts_sum(pd.e_part), df = parts_sum(pd.f_part);
    FpMatrix arrow(p, de, df);
    if (!pd.a.empty()) {
        if (pd.a.size() != pd.e_part.size())
            throw std::invalid_argument("module_from_pair: arrow has wrong number of block rows");
        int roff = 0;
        for (size_t i = 0; i < pd.e_part.size(); ++i) {
            if (pd.a[i].size() != pd.f_part.size())
                throw std::invalid_argument("module_from_pair: arrow has wrong number of block cols");
            int coff = 0;
            for (size_t j = 0; j < pd.f_part.size(); ++j) {
                arrow.set_block(roff, coff, residue_block(p, pd.e_part[i], pd.f_part[j], pd.a[i][j]));
                coff += pd.f_part[j];
            }
            roff += pd.e_part[i];
        }
    } else if (de > 0 && df > 0) {
        throw std::invalid_argument("module_from_pair: missing arrow matrix");
    }
    return make_pair_module(alg, nilpotent_jordan(p, pd.e_part), nilpotent_jordan(p, pd.f_part), arrow);
}

FpMatrix pair_map_matrix(uint32_t p, const PairData& src, const PairData& dst,
                         const std::vector<std::vector<Residue>>& left,
                         const std::vector<std::vector<Residue>>& right) {
    const int se = parts_sum(src.e_part), sf = parts_sum(src.f_part);
    const int de = parts_sum(dst.e_part), df = parts_sum(dst.f_part);
    FpMatrix m(p, se + sf, de + df);
    int roff = 0;
    for (size_t i = 0; i < src.e_part.size(); ++i) {
        int coff = 0;
        for (size_t j = 0; j < dst.e_part.size(); ++j) {
            const Residue& g = (i < left.size() && j < left[i].size()) ? left[i][j] : Residue{};
            m.set_block(roff, coff, residue_block(p, src.e_part[i], dst.e_part[j], g));
            coff += dst.e_part[j];
        }
        roff += src.e_part[i];
    }
    for (size_t i = 0; i < src.f_part.size(); ++i) {
        int coff = de;
        for (size_t j = 0; j < dst.f_part.size(); ++j) {
            const Residue& g = (i < right.size() && j < right[i].size()) ? right[i][j] : Residue{};
            m.set_block(roff, coff, residue_block(p, src.f_part[i], dst.f_part[j], g));
            coff += dst.f_part[j];
        }
        roff += src.f_part[i];
    }
    return m;
}

// --- Hom spaces --------------------------------------------------------------

static std::vector<ModuleMap> hom_basis_for_gens(ModulePtr m, ModulePtr n,
                                                 const std::vector<FpMatrix>& gens) {
    const uint32_t p = m->alg->p;
    const size_t dm = m->dim, dn = n->dim;
    if (dm == 0 || dn == 0) return {};
    std::vector<FpMatrix> rho, sig;
    for (auto& g : gens) {
        rho.push_back(m->act(g));
        sig.push_back(n->act(g));
    }
    const size_t unknowns = dm * dn;
    FpMatrix big(p, unknowns, gens.size() * unknowns);
    for (size_t g = 0; g < gens.size(); ++g) {
        const size_t base = g * unknowns;
        for (size_t i = 0; i < dm; ++i)
            for (size_t j = 0; j < dn; ++j) {
                const size_t col = base + i * dn + j;
                // constraint (rho T - T sigma)_{ij} = 0
                for (size_t k = 0; k < dm; ++k) {
                    uint32_t c = rho[g].at(i, k);
                    if (c) {
                        size_t row = k * dn + j;
                        big.set(row, col, (big.at(row, col) + c) % p);
                    }
                }
                for (size_t l = 0; l < dn; ++l) {
                    uint32_t c = sig[g].at(l, j);
                    if (c) {
                        size_t row = i * dn + l;
                        big.set(row, col, (big.at(row, col) + p - c) % p);
                    }
                }
            }
    }
    FpMatrix ker = left_kernel(big);
    std::vector<ModuleMap> out;
    for (size_t r = 0; r < ker.rows(); ++r) {
        FpMatrix t(p, dm, dn);
        for (size_t i = 0; i < dm; ++i)
            for (size_t j = 0; j < dn; ++j) t.set(i, j, ker.at(r, i * dn + j));
        out.push_back(ModuleMap{m, n, t});
    }
    return out;
}

std::vector<ModuleMap> hom_basis(ModulePtr m, ModulePtr n, bool check_full_basis) {
    if (m->alg.get() != n->alg.get() && !(m->alg->p == n->alg->p && m->alg->dim == n->alg->dim))
        throw std::invalid_argument("hom_basis: modules over different algebras");
    auto out = hom_basis_for_gens(m, n, m->alg->generators());
    if (check_full_basis) {
        std::vector<FpMatrix> all;
        for (int i = 0; i < m->alg->dim; ++i) all.push_back(m->alg->basis_row(i));
        auto full = hom_basis_for_gens(m, n, all);
        if (full.size() != out.size())
            throw std::logic_error("hom_basis: generator system disagrees with full basis");
    }
    return out;
}

ModuleMap hom_combination(const std::vector<ModuleMap>& basis, const FpMatrix& coeffs) {
    if (basis.empty()) throw std::invalid_argument("hom_combination: empty basis");
    FpMatrix m(basis[0].mat.p(), basis[0].mat.rows(), basis[0].mat.cols());
    for (size_t i = 0; i < basis.size(); ++i) m = m + basis[i].mat.scaled(coeffs.at(0, i));
    return ModuleMap{basis[0].src, basis[0].dst, m};
}

static std::vector<size_t> idempotent_dims(const Module& m) {
    std::vector<size_t> v;
    for (int e : m.alg->idempotents) v.push_back(rank(m.action[e]));
    return v;
}

std::optional<ModuleMap> is_isomorphic(ModulePtr m, ModulePtr n, uint64_t seed) {
    if (m->dim != n->dim) return std::nullopt;
    if (m->dim == 0) return ModuleMap{m, n, FpMatrix(m->alg->p, 0, 0)};
    if (idempotent_dims(*m) != idempotent_dims(*n)) return std::nullopt;
    auto hb = hom_basis(m, n);
    if (hb.empty()) return std::nullopt;
    // structural witnesses on Hom dimensions
    if (hom_basis(n, m).size() != hb.size()) return std::nullopt;

    for (auto& h : hb)
        if (is_invertible(h.mat)) return h;

    const uint32_t p = m->alg->p;
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL ^ (static_cast<uint64_t>(m->dim) << 32));
    std::uniform_int_distribution<uint32_t> dist(0, p - 1);
    for (int attempt = 0; attempt < 64; ++attempt) {
        FpMatrix c(p, 1, hb.size());
        for (size_t i = 0; i < hb.size(); ++i) c.set(0, i, dist(rng));
        ModuleMap h = hom_combination(hb, c);
        if (is_invertible(h.mat)) return h;
    }

    // exhaustive sweep when feasible
    double total = 1;
    for (size_t i = 0; i < hb.size(); ++i) total *= p;
    if (total <= 1e6) {
        std::vector<uint32_t> c(hb.size(), 0);
        const uint64_t count = static_cast<uint64_t>(total);
        for (uint64_t idx = 1; idx < count; ++idx) {
            uint64_t v = idx;
            for (size_t i = 0; i < hb.size(); ++i) {
                c[i] = static_cast<uint32_t>(v % p);
                v /= p;
            }
            FpMatrix cm(p, 1, static_cast<size_t>(hb.size()), std::vector<uint32_t>(c));
            ModuleMap h = hom_combination(hb, cm);
            if (is_invertible(h.mat)) return h;
        }
        return std::nullopt;
    }
    throw std::runtime_error("is_isomorphic: inconclusive (Hom space too large for exhaustion)");
}

ModuleMap random_hom(ModulePtr m, ModulePtr n, std::mt19937_64& rng) {
    auto hb = hom_basis(m, n);
    if (hb.empty()) return zero_map(m, n);
    const uint32_t p = m->alg->p;
    std::uniform_int_distribution<uint32_t> dist(0, p - 1);
    FpMatrix c(p, 1, hb.size());
    for (size_t i = 0; i < hb.size(); ++i) c.set(0, i, dist(rng));
    return hom_combination(hb, c);
}

std::string module_sort_key(const Module& m) {
    std::ostringstream os;
    os << m.dim << ":";
    for (auto& a : m.action)
        for (auto v : a.data()) os << static_cast<char>('0' + v % 78);
    return os.str();
}

}  // namespace heller
