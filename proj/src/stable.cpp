#include "stable.hpp"

namespace heller {

namespace {

FpMatrix eliminate(const FpMatrix& v, const FpMatrix& basis_rref,
                   const std::vector<size_t>& pivots) {
    const uint32_t p = v.p();
    FpMatrix r = v;
    for (size_t i = 0; i < pivots.size(); ++i) {
        uint32_t c = r.at(0, pivots[i]);
        if (c) r = r - basis_rref.row(i).scaled(c);
    }
    return r;
}

}  // namespace

FpMatrix StableHomSpace::reduce(const FpMatrix& mat) const {
    if (mat.rows() != static_cast<size_t>(src->dim) ||
        mat.cols() != static_cast<size_t>(dst->dim))
        throw dim_mismatch("StableHomSpace::reduce: wrong shape");
    FpMatrix out(mat.p(), 1, dim());
    if (src->dim == 0 || dst->dim == 0) return out;
    FpMatrix v = eliminate(mat.vec(), proj_rref_, proj_pivots_);
    for (size_t i = 0; i < quot_pivots_.size(); ++i) out.set(0, i, v.at(0, quot_pivots_[i]));
    // consistency: the coordinates must reproduce v modulo projectives
    FpMatrix rebuilt(mat.p(), 1, v.cols());
    for (size_t i = 0; i < quot_pivots_.size(); ++i)
        rebuilt = rebuilt + quot_rref_.row(i).scaled(out.at(0, i));
    if (!eliminate(v - rebuilt, proj_rref_, proj_pivots_).is_zero())
        throw std::logic_error("StableHomSpace::reduce: input is not a module map");
    return out;
}

ModuleMap StableHomSpace::rep(size_t i) const {
    FpMatrix m(quot_rref_.p(), src->dim, dst->dim);
    for (int r = 0; r < src->dim; ++r)
        for (int c = 0; c < dst->dim; ++c)
            m.set(r, c, quot_rref_.at(i, static_cast<size_t>(r) * dst->dim + c));
    return ModuleMap{src, dst, m};
}

StableHomSpace stable_hom(ModulePtr m, ModulePtr n) {
    StableHomSpace s;
    s.src = m;
    s.dst = n;
    const uint32_t p = m->alg->p;
    if (m->dim == 0 || n->dim == 0) return s;

    // maps factoring through a projective are exactly those factoring
    // through the cover of n
    auto [pn, cover] = projective_cover(n);
    auto through = hom_basis(m, pn.mod);
    FpMatrix pv(p, through.size(), static_cast<size_t>(m->dim) * n->dim);
    for (size_t i = 0; i < through.size(); ++i)
        pv.set_block(i, 0, (through[i].mat * cover.mat).vec());
    RrefResult pr = rref(pv);
    s.proj_rref_ = pr.r.block(0, 0, pr.rank, pv.cols());
    s.proj_pivots_ = pr.pivot_cols;

    auto full = hom_basis(m, n);
    FpMatrix tv(p, full.size(), pv.cols());
    for (size_t i = 0; i < full.size(); ++i)
        tv.set_block(i, 0, eliminate(full[i].mat.vec(), s.proj_rref_, s.proj_pivots_));
    RrefResult qr = rref(tv);
    s.quot_rref_ = qr.r.block(0, 0, qr.rank, tv.cols());
    s.quot_pivots_ = qr.pivot_cols;
    return s;
}

bool is_stably_isomorphic(ModulePtr m, ModulePtr n, uint64_t seed) {
    auto strip = [&](ModulePtr x) {
        std::vector<std::pair<ModulePtr, int>> out;
        if (x->dim == 0) return out;
        for (auto& [rep, mult] : decompose(x, seed).summands)
            if (!is_projective(rep)) out.push_back({rep, mult});
        return out;
    };
    auto a = strip(m);
    auto b = strip(n);
    if (a.size() != b.size()) return false;
    std::vector<bool> used(b.size(), false);
    for (auto& [ra, ma] : a) {
        bool found = false;
        for (size_t j = 0; j < b.size(); ++j) {
            if (used[j] || b[j].second != ma) continue;
            if (is_isomorphic(ra, b[j].first, seed)) {
                used[j] = true;
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

bool is_stable_mono(const ModuleMap& f, const std::vector<ModulePtr>& tests) {
    for (auto& t : tests) {
        StableHomSpace hm = stable_hom(t, f.src);
        if (hm.dim() == 0) continue;
        StableHomSpace hn = stable_hom(t, f.dst);
        FpMatrix a(f.mat.p(), hm.dim(), hn.dim());
        for (size_t i = 0; i < hm.dim(); ++i)
            a.set_block(i, 0, hn.reduce(hm.rep(i).mat * f.mat));
        if (rank(a) < hm.dim()) return false;
    }
    return true;
}

std::optional<ModuleMap> is_coretraction(const ModuleMap& f) {
    StableHomSpace se = stable_hom(f.src, f.src);
    if (f.src->dim == 0) return zero_map(f.dst, f.src);
    FpMatrix target = se.reduce(FpMatrix::identity(f.mat.p(), f.src->dim));
    if (target.is_zero()) return zero_map(f.dst, f.src);  // src is stably zero
    auto back = hom_basis(f.dst, f.src);
    FpMatrix rows(f.mat.p(), back.size(), se.dim());
    for (size_t i = 0; i < back.size(); ++i) rows.set_block(i, 0, se.reduce(f.mat * back[i].mat));
    auto sol = solve_row(rows, target);
    if (!sol) return std::nullopt;
    FpMatrix r(f.mat.p(), f.dst->dim, f.src->dim);
    for (size_t i = 0; i < back.size(); ++i) r = r + back[i].mat.scaled(sol->at(0, i));
    return ModuleMap{f.dst, f.src, r};
}

}  // namespace heller
