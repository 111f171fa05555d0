#include "projective.hpp"

namespace heller {

static ModulePtr regular_module(AlgebraPtr alg) {
    auto m = std::make_shared<Module>();
    m->alg = alg;
    m->dim = alg->dim;
    for (int j = 0; j < alg->dim; ++j) m->action.push_back(alg->right_regular_basis(j));
    return m;
}

std::vector<ProjectiveStructure> indecomposable_projectives(AlgebraPtr alg) {
    ModulePtr reg = regular_module(alg);
    std::vector<ProjectiveStructure> out;
    for (int ei : alg->idempotents) {
        FpMatrix span(alg->p, 0, alg->dim);
        for (int j = 0; j < alg->dim; ++j) {
            FpMatrix r = alg->mul[ei].row(j);  // e_i * b_j
            if (!r.is_zero()) span = FpMatrix::vstack(span, r);
        }
        FpMatrix b = row_space(span);
        auto [sub, incl] = submodule(reg, b);
        ProjectiveStructure ps;
        ps.mod = sub;
        ps.gen_idem = {ei};
        auto gc = solve_row(b, alg->basis_row(ei));
        if (!gc) throw std::logic_error("indecomposable_projectives: e_i not in e_i*Lambda");
        ps.gens = *gc;
        ps.row_summand.assign(sub->dim, 0);
        ps.row_lambda = b;  // rows of e_i*Lambda are their own algebra elements
        out.push_back(std::move(ps));
    }
    return out;
}

ProjectiveStructure projective_direct_sum(AlgebraPtr alg,
                                          const std::vector<ProjectiveStructure>& parts) {
    std::vector<ModulePtr> mods;
    for (auto& p : parts) mods.push_back(p.mod);
    DirectSum ds = direct_sum(alg, mods);
    ProjectiveStructure out;
    out.mod = ds.sum;
    out.gens = FpMatrix(alg->p, 0, ds.sum->dim);
    out.row_lambda = FpMatrix(alg->p, 0, alg->dim);
    int summand_off = 0;
    for (size_t t = 0; t < parts.size(); ++t) {
        const auto& p = parts[t];
        for (int gi : p.gen_idem) out.gen_idem.push_back(gi);
        out.gens = FpMatrix::vstack(out.gens, p.gens * ds.inject[t].mat);
        for (int s : p.row_summand) out.row_summand.push_back(summand_off + s);
        out.row_lambda = FpMatrix::vstack(out.row_lambda, p.row_lambda);
        summand_off += static_cast<int>(p.gen_idem.size());
    }
    return out;
}

ProjectiveStructure free_projective(AlgebraPtr alg, const std::vector<int>& idem_basis_indices) {
    auto indec = indecomposable_projectives(alg);
    std::vector<ProjectiveStructure> parts;
    for (int ei : idem_basis_indices) {
        bool found = false;
        for (size_t t = 0; t < alg->idempotents.size(); ++t)
            if (alg->idempotents[t] == ei) {
                parts.push_back(indec[t]);
                found = true;
            }
        if (!found) throw std::invalid_argument("free_projective: not an idempotent basis index");
    }
    return projective_direct_sum(alg, parts);
}

std::pair<ProjectiveStructure, ModuleMap> projective_cover(ModulePtr m) {
    AlgebraPtr alg = m->alg;
    FpMatrix rad = m->radical_rows();
    auto indec = indecomposable_projectives(alg);

    std::vector<ProjectiveStructure> parts;
    FpMatrix tops(alg->p, 0, m->dim);  // chosen generators of M, one row per summand
    for (size_t t = 0; t < alg->idempotents.size(); ++t) {
        int ei = alg->idempotents[t];
        FpMatrix me = row_space(m->action[ei]);
        FpMatrix mrad_e = rad.rows() ? row_space(rad * m->action[ei]) : FpMatrix(alg->p, 0, m->dim);
        FpMatrix added = extend_basis(mrad_e, me);
        for (size_t r = 0; r < added.rows(); ++r) {
            parts.push_back(indec[t]);
            tops = FpMatrix::vstack(tops, added.row(r));
        }
    }
    ProjectiveStructure ps = projective_direct_sum(alg, parts);

    FpMatrix cover(alg->p, ps.mod->dim, m->dim);
    for (int r = 0; r < ps.mod->dim; ++r) {
        FpMatrix v = tops.row(ps.row_summand[r]);
        cover.set_block(r, 0, v * m->act(ps.row_lambda.row(r)));
    }
    if (rank(cover) != static_cast<size_t>(m->dim))
        throw std::logic_error("projective_cover: constructed map not surjective");
    ModuleMap cm{ps.mod, m, cover};
    return {std::move(ps), std::move(cm)};
}

SyzygyPresentation make_presentation(ModulePtr m, ProjectiveStructure proj, FpMatrix cover_mat) {
    if (rank(cover_mat) != static_cast<size_t>(m->dim))
        throw std::invalid_argument("make_presentation: cover not surjective");
    SyzygyPresentation pres;
    pres.base = m;
    pres.cover = ModuleMap{proj.mod, m, cover_mat};
    FpMatrix k = left_kernel(cover_mat);
    auto [omega, incl] = submodule(proj.mod, k);
    pres.omega = omega;
    pres.incl = incl;
    pres.minimal = row_space_contains(proj.mod->radical_rows(), k);
    pres.proj = std::move(proj);
    return pres;
}

SyzygyPresentation syzygy(ModulePtr m) {
    auto [ps, cover] = projective_cover(m);
    SyzygyPresentation pres = make_presentation(m, std::move(ps), cover.mat);
    if (!pres.minimal) throw std::logic_error("syzygy: cover kernel not inside P rad");
    return pres;
}

ModuleMap omega_map(const ModuleMap& f, const SyzygyPresentation& pm, const SyzygyPresentation& pn) {
    const auto& P = pm.proj;
    const auto& Q = pn.proj;
    // image of each generator of PM under the lift
    FpMatrix w(f.mat.p(), P.gen_idem.size(), Q.mod->dim);
    for (size_t s = 0; s < P.gen_idem.size(); ++s) {
        FpMatrix u = P.gens.row(s) * pm.cover.mat * f.mat;
        auto w0 = solve_row(pn.cover.mat, u);
        if (!w0) throw std::logic_error("omega_map: cover lift unsolvable");
        w.set_block(s, 0, *w0 * Q.mod->act_basis(P.gen_idem[s]));
    }
    FpMatrix lift(f.mat.p(), P.mod->dim, Q.mod->dim);
    for (int r = 0; r < P.mod->dim; ++r)
        lift.set_block(r, 0, w.row(P.row_summand[r]) * Q.mod->act(P.row_lambda.row(r)));
    auto fprime = solve_row(pn.incl.mat, pm.incl.mat * lift);
    if (!fprime) throw std::logic_error("omega_map: restriction to kernels failed");
    return ModuleMap{pm.omega, pn.omega, *fprime};
}

bool is_projective(ModulePtr m) {
    if (m->dim == 0) return true;
    return syzygy(m).omega->dim == 0;
}

RigidityReport cover_rigidity_check(const SyzygyPresentation& pres, size_t budget, uint64_t seed) {
    RigidityReport rep;
    ModulePtr px = pres.proj.mod;
    if (px->dim == 0) {
        rep.exhaustive = true;
        return rep;
    }
    auto endo = hom_basis(px, px);
    // L = { h in End(PX) : h * p = 0 }, an F_p-subspace
    FpMatrix images(px->alg->p, endo.size(), px->dim * pres.base->dim == 0
                                                 ? 0
                                                 : static_cast<size_t>(px->dim) * pres.base->dim);
    for (size_t i = 0; i < endo.size(); ++i)
        if (images.cols()) images.set_block(i, 0, (endo[i].mat * pres.cover.mat).vec());
    FpMatrix lcoef = images.cols() ? left_kernel(images) : FpMatrix::identity(px->alg->p, endo.size());

    const uint32_t p = px->alg->p;
    const size_t ldim = lcoef.rows();
    double total = 1;
    for (size_t i = 0; i < ldim; ++i) total *= p;

    auto element_of_l = [&](const std::vector<uint32_t>& c) {
        FpMatrix h(p, px->dim, px->dim);
        for (size_t i = 0; i < ldim; ++i)
            for (size_t j = 0; j < endo.size(); ++j) {
                uint32_t x = static_cast<uint32_t>(static_cast<uint64_t>(c[i]) * lcoef.at(i, j) % p);
                if (x) h = h + endo[j].mat.scaled(x);
            }
        return h;
    };
    auto check = [&](const FpMatrix& h) {
        FpMatrix s = FpMatrix::identity(p, px->dim) + h;
        ++rep.checked;
        if (!is_invertible(s)) {
            rep.all_invertible = false;
            rep.counterexample = s;
        }
    };

    if (total <= 1e4) {
        rep.exhaustive = true;
        std::vector<uint32_t> c(ldim, 0);
        uint64_t count = static_cast<uint64_t>(total);
        for (uint64_t idx = 0; idx < count && rep.all_invertible; ++idx) {
            uint64_t v = idx;
            for (size_t i = 0; i < ldim; ++i) {
                c[i] = static_cast<uint32_t>(v % p);
                v /= p;
            }
            check(element_of_l(c));
        }
    } else {
        std::mt19937_64 rng(seed ^ 0xc0ffee);
        std::uniform_int_distribution<uint32_t> dist(0, p - 1);
        std::vector<uint32_t> c(ldim);
        for (size_t t = 0; t < budget && rep.all_invertible; ++t) {
            for (auto& x : c) x = dist(rng);
            check(element_of_l(c));
        }
    }
    return rep;
}

ModulePtr random_module(AlgebraPtr alg, uint64_t seed, int max_dim) {
    if (max_dim < 1) throw std::invalid_argument("random_module: max_dim >= 1");
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 0x243f6a8885a308d3ULL);
    auto indec = indecomposable_projectives(alg);
    std::uniform_int_distribution<int> npick(0, 3);
    std::uniform_int_distribution<int> which(0, static_cast<int>(indec.size()) - 1);
    for (int attempt = 0; attempt < 256; ++attempt) {
        std::vector<ModulePtr> src, dst;
        int n1 = npick(rng), n2 = 1 + npick(rng);
        for (int i = 0; i < n1; ++i) src.push_back(indec[which(rng)].mod);
        for (int i = 0; i < n2; ++i) dst.push_back(indec[which(rng)].mod);
        DirectSum q1 = direct_sum(alg, src), q2 = direct_sum(alg, dst);
        ModuleMap g = random_hom(q1.sum, q2.sum, rng);
        FpMatrix img = row_space(g.mat);
        ModulePtr coker = img.rows() == 0 ? q2.sum : quotient_module(q2.sum, img).first;
        if (coker->dim <= max_dim) return coker;
    }
    throw std::runtime_error("random_module: could not hit requested dimension bound");
}

}  // namespace heller
