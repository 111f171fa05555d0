#ifndef HELLER_PROJECTIVE_HPP
#define HELLER_PROJECTIVE_HPP

#include <optional>

#include "module.hpp"

namespace heller {

// A projective module presented as a direct sum of modules e_i * Lambda,
// with enough bookkeeping to extend maps off the summand generators:
// basis row r equals gen(summand(r)) acted on by the algebra element
// row_lambda[r].
struct ProjectiveStructure {
    ModulePtr mod;
    std::vector<int> gen_idem;  // algebra basis index of the idempotent, per summand
    FpMatrix gens;              // one row per summand, in mod coordinates
    std::vector<int> row_summand;
    FpMatrix row_lambda;        // one algebra coefficient row per basis row of mod
};

// e_i * Lambda for each primitive idempotent, in idempotent order.
std::vector<ProjectiveStructure> indecomposable_projectives(AlgebraPtr alg);

ProjectiveStructure projective_direct_sum(AlgebraPtr alg,
                                          const std::vector<ProjectiveStructure>& parts);

// Free-ish projective with one summand e_{idem_basis_index} * Lambda per entry.
ProjectiveStructure free_projective(AlgebraPtr alg, const std::vector<int>& idem_basis_indices);

struct SyzygyPresentation {
    ModulePtr base;
    ProjectiveStructure proj;   // PX
    ModuleMap cover;            // PX ->> X
    ModulePtr omega;            // Omega X
    ModuleMap incl;             // Omega X >-> PX
    bool minimal = true;
};

// Minimal cover: P = (+) P_i^{mult of S_i in top(M)}, kernel inside P rad.
std::pair<ProjectiveStructure, ModuleMap> projective_cover(ModulePtr m);

SyzygyPresentation syzygy(ModulePtr m);

// Presentation from an arbitrary surjection off a structured projective
// (used for non-minimal presentations; smallness is not required).
SyzygyPresentation make_presentation(ModulePtr m, ProjectiveStructure proj, FpMatrix cover_mat);

// Omega on morphisms: lift f through the covers, restrict to the kernels.
ModuleMap omega_map(const ModuleMap& f, const SyzygyPresentation& pm, const SyzygyPresentation& pn);

bool is_projective(ModulePtr m);

struct RigidityReport {
    size_t checked = 0;
    bool exhaustive = false;
    bool all_invertible = true;
    std::optional<FpMatrix> counterexample;  // would falsify the cover-rigidity lemma
};

// Sweeps endomorphisms s of PX with s * p = p and asserts each is invertible.
RigidityReport cover_rigidity_check(const SyzygyPresentation& pres, size_t budget = 256,
                                    uint64_t seed = 0);

}  // namespace heller

#endif
