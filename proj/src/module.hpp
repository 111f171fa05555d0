#ifndef HELLER_MODULE_HPP
#define HELLER_MODULE_HPP

#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "fp.hpp"

namespace heller {

// Right module as a matrix representation: one action matrix per algebra
// basis element. Elements are row vectors, acted on by right multiplication.
class Module {
public:
    AlgebraPtr alg;
    int dim = 0;
    std::vector<FpMatrix> action;

    FpMatrix act(const FpMatrix& coeff_row) const;  // rho of an algebra element
    FpMatrix act_basis(int i) const { return action[i]; }

    // Row space of M * rad.
    FpMatrix radical_rows() const;

    bool is_zero() const { return dim == 0; }
};

using ModulePtr = std::shared_ptr<const Module>;

struct ModuleMap {
    ModulePtr src, dst;
    FpMatrix mat;  // dim(src) x dim(dst)

    bool is_intertwiner() const;
    ModuleMap then(const ModuleMap& g) const;  // this, then g
};

ModulePtr zero_module(AlgebraPtr alg);
ValidationReport validate_module(const Module& m);
ModuleMap identity_map(ModulePtr m);
ModuleMap zero_map(ModulePtr src, ModulePtr dst);

// Submodule spanned by the rows of b (must be invariant); returns the module
// together with the inclusion map.
std::pair<ModulePtr, ModuleMap> submodule(ModulePtr m, const FpMatrix& b);

// Quotient by the invariant row space k; returns module and projection.
std::pair<ModulePtr, ModuleMap> quotient_module(ModulePtr m, const FpMatrix& k);

struct DirectSum {
    ModulePtr sum;
    std::vector<ModuleMap> inject;
    std::vector<ModuleMap> project;
};

DirectSum direct_sum(AlgebraPtr alg, const std::vector<ModulePtr>& parts);

// --- the pair form (X --a--> Y) over the triangle family ------------------

// A residue of R/pi^len as its coefficient vector c_0..c_{len-1}.
using Residue = std::vector<int64_t>;

struct PairData {
    std::vector<int> e_part;                  // partition, parts <= n
    std::vector<int> f_part;                  // partition, parts <= m
    std::vector<std::vector<Residue>> a;      // block (i,j): R/pi^{e_i} -> R/pi^{f_j}
};

// Builds the module with e-part  (+) R/pi^{lambda_i} (basis x, x pi, ...),
// f-part likewise, and the arrow acting through the given residue matrix.
// Basis order: e-part blocks first, then f-part blocks.
ModulePtr module_from_pair(AlgebraPtr alg, const PairData& pd);

// Lower-level variant: explicit nilpotent pi-actions and arrow matrix.
ModulePtr make_pair_module(AlgebraPtr alg, const FpMatrix& pi_e, const FpMatrix& pi_f,
                           const FpMatrix& arrow);

// Flat block matrix of a pair-form morphism (left: e-parts, right: f-parts)
// between two modules built by module_from_pair.
FpMatrix pair_map_matrix(uint32_t p, const PairData& src, const PairData& dst,
                         const std::vector<std::vector<Residue>>& left,
                         const std::vector<std::vector<Residue>>& right);

// --- Hom spaces and isomorphism --------------------------------------------

// F_p-basis of Hom(m, n), via the intertwining system over the algebra
// generators. With check_full_basis, cross-checks against all basis elements.
std::vector<ModuleMap> hom_basis(ModulePtr m, ModulePtr n, bool check_full_basis = false);

ModuleMap hom_combination(const std::vector<ModuleMap>& basis, const FpMatrix& coeffs);

std::optional<ModuleMap> is_isomorphic(ModulePtr m, ModulePtr n, uint64_t seed = 0);

// Deterministic random module: cokernel of a random map between random sums
// of the indecomposable projectives, dim <= max_dim.
ModulePtr random_module(AlgebraPtr alg, uint64_t seed, int max_dim);

ModuleMap random_hom(ModulePtr m, ModulePtr n, std::mt19937_64& rng);

// Canonical byte key (dim, then action entries) used for deterministic
// ordering of decomposition summands.
std::string module_sort_key(const Module& m);

}  // namespace heller

#endif
