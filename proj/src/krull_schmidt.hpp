#ifndef HELLER_KRULL_SCHMIDT_HPP
#define HELLER_KRULL_SCHMIDT_HPP

#include "module.hpp"
#include "projective.hpp"

namespace heller {

struct EndData {
    std::vector<ModuleMap> basis;
    // table.row(i*n+j) = coefficients of basis[i] then basis[j] in the basis
    FpMatrix table;
};

EndData end_algebra(ModulePtr m);

struct SplitResult {
    bool split_found = false;
    FpMatrix part_a, part_b;  // complementary invariant row spaces
    // when no split was found, how indecomposability was certified:
    bool exhaustive = false;
    bool locality_certificate = false;
};

// Strategy ladder: Fitting splitting and minimal-polynomial splitting over
// basis elements and seeded random endomorphisms, then exhaustive idempotent
// enumeration when p^dim End is small enough.
SplitResult find_splitting(ModulePtr m, uint64_t seed = 0);

// A nontrivial idempotent endomorphism of m, if one exists.
std::optional<ModuleMap> find_idempotent(ModulePtr m, uint64_t seed = 0);

struct Decomposition {
    std::vector<std::pair<ModulePtr, int>> summands;  // representative, multiplicity
    ModuleMap witness;  // iso from the direct sum (in listed order) onto the input
};

Decomposition decompose(ModulePtr m, uint64_t seed = 0);

class unknown_summand : public std::runtime_error {
public:
    unknown_summand(std::string msg, ModulePtr stray)
        : std::runtime_error(std::move(msg)), stray_module(std::move(stray)) {}
    ModulePtr stray_module;
};

struct LabeledModule {
    std::string label;
    ModulePtr mod;
};

// Multiplicity vector over the catalog labels; throws unknown_summand when a
// summand matches no entry.
std::vector<int> identify(ModulePtr m, const std::vector<LabeledModule>& catalog,
                          uint64_t seed = 0);

}  // namespace heller

#endif
