#ifndef HELLER_STABLE_HPP
#define HELLER_STABLE_HPP

#include "krull_schmidt.hpp"
#include "projective.hpp"

namespace heller {

// Hom(m, n) modulo maps factoring through projectives, with a canonical
// coordinate form for stable classes.
class StableHomSpace {
public:
    ModulePtr src, dst;

    size_t dim() const { return quot_pivots_.size(); }

    // Canonical coordinates (1 x dim) of the stable class of mat.
    FpMatrix reduce(const FpMatrix& mat) const;

    // Representative map of the i-th canonical basis class.
    ModuleMap rep(size_t i) const;

    bool stably_zero(const FpMatrix& mat) const { return reduce(mat).is_zero(); }

    friend StableHomSpace stable_hom(ModulePtr m, ModulePtr n);

private:
    FpMatrix proj_rref_;               // row space of maps factoring through projectives
    std::vector<size_t> proj_pivots_;
    FpMatrix quot_rref_;               // canonical stable representatives, vec'd
    std::vector<size_t> quot_pivots_;
};

StableHomSpace stable_hom(ModulePtr m, ModulePtr n);

// Isomorphism in the stable category: equality of the projective-free parts.
bool is_stably_isomorphic(ModulePtr m, ModulePtr n, uint64_t seed = 0);

// f is a stable monomorphism when composing with f is injective on stable
// Hom(t, -) for every test module t.
bool is_stable_mono(const ModuleMap& f, const std::vector<ModulePtr>& tests);

// Some r with [f then r] = [id] in the stable endomorphism ring of f.src,
// or absent; the condition is linear in r, so one solve decides it.
std::optional<ModuleMap> is_coretraction(const ModuleMap& f);

}  // namespace heller

#endif
