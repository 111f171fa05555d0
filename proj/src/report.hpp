#ifndef HELLER_REPORT_HPP
#define HELLER_REPORT_HPP

#include "adjoint.hpp"
#include "json_io.hpp"

namespace heller {

struct RunConfig {
    std::string algebra = "A";
    uint32_t prime = 2;
    uint64_t seed = 0;
    int jobs = 1;
    int max_eps_dim = 6;
};

const char* tool_version();

// Full reproduction run for one builtin algebra: catalog checks, left-adjoint
// search, table and epsilon comparison where fixtures exist, idempotency
// table, right-adjoint obstruction for C3. report["match"] is the verdict.
json verify_paper_report(const RunConfig& cfg);

// Certificate serialization: S vectors, epsilon matrices, verification flags.
json left_adjoint_report(const RunConfig& cfg);

json right_adjoint_report(const RunConfig& cfg);

// H, and the two Omega-twisted dimension matrices.
json sthom_report(const RunConfig& cfg);

json omega_report(const RunConfig& cfg, ModulePtr m);

json decompose_report(const RunConfig& cfg, ModulePtr m);

// Multiset of catalog labels for an identification vector.
json label_multiset(const std::vector<int>& mults, const std::vector<LabeledModule>& labeled);

}  // namespace heller

#endif
