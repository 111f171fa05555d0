#include "heller.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "report.hpp"
#include "stable.hpp"

using namespace heller;

struct heller_algebra {
    AlgebraPtr alg;
    std::string builtin;  // empty for inline algebras
};

struct heller_module {
    ModulePtr mod;
    std::string builtin;  // algebra name, when known
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(malloc(s.size() + 1));
    memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

bool known_builtin(const std::string& name) {
    for (const auto& n : builtin_algebra_names())
        if (n == name) return true;
    return false;
}

// Classifies exceptions onto the error codes; logic errors are bugs.
template <typename F>
int guarded(F&& f) {
    try {
        g_last_error.clear();
        return f();
    } catch (const json::exception& e) {
        g_last_error = e.what();
        return HELLER_USER_ERROR;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return HELLER_USER_ERROR;
    } catch (const std::logic_error& e) {
        g_last_error = e.what();
        return HELLER_INTERNAL_ERROR;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return HELLER_USER_ERROR;
    }
}

int require(bool cond, const char* msg) {
    if (cond) return HELLER_OK;
    g_last_error = msg;
    return HELLER_USER_ERROR;
}

}  // namespace

extern "C" {

const char* heller_version(void) { return tool_version(); }

const char* heller_last_error(void) { return g_last_error.c_str(); }

void heller_string_free(char* s) { free(s); }

int heller_algebra_builtin(const char* name, uint32_t prime, heller_algebra** out) {
    if (int rc = require(name && out, "null argument")) return rc;
    return guarded([&] {
        if (int rc = require(known_builtin(name), "unknown builtin algebra name")) return rc;
        if (int rc = require(is_prime(prime) && prime <= 997, "prime must be a prime <= 997"))
            return rc;
        *out = new heller_algebra{builtin_algebra(name, prime), name};
        return HELLER_OK;
    });
}

int heller_algebra_from_json(const char* json_text, heller_algebra** out) {
    if (int rc = require(json_text && out, "null argument")) return rc;
    return guarded([&] {
        *out = new heller_algebra{algebra_from_json(json::parse(json_text)), ""};
        return HELLER_OK;
    });
}

int heller_algebra_to_json(const heller_algebra* a, char** out_json) {
    if (int rc = require(a && out_json, "null argument")) return rc;
    return guarded([&] {
        *out_json = dup_string(algebra_to_json(*a->alg).dump(2));
        return HELLER_OK;
    });
}

void heller_algebra_free(heller_algebra* a) { delete a; }

int heller_module_from_json(const heller_algebra* a, const char* json_text,
                            heller_module** out) {
    if (int rc = require(a && json_text && out, "null argument")) return rc;
    return guarded([&] {
        json j = json::parse(json_text);
        if (j.contains("algebra")) {
            auto [alg, mod] = module_from_json(j, a->alg->p);
            *out = new heller_module{mod, ""};
        } else {
            PairData pd = pair_from_json(j);
            *out = new heller_module{module_from_pair(a->alg, pd), a->builtin};
        }
        return HELLER_OK;
    });
}

int heller_module_catalog(const heller_algebra* a, const char* label, heller_module** out) {
    if (int rc = require(a && label && out, "null argument")) return rc;
    return guarded([&] {
        if (int rc = require(!a->builtin.empty(), "catalog lookup needs a builtin algebra"))
            return rc;
        Catalog c = builtin_catalog(a->builtin, a->alg->p);
        const CatalogEntry* e = c.find(label);
        if (int rc = require(e != nullptr, "no catalog entry with that label")) return rc;
        *out = new heller_module{e->mod, a->builtin};
        return HELLER_OK;
    });
}

int heller_module_random(const heller_algebra* a, uint64_t seed, int max_dim,
                         heller_module** out) {
    if (int rc = require(a && out, "null argument")) return rc;
    return guarded([&] {
        if (int rc = require(max_dim >= 1, "max_dim must be positive")) return rc;
        *out = new heller_module{random_module(a->alg, seed, max_dim), a->builtin};
        return HELLER_OK;
    });
}

int heller_module_dim(const heller_module* m, int* out_dim) {
    if (int rc = require(m && out_dim, "null argument")) return rc;
    *out_dim = m->mod->dim;
    return HELLER_OK;
}

void heller_module_free(heller_module* m) { delete m; }

int heller_omega(const heller_module* m, heller_module** out) {
    if (int rc = require(m && out, "null argument")) return rc;
    return guarded([&] {
        *out = new heller_module{syzygy(m->mod).omega, m->builtin};
        return HELLER_OK;
    });
}

int heller_sthom_dim(const heller_module* m, const heller_module* n, int* out_dim) {
    if (int rc = require(m && n && out_dim, "null argument")) return rc;
    return guarded([&] {
        if (int rc = require(m->mod->alg->p == n->mod->alg->p &&
                                 m->mod->alg->dim == n->mod->alg->dim,
                             "modules over different algebras"))
            return rc;
        *out_dim = static_cast<int>(stable_hom(m->mod, n->mod).dim());
        return HELLER_OK;
    });
}

int heller_is_stably_isomorphic(const heller_module* m, const heller_module* n,
                                uint64_t seed, int* out_iso) {
    if (int rc = require(m && n && out_iso, "null argument")) return rc;
    return guarded([&] {
        *out_iso = is_stably_isomorphic(m->mod, n->mod, seed) ? 1 : 0;
        return HELLER_OK;
    });
}

int heller_decompose(const heller_module* m, uint64_t seed, char** out_json) {
    if (int rc = require(m && out_json, "null argument")) return rc;
    return guarded([&] {
        RunConfig cfg;
        cfg.algebra = m->builtin.empty() ? "A" : m->builtin;
        cfg.prime = m->mod->alg->p;
        cfg.seed = seed;
        *out_json = dup_string(decompose_report(cfg, m->mod).dump(2));
        return HELLER_OK;
    });
}

int heller_identify(const heller_module* m, char** out_json) {
    if (int rc = require(m && out_json, "null argument")) return rc;
    return guarded([&] {
        if (int rc = require(!m->builtin.empty(), "identify needs a builtin algebra")) return rc;
        Catalog c = builtin_catalog(m->builtin, m->mod->alg->p);
        auto all = c.labeled_with_projectives();
        *out_json = dup_string(label_multiset(identify(m->mod, all), all).dump(2));
        return HELLER_OK;
    });
}

namespace {

int report_call(const char* algebra, uint32_t prime, int max_eps_dim, uint64_t seed,
                char** out_report, json (*fn)(const RunConfig&), bool check_match) {
    if (int rc = require(algebra && out_report, "null argument")) return rc;
    return guarded([&] {
        if (int rc = require(known_builtin(algebra), "unknown builtin algebra name")) return rc;
        if (int rc = require(is_prime(prime) && prime <= 997, "prime must be a prime <= 997"))
            return rc;
        RunConfig cfg;
        cfg.algebra = algebra;
        cfg.prime = prime;
        cfg.seed = seed;
        if (max_eps_dim > 0) cfg.max_eps_dim = max_eps_dim;
        json rep = fn(cfg);
        *out_report = dup_string(rep.dump(2));
        if (check_match && !rep.value("match", true)) return HELLER_MISMATCH;
        return HELLER_OK;
    });
}

}  // namespace

int heller_verify_paper(const char* algebra, uint32_t prime, int max_eps_dim,
                        uint64_t seed, char** out_report) {
    return report_call(algebra, prime, max_eps_dim, seed, out_report, verify_paper_report, true);
}

int heller_left_adjoint(const char* algebra, uint32_t prime, int max_eps_dim,
                        uint64_t seed, char** out_report) {
    return report_call(algebra, prime, max_eps_dim, seed, out_report, left_adjoint_report, false);
}

int heller_right_adjoint(const char* algebra, uint32_t prime, char** out_report) {
    return report_call(algebra, prime, 0, 0, out_report, right_adjoint_report, false);
}

int heller_sthom_matrix(const char* algebra, uint32_t prime, char** out_report) {
    return report_call(algebra, prime, 0, 0, out_report, sthom_report, false);
}

}  // extern "C"
