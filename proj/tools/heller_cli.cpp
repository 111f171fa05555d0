#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "heller.h"

using nlohmann::json;

namespace {

struct Options {
    std::string algebra = "A";
    uint32_t prime = 2;
    uint64_t seed = 0;
    int jobs = 1;
    int max_eps_dim = 6;
    std::string format = "pretty";  // json|csv|pretty
    std::string emit_certificate;
    std::string module_arg;
    bool use_random = false;
    int max_dim = 12;
};

void add_common(CLI::App* cmd, Options& o) {
    cmd->add_option("--algebra", o.algebra, "builtin algebra name (A, B, C1..C8)");
    cmd->add_option("--prime", o.prime, "field characteristic, a prime <= 997");
    cmd->add_option("--seed", o.seed, "seed for all randomized search ladders");
    cmd->add_option("--jobs", o.jobs, "worker count (results are independent of it)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--max-eps-dim", o.max_eps_dim, "stable-class budget for the eps search")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--format", o.format, "json, csv or pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
}

int fail(int rc, const char* what) {
    std::string msg = heller_last_error();
    fprintf(stderr, "%s: %s\n", what, msg.empty() ? "error" : msg.c_str());
    return rc == HELLER_OK ? HELLER_INTERNAL_ERROR : rc;
}

int emit_text(const std::string& text, const Options& o, int rc);

// takes ownership of the report string
int emit(char* report, const Options& o, int rc) {
    std::string text = report ? report : "";
    heller_string_free(report);
    return emit_text(text, o, rc);
}

int emit_text(const std::string& text, const Options& o, int rc) {
    if (!o.emit_certificate.empty()) {
        std::ofstream f(o.emit_certificate, std::ios::binary);
        f << text << "\n";
        if (!f) return fail(HELLER_USER_ERROR, "cannot write certificate file");
    }
    json j = json::parse(text);
    if (o.format == "json") {
        std::cout << text << "\n";
        return rc;
    }
    if (o.format == "csv") {
        for (const char* key : {"H", "N_left", "N_right", "H_prime"}) {
            if (!j.contains(key)) continue;
            std::cout << key << "\n";
            const json& m = j[key];
            std::cout << ",";
            for (size_t i = 0; i < m["labels"].size(); ++i)
                std::cout << m["labels"][i].get<std::string>()
                          << (i + 1 < m["labels"].size() ? "," : "\n");
            for (size_t r = 0; r < m["entries"].size(); ++r) {
                std::cout << m["labels"][r].get<std::string>();
                for (const auto& v : m["entries"][r]) std::cout << "," << v.get<int>();
                std::cout << "\n";
            }
        }
        return rc;
    }
    // pretty
    const json& cfg = j["config"];
    std::cout << "heller " << j.value("version", "?") << "  " << j.value("kind", "report")
              << "  algebra=" << cfg.value("algebra", "?") << " p=" << cfg.value("prime", 0)
              << " seed=" << cfg.value("seed", 0) << "\n";
    if (j.contains("catalog"))
        std::cout << "catalog: " << j["catalog"]["objects"].size() << " objects, distinct="
                  << j["catalog"]["pairwise_distinct"] << " indecomposable="
                  << j["catalog"]["indecomposable"] << "\n";
    if (j.contains("adjoint"))
        std::cout << "left adjoint: " << (j["adjoint"]["success"].get<bool>() ? "found" : "FAILED")
                  << "\n";
    if (j.contains("success"))
        std::cout << "left adjoint: " << (j["success"].get<bool>() ? "found" : "FAILED") << "\n";
    if (j.contains("rows"))
        for (const auto& r : j["rows"]) {
            std::cout << "  S " << r["label"].get<std::string>() << " = ";
            if (r["S"].empty()) std::cout << "0";
            for (auto it = r["S"].begin(); it != r["S"].end(); ++it)
                std::cout << it.key() << "x" << it.value().get<int>() << " ";
            std::cout << " | Omega S = ";
            if (r["omega_S"].empty()) std::cout << "0";
            for (auto it = r["omega_S"].begin(); it != r["omega_S"].end(); ++it)
                std::cout << it.key() << "x" << it.value().get<int>() << " ";
            std::cout << "\n";
        }
    if (j.contains("table_comparison"))
        std::cout << "table comparison: "
                  << (j["table_comparison"]["match"].get<bool>() ? "match" : "MISMATCH") << "\n";
    if (j.contains("epsilon_verification"))
        std::cout << "epsilon fixtures: "
                  << (j["epsilon_verification"]["match"].get<bool>() ? "all valid" : "MISMATCH")
                  << "\n";
    if (j.contains("idempotency")) {
        const json& idem = j["idempotency"];
        std::cout << "idempotency (Omega S)^2 vs Omega S: "
                  << (idem["all_equal"].get<bool>() ? "equal on all objects" : "EXCEPTIONS")
                  << "\n";
        if (idem.contains("X10"))
            std::cout << "  X10: (Omega S)X10 = " << idem["X10"]["omega_S"].dump()
                      << " (verified; see docs/deviations.md)\n";
    }
    if (j.contains("right_adjoint"))
        std::cout << "right adjoint: "
                  << (j["right_adjoint"]["obstructed"].get<bool>() ? "INFEASIBLE" : "unobstructed")
                  << "\n";
    if (j.contains("obstructed"))
        std::cout << "right adjoint: " << (j["obstructed"].get<bool>() ? "INFEASIBLE" : "unobstructed")
                  << "\n  (" << j.value("note", "") << ")\n";
    if (j.contains("omega"))
        std::cout << "omega: " << j["omega"].dump() << " (dim " << j.value("omega_dim", 0) << ")\n";
    if (j.contains("labels")) std::cout << "summands: " << j["labels"].dump() << "\n";
    if (j.contains("match"))
        std::cout << "verdict: " << (j["match"].get<bool>() ? "match" : "MISMATCH") << "\n";
    return rc;
}

int resolve_module(heller_algebra* alg, const Options& o, heller_module** out) {
    if (o.use_random) return heller_module_random(alg, o.seed, o.max_dim, out);
    if (o.module_arg.empty()) {
        fprintf(stderr, "need --module LABEL|FILE or --random\n");
        return HELLER_USER_ERROR;
    }
    if (heller_module_catalog(alg, o.module_arg.c_str(), out) == HELLER_OK) return HELLER_OK;
    std::ifstream f(o.module_arg, std::ios::binary);
    if (!f) {
        fprintf(stderr, "module '%s' is neither a catalog label nor a readable file\n",
                o.module_arg.c_str());
        return HELLER_USER_ERROR;
    }
    std::stringstream ss;
    ss << f.rdbuf();
    return heller_module_from_json(alg, ss.str().c_str(), out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"syzygy operators and adjoint searches on stable module categories"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("heller ") + heller_version());

    Options o;
    auto* verify = app.add_subcommand("verify-paper", "full reproduction run for one algebra");
    add_common(verify, o);
    verify->add_option("--emit-certificate", o.emit_certificate, "write the JSON report here");

    auto* ladj = app.add_subcommand("left-adjoint", "representability search for S -| Omega");
    add_common(ladj, o);
    ladj->add_option("--emit-certificate", o.emit_certificate, "write the JSON certificate here");

    auto* radj = app.add_subcommand("right-adjoint", "obstruction check (infeasibility only)");
    add_common(radj, o);

    auto* sthom = app.add_subcommand("sthom", "stable Hom dimension matrices");
    add_common(sthom, o);
    sthom->add_flag_callback("--matrix", [&] { o.format = "csv"; },
                             "emit matrices as CSV (same as --format csv)");

    auto* omega = app.add_subcommand("omega", "syzygy of one module");
    add_common(omega, o);
    omega->add_option("--module", o.module_arg, "catalog label or JSON file");
    omega->add_flag("--random", o.use_random, "use a seeded random module");
    omega->add_option("--max-dim", o.max_dim, "bound for --random")->check(CLI::PositiveNumber);

    auto* deco = app.add_subcommand("decompose", "Krull-Schmidt decomposition");
    add_common(deco, o);
    deco->add_option("--module", o.module_arg, "catalog label or JSON file");
    deco->add_flag("--random", o.use_random, "use a seeded random module");
    deco->add_option("--max-dim", o.max_dim, "bound for --random")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : HELLER_USER_ERROR;
    }

    char* report = nullptr;
    int rc = HELLER_OK;

    if (verify->parsed()) {
        rc = heller_verify_paper(o.algebra.c_str(), o.prime, o.max_eps_dim, o.seed, &report);
        if (rc != HELLER_OK && rc != HELLER_MISMATCH) return fail(rc, "verify-paper");
        return emit(report, o, rc);
    }
    if (ladj->parsed()) {
        rc = heller_left_adjoint(o.algebra.c_str(), o.prime, o.max_eps_dim, o.seed, &report);
        if (rc != HELLER_OK) return fail(rc, "left-adjoint");
        return emit(report, o, rc);
    }
    if (radj->parsed()) {
        rc = heller_right_adjoint(o.algebra.c_str(), o.prime, &report);
        if (rc != HELLER_OK) return fail(rc, "right-adjoint");
        return emit(report, o, rc);
    }
    if (sthom->parsed()) {
        rc = heller_sthom_matrix(o.algebra.c_str(), o.prime, &report);
        if (rc != HELLER_OK) return fail(rc, "sthom");
        return emit(report, o, rc);
    }

    heller_algebra* alg = nullptr;
    rc = heller_algebra_builtin(o.algebra.c_str(), o.prime, &alg);
    if (rc != HELLER_OK) return fail(rc, "algebra");
    heller_module* mod = nullptr;
    rc = resolve_module(alg, o, &mod);
    if (rc != HELLER_OK) {
        heller_algebra_free(alg);
        return fail(rc, "module");
    }

    if (omega->parsed()) {
        heller_module* om = nullptr;
        rc = heller_omega(mod, &om);
        if (rc == HELLER_OK) {
            char* labels = nullptr;
            int dim = 0;
            heller_module_dim(om, &dim);
            json out{{"kind", "omega"}, {"omega_dim", dim}};
            out["config"] = json{{"algebra", o.algebra}, {"prime", o.prime}, {"seed", o.seed}};
            out["version"] = heller_version();
            if (heller_identify(om, &labels) == HELLER_OK) {
                out["omega"] = json::parse(labels);
                heller_string_free(labels);
            } else {
                out["omega"] = nullptr;
            }
            heller_module_free(om);
            rc = emit_text(out.dump(2), o, HELLER_OK);
        } else {
            rc = fail(rc, "omega");
        }
    } else if (deco->parsed()) {
        rc = heller_decompose(mod, o.seed, &report);
        if (rc == HELLER_OK)
            rc = emit(report, o, HELLER_OK);
        else
            rc = fail(rc, "decompose");
    }

    heller_module_free(mod);
    heller_algebra_free(alg);
    return rc;
}
