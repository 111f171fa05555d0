#include "catalog.hpp"

#include <algorithm>

#include "json_io.hpp"
#include "projective.hpp"

namespace heller {

const CatalogEntry* Catalog::find(const std::string& label) const {
    for (const auto& e : objects)
        if (e.label == label) return &e;
    for (const auto& e : projectives)
        if (e.label == label) return &e;
    return nullptr;
}

std::vector<LabeledModule> Catalog::labeled() const {
    std::vector<LabeledModule> out;
    for (const auto& e : objects) out.push_back({e.label, e.mod});
    return out;
}

std::vector<LabeledModule> Catalog::labeled_with_projectives() const {
    auto out = labeled();
    for (const auto& e : projectives) out.push_back({e.label, e.mod});
    return out;
}

std::vector<ModulePtr> Catalog::object_modules() const {
    std::vector<ModulePtr> out;
    for (const auto& e : objects) out.push_back(e.mod);
    return out;
}

namespace {

PairData pd(std::vector<int> e, std::vector<int> f,
            std::vector<std::vector<const char*>> a = {}) {
    PairData out;
    out.e_part = std::move(e);
    out.f_part = std::move(f);
    for (auto& row : a) {
        std::vector<Residue> r;
        for (const char* cell : row) r.push_back(parse_residue(cell));
        out.a.push_back(std::move(r));
    }
    return out;
}

// the X-list in pair form
const std::vector<std::pair<const char*, PairData>>& x_list() {
    static const std::vector<std::pair<const char*, PairData>> xs = {
        {"X1", pd({1}, {1}, {{"1"}})},
        {"X2", pd({2}, {2}, {{"1"}})},
        {"X3", pd({2}, {1}, {{"1"}})},
        {"X4", pd({3}, {2}, {{"1"}})},
        {"X5", pd({2}, {3}, {{"pi"}})},
        {"X6", pd({1}, {2}, {{"pi"}})},
        {"X7", pd({2}, {1, 3}, {{"1", "pi"}})},
        {"X8", pd({1, 3}, {2}, {{"pi"}, {"1"}})},
        {"X9", pd({3}, {3}, {{"pi"}})},
        {"X10", pd({2}, {})},
        {"X11", pd({}, {2})},
        {"X12", pd({1, 3}, {3}, {{"pi^2"}, {"pi"}})},
        {"X13", pd({3}, {1, 3}, {{"1", "pi"}})},
        {"X14", pd({3}, {3}, {{"pi^2"}})},
        {"X15", pd({3}, {})},
        {"X16", pd({2, 3}, {1, 3}, {{"1", "pi"}, {"1", "0"}})},
        {"X17", pd({1, 3}, {2, 3}, {{"pi", "pi^2"}, {"1", "0"}})},
        {"X18", pd({1, 3}, {1, 3}, {{"0", "pi^2"}, {"1", "pi"}})},
        {"X19", pd({1}, {3}, {{"pi^2"}})},
        {"X20", pd({3}, {1}, {{"1"}})},
        {"X21", pd({1}, {})},
        {"X22", pd({}, {1})},
        {"X23", pd({3}, {2}, {{"pi"}})},
        {"X24", pd({2}, {3}, {{"pi^2"}})},
        {"X25", pd({2}, {2}, {{"pi"}})},
    };
    return xs;
}

PairData projective_pair_e(const TriangleParams& t) {
    if (t.k == 0) return pd({t.n}, {});
    return pd({t.n}, {t.k}, {{"1"}});
}

PairData projective_pair_f(const TriangleParams& t) { return pd({}, {t.m}); }

}  // namespace

Catalog catalog_A(uint32_t p) {
    Catalog c;
    c.name = "A";
    c.alg = builtin_algebra("A", p);
    for (const auto& [label, pair] : x_list())
        c.objects.push_back({label, pair, module_from_pair(c.alg, pair)});
    TriangleParams t = *c.alg->triangle;
    c.projectives.push_back({"P1", projective_pair_e(t), module_from_pair(c.alg, projective_pair_e(t))});
    c.projectives.push_back({"P2", projective_pair_f(t), module_from_pair(c.alg, projective_pair_f(t))});
    return c;
}

namespace {

// A-module m, annihilated by the quotient's ideal, reinterpreted over the
// quotient algebra; null if not annihilated.
ModulePtr reinterpret_over(ModulePtr m, AlgebraPtr big_alg, AlgebraPtr small_alg) {
    TriangleParams bt = *big_alg->triangle, st = *small_alg->triangle;
    auto keep = [&](int idx) -> std::optional<int> {
        if (idx < bt.n) return idx < st.n ? std::optional<int>(idx) : std::nullopt;
        if (idx < bt.n + bt.m) {
            int t = idx - bt.n;
            return t < st.m ? std::optional<int>(st.n + t) : std::nullopt;
        }
        int r = idx - bt.n - bt.m;
        return r < st.k ? std::optional<int>(st.n + st.m + r) : std::nullopt;
    };
    auto out = std::make_shared<Module>();
    out->alg = small_alg;
    out->dim = m->dim;
    out->action.assign(small_alg->dim, FpMatrix(small_alg->p, m->dim, m->dim));
    for (int i = 0; i < big_alg->dim; ++i) {
        auto tgt = keep(i);
        if (tgt)
            out->action[*tgt] = m->action[i];
        else if (!m->action[i].is_zero())
            return nullptr;
    }
    if (!validate_module(*out).ok())
        throw std::logic_error("reinterpret_over: annihilated module failed validation");
    return out;
}

}  // namespace

Catalog catalog_quotient(const std::string& name, uint32_t p) {
    if (name == "A") return catalog_A(p);
    Catalog base = catalog_A(p);
    Catalog c;
    c.name = name;
    c.alg = builtin_algebra(name, p);
    TriangleParams t = *c.alg->triangle;
    c.projectives.push_back({"P1", projective_pair_e(t), module_from_pair(c.alg, projective_pair_e(t))});
    c.projectives.push_back({"P2", projective_pair_f(t), module_from_pair(c.alg, projective_pair_f(t))});
    for (const auto& e : base.objects) {
        ModulePtr q = reinterpret_over(e.mod, base.alg, c.alg);
        if (!q) continue;
        bool proj = false;
        for (const auto& pe : c.projectives)
            if (is_isomorphic(pe.mod, q)) proj = true;
        if (!proj) c.objects.push_back({e.label, e.pair, q});
    }
    return c;
}

Catalog builtin_catalog(const std::string& name, uint32_t p) {
    if (name == "A") return catalog_A(p);
    return catalog_quotient(name, p);
}

FixtureBundle fixtures(const std::string& name) {
    FixtureBundle b;
    b.algebra = name;
    b.file = data_dir() + "/fixtures_" + name + ".json";
    std::string bytes = read_file(b.file);
    b.checksum = content_checksum(bytes);
    json j = json::parse(bytes);
    if (j.at("algebra").get<std::string>() != name)
        throw std::runtime_error("fixtures: algebra name mismatch in " + b.file);
    auto read_table = [&](const char* key, std::map<std::string, std::map<std::string, int>>& dst) {
        if (!j.contains(key)) return;
        for (auto& [label, mults] : j[key].items()) {
            std::map<std::string, int> row;
            for (auto& [k, v] : mults.items()) row[k] = v.get<int>();
            dst[label] = std::move(row);
        }
    };
    read_table("S", b.S);
    read_table("omegaS", b.omega_s);
    if (j.contains("epsilons")) {
        for (auto& e : j["epsilons"]) {
            EpsilonFixture f;
            f.label = e.at("label").get<std::string>();
            f.bottom = pair_from_json(e.at("bottom"));
            if (e.contains("left")) f.left = residue_matrix_from_json(e["left"]);
            if (e.contains("right")) f.right = residue_matrix_from_json(e["right"]);
            b.epsilons.push_back(std::move(f));
        }
    }
    if (j.contains("labels")) b.h_labels = j["labels"].get<std::vector<std::string>>();
    if (j.contains("H")) b.H = j["H"].get<std::vector<std::vector<int>>>();
    if (j.contains("Hprime")) b.H_prime = j["Hprime"].get<std::vector<std::vector<int>>>();
    return b;
}

}  // namespace heller
