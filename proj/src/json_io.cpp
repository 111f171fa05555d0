#include "json_io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#ifndef HELLER_DATA_DIR
#define HELLER_DATA_DIR "data"
#endif

namespace heller {

Residue parse_residue(const std::string& s) {
    Residue r;
    auto bump = [&](size_t deg, int64_t coeff) {
        if (r.size() <= deg) r.resize(deg + 1, 0);
        r[deg] += coeff;
    };
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    skip_ws();
    if (i == s.size()) throw std::invalid_argument("parse_residue: empty string");
    bool first = true;
    while (true) {
        skip_ws();
        if (i == s.size()) {
            if (first) throw std::invalid_argument("parse_residue: trailing sign in '" + s + "'");
            break;
        }
        int64_t sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            if (s[i] == '-') sign = -1;
            ++i;
            skip_ws();
        } else if (!first) {
            throw std::invalid_argument("parse_residue: expected +/- in '" + s + "'");
        }
        first = false;
        int64_t coeff = 1;
        bool saw_number = false;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            coeff = 0;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                coeff = coeff * 10 + (s[i++] - '0');
            saw_number = true;
            skip_ws();
            if (i < s.size() && s[i] == '*') {
                ++i;
                skip_ws();
            }
        }
        size_t deg = 0;
        if (i + 1 < s.size() && s.compare(i, 2, "pi") == 0) {
            i += 2;
            deg = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
                    throw std::invalid_argument("parse_residue: bad exponent in '" + s + "'");
                deg = 0;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                    deg = deg * 10 + (s[i++] - '0');
            }
        } else if (!saw_number) {
            throw std::invalid_argument("parse_residue: expected term in '" + s + "'");
        }
        bump(deg, sign * coeff);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::string residue_to_string(const Residue& r) {
    std::ostringstream out;
    bool any = false;
    for (size_t d = 0; d < r.size(); ++d) {
        if (r[d] == 0) continue;
        if (any) out << (r[d] < 0 ? "-" : "+");
        else if (r[d] < 0) out << "-";
        int64_t c = r[d] < 0 ? -r[d] : r[d];
        if (c != 1 || d == 0) out << c;
        if (d >= 1) {
            if (c != 1) out << "*";
            out << "pi";
            if (d >= 2) out << "^" << d;
        }
        any = true;
    }
    if (!any) return "0";
    return out.str();
}

json algebra_to_json(const BasedAlgebra& a) {
    json j;
    j["p"] = a.p;
    j["dim"] = a.dim;
    j["basis"] = a.basis_labels;
    j["idempotents"] = a.idempotents;
    j["radical"] = a.radical;
    json mul = json::array();
    for (int i = 0; i < a.dim; ++i) {
        json rows = json::array();
        for (int k = 0; k < a.dim; ++k) {
            json row = json::array();
            for (int l = 0; l < a.dim; ++l) row.push_back(a.mul[i].at(k, l));
            rows.push_back(row);
        }
        mul.push_back(rows);
    }
    j["mul"] = mul;
    if (a.triangle) j["triangle"] = {{"n", a.triangle->n}, {"m", a.triangle->m}, {"k", a.triangle->k}};
    return j;
}

AlgebraPtr algebra_from_json(const json& j) {
    auto a = std::make_shared<BasedAlgebra>();
    a->p = j.at("p").get<uint32_t>();
    a->dim = j.at("dim").get<int>();
    a->basis_labels = j.at("basis").get<std::vector<std::string>>();
    a->idempotents = j.at("idempotents").get<std::vector<int>>();
    a->radical = j.at("radical").get<std::vector<int>>();
    const auto& mul = j.at("mul");
    if (static_cast<int>(mul.size()) != a->dim)
        throw std::invalid_argument("algebra_from_json: mul has wrong length");
    for (int i = 0; i < a->dim; ++i) {
        FpMatrix m(a->p, a->dim, a->dim);
        for (int k = 0; k < a->dim; ++k)
            for (int l = 0; l < a->dim; ++l)
                m.set(k, l, mul[i][k][l].get<uint32_t>() % a->p);
        a->mul.push_back(std::move(m));
    }
    if (j.contains("triangle"))
        a->triangle = TriangleParams{j["triangle"].at("n").get<int>(),
                                     j["triangle"].at("m").get<int>(),
                                     j["triangle"].at("k").get<int>()};
    ValidationReport rep = validate_algebra(*a);
    if (!rep.ok())
        throw std::invalid_argument("algebra_from_json: invalid algebra: " + rep.to_string());
    return a;
}

std::vector<std::vector<Residue>> residue_matrix_from_json(const json& j) {
    std::vector<std::vector<Residue>> out;
    for (const auto& row : j) {
        std::vector<Residue> r;
        for (const auto& cell : row) r.push_back(parse_residue(cell.get<std::string>()));
        out.push_back(std::move(r));
    }
    return out;
}

json residue_matrix_to_json(const std::vector<std::vector<Residue>>& m) {
    json j = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const auto& cell : row) r.push_back(residue_to_string(cell));
        j.push_back(r);
    }
    return j;
}

json pair_to_json(const PairData& pd) {
    json j;
    j["e_part"] = pd.e_part;
    j["f_part"] = pd.f_part;
    j["a"] = residue_matrix_to_json(pd.a);
    return j;
}

PairData pair_from_json(const json& j) {
    PairData pd;
    pd.e_part = j.at("e_part").get<std::vector<int>>();
    pd.f_part = j.at("f_part").get<std::vector<int>>();
    if (j.contains("a")) pd.a = residue_matrix_from_json(j["a"]);
    return pd;
}

std::pair<AlgebraPtr, ModulePtr> module_from_json(const json& j, uint32_t p) {
    AlgebraPtr alg;
    const auto& aj = j.at("algebra");
    if (aj.is_string())
        alg = builtin_algebra(aj.get<std::string>(), p);
    else
        alg = algebra_from_json(aj);
    PairData pd = pair_from_json(j);
    return {alg, module_from_pair(alg, pd)};
}

std::string data_dir() {
    if (const char* env = std::getenv("HELLER_DATA_DIR")) return env;
    return HELLER_DATA_DIR;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string content_checksum(const std::string& bytes) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace heller
