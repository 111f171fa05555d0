#ifndef HELLER_JSON_IO_HPP
#define HELLER_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include "module.hpp"

namespace heller {

using json = nlohmann::json;

// "c0+c1*pi+c2*pi^2" with optional signs, e.g. "1", "pi", "2*pi^2", "1-pi".
Residue parse_residue(const std::string& s);
std::string residue_to_string(const Residue& r);

json algebra_to_json(const BasedAlgebra& a);
AlgebraPtr algebra_from_json(const json& j);

json pair_to_json(const PairData& pd);
PairData pair_from_json(const json& j);

std::vector<std::vector<Residue>> residue_matrix_from_json(const json& j);
json residue_matrix_to_json(const std::vector<std::vector<Residue>>& m);

// Resolves the "algebra" field (builtin name string or inline object) and
// builds the module from its pair form.
std::pair<AlgebraPtr, ModulePtr> module_from_json(const json& j, uint32_t p);

// Fixture data directory: HELLER_DATA_DIR env var, else the compiled-in path.
std::string data_dir();

std::string read_file(const std::string& path);

// FNV-1a 64 of a byte string, as fixed-width hex.
std::string content_checksum(const std::string& bytes);

}  // namespace heller

#endif
