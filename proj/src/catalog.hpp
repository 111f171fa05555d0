#ifndef HELLER_CATALOG_HPP
#define HELLER_CATALOG_HPP

#include <map>

#include "krull_schmidt.hpp"
#include "module.hpp"

namespace heller {

struct CatalogEntry {
    std::string label;
    PairData pair;
    ModulePtr mod;
};

struct Catalog {
    std::string name;  // algebra name: A, B, C1..C8
    AlgebraPtr alg;
    std::vector<CatalogEntry> objects;      // nonprojective indecomposables
    std::vector<CatalogEntry> projectives;  // e*Lambda and f*Lambda

    const CatalogEntry* find(const std::string& label) const;
    std::vector<LabeledModule> labeled() const;
    std::vector<LabeledModule> labeled_with_projectives() const;
    std::vector<ModulePtr> object_modules() const;
};

// The 25 nonprojective indecomposables X1..X25 plus P1, P2.
Catalog catalog_A(uint32_t p);

// Catalog over a proper quotient: the A-entries annihilated by the quotient's
// defining ideal, minus the ones that become projective.
Catalog catalog_quotient(const std::string& name, uint32_t p);

Catalog builtin_catalog(const std::string& name, uint32_t p);

// --- expected paper data, shipped as JSON fixtures ---------------------------

struct EpsilonFixture {
    std::string label;                         // catalog label of X_i
    PairData bottom;                           // pair form of Omega S X_i
    std::vector<std::vector<Residue>> left;    // e-part residue matrix of eps_i
    std::vector<std::vector<Residue>> right;   // f-part residue matrix
};

struct FixtureBundle {
    std::string algebra;
    std::map<std::string, std::map<std::string, int>> S;        // label -> multiset
    std::map<std::string, std::map<std::string, int>> omega_s;  // label -> multiset
    std::vector<EpsilonFixture> epsilons;
    std::vector<std::string> h_labels;
    std::vector<std::vector<int>> H, H_prime;
    std::string file;
    std::string checksum;
};

// name in {A, B, C3}
FixtureBundle fixtures(const std::string& name);

}  // namespace heller

#endif
