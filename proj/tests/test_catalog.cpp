#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "catalog.hpp"
#include "json_io.hpp"
#include "stable.hpp"

using namespace heller;

TEST_CASE("catalog sizes") {
    const std::map<std::string, size_t> expected = {
        {"A", 25}, {"B", 24}, {"C1", 12}, {"C2", 5}, {"C3", 7},
        {"C4", 13}, {"C5", 9}, {"C6", 12}, {"C7", 5}, {"C8", 9}};
    for (const auto& [name, count] : expected) {
        for (uint32_t p : {2u, 3u, 5u}) {
            Catalog c = builtin_catalog(name, p);
            CAPTURE(name);
            CAPTURE(p);
            CHECK(c.objects.size() == count);
            CHECK(c.projectives.size() == 2);
        }
    }
}

TEST_CASE("catalog entries are valid nonprojective indecomposables") {
    for (const char* name : {"A", "C3", "C5"}) {
        for (uint32_t p : {2u, 3u, 5u}) {
            Catalog c = builtin_catalog(name, p);
            for (const auto& e : c.objects) {
                CAPTURE(name);
                CAPTURE(e.label);
                CHECK(validate_module(*e.mod).ok());
                CHECK_FALSE(is_projective(e.mod));
                CHECK_FALSE(find_splitting(e.mod, 0).split_found);
                // entry matches its own pair form
                CHECK(e.mod->dim > 0);
                ModulePtr rebuilt = module_from_pair(c.alg, e.pair);
                CHECK(is_isomorphic(e.mod, rebuilt, 0).has_value());
            }
            for (const auto& e : c.projectives) CHECK(is_projective(e.mod));
        }
    }
}

TEST_CASE("catalog objects are pairwise non-isomorphic") {
    for (uint32_t p : {2u, 3u, 5u}) {
        Catalog c = builtin_catalog("A", p);
        for (size_t i = 0; i < c.objects.size(); ++i)
            for (size_t j = i + 1; j < c.objects.size(); ++j) {
                CAPTURE(c.objects[i].label);
                CAPTURE(c.objects[j].label);
                CHECK_FALSE(is_isomorphic(c.objects[i].mod, c.objects[j].mod, 0).has_value());
                CHECK_FALSE(is_stably_isomorphic(c.objects[i].mod, c.objects[j].mod, 0));
            }
    }
}

TEST_CASE("quotient catalogs sit inside the A catalog") {
    // every quotient object is the A-module of the same label, reinterpreted
    Catalog a = builtin_catalog("A", 3);
    for (const char* name : {"C1", "C3", "C5", "C8"}) {
        Catalog c = builtin_catalog(name, 3);
        for (const auto& e : c.objects) {
            const CatalogEntry* src = a.find(e.label);
            REQUIRE_MESSAGE(src != nullptr, e.label);
            CHECK(src->mod->dim == e.mod->dim);
            CHECK(e.pair.e_part == src->pair.e_part);
            CHECK(e.pair.f_part == src->pair.f_part);
        }
    }
}

TEST_CASE("catalogs are closed under syzygies") {
    for (const auto& name : builtin_algebra_names()) {
        for (uint32_t p : {2u, 3u}) {
            Catalog c = builtin_catalog(name, p);
            auto all = c.labeled_with_projectives();
            for (const auto& e : c.objects) {
                CAPTURE(name);
                CAPTURE(e.label);
                ModulePtr om = syzygy(e.mod).omega;
                CHECK_NOTHROW(identify(om, all, 0));
                CHECK(om->dim > 0);  // no catalog object has projective dimension <= 1 here
            }
        }
    }
}

TEST_CASE("omega acts on the A catalog as a fixed permutation-free table") {
    // spot checks of the syzygy map on labels, independent of p
    Catalog c = builtin_catalog("A", 2);
    auto all = c.labeled_with_projectives();
    auto omega_labels = [&](const std::string& label) {
        auto mult = identify(syzygy(c.find(label)->mod).omega, all, 0);
        std::map<std::string, int> out;
        for (size_t i = 0; i < mult.size(); ++i)
            if (mult[i]) out[all[i].label] = mult[i];
        return out;
    };
    CHECK(omega_labels("X1") == std::map<std::string, int>{{"X2", 1}});
    CHECK(omega_labels("X2") == std::map<std::string, int>{{"X1", 1}});
}

TEST_CASE("fixture bundles load with stable checksums") {
    for (const char* name : {"A", "B", "C3"}) {
        FixtureBundle fx = fixtures(name);
        CHECK(fx.algebra == name);
        CHECK_FALSE(fx.file.empty());
        CHECK(fx.checksum.size() == 16);  // fnv-1a 64 hex
        // the checksum is the checksum of the file bytes
        CHECK(fx.checksum == content_checksum(read_file(fx.file)));
    }
    FixtureBundle a = fixtures("A");
    CHECK(a.S.size() == 25);
    CHECK(a.omega_s.size() == 25);
    CHECK(a.epsilons.size() == 25);
    FixtureBundle b = fixtures("B");
    CHECK(b.S.size() == 24);
    CHECK(b.epsilons.size() == 24);
    FixtureBundle c3 = fixtures("C3");
    CHECK(c3.h_labels.size() == 7);
    CHECK(c3.H.size() == 7);
    CHECK(c3.H_prime.size() == 7);
    CHECK_THROWS(fixtures("C5"));
}
