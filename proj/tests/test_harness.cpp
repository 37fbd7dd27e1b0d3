#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "etalab/builders.hpp"
#include "etalab/cyclic.hpp"
#include "etalab/harness.hpp"

using namespace etalab;

namespace {

FiniteGroup make(const std::string& s) { return realize(parse_spec(s)); }

bool catalog_contains(const Catalog& cat, const std::string& text) {
    return std::any_of(cat.entries().begin(), cat.entries().end(),
                       [&](const CatalogEntry& e) { return e.text == text; });
}

}  // namespace

TEST_CASE("the stock catalog enumerates the named families") {
    Catalog cat = default_catalog(16, {2});
    for (const char* text :
         {"cyclic(8)", "cyclic(16)", "product(cyclic(4),cyclic(2))",
          "product(cyclic(2),cyclic(2))", "dihedral(8)", "quaternion(8)",
          "dihedral(16)", "quaternion(16)", "semidihedral(16)", "modular(2,4)",
          "product(dihedral(8),cyclic(2))"})
        CHECK(catalog_contains(cat, text));
    CHECK_FALSE(catalog_contains(cat, "cyclic(1)"));
    CHECK_FALSE(catalog_contains(cat, "semidihedral(8)"));

    Catalog cat27 = default_catalog(27, {3});
    CHECK(catalog_contains(cat27, "heisenberg(3)"));
    CHECK(catalog_contains(cat27, "modular(3,3)"));
    CHECK(catalog_contains(cat27, "product(cyclic(9),cyclic(3))"));
}

TEST_CASE("catalog invariants") {
    Catalog cat = default_catalog(128, {2, 3});
    CHECK(std::is_sorted(cat.entries().begin(), cat.entries().end(),
                         [](const CatalogEntry& a, const CatalogEntry& b) {
                             return a.text < b.text;
                         }));
    std::set<std::string> texts;
    for (const CatalogEntry& e : cat.entries()) {
        CHECK(e.order >= 2);
        CHECK(e.order <= 128);
        CHECK(texts.insert(e.text).second);  // no duplicates
        auto pp = prime_power_decompose(e.order);
        REQUIRE(pp);
        CHECK(pp->p == e.p);
        CHECK(pp->n == e.n);
        CHECK(print_spec(e.spec) == e.text);
    }
}

TEST_CASE("catalog configuration errors") {
    CHECK_THROWS_AS(default_catalog(4, {5}), ConfigError);
    CHECK_THROWS_AS(default_catalog(3, {2}), UsageError);
    CHECK_THROWS_AS(default_catalog(100, {}), UsageError);
    CHECK_THROWS_AS(default_catalog(100, {4}), UsageError);
    CHECK(default_catalog(4, {2}).entries().size() >= 2);
}

TEST_CASE("oracle eta agrees with the closed form and known values") {
    CHECK(oracle_eta(make("product(cyclic(4),cyclic(2))")) == 4);
    CHECK(Int(oracle_eta(make("product(cyclic(4),cyclic(2))"))) == g_p(2, 2, 1));
    CHECK(oracle_eta(make("dihedral(8)")) == 3);
    CHECK(oracle_eta(make("heisenberg(3)")) == 5);
    CHECK(oracle_eta(make("cyclic(16)")) == 1);
}

TEST_CASE("sampled normal subgroups") {
    FiniteGroup c8 = make("cyclic(8)");
    auto subs = sample_normal_subgroups(c8);
    // every subgroup of C_8 shows up (they are all cyclic closures)
    std::set<std::size_t> sizes;
    for (const Subgroup& s : subs) sizes.insert(s.size());
    CHECK(sizes == std::set<std::size_t>{1, 2, 4, 8});

    FiniteGroup q8 = make("quaternion(8)");
    auto nq = sample_normal_subgroups(q8);
    CHECK(std::any_of(nq.begin(), nq.end(), [](const Subgroup& s) {
        return s.elements == std::vector<ElementId>{0, 2};
    }));
    for (const Subgroup& s : nq) CHECK(is_normal(q8, s));

    // non-nilpotent input is fine here: the descent just stops
    FiniteGroup s3 = make("dihedral(6)");
    for (const Subgroup& s : sample_normal_subgroups(s3)) CHECK(is_normal(s3, s));
}

TEST_CASE("unknown suite names are rejected with the valid list") {
    Catalog cat = default_catalog(8, {2});
    CHECK_THROWS_WITH_AS(run_suite("bogus", cat),
                         doctest::Contains("formula-abelian"), UsageError);
}

TEST_CASE("every suite runs green on a small catalog and records skips") {
    Catalog cat = default_catalog(64, {2, 3});
    for (const std::string& name : suite_names()) {
        Report rep = run_suite(name, cat);
        CHECK(rep.suite == name);
        CHECK(rep.failed() == 0);
        CHECK(rep.passed() > 0);
        CHECK(rep.passed() + rep.failed() + rep.skipped() == rep.checks.size());
        if (name != "gp-minimum")  // grid-based, not per-entry
            CHECK(rep.checks.size() >= cat.entries().size());
        for (const CheckRecord& c : rep.checks)
            if (c.status == CheckRecord::Status::Skip) CHECK_FALSE(c.reason.empty());
    }
}

TEST_CASE("suites skip out-of-scope entries rather than dropping them") {
    Catalog cat = default_catalog(32, {2});
    Report families = run_suite("eta-families", cat);
    bool cyclic_skipped = false;
    for (const CheckRecord& c : families.checks)
        if (c.spec == "cyclic(8)") {
            CHECK(c.status == CheckRecord::Status::Skip);
            cyclic_skipped = true;
        }
    CHECK(cyclic_skipped);

    Report odd = run_suite("odd-bound", cat);
    CHECK(odd.passed() == 0);  // everything here is a 2-group
    CHECK(odd.skipped() == odd.checks.size());
}

TEST_CASE("formula-abelian checks eta against g_p") {
    Catalog cat = default_catalog(64, {2});
    Report rep = run_suite("formula-abelian", cat);
    CHECK(rep.failed() == 0);
    bool found = false;
    for (const CheckRecord& c : rep.checks) {
        if (c.spec == "product(cyclic(4),cyclic(2))") {
            found = true;
            CHECK(c.status == CheckRecord::Status::Pass);
            CHECK(c.lhs == Rat(4));
            CHECK(c.rhs == Rat(4));
            CHECK(c.a == 2);
            CHECK(c.b == 1);
        }
    }
    CHECK(found);
}

TEST_CASE("reports serialize deterministically") {
    Catalog cat1 = default_catalog(48, {2, 3});
    Catalog cat2 = default_catalog(48, {2, 3});
    Report r1 = run_suite("main-theorem", cat1);
    Report r2 = run_suite("main-theorem", cat2);
    CHECK(report_to_json(r1) == report_to_json(r2));
    CHECK(report_to_csv(r1) == report_to_csv(r2));
    CHECK(report_to_human(r1) == report_to_human(r2));
}

TEST_CASE("report JSON round-trips") {
    Catalog cat = default_catalog(32, {2});
    for (const std::string& name : {std::string("oracle-cross"), std::string("lemma-orders"),
                                    std::string("gp-minimum")}) {
        Report rep = run_suite(name, cat);
        const std::string text = report_to_json(rep);
        Report back = report_from_json(text);
        CHECK(report_to_json(back) == text);
    }
}

TEST_CASE("report CSV carries the pinned header and quotes product specs") {
    Catalog cat = default_catalog(16, {2});
    const std::string csv = report_to_csv(run_suite("main-theorem", cat));
    CHECK(csv.rfind("spec,p,n,l,eta,bound_num,bound_den,pass\n", 0) == 0);
    CHECK(csv.find("\"product(cyclic(4),cyclic(2))\"") != std::string::npos);
}

TEST_CASE("quotient and center suites on a small catalog") {
    Catalog cat = default_catalog(32, {2, 3});
    Report q = run_suite("quotient-monotone", cat);
    CHECK(q.failed() == 0);
    CHECK(q.passed() == cat.entries().size());
    Report z = run_suite("center-bound", cat);
    CHECK(z.failed() == 0);
    CHECK(z.passed() == cat.entries().size());
}

TEST_CASE("oracle-cross records elementwise shortcut agreement") {
    Catalog cat = default_catalog(27, {3});
    Report rep = run_suite("oracle-cross", cat);
    CHECK(rep.failed() == 0);
    for (const CheckRecord& c : rep.checks) {
        CHECK(c.status == CheckRecord::Status::Pass);
        CHECK(c.reason == "shortcut agrees elementwise");
    }
}
