#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "etalab/builders.hpp"
#include "etalab/harness.hpp"
#include "etalab/series.hpp"

using namespace etalab;

namespace {

FiniteGroup make(const std::string& s) { return realize(parse_spec(s)); }

std::vector<std::uint64_t> series_orders(const FiniteGroup& g) {
    std::vector<std::uint64_t> out;
    for (const Subgroup& t : lower_central_series(g).terms) out.push_back(t.size());
    return out;
}

}  // namespace

TEST_CASE("commutator subgroups") {
    FiniteGroup ab = make("product(cyclic(8),cyclic(4))");
    CHECK(commutator_subgroup(ab, whole_group(ab), whole_group(ab)).size() == 1);

    FiniteGroup d8 = make("dihedral(8)");
    Subgroup d = commutator_subgroup(d8, whole_group(d8), whole_group(d8));
    CHECK(d.elements == std::vector<ElementId>{0, 2});  // <r^2>

    FiniteGroup q8 = make("quaternion(8)");
    Subgroup q = commutator_subgroup(q8, whole_group(q8), whole_group(q8));
    CHECK(q.elements == std::vector<ElementId>{0, 2});  // {1, a^2}
}

TEST_CASE("lower central series") {
    CHECK(lower_central_series(make("cyclic(8)")).nilpotence_class == 1);
    CHECK(series_orders(make("cyclic(8)")) == std::vector<std::uint64_t>{8, 1});
    CHECK(series_orders(make("dihedral(16)")) == std::vector<std::uint64_t>{16, 4, 2, 1});
    CHECK(series_orders(make("heisenberg(3)")) == std::vector<std::uint64_t>{27, 3, 1});
    CHECK(lower_central_series(make("cyclic(1)")).nilpotence_class == 0);
}

TEST_CASE("non-nilpotent input is detected") {
    // dihedral(6) is S_3: the descent stabilizes at <r>
    CHECK_THROWS_WITH_AS(lower_central_series(make("dihedral(6)")),
                         doctest::Contains("not nilpotent"), DomainError);
}

TEST_CASE("series terms descend, are normal, and the last one is central") {
    for (const char* s : {"dihedral(32)", "quaternion(32)", "semidihedral(32)",
                          "heisenberg(3)", "modular(2,5)", "modular(3,4)",
                          "product(dihedral(8),cyclic(4))"}) {
        FiniteGroup g = make(s);
        LowerCentralSeries series = lower_central_series(g);
        REQUIRE(series.terms.front().size() == g.order());
        REQUIRE(series.terms.back().size() == 1);
        for (std::size_t i = 0; i + 1 < series.terms.size(); ++i) {
            const Subgroup& a = series.terms[i];
            const Subgroup& b = series.terms[i + 1];
            CHECK(b.size() < a.size());
            for (ElementId e : b.elements) CHECK(a.contains(e));
            CHECK(is_normal(g, a));
        }
        // G^l is central when the class is l
        const Subgroup& last = series.terms[series.nilpotence_class - 1];
        for (ElementId z : last.elements)
            for (std::uint32_t x = 0; x < g.order(); ++x)
                CHECK(g.mul(z, static_cast<ElementId>(x)) ==
                      g.mul(static_cast<ElementId>(x), z));
        // G/G^2 is abelian
        QuotientResult q = quotient(g, series.terms[1]);
        for (std::uint32_t x = 0; x < q.group.order(); ++x)
            for (std::uint32_t y = 0; y < q.group.order(); ++y)
                CHECK(q.group.commutator(static_cast<ElementId>(x),
                                         static_cast<ElementId>(y)) == 0);
    }
}

TEST_CASE("centers") {
    FiniteGroup ab = make("product(cyclic(4),cyclic(2))");
    CHECK(center(ab).size() == ab.order());
    CHECK(center(make("dihedral(8)")).elements == std::vector<ElementId>{0, 2});
    CHECK(center(make("heisenberg(3)")).size() == 3);
    // abelian groups have class 1 and center = G
    CHECK(lower_central_series(ab).nilpotence_class == 1);
}

TEST_CASE("exponents") {
    FiniteGroup c8 = make("cyclic(8)");
    CHECK(exponent(trivial_subgroup(c8)) == 1);
    FiniteGroup ab = make("product(cyclic(4),cyclic(2))");
    CHECK(exponent(whole_group(ab)) == 4);
    FiniteGroup d16 = make("dihedral(16)");
    LowerCentralSeries s = lower_central_series(d16);
    CHECK(exponent(s.terms[1]) == 4);  // G^2 = <r^2>, order 4
    CHECK(exponent(s.terms[2]) == 2);  // G^3
}

TEST_CASE("exponent bound on the last lower-central term") {
    SUBCASE("spot values") {
        // D_16: p=2, n=4, l=3: exponent(G^3)=2 divides 2^1
        BoundCheck c = check_lemma_orders(make("dihedral(16)"));
        CHECK(c.pass);
        CHECK(c.lhs == Rat(2));
        CHECK(c.rhs == Rat(2));
        CHECK(c.context.l == 3);
        // heisenberg(3): p=3, n=3, l=2: exponent(G^2)=3 divides 3^1
        c = check_lemma_orders(make("heisenberg(3)"));
        CHECK(c.pass);
        CHECK(c.lhs == Rat(3));
        CHECK(c.rhs == Rat(3));
        // Q_8: p=2, n=3, l=2: exponent(G^2)=2 divides 2^1
        c = check_lemma_orders(make("quaternion(8)"));
        CHECK(c.pass);
        CHECK(c.lhs == Rat(2));
        CHECK(c.rhs == Rat(2));
    }
    SUBCASE("preconditions") {
        CHECK_THROWS_AS(check_lemma_orders(make("cyclic(8)")), DomainError);
        CHECK_THROWS_AS(check_lemma_orders(make("product(cyclic(4),cyclic(4))")),
                        DomainError);
        CHECK_THROWS_AS(check_lemma_orders(make("dihedral(6)")), DomainError);
    }
    SUBCASE("holds across the catalog") {
        Catalog cat = default_catalog(128, {2, 3, 5});
        for (std::size_t i = 0; i < cat.entries().size(); ++i) {
            const EntryAnalysis& a = cat.analyze(i);
            if (a.nilpotence_class < 2) continue;
            CHECK(check_lemma_orders(cat.realize_entry(i)).pass);
        }
    }
}
