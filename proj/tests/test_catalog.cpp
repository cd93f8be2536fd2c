#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "superschur/catalog.hpp"
#include "superschur/invariants.hpp"

using namespace superschur;

TEST_CASE("the catalog lists every published algebra, in table order") {
    std::vector<std::string> expected{
        "L_{1,2}^{(1)}",      "L_{1,2}^{(2)}",      "L_{1,2}^{(3)}",
        "L_{1,3}^{(5)}",      "L_{2,2}^{(9)}",      "L_{2,2}^{(10)}",
        "L_{2,2}^{(11)}",     "L_{2,2}^{(12)}",     "E^{22}",
        "3A_{1,1}+2A",        "(D^{15}+A_{1,1})^1", "(D^{15}+A_{1,1})^2",
        "(D^{15}+A_{1,1})^3", "(D^{15}+A_{1,1})^4", "L_{3,1}^{(1)}",
        "H(1,0)",             "H(0,1)",             "A",
        "H(1,0)+A",
    };
    std::vector<std::string> got;
    for (const auto& e : catalog_list()) got.push_back(e.key);
    CHECK(got == expected);
}

TEST_CASE("catalog_find returns entries by key and null for strangers") {
    const CatalogEntry* e = catalog_find("E^{22}");
    REQUIRE(e);
    CHECK(e->claimed_dim == 6u);
    REQUIRE(e->claimed_type.has_value());
    CHECK(e->claimed_type->first == 5);
    CHECK(e->claimed_type->second == 1);
    CHECK(catalog_find("E^{23}") == nullptr);
}

TEST_CASE("every catalog algebra satisfies the graded axioms") {
    for (const auto& e : catalog_list()) {
        CAPTURE(e.key);
        CHECK(catalog_build(e.key).validate().ok());
    }
}

TEST_CASE("published claims are internally consistent: bucket = offset - dim") {
    for (const auto& e : catalog_list()) {
        if (!e.claimed_s_bucket || !e.claimed_dim) continue;
        LieSuperalgebra L = catalog_build(e.key);
        CAPTURE(e.key);
        CHECK(static_cast<long>(*e.claimed_s_bucket) ==
              s_offset(L.m(), L.n()) - static_cast<long>(*e.claimed_dim));
    }
}

TEST_CASE("claimed dims agree with claimed types where both are published") {
    for (const auto& e : catalog_list()) {
        if (!e.claimed_dim || !e.claimed_type) continue;
        CAPTURE(e.key);
        CHECK(*e.claimed_dim == e.claimed_type->first + e.claimed_type->second);
    }
}

TEST_CASE("the classified tables hold nilpotent non-abelian maximal-class algebras") {
    for (const auto& e : catalog_list()) {
        if (!e.claimed_s_bucket) continue;  // only the classified entries
        LieSuperalgebra L = catalog_build(e.key);
        CAPTURE(e.key);
        CHECK(L.is_nilpotent());
        CHECK_FALSE(L.is_abelian());
        CHECK(L.is_maximal_class());
        CHECK(L.m() + L.n() >= 3);
        CHECK(L.m() + L.n() <= 5);
    }
}

TEST_CASE("the dim-2 multiplier claim is attached to a non-nilpotent algebra") {
    const CatalogEntry* e = catalog_find("L_{3,1}^{(1)}");
    REQUIRE(e);
    CHECK(e->claimed_dim == 2u);
    CHECK_FALSE(e->claimed_s_bucket.has_value());
    CHECK(e->source.find("prose") != std::string::npos);
    LieSuperalgebra L = catalog_build("L_{3,1}^{(1)}");
    CHECK_FALSE(L.is_nilpotent());
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(catalog_build("no-such-algebra"), std::invalid_argument);
    CHECK_THROWS_AS(catalog_build("L_{2,2}^{(11)}", {.p = Rat(0)}), std::invalid_argument);
    CHECK_THROWS_AS(catalog_build("L_{2,2}^{(11)}", {.p = Rat(-2)}), std::invalid_argument);
    CHECK_THROWS_AS(catalog_build("L_{2,2}^{(12)}", {.p = rat(-1, 3)}), std::invalid_argument);
    CHECK_THROWS_AS(catalog_build("H(1,0)+A", {.m = 2, .n = 5}), std::invalid_argument);
    CHECK_THROWS_AS(catalog_build("A", {.m = 0, .n = 0}), std::invalid_argument);
    CHECK_NOTHROW(catalog_build("H(1,0)+A", {.m = 3, .n = 0}));
    CHECK_NOTHROW(catalog_build("L_{2,2}^{(11)}", {.p = rat(7, 5)}));
}

TEST_CASE("non-parametric entries ignore p and use their fixed dims") {
    LieSuperalgebra a = catalog_build("L_{1,2}^{(1)}");
    LieSuperalgebra b = catalog_build("L_{1,2}^{(1)}", {.p = Rat(9)});
    CHECK(a.stored_brackets() == b.stored_brackets());
}

TEST_CASE("default dims for the families") {
    LieSuperalgebra A = catalog_build("A");
    CHECK(A.m() == 2);
    CHECK(A.n() == 2);
    LieSuperalgebra HA = catalog_build("H(1,0)+A");
    CHECK(HA.m() == 4);
    CHECK(HA.n() == 1);
}

TEST_CASE("parameter scan flags the exceptional point of L_{2,2}^{(11)} only") {
    std::vector<Rat> values{rat(1, 4), rat(1, 3), rat(1, 2), Rat(1), Rat(2), Rat(3)};
    auto rows11 = parameter_scan("L_{2,2}^{(11)}", values);
    REQUIRE(rows11.size() == values.size());
    int flagged = 0;
    for (const auto& r : rows11) {
        if (r.exceptional) {
            ++flagged;
            CHECK(r.p == rat(1, 2));
            CHECK(r.even == 1);
            CHECK(r.odd == 1);
        } else {
            CHECK(r.even == 1);
            CHECK(r.odd == 0);
        }
    }
    CHECK(flagged == 1);

    for (const auto& r : parameter_scan("L_{2,2}^{(12)}", values)) {
        CHECK_FALSE(r.exceptional);
        CHECK(r.even == 1);
        CHECK(r.odd == 0);
    }
}

TEST_CASE("parameter scan rejects non-parametric keys") {
    CHECK_THROWS_AS(parameter_scan("H(1,0)", {Rat(1)}), std::invalid_argument);
    CHECK_THROWS_AS(parameter_scan("nope", {Rat(1)}), std::invalid_argument);
}

TEST_CASE("bracket tables match the published structure constants spot-checks") {
    // E^{22}: [a, al] = be, [a, be] = ga, [a, ga] = de, nothing else.
    LieSuperalgebra E = catalog_build("E^{22}");
    auto idx = [&](const char* nm) { return *E.index_of(nm); };
    CHECK(E.bracket_basis(idx("a"), idx("al"))[idx("be")] == Rat(1));
    CHECK(E.bracket_basis(idx("a"), idx("be"))[idx("ga")] == Rat(1));
    CHECK(E.bracket_basis(idx("a"), idx("ga"))[idx("de")] == Rat(1));
    CHECK(is_zero_vec(E.bracket_basis(idx("al"), idx("al"))));
    CHECK(is_zero_vec(E.bracket_basis(idx("a"), idx("de"))));

    // (D^{15}+A_{1,1})^4 differs from ^3 only in the sign of [ga, ga].
    LieSuperalgebra d3 = catalog_build("(D^{15}+A_{1,1})^3");
    LieSuperalgebra d4 = catalog_build("(D^{15}+A_{1,1})^4");
    auto i3 = [&](const char* nm) { return *d3.index_of(nm); };
    CHECK(d3.bracket_basis(i3("ga"), i3("ga"))[i3("b")] == Rat(1));
    CHECK(d4.bracket_basis(i3("ga"), i3("ga"))[i3("b")] == Rat(-1));
    CHECK(d3.bracket_basis(i3("al"), i3("ga"))[i3("b")] == Rat(-1));

    // L_{2,2}^{(11)} at p: [al, be] = p a + p b.
    LieSuperalgebra L11 = catalog_build("L_{2,2}^{(11)}", {.p = rat(2, 3)});
    auto i11 = [&](const char* nm) { return *L11.index_of(nm); };
    RatVec v = L11.bracket_basis(i11("al"), i11("be"));
    CHECK(v[i11("a")] == rat(2, 3));
    CHECK(v[i11("b")] == rat(2, 3));
}

TEST_CASE("every entry key builds the algebra whose name matches the key") {
    for (const auto& e : catalog_list()) {
        LieSuperalgebra L = catalog_build(e.key);
        CAPTURE(e.key);
        // Families append their dims; fixed entries keep the key verbatim.
        if (e.takes_mn)
            CHECK(L.name().find('(') != std::string::npos);
        else
            CHECK(L.name() == e.key);
    }
}
