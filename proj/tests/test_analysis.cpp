#include <algorithm>
#include <random>
#include <string>

#include "doctest.h"
#include "superschur/analysis.hpp"
#include "superschur/catalog.hpp"
#include "superschur/random_basis.hpp"

using namespace superschur;

namespace {

bool contains_key(const std::vector<std::string>& v, const std::string& k) {
    return std::find(v.begin(), v.end(), k) != v.end();
}

}  // namespace

TEST_CASE("fingerprint is unchanged under a change of homogeneous basis") {
    LieSuperalgebra L = catalog_build("L_{2,2}^{(10)}");
    Fingerprint fp = fingerprint(L);
    Mat s_even = Mat::identity(2);
    s_even.at(0, 1) = Rat(7);  // a' = a + 7 b
    Mat s_odd = Mat::identity(2);
    s_odd.at(1, 0) = rat(-2, 3);
    LieSuperalgebra M = L.change_basis(s_even, s_odd);
    CHECK(fingerprint(M) == fp);
}

TEST_CASE("fingerprint survives 10 randomized parity-preserving changes per entry") {
    std::mt19937_64 rng(seed_from_env());
    for (const auto& e : catalog_list()) {
        LieSuperalgebra L = catalog_build(e.key);
        Fingerprint fp = fingerprint(L);
        CAPTURE(e.key);
        for (int trial = 0; trial < 10; ++trial) {
            LieSuperalgebra M = random_parity_change(L, rng);
            CHECK(fingerprint(M) == fp);
        }
    }
}

TEST_CASE("fingerprints separate the small catalog entries") {
    Fingerprint a = fingerprint(catalog_build("L_{1,2}^{(1)}"));
    Fingerprint b = fingerprint(catalog_build("L_{1,2}^{(3)}"));
    Fingerprint c = fingerprint(catalog_build("L_{1,3}^{(5)}"));
    CHECK_FALSE(a == b);
    CHECK_FALSE(a == c);
    CHECK_FALSE(b == c);
    std::string s = format_fingerprint(a);
    CHECK(s.find("dims (1|2)") != std::string::npos);
}

TEST_CASE("classification places L_{1,2}^{(2)} in bucket 2 beside its twins") {
    ClassifyResult res = classify_maximal_class(catalog_build("L_{1,2}^{(2)}"));
    CHECK(res.bucket == 2);
    CHECK(res.bucket_entries ==
          std::vector<std::string>{"L_{1,2}^{(1)}", "L_{1,2}^{(2)}", "L_{1,2}^{(3)}"});
    // (1) and (2) share every computed invariant; (3) differs in parity split.
    CHECK(contains_key(res.fingerprint_matches, "L_{1,2}^{(1)}"));
    CHECK(contains_key(res.fingerprint_matches, "L_{1,2}^{(2)}"));
    CHECK_FALSE(contains_key(res.fingerprint_matches, "L_{1,2}^{(3)}"));
}

TEST_CASE("classification of E^{22} lands in the computed bucket, not the published one") {
    ClassifyResult res = classify_maximal_class(catalog_build("E^{22}"));
    CHECK(res.bucket == 8);  // computed s; the tables file it under 5
    CHECK(contains_key(res.bucket_entries, "(D^{15}+A_{1,1})^2"));
    CHECK(contains_key(res.bucket_entries, "(D^{15}+A_{1,1})^4"));
    CHECK_FALSE(contains_key(res.bucket_entries, "E^{22}"));
    CHECK(res.fingerprint_matches.empty());
    // A divergence note names the entry and both buckets.
    bool found = false;
    for (const auto& note : res.notes)
        found = found || (note.find("E^{22}") != std::string::npos &&
                          note.find("5") != std::string::npos &&
                          note.find("8") != std::string::npos);
    CHECK(found);
}

TEST_CASE("classification of a matching entry carries no divergence note about itself") {
    ClassifyResult res = classify_maximal_class(catalog_build("L_{2,2}^{(10)}"));
    CHECK(res.bucket == 5);
    CHECK(contains_key(res.bucket_entries, "L_{2,2}^{(10)}"));
    CHECK(contains_key(res.fingerprint_matches, "L_{2,2}^{(10)}"));
    for (const auto& note : res.notes) CHECK(note.find("L_{2,2}^{(10)}") == std::string::npos);
}

TEST_CASE("classification preconditions throw named errors") {
    CHECK_THROWS_WITH_AS(classify_maximal_class(catalog_build("A")),
                         doctest::Contains("non-abelian"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(classify_maximal_class(catalog_build("L_{3,1}^{(1)}")),
                         doctest::Contains("nilpotent"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(classify_maximal_class(catalog_build("H(0,1)")),
                         doctest::Contains("maximal class"), std::invalid_argument);
    // A maximal-class chain of total dimension 6 is out of the table range.
    LieSuperalgebra big = LieSuperalgebra::from_table(
        "E^{25}-like", {"a"}, {"al1", "al2", "al3", "al4", "al5"},
        {{"a", "al1", {{"al2", Rat(1)}}},
         {"a", "al2", {{"al3", Rat(1)}}},
         {"a", "al3", {{"al4", Rat(1)}}},
         {"a", "al4", {{"al5", Rat(1)}}}});
    REQUIRE(big.validate().ok());
    REQUIRE(big.is_maximal_class());
    CHECK_THROWS_WITH_AS(classify_maximal_class(big), doctest::Contains("dimension"),
                         std::invalid_argument);
}

TEST_CASE("capability-candidate shape: computed vs claimed disagree on the mismatches") {
    // L_{2,2}^{(9)}: published dim 2 = m+n-2 makes it a claimed candidate,
    // but the computed multiplier has dim 1.
    PredicateResult p9 = capability_candidate_predicate(catalog_build("L_{2,2}^{(9)}"), 2);
    CHECK(p9.target == 2);
    CHECK(p9.derived_total == 2);
    CHECK(p9.mult_total == 1);
    CHECK_FALSE(p9.computed_verdict);
    REQUIRE(p9.claimed_verdict.has_value());
    CHECK(*p9.claimed_verdict);
    CHECK(contains_key(p9.candidate_set, "L_{2,2}^{(9)}"));
    CHECK(contains_key(p9.candidate_set, "3A_{1,1}+2A"));
    CHECK(contains_key(p9.candidate_set, "(D^{15}+A_{1,1})^3"));

    PredicateResult p3a = capability_candidate_predicate(catalog_build("3A_{1,1}+2A"), 3);
    CHECK_FALSE(p3a.computed_verdict);
    CHECK(*p3a.claimed_verdict);

    PredicateResult pd3 = capability_candidate_predicate(catalog_build("(D^{15}+A_{1,1})^3"), 3);
    CHECK_FALSE(pd3.computed_verdict);
    CHECK(*pd3.claimed_verdict);
}

TEST_CASE("capability-candidate shape is denied off the candidate profile") {
    CHECK_FALSE(capability_candidate_predicate(catalog_build("A")).computed_verdict);
    CHECK_FALSE(capability_candidate_predicate(catalog_build("H(1,0)")).computed_verdict);
    CHECK_FALSE(capability_candidate_predicate(catalog_build("L_{3,1}^{(1)}")).computed_verdict);
    PredicateResult plain = capability_candidate_predicate(catalog_build("L_{1,2}^{(1)}"));
    CHECK_FALSE(plain.computed_verdict);
    CHECK_FALSE(plain.claimed_verdict.has_value());
    CHECK(plain.candidate_set.empty());
}

TEST_CASE("capability: an injective candidate settles not capable") {
    CapabilityReport rep = capability_report(catalog_build("L_{2,2}^{(9)}"));
    CHECK(rep.center_even == 2);
    CHECK(rep.center_odd == 0);
    REQUIRE(rep.candidates.size() == 2);
    for (const auto& c : rep.candidates) {
        CHECK(c.injective);
        CHECK(c.identity_ok);
        CHECK(c.source_dim == 1);
        CHECK(c.target_dim == 2);
        CHECK(c.meet_derived_dim == 1);
    }
    CHECK(rep.conclusion == "not capable");
}

TEST_CASE("capability: the computed multiplier puts (D^{15}+A_{1,1})^3 in the epicenter") {
    CapabilityReport rep = capability_report(catalog_build("(D^{15}+A_{1,1})^3"));
    REQUIRE(rep.candidates.size() == 1);
    CHECK(rep.candidates[0].injective);
    CHECK(rep.candidates[0].source_dim == 2);
    CHECK(rep.candidates[0].target_dim == 3);
    CHECK(rep.conclusion == "not capable");
}

TEST_CASE("capability: exhaustive non-injectivity yields no obstruction") {
    CapabilityReport h = capability_report(catalog_build("H(1,0)"));
    REQUIRE(h.candidates.size() == 1);
    CHECK_FALSE(h.candidates[0].injective);
    CHECK(h.candidates[0].kernel_dim == 2);
    CHECK(h.exhaustive);
    CHECK(h.conclusion == "no obstruction found");

    CapabilityReport e = capability_report(catalog_build("E^{22}"));
    CHECK(e.exhaustive);
    CHECK(e.conclusion == "no obstruction found");
}

TEST_CASE("capability: a wide center without obstruction stays inconclusive") {
    CapabilityReport rep = capability_report(catalog_build("3A_{1,1}+2A"));
    CHECK(rep.center_even == 3);
    CHECK_FALSE(rep.exhaustive);
    for (const auto& c : rep.candidates) CHECK_FALSE(c.injective);
    CHECK(rep.conclusion == "inconclusive");
}

TEST_CASE("capability rejects non-central and inhomogeneous extra candidates") {
    LieSuperalgebra L = catalog_build("3A_{1,1}+2A");
    RatVec noncentral(L.dim());
    noncentral[*L.index_of("al")] = Rat(1);
    CHECK_THROWS_WITH_AS(capability_report(L, {noncentral}), doctest::Contains("central"),
                         std::invalid_argument);
    RatVec mixed(L.dim());
    mixed[*L.index_of("a")] = Rat(1);
    mixed[*L.index_of("al")] = Rat(1);
    CHECK_THROWS_WITH_AS(capability_report(L, {mixed}), doctest::Contains("homogeneous"),
                         std::invalid_argument);
    RatVec short_vec(2);
    CHECK_THROWS_WITH_AS(capability_report(L, {short_vec}), doctest::Contains("length"),
                         std::invalid_argument);
}

TEST_CASE("capability accepts extra central combinations and reports them") {
    LieSuperalgebra L = catalog_build("3A_{1,1}+2A");
    RatVec combo(L.dim());
    combo[*L.index_of("a")] = Rat(1);
    combo[*L.index_of("b")] = Rat(-1);
    CapabilityReport rep = capability_report(L, {combo});
    CHECK(rep.candidates.size() == 4);  // 3 center directions + 1 extra
    const CandidateOutcome& extra = rep.candidates.back();
    CHECK(extra.parity == Parity::even);
    CHECK_FALSE(extra.injective);
    std::string text = format_capability_report(L, rep);
    CHECK(text.find("conclusion: inconclusive") != std::string::npos);
}
