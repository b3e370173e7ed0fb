#include <doctest.h>

#include <stdexcept>

#include "clawfree/catalog.hpp"
#include "clawfree/detect.hpp"
#include "clawfree/harness.hpp"

using namespace clawfree;

TEST_CASE("labeled enumeration") {
    LabeledEnumerator e3(3);
    CHECK(e3.total() == 8);
    CHECK(LabeledEnumerator(6).total() == 32768);
    CHECK(e3.at(0) == Graph(3));
    CHECK(e3.at(7) == catalog::k3());
    CHECK_THROWS_AS(LabeledEnumerator(10), std::invalid_argument);
}

TEST_CASE("property names round-trip") {
    for (const auto& name : property_names())
        CHECK(property_name(property_from_name(name)) == name);
    CHECK_THROWS_AS(property_from_name("bogus"), std::invalid_argument);
}

TEST_CASE("exhaustive sweeps at n=5 are clean") {
    for (const char* name : {"theorem1", "formula1", "theorem2", "lemma_trivial",
                             "caseanalysis", "claims", "thm2_consequences"}) {
        VerificationReport rep = verify(property_from_name(name), 5, {});
        CHECK_MESSAGE(rep.checked == 1024, name);
        CHECK_MESSAGE(rep.mismatches.empty(), name);
    }
}

TEST_CASE("serial and parallel sweeps produce identical reports") {
    VerifyOptions par{std::nullopt, 0, 3};
    CHECK(verify_serial(Property::Theorem1, 5, {}).same_outcome(
        verify(Property::Theorem1, 5, par)));

    VerifyOptions sampled{std::uint64_t{2000}, 99, 3};
    VerifyOptions sampled_serial{std::uint64_t{2000}, 99, 1};
    CHECK(verify_serial(Property::Theorem1, 8, sampled_serial).same_outcome(
        verify(Property::Theorem1, 8, sampled)));
    CHECK(verify_serial(Property::LemmaGGU, 6, sampled_serial).same_outcome(
        verify(Property::LemmaGGU, 6, sampled)));
}

TEST_CASE("sampling is deterministic in the seed") {
    VerifyOptions a{std::uint64_t{500}, 42, 2};
    VerifyOptions b{std::uint64_t{500}, 42, 4};
    CHECK(verify(Property::Claims, 8, a).same_outcome(verify(Property::Claims, 8, b)));
    VerifyOptions c{std::uint64_t{500}, 43, 2};
    VerificationReport ra = verify(Property::Theorem1, 8, a);
    VerificationReport rc = verify(Property::Theorem1, 8, c);
    CHECK(ra.seed != rc.seed);
}

TEST_CASE("sample masks stay inside the edge-bit range") {
    for (std::uint64_t i = 0; i < 1000; ++i)
        CHECK(sample_mask(7, i, 15) < (1ull << 15));
}

TEST_CASE("guards") {
    CHECK_THROWS_AS(verify(Property::Theorem1, 8, {}), std::invalid_argument);
    CHECK_THROWS_AS(verify(Property::LemmaGGU, 5, {}), std::invalid_argument);
    CHECK_THROWS_AS(verify(Property::Theorem1, 10, {}), std::invalid_argument);
    CHECK_THROWS_AS(check_property(Property::LemmaGGU, Graph(3)),
                    std::invalid_argument);
}

TEST_CASE("caseanalysis at n=5 sees only bulls") {
    // every class member on 5 vertices with a triangle and a co-triangle is a bull
    for (std::uint64_t mask = 0; mask < 1024; ++mask) {
        Graph u = Graph::from_edge_mask(5, mask);
        if (!is_forb_bruteforce(u) || !has_triangle(u) || !has_cotriangle(u)) continue;
        CHECK(is_isomorphic(u, catalog::b5()).has_value());
    }
}
