#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "uccone/cone.hpp"
#include "uccone/witness.hpp"

using namespace uccone;

namespace {

SubsetMask s(const char* label) { return SubsetMask::parse(label, 16); }

bool has_generator(const std::vector<CoverInequality>& list, const UniformCover& c) {
    return std::any_of(list.begin(), list.end(), [&](const CoverInequality& g) { return g.cover == c; });
}

ProjectionVector random_vector(int n, std::mt19937_64& rng) {
    ProjectionVector v(n);
    for (SubsetMask a : canonical_subset_order(n)) v[a] = oracle::random_rational(rng, 4, 6);
    return v;
}

}  // namespace

TEST_CASE("small systems") {
    CHECK(build_bt_system(1).generators.empty());

    ConeSystem two = build_bt_system(2);
    REQUIRE(two.generators.size() == 1);
    CHECK(two.generators[0].to_string() == "1*{1} + 1*{2} >= 1*{1,2}");

    ConeSystem three = build_bt_system(3);
    CHECK(has_generator(three.generators, triangle_cover(s("1,2,3"))));
    CHECK(three.generators.size() == 3 * 1 + 5);
    CHECK(build_bt_system(4).generators.size() == 6 * 1 + 4 * 5 + 41);
}

TEST_CASE("system guard") {
    CHECK_THROWS_AS(build_bt_system(7), std::invalid_argument);
    CHECK_THROWS_AS(build_bt_system(0), std::invalid_argument);
}

TEST_CASE("coefficients are integral with multiplicity") {
    UniformCover c = UniformCover::make(s("1,2"), {s("1,2"), s("1"), s("2")}, 2);
    auto coeffs = CoverInequality{c}.coefficients(2);
    CHECK(coeffs == std::vector<Integer>{1, 1, -1});
    UniformCover dup = UniformCover::make(s("1,2"), {s("1,2"), s("1,2")}, 2);
    CHECK(CoverInequality{dup}.coefficients(2) == std::vector<Integer>{0, 0, 0});
}

TEST_CASE("membership examples") {
    ConeSystem sys2 = build_bt_system(2);
    MembershipReport zero = membership(sys2, ProjectionVector(2));
    CHECK(zero.inside);
    CHECK(zero.tight.size() == sys2.generators.size());

    ProjectionVector bad(2);
    bad[s("1,2")] = 1;
    MembershipReport r = membership(sys2, bad);
    CHECK_FALSE(r.inside);
    REQUIRE(r.violated.size() == 1);
    CHECK(r.violated[0].to_string() == "1*{1} + 1*{2} >= 1*{1,2}");

    CHECK_THROWS_AS(membership(sys2, ProjectionVector(3)), std::invalid_argument);

    ConeSystem sys4 = build_bt_system(4);
    MembershipReport w = membership(sys4, closure_witness_vector(4));
    CHECK(w.inside);
    CHECK(has_generator(w.tight, triangle_cover(s("1,2,3"))));
    CHECK(has_generator(w.tight, triangle_cover(s("2,3,4"))));
}

TEST_CASE("membership is invariant under positive scaling") {
    ConeSystem sys = build_bt_system(3);
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        ProjectionVector v = random_vector(3, rng);
        Rational q = Rational(1 + trial % 7, 1 + trial % 5);
        CHECK(membership(sys, v).inside == membership(sys, q * v).inside);
    }
}

TEST_CASE("adding reducible cover inequalities never changes membership") {
    ConeSystem sys = build_bt_system(3);
    ConeSystem extended = sys;
    for (SubsetMask y : canonical_subset_order(3)) {
        for (const auto& c : enumerate_covers(y, 3)) {
            if (!c.trivial() && decompose(c)) extended.generators.push_back(CoverInequality{c});
        }
    }
    REQUIRE(extended.generators.size() > sys.generators.size());
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 300; ++trial) {
        ProjectionVector v = random_vector(3, rng);
        CHECK(membership(sys, v).inside == membership(extended, v).inside);
    }
}

TEST_CASE("strict interior and H-representation") {
    ConeSystem sys = build_bt_system(3);
    CHECK_FALSE(strictly_inside(sys, ProjectionVector(3)));
    CHECK(strictly_inside(sys, ProjectionVector::constant(3, 1)));
    std::string h = h_representation(sys);
    CHECK(std::count(h.begin(), h.end(), '\n') == static_cast<long>(sys.generators.size()));
    CHECK(h.find("1*{1,2} + 1*{1,3} + 1*{2,3} >= 2*{1,2,3}") != std::string::npos);
}
