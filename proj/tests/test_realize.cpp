#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "uccone/io.hpp"
#include "uccone/realize.hpp"
#include "uccone/witness.hpp"

using namespace uccone;
namespace bmp = boost::multiprecision;

namespace {

SubsetMask s(const char* label) { return SubsetMask::parse(label, 16); }

const Real kLog2 = bmp::log(Real(2));

bool close(const Real& a, const Real& b, const Real& tol = Real("1e-25")) { return bmp::abs(a - b) <= tol; }

}  // namespace

TEST_CASE("interior shift") {
    ConeSystem sys = build_bt_system(2);
    ProjectionVector w = interior_shift(sys, ProjectionVector(2), 1);
    CHECK(w == ProjectionVector::constant(2, 1));
    CHECK(sys.generators[0].slack(w) == 1);
    CHECK_THROWS_AS(interior_shift(sys, ProjectionVector(2), 0), std::invalid_argument);
    ProjectionVector outside(2);
    outside[s("1,2")] = 1;
    CHECK_THROWS_AS(interior_shift(sys, outside, 1), std::invalid_argument);

    ConeSystem sys4 = build_bt_system(4);
    const Rational eps(1, 10);
    ProjectionVector v = closure_witness_vector(4);
    ProjectionVector shifted = interior_shift(sys4, v, eps);
    CHECK(strictly_inside(sys4, shifted));
    for (const CoverInequality& g : sys4.generators) {
        const int l = static_cast<int>(g.cover.parts.size());
        CHECK(g.slack(shifted) - g.slack(v) == Rational(l - g.cover.k) * eps);
    }
}

TEST_CASE("box system on two elements") {
    // y = (e^2/2, e^2/2, e^2) in log space.
    std::vector<Real> target = {Real(2) - kLog2, Real(2) - kLog2, Real(2)};
    BoxSystem sys = solve_box_system(s("1,2"), target);
    CHECK(close(sys.solution(s("1")), 1));
    CHECK(close(sys.solution(s("2")), 1));
    CHECK(close(sys.solution(s("1,2")), 2));
    CHECK(sys.product_gap < Real("1e-25"));
    CHECK(sys.target(s("1,2")) == 2);
}

TEST_CASE("box system on one element") {
    std::vector<Real> target = {Real(3)};
    BoxSystem sys = solve_box_system(s("2"), target);
    CHECK(close(sys.solution(s("2")), 3));
}

TEST_CASE("infeasible box system") {
    std::vector<Real> target = {Real(1) - kLog2, Real(1) - kLog2, Real(1)};
    CHECK_THROWS_AS(solve_box_system(s("1,2"), target), InfeasibleSystem);
    std::vector<Real> wrong_size = {Real(1)};
    CHECK_THROWS_AS(solve_box_system(s("1,2"), wrong_size), std::invalid_argument);
}

TEST_CASE("box system solutions satisfy every constraint") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const SubsetMask ground = s("1,2,3");
    const auto covers = irreducible_covers(ground, 3);
    int solved = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const auto subsets = nonempty_subsets(ground);
        std::vector<Real> target(subsets.size());
        for (std::size_t j = 0; j < subsets.size(); ++j) target[j] = Real(8.0 * unit(rng)) + Real(subsets[j].size());
        BoxSystem sys;
        try {
            sys = solve_box_system(ground, target, covers);
        } catch (const InfeasibleSystem&) {
            continue;
        }
        ++solved;
        const Real tol("1e-25");
        for (std::size_t j = 0; j < subsets.size(); ++j) {
            CHECK(sys.solution_log[j] <= target[j] + tol);
            Real product = 0;
            for (int e : subsets[j].elements()) product += sys.solution(SubsetMask::singleton(e));
            CHECK(sys.solution_log[j] <= product + tol);
        }
        for (const auto& c : covers) {
            Real lhs = 0;
            for (SubsetMask p : c.parts) lhs += sys.solution(p);
            CHECK(lhs >= Real(c.k) * sys.target(ground) - tol);
        }
        CHECK(close(sys.solution(ground), sys.target(ground)));
        CHECK(sys.product_gap < tol);
    }
    CHECK(solved > 10);
}

TEST_CASE("realize (1,1,1) in the plane") {
    ConeSystem sys = build_bt_system(2);
    ProjectionVector v = ProjectionVector::constant(2, 1);

    RealizationOutcome at_one = realize_vector(sys, v, 1);
    CHECK(std::holds_alternative<Infeasible>(at_one));

    RealizationOutcome at_two = realize_vector(sys, v, 2);
    REQUIRE(std::holds_alternative<RealizationResult>(at_two));
    const RealizationResult& r = std::get<RealizationResult>(at_two);
    CHECK(r.max_gap <= Real("1e-6"));
    REQUIRE(r.steps.size() == 3);
    const Real e = bmp::exp(Real(1));
    CHECK(r.steps[0].support == s("1,2"));
    for (const Rational& side : r.steps[0].sides) CHECK(close(to_real(side), e, Real("1e-18")));
    CHECK(close(to_real(r.steps[1].sides[0]), e * e - e, Real("1e-18")));
    CHECK(close(to_real(r.steps[2].sides[0]), e * e - e, Real("1e-18")));

    LogProjection x = log_projection_vector(r.body);
    for (SubsetMask a : canonical_subset_order(2)) CHECK(close(x.logs[a], 2, Real("1e-6")));

    for (const Box& b : r.body.boxes()) {
        for (int e2 : b.support().elements()) CHECK(b[e2 - 1].length() > 0);
    }
}

TEST_CASE("feasibility threshold lies at log 4") {
    ConeSystem sys = build_bt_system(2);
    ProjectionVector v = ProjectionVector::constant(2, 1);
    CHECK(std::holds_alternative<Infeasible>(realize_vector(sys, v, Real("1.38"))));
    CHECK(std::holds_alternative<RealizationResult>(realize_vector(sys, v, Real("1.39"))));
}

TEST_CASE("boundary vectors are rejected") {
    ConeSystem sys = build_bt_system(2);
    CHECK_THROWS_AS(realize_vector(sys, ProjectionVector(2), 4), std::invalid_argument);
    CHECK_THROWS_AS(realize_vector(sys, ProjectionVector::constant(2, 1), 0), std::invalid_argument);
}

TEST_CASE("find_lambda") {
    ConeSystem sys2 = build_bt_system(2);
    RealizationResult r = find_lambda(sys2, ProjectionVector::constant(2, 1), Rational(1, 4), 64);
    CHECK(r.lambda == 2);

    ConeSystem sys3 = build_bt_system(3);
    RealizationResult ones = find_lambda(sys3, ProjectionVector::constant(3, 1), Rational(1, 4), 8);
    CHECK(ones.lambda <= 8);
    CHECK(ones.max_gap <= Real("1e-6"));

    ProjectionVector big = ProjectionVector::constant(2, 1);
    big *= 4;
    RealizationResult immediate = find_lambda(sys2, big, Rational(1, 4), 64);
    CHECK(immediate.lambda == 1);

    CHECK_THROWS_AS(find_lambda(sys2, ProjectionVector::constant(2, 1), Rational(1, 4), 1), RealizationInconclusive);

    RealizationResult boundary = find_lambda(sys2, ProjectionVector(2), Rational(1), 64);
    CHECK(boundary.vector == ProjectionVector::constant(2, 1));
}

TEST_CASE("realization round-trip and monotone scaling on random cone vectors") {
    ConeSystem sys = build_bt_system(3);
    std::mt19937_64 rng(31);
    int done = 0;
    while (done < 10) {
        ProjectionVector v(3);
        for (SubsetMask a : canonical_subset_order(3)) v[a] = oracle::random_rational(rng, 3, 4);
        if (!membership(sys, v).inside) continue;
        ++done;
        RealizationResult r = find_lambda(sys, v, Rational(1, 4), 64);
        LogProjection x = log_projection_vector(r.body);
        for (SubsetMask a : canonical_subset_order(3)) {
            CHECK(bmp::abs(x.logs[a] - r.lambda * to_real(r.vector[a])) <= Real("1e-6"));
        }
        CHECK(std::holds_alternative<RealizationResult>(realize_vector(sys, r.vector, 2 * r.lambda)));
        CHECK(io::read_body(io::write_body(r.body)).boxes() == r.body.boxes());
    }
}
