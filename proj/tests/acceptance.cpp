// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "oracles.hpp"
#include "uccone/io.hpp"

using namespace uccone;
namespace bmp = boost::multiprecision;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

SubsetMask s(const char* label) { return SubsetMask::parse(label, 16); }

bool run(int id, const char* title, double limit_seconds, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool within = seconds < limit_seconds;
    const bool pass = out.pass && within;
    std::printf("%s criterion %d: %s [%.2fs / limit %.0fs]%s%s\n", pass ? "PASS" : "FAIL", id, title, seconds,
                limit_seconds, out.detail.empty() ? "" : " -- ", out.detail.c_str());
    if (!within) std::printf("     runtime limit exceeded\n");
    std::fflush(stdout);
    return pass;
}

Outcome witness_analysis() {
    ConeSystem sys = build_bt_system(4);
    WitnessReport r = analyze_witness(sys, closure_witness_vector(4));
    io::Json json = io::witness_report_json(r);
    std::vector<UniformCover> triangles;
    for (const CoverInequality& g : r.tight) {
        if (g.cover.k == 2 && g.cover.ground.size() == 3) triangles.push_back(g.cover);
    }
    auto listed = [&](const UniformCover& c) { return std::count(triangles.begin(), triangles.end(), c) == 1; };
    const bool exact_pair =
        triangles.size() == 2 && listed(triangle_cover(s("1,2,3"))) && listed(triangle_cover(s("2,3,4")));
    const bool pass = json["in_cone"] == true && exact_pair && json["obstruction_lhs"] == "1" &&
                      json["obstruction_rhs"] == "-1" && json["obstruction_holds"] == false;
    return {pass, "in_cone=" + std::string(r.in_cone ? "true" : "false") + ", tight 2-uniform 3-set covers=" +
                      std::to_string(triangles.size()) + ", obstruction " + format_rational(r.obstruction_lhs) +
                      " vs " + format_rational(r.obstruction_rhs) + ", tight generators in total " +
                      std::to_string(r.tight.size())};
}

Outcome product_inequalities() {
    ConeSystem sys = build_bt_system(4);
    std::mt19937_64 rng(20240601);
    std::size_t failures = 0;
    std::size_t checks = 0;
    for (int trial = 0; trial < 500; ++trial) {
        BoxUnionBody body = thicken(random_body(4, 4, rng, 4, 16), Rational(1, 1024));
        LogProjection x = log_projection_vector(body);
        if (!x.all_positive()) return {false, "thickened body has a zero projection"};
        for (const CoverInequality& g : sys.generators) {
            Rational lhs = 1;
            for (SubsetMask p : g.cover.parts) lhs *= x.volumes[p];
            ++checks;
            if (lhs < pow(x.volumes[g.cover.ground], g.cover.k)) ++failures;
        }
    }
    return {failures == 0, "500 bodies, " + std::to_string(checks) + " exact checks, " + std::to_string(failures) +
                               " failures"};
}

Outcome irreducible_counts() {
    const std::size_t expected[] = {1, 2, 6};
    std::string detail;
    bool pass = true;
    for (int g = 1; g <= 3; ++g) {
        SubsetMask ground = SubsetMask::full(g);
        const std::size_t brute = oracle::irreducible_count(ground, 2 * g);
        const std::size_t library = irreducible_covers(ground, 2 * g).size();
        pass = pass && brute == expected[g - 1] && library == expected[g - 1];
        detail += (g > 1 ? ", " : "") + std::string("|ground|=") + std::to_string(g) + ": oracle " +
                  std::to_string(brute) + " library " + std::to_string(library);
    }
    return {pass, detail};
}

Outcome farkas_soundness() {
    ConeSystem sys = build_bt_system(4);
    for (const CoverInequality& g : sys.generators) {
        LinearInequality ineq = LinearInequality::from_generator(4, g);
        Implication result = check_implication(sys, ineq);
        auto* cert = std::get_if<FarkasCertificate>(&result);
        if (cert == nullptr || !verify_certificate(sys, ineq, *cert)) {
            return {false, "no exact certificate for " + g.to_string()};
        }
    }
    LinearInequality guess = LinearInequality::make(4, {{s("1,2"), 1}, {s("2,3"), 1}, {s("3,4"), 1}},
                                                    {{s("1,2,3"), 1}, {s("2,3,4"), 1}});
    Implication result = check_implication(sys, guess);
    auto* witness = std::get_if<ProjectionVector>(&result);
    if (witness == nullptr) return {false, "guess reported as implied"};
    if (!membership(sys, *witness).inside) return {false, "witness outside the cone"};
    if (guess.slack(*witness) > -1) return {false, "witness does not violate the guess by 1"};
    ViolatingBody body = violating_body(sys, guess, *witness);
    LogProjection x = log_projection_vector(body.body);
    const Rational lhs = x.volumes[s("1,2")] * x.volumes[s("2,3")] * x.volumes[s("3,4")];
    const Rational rhs = x.volumes[s("1,2,3")] * x.volumes[s("2,3,4")];
    const bool pass = body.violated_exactly && lhs < rhs;
    return {pass, std::to_string(sys.generators.size()) + " generators certified; guess refuted by a " +
                      std::to_string(body.body.boxes().size()) + "-box body at lambda=" + body.lambda.str(6) +
                      ", log margin " + body.margin.str(6)};
}

Outcome realization_round_trip() {
    ConeSystem sys = build_bt_system(3);
    std::mt19937_64 rng(7);
    const Real tolerance("1e-6");
    Real worst = 0;
    Real largest_lambda = 0;
    int realized = 0;
    while (realized < 50) {
        ProjectionVector v(3);
        for (SubsetMask a : canonical_subset_order(3)) v[a] = oracle::random_rational(rng, 3, 4);
        if (!membership(sys, v).inside) continue;
        ProjectionVector w = interior_shift(sys, v, Rational(1, 4));
        RealizationResult r = find_lambda(sys, w, Rational(1, 4), 64);
        LogProjection x = log_projection_vector(r.body);
        for (SubsetMask a : canonical_subset_order(3)) {
            worst = std::max<Real>(worst, bmp::abs(x.logs[a] - r.lambda * to_real(w[a])));
        }
        largest_lambda = std::max(largest_lambda, r.lambda);
        ++realized;
    }
    ConeSystem plane = build_bt_system(2);
    ProjectionVector ones = ProjectionVector::constant(2, 1);
    const bool fails_at_one = std::holds_alternative<Infeasible>(realize_vector(plane, ones, 1));
    const bool works_at_two = std::holds_alternative<RealizationResult>(realize_vector(plane, ones, 2));
    const bool pass = worst <= tolerance && largest_lambda <= 64 && fails_at_one && works_at_two;
    return {pass, "50 vectors, max lambda " + largest_lambda.str(4) + ", max log gap " + worst.str(3) +
                      "; (1,1,1) at lambda=1 " + (fails_at_one ? "infeasible" : "realized") + ", at lambda=2 " +
                      (works_at_two ? "realized" : "infeasible")};
}

Outcome shearer_suite() {
    std::mt19937_64 rng(5);
    int pairs = 0;
    int failures = 0;
    while (pairs < 200) {
        const int n = 1 + static_cast<int>(rng() % 5);
        std::uniform_int_distribution<std::uint32_t> mask(0, (1u << n) - 1);
        std::vector<SubsetMask> members(1 + rng() % 16);
        for (auto& m : members) m = SubsetMask(mask(rng));
        std::vector<SubsetMask> sets(1 + rng() % 6);
        for (auto& a : sets) a = SubsetMask(mask(rng));
        const int k = 1 + static_cast<int>(rng() % 3);
        bool covered = true;
        for (int e = 1; e <= n; ++e) {
            covered = covered && std::count_if(sets.begin(), sets.end(), [e](SubsetMask a) { return a.contains(e); }) >= k;
        }
        if (!covered) continue;
        ++pairs;
        if (!shearer_check(SetFamily(n, members), sets, k).holds) ++failures;
    }
    std::vector<SubsetMask> all;
    for (std::uint32_t b = 0; b < 16; ++b) all.emplace_back(b);
    UniformCover c = UniformCover::make(s("1,2,3,4"), {s("1,2"), s("2,3"), s("3,4"), s("1,4")}, 2);
    ShearerReport equality = shearer_check(SetFamily(4, all), c.parts, c.k);
    const bool tight = equality.lhs_product == equality.rhs_power;
    return {failures == 0 && tight, std::to_string(pairs) + " pairs, " + std::to_string(failures) +
                                        " failures; power set of [4]: " + equality.lhs_product.str() + " vs " +
                                        equality.rhs_power.str()};
}

}  // namespace

int main() {
    bool all = true;
    all &= run(1, "closure witness vector analysis", 5, witness_analysis);
    all &= run(2, "cover inequalities on 500 random box unions (n=4)", 60, product_inequalities);
    all &= run(3, "irreducible cover counts against exhaustive search", 10, irreducible_counts);
    all &= run(4, "Farkas certificates and the refuted three-pair inequality", 30, farkas_soundness);
    all &= run(5, "realization round-trip on 50 interior vectors (n=3)", 120, realization_round_trip);
    all &= run(6, "trace product inequality on 200 random families", 20, shearer_suite);
    std::printf("%s\n", all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
    return all ? 0 : 1;
}
