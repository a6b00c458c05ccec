#include "uccone/witness.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "uccone/boxgeom.hpp"

namespace uccone {

namespace {

SubsetMask set_of(std::initializer_list<int> elements) {
    std::uint32_t bits = 0;
    for (int e : elements) bits |= std::uint32_t{1} << (e - 1);
    return SubsetMask(bits);
}

}  // namespace

ProjectionVector closure_witness_vector(int n) {
    if (n < 4) throw std::invalid_argument("the witness vector needs n >= 4");
    ProjectionVector v(n);
    v[set_of({1, 3})] = 2;
    v[set_of({2, 4})] = 2;
    v[set_of({1, 2, 3})] = 1;
    v[set_of({2, 3, 4})] = 1;
    for (int i = 1; i <= 4; ++i) v[SubsetMask::singleton(i)] = 1;
    return v;
}

UniformCover triangle_cover(SubsetMask ground) {
    if (ground.size() != 3) throw std::invalid_argument("triangle cover needs a three-element ground set");
    std::vector<SubsetMask> parts;
    for (int e : ground.elements()) parts.push_back(ground.without(SubsetMask::singleton(e)));
    return UniformCover::make(ground, std::move(parts), 2);
}

WitnessReport analyze_witness(const ConeSystem& system, const ProjectionVector& v) {
    if (v.n() < 4) throw std::invalid_argument("the obstruction involves elements 1..4; need n >= 4");
    MembershipReport m = membership(system, v);
    WitnessReport report{v, m.inside, std::move(m.tight), std::move(m.violated), {}, {}, false};
    report.obstruction_lhs = v[set_of({1, 2, 3})] - v[set_of({1, 2})];
    report.obstruction_rhs = v[set_of({2, 3, 4})] - v[set_of({2, 4})];
    report.obstruction_holds = report.obstruction_lhs == report.obstruction_rhs;
    return report;
}

SetFamily::SetFamily(int n, std::vector<SubsetMask> members) : n_(n), members_(std::move(members)) {
    check_dimension(n);
    for (SubsetMask m : members_) {
        if (!m.fits(n)) throw std::invalid_argument("family member outside [n]");
    }
    std::sort(members_.begin(), members_.end(), [](SubsetMask a, SubsetMask b) { return a.bits() < b.bits(); });
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

ShearerReport shearer_check(const SetFamily& family, const std::vector<SubsetMask>& cover_sets, int k) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    for (int e = 1; e <= family.n(); ++e) {
        auto hits = std::count_if(cover_sets.begin(), cover_sets.end(), [e](SubsetMask a) { return a.contains(e); });
        if (hits < k) {
            throw std::invalid_argument("element " + std::to_string(e) + " lies in only " + std::to_string(hits) +
                                        " cover sets, fewer than k = " + std::to_string(k));
        }
    }
    for (SubsetMask a : cover_sets) {
        if (!a.fits(family.n())) throw std::invalid_argument("cover set outside [n]");
    }
    ShearerReport report{Integer(1), Integer(1), false, {}};
    for (SubsetMask a : cover_sets) {
        std::set<std::uint32_t> trace;
        for (SubsetMask f : family.members()) trace.insert((f & a).bits());
        report.trace_sizes.push_back(trace.size());
        report.lhs_product *= trace.size();
    }
    report.rhs_power = boost::multiprecision::pow(Integer(family.members().size()), static_cast<unsigned>(k));
    report.holds = report.lhs_product >= report.rhs_power;
    return report;
}

NeighbourhoodSample sample_neighbourhood(const ProjectionVector& v, std::size_t bodies, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const RealVector target = to_real(v);
    NeighbourhoodSample out{0, Real(-1)};
    for (std::size_t i = 0; i < bodies; ++i) {
        BoxUnionBody body = thicken(random_body(v.n(), 4, rng), Rational(1, 1024));
        LogProjection x = log_projection_vector(body);
        Real squared = 0;
        for (SubsetMask a : canonical_subset_order(v.n())) {
            Real d = x.logs[a] - target[a];
            squared += d * d;
        }
        Real distance = boost::multiprecision::sqrt(squared);
        if (out.min_distance < 0 || distance < out.min_distance) out.min_distance = distance;
        ++out.bodies;
    }
    return out;
}

}  // namespace uccone
