#include "uccone/cone.hpp"

#include <map>

namespace uccone {

std::vector<Integer> CoverInequality::coefficients(int n) const {
    std::vector<Integer> out((std::size_t{1} << n) - 1);
    for (SubsetMask p : cover.parts) out[p.bits() - 1] += 1;
    out[cover.ground.bits() - 1] -= cover.k;
    return out;
}

std::string CoverInequality::to_string() const {
    std::map<SubsetMask, int, CanonicalLess> counts;
    for (SubsetMask p : cover.parts) ++counts[p];
    std::string out;
    for (const auto& [part, count] : counts) {
        if (!out.empty()) out += " + ";
        out += std::to_string(count) + "*{" + part.to_string() + "}";
    }
    return out + " >= " + std::to_string(cover.k) + "*{" + cover.ground.to_string() + "}";
}

ConeSystem build_bt_system(int n, int k_max, const EnumerationLimits& limits) {
    check_dimension(n, kMaxConeDimension);
    if (k_max < 1) throw std::invalid_argument("k_max must be positive");
    ConeSystem system{n, k_max, {}};
    for (SubsetMask ground : canonical_subset_order(n)) {
        for (UniformCover& c : irreducible_covers(ground, k_max, limits)) {
            if (!c.trivial()) system.generators.push_back(CoverInequality{std::move(c)});
        }
    }
    return system;
}

MembershipReport membership(const ConeSystem& system, const ProjectionVector& v) {
    if (v.n() != system.n) {
        throw std::invalid_argument("vector dimension " + std::to_string(v.n()) + " != system dimension " +
                                    std::to_string(system.n));
    }
    MembershipReport report;
    for (const CoverInequality& g : system.generators) {
        Rational s = g.slack(v);
        if (s < 0) {
            report.violated.push_back(g);
        } else if (s == 0) {
            report.tight.push_back(g);
        }
    }
    report.inside = report.violated.empty();
    return report;
}

bool strictly_inside(const ConeSystem& system, const ProjectionVector& v) {
    if (v.n() != system.n) throw std::invalid_argument("vector dimension does not match system");
    for (const CoverInequality& g : system.generators) {
        if (g.slack(v) <= 0) return false;
    }
    return true;
}

std::string h_representation(const ConeSystem& system) {
    std::string out;
    for (const CoverInequality& g : system.generators) out += g.to_string() + '\n';
    return out;
}

}  // namespace uccone
