#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "uccone/cone.hpp"
#include "uccone/core.hpp"

namespace uccone {

/// v_13 = v_24 = 2, v_123 = v_234 = v_1 = v_2 = v_3 = v_4 = 1, every other coordinate 0,
/// embedded in dimension n >= 4. It lies in the cone but not in the closure-free convex hull.
ProjectionVector closure_witness_vector(int n);

struct WitnessReport {
    ProjectionVector vector;
    bool in_cone = false;
    std::vector<CoverInequality> tight;
    std::vector<CoverInequality> violated;
    Rational obstruction_lhs;  ///< v_123 - v_12
    Rational obstruction_rhs;  ///< v_234 - v_24
    bool obstruction_holds = false;
};

/// Cone membership, tight generators and the product-set obstruction v_123 - v_12 = v_234 - v_24.
/// Requires v.n() >= 4 and system.n == v.n().
WitnessReport analyze_witness(const ConeSystem& system, const ProjectionVector& v);

/// The 2-uniform cover {12, 13, 23}-shape of a three-element set.
UniformCover triangle_cover(SubsetMask ground);

/// A family of subsets of [n]; the empty set is a legal member.
class SetFamily {
public:
    SetFamily(int n, std::vector<SubsetMask> members);

    int n() const { return n_; }
    const std::vector<SubsetMask>& members() const { return members_; }

private:
    int n_;
    std::vector<SubsetMask> members_;  ///< deduplicated, sorted by bits
};

struct ShearerReport {
    Integer lhs_product;  ///< prod_i |F_i|
    Integer rhs_power;    ///< |F|^k
    bool holds = false;
    std::vector<std::size_t> trace_sizes;
};

/// Discrete product inequality for traces F_i = {F & A_i}. Throws std::invalid_argument unless
/// every element of [n] lies in at least k of the cover sets.
ShearerReport shearer_check(const SetFamily& family, const std::vector<SubsetMask>& cover_sets, int k);

struct NeighbourhoodSample {
    std::size_t bodies = 0;
    /// Smallest Euclidean distance from v to the log projection vector of a sampled body.
    Real min_distance;
};

/// Samples random box-union bodies (up to 4 boxes, rational corners in [0, 16], thickened to be
/// full-dimensional) and reports how close their log projection vectors come to v. Empirical only.
NeighbourhoodSample sample_neighbourhood(const ProjectionVector& v, std::size_t bodies, std::uint64_t seed);

}  // namespace uccone
