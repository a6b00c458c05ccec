#pragma once

#include <string>
#include <vector>

#include "uccone/core.hpp"
#include "uccone/covers.hpp"

namespace uccone {

/// The inequality sum_i x_{Y_i} >= k x_Y induced by a uniform cover of Y.
struct CoverInequality {
    UniformCover cover;

    /// lhs - rhs evaluated at v; nonnegative iff the inequality holds.
    template <class Scalar>
    Scalar slack(const BasicProjectionVector<Scalar>& v) const {
        Scalar total = 0;
        for (SubsetMask p : cover.parts) total += v[p];
        total -= Scalar(cover.k) * v[cover.ground];
        return total;
    }

    /// Dense integral coefficient vector (+1 per part occurrence, -k on the ground), indexed by mask bits - 1.
    std::vector<Integer> coefficients(int n) const;

    /// "1*{1} + 1*{2} >= 1*{1,2}"
    std::string to_string() const;
};

struct ConeSystem {
    int n = 0;
    int k_max = 0;
    std::vector<CoverInequality> generators;
};

/// Guard on build_bt_system; beyond this the cover enumeration is out of desk scale.
inline constexpr int kMaxConeDimension = 6;

/// One generator per nontrivial irreducible cover (k <= k_max) of every nonempty Y in [n].
ConeSystem build_bt_system(int n, int k_max, const EnumerationLimits& limits = {});
inline ConeSystem build_bt_system(int n) { return build_bt_system(n, n); }

struct MembershipReport {
    bool inside = true;
    std::vector<CoverInequality> violated;
    std::vector<CoverInequality> tight;
};

MembershipReport membership(const ConeSystem& system, const ProjectionVector& v);

/// True when every generator holds with strict inequality.
bool strictly_inside(const ConeSystem& system, const ProjectionVector& v);

/// Plain-text H-representation, one generator per line.
std::string h_representation(const ConeSystem& system);

}  // namespace uccone
