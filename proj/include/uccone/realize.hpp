#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "uccone/boxgeom.hpp"
#include "uccone/cone.hpp"
#include "uccone/core.hpp"
#include "uccone/covers.hpp"

namespace uccone {

/// w_A = v_A + eps for every A. Requires v in the cone; every nontrivial generator then holds
/// strictly on w, with its slack raised by (parts - k) * eps.
ProjectionVector interior_shift(const ConeSystem& system, const ProjectionVector& v, const Rational& eps);

class InfeasibleSystem : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Log-space box system for one support set S. Variables u_Y = log z_Y for nonempty Y in S:
///   u_Y <= log y_Y,   u_Y <= sum_{i in Y} u_i,   sum_j u_{Y_j} >= k log y_S  for every irreducible cover of S.
struct BoxSystem {
    SubsetMask ground;
    std::vector<SubsetMask> subsets;  ///< nonempty subsets of ground, canonical order
    std::vector<Real> target_log;     ///< log y_Y, aligned with subsets
    std::vector<Real> solution_log;   ///< log z_Y, aligned with subsets
    /// |sum_{i in S} log z_i - log y_S|; zero for a product-form minimal solution.
    Real product_gap = 0;

    const Real& target(SubsetMask y) const;
    const Real& solution(SubsetMask y) const;
};

/// Minimal solution: the vertex minimizing sum_Y u_Y, and among those the one minimizing the
/// largest singleton u_i. `covers` must list the irreducible covers of ground, trivial one included.
/// Throws InfeasibleSystem when no solution exists.
BoxSystem solve_box_system(SubsetMask ground, std::span<const Real> target_log, std::span<const UniformCover> covers);
BoxSystem solve_box_system(SubsetMask ground, std::span<const Real> target_log);

struct RealizationOptions {
    /// Acceptance bound on |log |T_A| - lambda w_A|.
    Real tolerance = Real("1e-6");
    /// Mantissa bits kept when rounding side lengths to dyadic rationals.
    int side_bits = 64;
    /// Bound on the product_gap of each step's minimal solution.
    Real product_tolerance = Real("1e-25");
};

struct RealizationStep {
    SubsetMask support;
    BoxSystem system;
    std::vector<Rational> sides;  ///< one per support element, ascending
};

struct RealizationResult {
    Real lambda;
    ProjectionVector vector;  ///< the vector w whose multiple lambda * w was realized
    BoxUnionBody body;
    RealVector log_gap;  ///< log |T_A| - lambda w_A
    Real max_gap;
    std::vector<RealizationStep> steps;
};

struct Infeasible {
    std::string reason;
    SubsetMask step;  ///< support set at which construction stopped; empty if it failed at verification
};

using RealizationOutcome = std::variant<RealizationResult, Infeasible>;

/// Builds boxes X_r in Span(S_r) for S_r in reverse canonical order, each sized by the step's box
/// system with targets y_A = x_A / 2 (A != S_r), y_{S_r} = x_{S_r}, where x is the running volume
/// target starting at exp(lambda v); then places them disjointly and verifies every projection.
/// Requires v strictly inside `system`.
RealizationOutcome realize_vector(const ConeSystem& system, const ProjectionVector& v, const Real& lambda,
                                  const RealizationOptions& options = {});

class RealizationInconclusive : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Shifts v by eps when it is not strictly inside, then doubles lambda from 1 until realize_vector
/// succeeds. Throws RealizationInconclusive once lambda would exceed lambda_cap.
RealizationResult find_lambda(const ConeSystem& system, const ProjectionVector& v, const Rational& eps,
                              const Real& lambda_cap, const RealizationOptions& options = {});

}  // namespace uccone
