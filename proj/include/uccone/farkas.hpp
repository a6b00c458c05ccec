#pragma once

#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "uccone/boxgeom.hpp"
#include "uccone/cone.hpp"
#include "uccone/core.hpp"
#include "uccone/realize.hpp"
#include "uccone/simplex.hpp"

namespace uccone {

/// sum_A lhs[A] x_A >= sum_B rhs[B] x_B with nonnegative coefficients.
struct LinearInequality {
    int n = 0;
    std::map<SubsetMask, Rational, CanonicalLess> lhs;
    std::map<SubsetMask, Rational, CanonicalLess> rhs;

    /// Validates signs and subsets, cancels subsets present on both sides, drops zeros.
    static LinearInequality make(int n, std::map<SubsetMask, Rational, CanonicalLess> lhs,
                                 std::map<SubsetMask, Rational, CanonicalLess> rhs);

    /// Dense coefficient vector of lhs - rhs, indexed by mask bits - 1.
    std::vector<Rational> coefficients() const;

    /// lhs(v) - rhs(v).
    Rational slack(const ProjectionVector& v) const;
    Real slack(const RealVector& v) const;

    static LinearInequality from_generator(int n, const CoverInequality& g);

    std::string to_string() const;
};

struct FarkasCertificate {
    /// (generator index into the ConeSystem, weight > 0), ascending by index.
    std::vector<std::pair<std::size_t, Rational>> weights;
};

/// Either the inequality is a nonnegative combination of generators (certificate) or a cone
/// vector violates it (witness, with lhs - rhs = -1 and minimal l1 norm).
using Implication = std::variant<FarkasCertificate, ProjectionVector>;

struct FarkasOptions {
    LpOptions lp;
};

Implication check_implication(const ConeSystem& system, const LinearInequality& inequality,
                              const FarkasOptions& options = {});

/// Exact check that sum_g weight_g * g equals the inequality's coefficient vector.
bool verify_certificate(const ConeSystem& system, const LinearInequality& inequality,
                        const FarkasCertificate& certificate);

struct ViolatingBody {
    BoxUnionBody body;
    Real lambda;
    ProjectionVector realized;  ///< the interior vector w with x(body) ~ lambda w
    Rational thickening;
    /// Exact comparison of prod |T_A|^lhs_A against prod |T_B|^rhs_B (exponents cleared of denominators).
    bool violated_exactly = false;
    /// lhs(x(body)) - rhs(x(body)), evaluated in log space; negative when violated.
    Real margin;
};

struct ViolationOptions {
    Real lambda_cap = 1024;
    Rational thickening = Rational(1, 1 << 20);
    RealizationOptions realization;
};

/// Realizes a body whose log projection vector violates the inequality: shifts the witness into the
/// interior (keeping the violation), realizes a multiple of it, and thickens by a tiny cube.
/// Throws std::invalid_argument if the witness is outside the cone or satisfies the inequality, and
/// RealizationInconclusive if no body is found within lambda_cap.
ViolatingBody violating_body(const ConeSystem& system, const LinearInequality& inequality,
                             const ProjectionVector& witness, const ViolationOptions& options = {});

/// Exact test of prod |T_A|^lhs_A < prod |T_B|^rhs_B on given volumes (all positive).
bool violates_exactly(const LinearInequality& inequality, const ProjectionVector& volumes);

}  // namespace uccone
