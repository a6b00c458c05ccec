#include "uccone/realize.hpp"

#include <algorithm>
#include <map>

#include "uccone/simplex.hpp"

namespace uccone {

namespace bmp = boost::multiprecision;

ProjectionVector interior_shift(const ConeSystem& system, const ProjectionVector& v, const Rational& eps) {
    if (eps <= 0) throw std::invalid_argument("interior shift must be positive");
    if (!membership(system, v).inside) throw std::invalid_argument("vector is not in the cone");
    return v.shifted(eps);
}

namespace {

std::size_t position(const std::vector<SubsetMask>& subsets, SubsetMask y) {
    auto it = std::lower_bound(subsets.begin(), subsets.end(), y, canonical_less);
    if (it == subsets.end() || *it != y) throw std::out_of_range("subset {" + y.to_string() + "} not in box system");
    return static_cast<std::size_t>(it - subsets.begin());
}

}  // namespace

const Real& BoxSystem::target(SubsetMask y) const { return target_log.at(position(subsets, y)); }
const Real& BoxSystem::solution(SubsetMask y) const { return solution_log.at(position(subsets, y)); }

BoxSystem solve_box_system(SubsetMask ground, std::span<const Real> target_log, std::span<const UniformCover> covers) {
    BoxSystem sys{ground, nonempty_subsets(ground), {target_log.begin(), target_log.end()}, {}, Real(0)};
    const std::size_t count = sys.subsets.size();
    if (target_log.size() != count) throw std::invalid_argument("one target per nonempty subset of the ground set");
    const std::size_t full = count - 1;  // ground is last in canonical order
    const Real& log_ground = sys.target_log[full];

    // Shift u_Y = lower_Y + t_Y with t_Y >= 0. The bounds are implied by the system: the partition
    // {Y, S\Y} and u_{S\Y} <= log y_{S\Y} give u_Y >= log y_S - log y_{S\Y}; the trivial cover gives u_S >= log y_S.
    std::vector<Real> lower(count);
    for (std::size_t j = 0; j < count; ++j) {
        lower[j] = j == full ? log_ground : Real(log_ground - sys.target(ground.without(sys.subsets[j])));
    }

    // Variables 0..count-1 are t_Y; variable `count` is the largest-singleton bound used in the second pass.
    const std::size_t width = count + 1;
    LinearProgram<Real> lp(width);
    auto row = [&] { return std::vector<Real>(width, Real(0)); };
    std::vector<std::size_t> singletons;
    for (std::size_t j = 0; j < count; ++j) {
        if (sys.subsets[j].size() == 1) singletons.push_back(j);
    }
    for (std::size_t j = 0; j < count; ++j) {
        auto r = row();
        r[j] = 1;
        lp.add_row(std::move(r), Relation::LessEqual, sys.target_log[j] - lower[j]);
    }
    for (std::size_t j = 0; j < count; ++j) {
        SubsetMask y = sys.subsets[j];
        if (y.size() < 2) continue;
        auto r = row();
        r[j] = 1;
        Real rhs = -lower[j];
        for (int e : y.elements()) {
            std::size_t i = position(sys.subsets, SubsetMask::singleton(e));
            r[i] -= 1;
            rhs += lower[i];
        }
        lp.add_row(std::move(r), Relation::LessEqual, rhs);
    }
    for (const UniformCover& c : covers) {
        if (c.ground != ground) throw std::invalid_argument("cover of a different ground set");
        auto r = row();
        Real rhs = Real(c.k) * log_ground;
        for (SubsetMask p : c.parts) {
            std::size_t i = position(sys.subsets, p);
            r[i] += 1;
            rhs -= lower[i];
        }
        lp.add_row(std::move(r), Relation::GreaterEqual, rhs);
    }

    for (std::size_t j = 0; j < count; ++j) lp.objective[j] = 1;
    LpSolution<Real> first = solve_lp(lp);
    if (first.status != LpStatus::Optimal) {
        throw InfeasibleSystem("box system for {" + ground.to_string() + "} has no solution");
    }

    // Second pass: stay on the optimal face and balance the side lengths.
    Real floor = lower[singletons.front()];
    for (std::size_t i : singletons) floor = std::min<Real>(floor, lower[i]);
    {
        auto r = row();
        for (std::size_t j = 0; j < count; ++j) r[j] = 1;
        lp.add_row(std::move(r), Relation::LessEqual, first.objective + Real("1e-30"));
    }
    for (std::size_t i : singletons) {
        auto r = row();
        r[i] = 1;
        r[count] = -1;
        lp.add_row(std::move(r), Relation::LessEqual, floor - lower[i]);
    }
    std::fill(lp.objective.begin(), lp.objective.end(), Real(0));
    lp.objective[count] = 1;
    LpSolution<Real> second = solve_lp(lp);
    const std::vector<Real>& t = second.status == LpStatus::Optimal ? second.x : first.x;

    sys.solution_log.resize(count);
    for (std::size_t j = 0; j < count; ++j) sys.solution_log[j] = lower[j] + t[j];
    Real side_sum = 0;
    for (std::size_t i : singletons) side_sum += sys.solution_log[i];
    sys.product_gap = bmp::abs(side_sum - log_ground);
    return sys;
}

BoxSystem solve_box_system(SubsetMask ground, std::span<const Real> target_log) {
    const std::vector<UniformCover> covers = irreducible_covers(ground, ground.size());
    return solve_box_system(ground, target_log, covers);
}

namespace {

/// Irreducible covers per ground set: the system's generators plus each trivial cover.
std::map<std::uint32_t, std::vector<UniformCover>> covers_by_ground(const ConeSystem& system) {
    std::map<std::uint32_t, std::vector<UniformCover>> out;
    for (SubsetMask s : canonical_subset_order(system.n)) out[s.bits()].push_back(UniformCover{s, {s}, 1});
    for (const CoverInequality& g : system.generators) out[g.cover.ground.bits()].push_back(g.cover);
    return out;
}

}  // namespace

RealizationOutcome realize_vector(const ConeSystem& system, const ProjectionVector& v, const Real& lambda,
                                  const RealizationOptions& options) {
    if (v.n() != system.n) throw std::invalid_argument("vector dimension does not match system");
    if (!(lambda > 0)) throw std::invalid_argument("lambda must be positive");
    if (!strictly_inside(system, v)) {
        throw std::invalid_argument("realization needs every nontrivial generator to hold strictly");
    }
    const int n = v.n();
    const auto covers = covers_by_ground(system);
    const std::vector<SubsetMask> order = canonical_subset_order(n);
    const Real log_two = bmp::log(Real(2));

    RealVector running(n);
    for (SubsetMask a : order) running[a] = bmp::exp(lambda * to_real(v[a]));

    std::vector<RealizationStep> steps;
    std::vector<Box> boxes;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const SubsetMask support = *it;
        const std::vector<SubsetMask> subsets = nonempty_subsets(support);
        std::vector<Real> target(subsets.size());
        for (std::size_t j = 0; j < subsets.size(); ++j) {
            const Real& x = running[subsets[j]];
            if (!(x > 0)) {
                return Infeasible{"running target for {" + subsets[j].to_string() + "} is not positive", support};
            }
            target[j] = bmp::log(x) - (subsets[j] == support ? Real(0) : log_two);
        }
        BoxSystem solved;
        try {
            solved = solve_box_system(support, target, covers.at(support.bits()));
        } catch (const InfeasibleSystem& e) {
            return Infeasible{e.what(), support};
        }
        if (solved.product_gap > options.product_tolerance) {
            return Infeasible{"minimal solution for {" + support.to_string() + "} is not of product form", support};
        }

        std::vector<Rational> sides;
        for (int e : support.elements()) {
            sides.push_back(to_dyadic(bmp::exp(solved.solution(SubsetMask::singleton(e))), options.side_bits));
        }
        Box box = Box::with_sides(n, support, sides);
        for (SubsetMask y : subsets) running[y] -= to_real(box.projection_volume(y));
        boxes.push_back(std::move(box));
        steps.push_back(RealizationStep{support, std::move(solved), std::move(sides)});
    }

    BoxUnionBody body = disjoint_offset(boxes);
    LogProjection achieved = log_projection_vector(body);
    RealVector gap(n);
    Real max_gap = 0;
    for (SubsetMask a : order) {
        if (!achieved.positive_at(a)) return Infeasible{"projection onto {" + a.to_string() + "} vanished", {}};
        gap[a] = achieved.logs[a] - lambda * to_real(v[a]);
        max_gap = std::max<Real>(max_gap, bmp::abs(gap[a]));
    }
    if (max_gap > options.tolerance) {
        return Infeasible{"realized body misses the target by " + max_gap.str(6) + " in log space", {}};
    }
    return RealizationResult{lambda, v, std::move(body), std::move(gap), max_gap, std::move(steps)};
}

RealizationResult find_lambda(const ConeSystem& system, const ProjectionVector& v, const Rational& eps,
                              const Real& lambda_cap, const RealizationOptions& options) {
    const ProjectionVector w = strictly_inside(system, v) ? v : interior_shift(system, v, eps);
    std::string last_reason = "lambda cap below 1";
    for (Real lambda = 1; lambda <= lambda_cap; lambda *= 2) {
        RealizationOutcome outcome = realize_vector(system, w, lambda, options);
        if (auto* result = std::get_if<RealizationResult>(&outcome)) return std::move(*result);
        last_reason = std::get<Infeasible>(outcome).reason;
    }
    throw RealizationInconclusive("no realization up to lambda = " + lambda_cap.str() + " (last failure: " +
                                  last_reason + ")");
}

}  // namespace uccone
