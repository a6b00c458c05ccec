#pragma once

#include <cstddef>
#include <string>
#include <type_traits>
#include <vector>

#include "uccone/core.hpp"

namespace uccone {

enum class Relation { LessEqual, Equal, GreaterEqual };

/// minimize objective . x  subject to  rows,  x >= 0.
template <class Scalar>
struct LinearProgram {
    struct Row {
        std::vector<Scalar> coefficients;
        Relation relation;
        Scalar rhs;
    };

    explicit LinearProgram(std::size_t variables) : variables(variables), objective(variables, Scalar(0)) {}

    void add_row(std::vector<Scalar> coefficients, Relation relation, Scalar rhs) {
        if (coefficients.size() != variables) throw std::invalid_argument("row width does not match variable count");
        rows.push_back(Row{std::move(coefficients), relation, std::move(rhs)});
    }

    std::size_t variables;
    std::vector<Scalar> objective;
    std::vector<Row> rows;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

template <class Scalar>
struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    std::vector<Scalar> x;
    Scalar objective = 0;
};

/// Pivot tolerance: exact scalars compare against zero, floating scalars against a small epsilon.
template <class Scalar>
struct LpTolerance {
    static Scalar epsilon() { return Scalar(0); }
};

template <>
struct LpTolerance<Real> {
    static Real epsilon() { return Real("1e-35"); }
};

template <>
struct LpTolerance<double> {
    static double epsilon() { return 1e-10; }
};

struct LpOptions {
    std::size_t max_pivots = 200'000;
};

namespace detail {

/// Dense two-phase tableau simplex with Bland's rule (smallest-index entering and leaving), which
/// cannot cycle and makes the returned vertex a deterministic function of the input.
template <class Scalar>
class Tableau {
public:
    Tableau(const LinearProgram<Scalar>& lp, const LpOptions& options)
        : structural_(lp.variables), options_(options), eps_(LpTolerance<Scalar>::epsilon()) {
        const std::size_t m = lp.rows.size();
        std::size_t slack_count = 0;
        std::size_t artificial_count = 0;
        for (const auto& row : lp.rows) {
            Relation rel = normalized_relation(row);
            if (rel != Relation::Equal) ++slack_count;
            if (rel != Relation::LessEqual) ++artificial_count;
        }
        first_artificial_ = structural_ + slack_count;
        columns_ = first_artificial_ + artificial_count;
        cells_.assign(m, std::vector<Scalar>(columns_ + 1, Scalar(0)));
        basis_.assign(m, 0);

        std::size_t next_slack = structural_;
        std::size_t next_artificial = first_artificial_;
        for (std::size_t i = 0; i < m; ++i) {
            const auto& row = lp.rows[i];
            const bool flip = row.rhs < 0;
            Relation rel = normalized_relation(row);
            for (std::size_t j = 0; j < structural_; ++j) {
                cells_[i][j] = flip ? Scalar(-row.coefficients[j]) : row.coefficients[j];
            }
            rhs(i) = flip ? Scalar(-row.rhs) : row.rhs;
            if (rel == Relation::LessEqual) {
                cells_[i][next_slack] = 1;
                basis_[i] = next_slack++;
            } else {
                if (rel == Relation::GreaterEqual) cells_[i][next_slack++] = -1;
                cells_[i][next_artificial] = 1;
                basis_[i] = next_artificial++;
            }
        }
    }

    LpSolution<Scalar> solve(const std::vector<Scalar>& objective) {
        LpSolution<Scalar> out;
        if (first_artificial_ < columns_) {
            std::vector<Scalar> phase_one(columns_, Scalar(0));
            for (std::size_t j = first_artificial_; j < columns_; ++j) phase_one[j] = 1;
            run(phase_one, columns_);
            if (positive(current_objective(phase_one))) return out;
            evict_artificials();
        }
        std::vector<Scalar> cost(columns_, Scalar(0));
        for (std::size_t j = 0; j < structural_; ++j) cost[j] = objective[j];
        if (!run(cost, first_artificial_)) {
            out.status = LpStatus::Unbounded;
            return out;
        }
        out.status = LpStatus::Optimal;
        out.x.assign(structural_, Scalar(0));
        for (std::size_t i = 0; i < cells_.size(); ++i) {
            if (basis_[i] < structural_) out.x[basis_[i]] = rhs(i);
        }
        out.objective = 0;
        for (std::size_t j = 0; j < structural_; ++j) out.objective += objective[j] * out.x[j];
        return out;
    }

private:
    static Relation normalized_relation(const typename LinearProgram<Scalar>::Row& row) {
        if (!(row.rhs < 0) || row.relation == Relation::Equal) return row.relation;
        return row.relation == Relation::LessEqual ? Relation::GreaterEqual : Relation::LessEqual;
    }

    Scalar& rhs(std::size_t i) { return cells_[i][columns_]; }
    bool positive(const Scalar& v) const { return v > eps_; }
    bool negative(const Scalar& v) const { return v < -eps_; }

    Scalar current_objective(const std::vector<Scalar>& cost) {
        Scalar total = 0;
        for (std::size_t i = 0; i < cells_.size(); ++i) total += cost[basis_[i]] * rhs(i);
        return total;
    }

    /// Optimizes `cost` over columns [0, usable); false when unbounded.
    bool run(const std::vector<Scalar>& cost, std::size_t usable) {
        const std::size_t m = cells_.size();
        for (std::size_t pivots = 0;; ++pivots) {
            if (pivots > options_.max_pivots) {
                throw ResourceLimit("simplex exceeded " + std::to_string(options_.max_pivots) + " pivots");
            }
            std::size_t entering = usable;
            for (std::size_t j = 0; j < usable; ++j) {
                Scalar reduced = cost[j];
                for (std::size_t i = 0; i < m; ++i) {
                    if (cells_[i][j] != 0) reduced -= cost[basis_[i]] * cells_[i][j];
                }
                if (negative(reduced)) {
                    entering = j;
                    break;
                }
            }
            if (entering == usable) return true;

            std::size_t leaving = m;
            Scalar best_ratio = 0;
            for (std::size_t i = 0; i < m; ++i) {
                if (!positive(cells_[i][entering])) continue;
                Scalar ratio = rhs(i) / cells_[i][entering];
                if (leaving == m || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leaving])) {
                    leaving = i;
                    best_ratio = ratio;
                }
            }
            if (leaving == m) return false;
            pivot(leaving, entering);
        }
    }

    void pivot(std::size_t row, std::size_t column) {
        auto& pivot_row = cells_[row];
        const Scalar scale = pivot_row[column];
        for (auto& c : pivot_row) c /= scale;
        for (std::size_t i = 0; i < cells_.size(); ++i) {
            if (i == row || cells_[i][column] == 0) continue;
            const Scalar factor = cells_[i][column];
            for (std::size_t j = 0; j <= columns_; ++j) {
                if (pivot_row[j] != 0) cells_[i][j] -= factor * pivot_row[j];
            }
            if constexpr (!std::is_same_v<Scalar, Rational>) {
                cells_[i][column] = 0;
                if (!positive(rhs(i)) && !negative(rhs(i))) rhs(i) = 0;
            }
        }
        basis_[row] = column;
    }

    /// After phase one, pivots zero-level artificials out of the basis; rows with no structural
    /// or slack entry are redundant and dropped.
    void evict_artificials() {
        for (std::size_t i = 0; i < cells_.size();) {
            if (basis_[i] < first_artificial_) {
                ++i;
                continue;
            }
            std::size_t column = first_artificial_;
            for (std::size_t j = 0; j < first_artificial_; ++j) {
                if (positive(cells_[i][j]) || negative(cells_[i][j])) {
                    column = j;
                    break;
                }
            }
            if (column == first_artificial_) {
                cells_.erase(cells_.begin() + static_cast<std::ptrdiff_t>(i));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
                continue;
            }
            pivot(i, column);
            ++i;
        }
    }

    std::size_t structural_;
    std::size_t first_artificial_ = 0;
    std::size_t columns_ = 0;
    LpOptions options_;
    Scalar eps_;
    std::vector<std::vector<Scalar>> cells_;
    std::vector<std::size_t> basis_;
};

}  // namespace detail

template <class Scalar>
LpSolution<Scalar> solve_lp(const LinearProgram<Scalar>& lp, const LpOptions& options = {}) {
    detail::Tableau<Scalar> tableau(lp, options);
    return tableau.solve(lp.objective);
}

}  // namespace uccone
