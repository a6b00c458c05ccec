#pragma once

#include <random>
#include <span>
#include <vector>

#include "uccone/core.hpp"

namespace uccone {

struct Interval {
    Rational lo;
    Rational hi;

    Rational length() const { return hi - lo; }
    bool degenerate() const { return lo == hi; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Closed axis-aligned box; an axis with lo == hi is degenerate, so the box may live in a
/// coordinate subspace.
class Box {
public:
    explicit Box(std::vector<Interval> intervals);

    /// Box with the given side lengths on `support` and the point 0 on every other axis.
    static Box with_sides(int n, SubsetMask support, std::span<const Rational> sides);

    int n() const { return static_cast<int>(intervals_.size()); }
    const Interval& operator[](int axis) const { return intervals_[axis]; }
    const std::vector<Interval>& intervals() const { return intervals_; }

    /// Axes (as a mask) on which the box has positive extent.
    SubsetMask support() const;
    /// |A|-dimensional volume of the projection onto Span(A).
    Rational projection_volume(SubsetMask a) const;
    Box translated(const Rational& offset) const;

    friend bool operator==(const Box&, const Box&) = default;

private:
    std::vector<Interval> intervals_;
};

/// Finite union of boxes in R^n.
class BoxUnionBody {
public:
    BoxUnionBody(int n, std::vector<Box> boxes);

    int n() const { return n_; }
    const std::vector<Box>& boxes() const { return boxes_; }

private:
    int n_;
    std::vector<Box> boxes_;
};

/// Exact measure of the union of the projections onto Span(A), by coordinate compression.
Rational projection_volume(const BoxUnionBody& body, SubsetMask a);

struct LogProjection {
    ProjectionVector volumes;  ///< exact |T_A|
    RealVector logs;           ///< log |T_A|; meaningless where !positive[A]
    std::vector<bool> positive;

    bool all_positive() const;
    bool positive_at(SubsetMask a) const { return positive.at(a.bits() - 1); }
};

LogProjection log_projection_vector(const BoxUnionBody& body);

/// Translates box j along the diagonal beyond every earlier box on every axis, so the
/// projections of distinct boxes onto every coordinate subspace are disjoint.
BoxUnionBody disjoint_offset(std::span<const Box> boxes);

/// Adds a full-dimensional cube of side eps placed apart from every existing box.
BoxUnionBody thicken(const BoxUnionBody& body, const Rational& eps);

/// 1..max_boxes boxes whose endpoints are drawn from the grid {0, 1/grid, ..., extent}; an axis
/// collapses to a point with probability 1/8.
BoxUnionBody random_body(int n, int max_boxes, std::mt19937_64& rng, int grid = 4, int extent = 16);

}  // namespace uccone
