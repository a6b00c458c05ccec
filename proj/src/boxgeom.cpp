#include "uccone/boxgeom.hpp"

#include <algorithm>
#include <optional>

namespace uccone {

Box::Box(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
    check_dimension(static_cast<int>(intervals_.size()));
    for (const Interval& iv : intervals_) {
        if (iv.hi < iv.lo) throw std::invalid_argument("interval with hi < lo");
    }
}

Box Box::with_sides(int n, SubsetMask support, std::span<const Rational> sides) {
    std::vector<Interval> intervals(n, Interval{Rational(0), Rational(0)});
    const auto axes = support.elements();
    if (axes.size() != sides.size()) throw std::invalid_argument("one side length per support axis required");
    for (std::size_t i = 0; i < axes.size(); ++i) {
        if (sides[i] <= 0) throw std::invalid_argument("side lengths must be positive");
        intervals.at(axes[i] - 1).hi = sides[i];
    }
    return Box(std::move(intervals));
}

SubsetMask Box::support() const {
    std::uint32_t bits = 0;
    for (int axis = 0; axis < n(); ++axis) {
        if (!intervals_[axis].degenerate()) bits |= std::uint32_t{1} << axis;
    }
    return SubsetMask(bits);
}

Rational Box::projection_volume(SubsetMask a) const {
    Rational volume(1);
    for (int e : a.elements()) volume *= intervals_.at(e - 1).length();
    return volume;
}

Box Box::translated(const Rational& offset) const {
    std::vector<Interval> moved = intervals_;
    for (Interval& iv : moved) {
        iv.lo += offset;
        iv.hi += offset;
    }
    return Box(std::move(moved));
}

BoxUnionBody::BoxUnionBody(int n, std::vector<Box> boxes) : n_(n), boxes_(std::move(boxes)) {
    check_dimension(n);
    if (boxes_.empty()) throw std::invalid_argument("a body needs at least one box");
    for (const Box& b : boxes_) {
        if (b.n() != n) throw std::invalid_argument("box dimension does not match body dimension");
    }
}

namespace {

/// Measure of the union of `active` boxes projected on axes[depth..]: sweep the compressed
/// coordinates of one axis and recurse into every slab that some box spans.
Rational union_measure(const std::vector<const Box*>& active, const std::vector<int>& axes, std::size_t depth) {
    if (depth == axes.size()) return Rational(1);
    const int axis = axes[depth];
    std::vector<Rational> cuts;
    cuts.reserve(2 * active.size());
    for (const Box* b : active) {
        cuts.push_back((*b)[axis].lo);
        cuts.push_back((*b)[axis].hi);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    Rational total(0);
    std::vector<const Box*> slab;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        slab.clear();
        for (const Box* b : active) {
            if ((*b)[axis].lo <= cuts[i] && cuts[i + 1] <= (*b)[axis].hi) slab.push_back(b);
        }
        if (!slab.empty()) total += (cuts[i + 1] - cuts[i]) * union_measure(slab, axes, depth + 1);
    }
    return total;
}

}  // namespace

Rational projection_volume(const BoxUnionBody& body, SubsetMask a) {
    if (a.empty() || !a.fits(body.n())) throw std::invalid_argument("projection subset must be a nonempty subset of [n]");
    std::vector<int> axes;
    for (int e : a.elements()) axes.push_back(e - 1);
    std::vector<const Box*> active;
    for (const Box& b : body.boxes()) {
        if (a.subset_of(b.support())) active.push_back(&b);
    }
    if (active.empty()) return Rational(0);
    return union_measure(active, axes, 0);
}

bool LogProjection::all_positive() const {
    return std::all_of(positive.begin(), positive.end(), [](bool p) { return p; });
}

LogProjection log_projection_vector(const BoxUnionBody& body) {
    const int n = body.n();
    LogProjection out{ProjectionVector(n), RealVector(n), std::vector<bool>((std::size_t{1} << n) - 1, false)};
    for (SubsetMask a : canonical_subset_order(n)) {
        Rational volume = projection_volume(body, a);
        if (volume > 0) {
            out.positive[a.bits() - 1] = true;
            out.logs[a] = boost::multiprecision::log(to_real(volume));
        }
        out.volumes[a] = std::move(volume);
    }
    return out;
}

BoxUnionBody disjoint_offset(std::span<const Box> boxes) {
    if (boxes.empty()) throw std::invalid_argument("disjoint_offset needs at least one box");
    const int n = boxes.front().n();
    std::vector<Box> placed;
    placed.reserve(boxes.size());
    std::optional<Rational> reach;  // largest coordinate used so far on any axis
    for (const Box& b : boxes) {
        if (b.n() != n) throw std::invalid_argument("boxes of different dimension");
        Box moved = b;
        if (reach) {
            Rational lowest = b[0].lo;
            for (const Interval& iv : b.intervals()) lowest = std::min(lowest, iv.lo);
            moved = b.translated(*reach - lowest + 1);
        }
        Rational top = moved[0].hi;
        for (const Interval& iv : moved.intervals()) top = std::max(top, iv.hi);
        reach = reach ? std::max(*reach, top) : top;
        placed.push_back(std::move(moved));
    }
    return BoxUnionBody(n, std::move(placed));
}

BoxUnionBody thicken(const BoxUnionBody& body, const Rational& eps) {
    if (eps <= 0) throw std::invalid_argument("thickening size must be positive");
    Rational reach = body.boxes().front()[0].hi;
    for (const Box& b : body.boxes()) {
        for (const Interval& iv : b.intervals()) reach = std::max(reach, iv.hi);
    }
    std::vector<Box> boxes = body.boxes();
    boxes.emplace_back(std::vector<Interval>(body.n(), Interval{reach + 1, reach + 1 + eps}));
    return BoxUnionBody(body.n(), std::move(boxes));
}

BoxUnionBody random_body(int n, int max_boxes, std::mt19937_64& rng, int grid, int extent) {
    std::uniform_int_distribution<int> box_count(1, max_boxes);
    std::uniform_int_distribution<int> tick(0, grid * extent);
    std::uniform_int_distribution<int> collapse(0, 7);
    std::vector<Box> boxes;
    const int count = box_count(rng);
    for (int b = 0; b < count; ++b) {
        std::vector<Interval> intervals;
        for (int axis = 0; axis < n; ++axis) {
            int lo = tick(rng);
            int hi = tick(rng);
            if (lo > hi) std::swap(lo, hi);
            if (collapse(rng) == 0) hi = lo;
            intervals.push_back(Interval{Rational(lo, grid), Rational(hi, grid)});
        }
        boxes.emplace_back(std::move(intervals));
    }
    return BoxUnionBody(n, std::move(boxes));
}

}  // namespace uccone
