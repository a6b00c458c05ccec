#include "uccone/covers.hpp"

#include <algorithm>
#include <array>
#include <functional>

namespace uccone {

UniformCover UniformCover::make(SubsetMask ground, std::vector<SubsetMask> parts, int k) {
    if (!is_uniform_cover(ground, parts, k)) {
        throw std::invalid_argument("parts do not form a " + std::to_string(k) + "-uniform cover of {" +
                                    ground.to_string() + "}");
    }
    std::sort(parts.begin(), parts.end(), canonical_less);
    return UniformCover{ground, std::move(parts), k};
}

std::string UniformCover::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i != 0) out += ',';
        out += '{' + parts[i].to_string() + '}';
    }
    return out + "] k=" + std::to_string(k) + " ground={" + ground.to_string() + "}";
}

bool cover_less(const UniformCover& a, const UniformCover& b) {
    if (a.k != b.k) return a.k < b.k;
    if (a.parts.size() != b.parts.size()) return a.parts.size() < b.parts.size();
    if (a.parts != b.parts) {
        return std::lexicographical_compare(a.parts.begin(), a.parts.end(), b.parts.begin(), b.parts.end(),
                                            canonical_less);
    }
    return canonical_less(a.ground, b.ground);
}

bool is_uniform_cover(SubsetMask ground, const std::vector<SubsetMask>& parts, int k) {
    if (ground.empty() || k < 1 || parts.empty()) return false;
    std::array<int, kMaxDimension + 1> coverage{};
    for (SubsetMask p : parts) {
        if (p.empty() || !p.subset_of(ground)) return false;
        for (int e : p.elements()) ++coverage[e];
    }
    for (int e : ground.elements()) {
        if (coverage[e] != k) return false;
    }
    return true;
}

namespace {

/// Depth-first search for multisets over `candidates` (each used at most caps[i] times) that cover
/// every element of `ground` exactly k times. Elements are settled in ascending order: a part is
/// chosen at the stage of its smallest element, so each multiset is produced once.
class CoverSearch {
public:
    using Visitor = std::function<bool(const std::vector<int>& multiplicity)>;

    CoverSearch(SubsetMask ground, int k, std::vector<SubsetMask> candidates, std::vector<int> caps)
        : k_(k), elements_(ground.elements()), candidates_(std::move(candidates)),
          caps_(std::move(caps)), multiplicity_(candidates_.size(), 0), by_stage_(elements_.size()) {
        for (std::size_t i = 0; i < candidates_.size(); ++i) {
            int first = candidates_[i].min_element();
            auto stage = std::find(elements_.begin(), elements_.end(), first) - elements_.begin();
            by_stage_[stage].push_back(i);
        }
    }

    /// Visits every solution; the visitor returns false to stop early.
    void run(const Visitor& visit) {
        visit_ = &visit;
        coverage_.fill(0);
        descend(0, 0, k_);
    }

private:
    bool descend(std::size_t stage, std::size_t pos, int need) {
        if (need == 0) {
            std::size_t next = stage + 1;
            if (next == elements_.size()) return (*visit_)(multiplicity_);
            return descend(next, 0, k_ - coverage_[elements_[next]]);
        }
        const auto& options = by_stage_[stage];
        if (pos == options.size()) return true;
        std::size_t part = options[pos];
        const auto members = candidates_[part].elements();
        int most = std::min(need, caps_[part]);
        for (int e : members) most = std::min(most, k_ - coverage_[e]);
        for (int m = most; m >= 0; --m) {
            add(part, members, m);
            bool keep_going = descend(stage, pos + 1, need - m);
            add(part, members, -m);
            if (!keep_going) return false;
        }
        return true;
    }

    void add(std::size_t part, const std::vector<int>& members, int m) {
        multiplicity_[part] += m;
        for (int e : members) coverage_[e] += m;
    }

    int k_;
    std::vector<int> elements_;
    std::vector<SubsetMask> candidates_;
    std::vector<int> caps_;
    std::vector<int> multiplicity_;
    std::vector<std::vector<std::size_t>> by_stage_;
    std::array<int, kMaxDimension + 1> coverage_{};
    const Visitor* visit_ = nullptr;
};

std::vector<SubsetMask> expand(const std::vector<SubsetMask>& candidates, const std::vector<int>& multiplicity) {
    std::vector<SubsetMask> parts;
    for (std::size_t i = 0; i < candidates.size(); ++i) parts.insert(parts.end(), multiplicity[i], candidates[i]);
    std::sort(parts.begin(), parts.end(), canonical_less);
    return parts;
}

void check_ground(SubsetMask ground, int k_max) {
    if (ground.empty() || !ground.fits(kMaxDimension)) throw std::invalid_argument("ground set must be nonempty");
    if (k_max < 1) throw std::invalid_argument("k_max must be positive");
}

}  // namespace

std::vector<UniformCover> enumerate_covers(SubsetMask ground, int k_max, const EnumerationLimits& limits) {
    check_ground(ground, k_max);
    const std::vector<SubsetMask> candidates = nonempty_subsets(ground);
    std::vector<UniformCover> out;
    for (int k = 1; k <= k_max; ++k) {
        CoverSearch search(ground, k, candidates, std::vector<int>(candidates.size(), k));
        search.run([&](const std::vector<int>& multiplicity) {
            if (out.size() >= limits.max_covers) {
                throw ResourceLimit("more than " + std::to_string(limits.max_covers) + " covers of {" +
                                    ground.to_string() + "} with k <= " + std::to_string(k_max));
            }
            out.push_back(UniformCover{ground, expand(candidates, multiplicity), k});
            return true;
        });
    }
    std::sort(out.begin(), out.end(), cover_less);
    return out;
}

std::optional<std::pair<UniformCover, UniformCover>> decompose(const UniformCover& cover) {
    std::vector<SubsetMask> distinct;
    std::vector<int> caps;
    for (SubsetMask p : cover.parts) {
        if (!distinct.empty() && distinct.back() == p) {
            ++caps.back();
        } else {
            distinct.push_back(p);
            caps.push_back(1);
        }
    }
    // The smaller half of any split has multiplicity at most k/2.
    for (int sub_k = 1; 2 * sub_k <= cover.k; ++sub_k) {
        std::optional<std::vector<int>> found;
        CoverSearch search(cover.ground, sub_k, distinct, caps);
        search.run([&](const std::vector<int>& multiplicity) {
            found = multiplicity;
            return false;
        });
        if (!found) continue;
        std::vector<int> rest(caps);
        for (std::size_t i = 0; i < rest.size(); ++i) rest[i] -= (*found)[i];
        return std::pair{UniformCover{cover.ground, expand(distinct, *found), sub_k},
                         UniformCover{cover.ground, expand(distinct, rest), cover.k - sub_k}};
    }
    return std::nullopt;
}

std::vector<UniformCover> irreducible_covers(SubsetMask ground, int k_max, const EnumerationLimits& limits) {
    // A cover is reducible iff it contains an irreducible cover of smaller multiplicity as a
    // sub-multiset; enumerate_covers lists covers by ascending k, so those are already known.
    std::vector<UniformCover> irreducible;
    for (UniformCover& c : enumerate_covers(ground, k_max, limits)) {
        bool reducible = std::any_of(irreducible.begin(), irreducible.end(), [&](const UniformCover& d) {
            return d.k < c.k && std::includes(c.parts.begin(), c.parts.end(), d.parts.begin(), d.parts.end(),
                                              canonical_less);
        });
        if (!reducible) irreducible.push_back(std::move(c));
    }
    return irreducible;
}

}  // namespace uccone
