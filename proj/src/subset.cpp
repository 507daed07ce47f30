#include "aglab/subset.hpp"

#include <algorithm>
#include <stdexcept>

namespace aglab {

SubsetIndex::SubsetIndex(GroupPtr group, std::vector<int> elements)
    : group_(std::move(group)), elements_(std::move(elements)) {
    if (!group_) throw std::invalid_argument("SubsetIndex: null group");
    for (int e : elements_)
        if (e < 0 || e >= group_->order())
            throw std::invalid_argument("SubsetIndex: element out of range");
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

SubsetIndex SubsetIndex::empty(const GroupPtr& g) { return SubsetIndex(g, {}); }

SubsetIndex SubsetIndex::whole(const GroupPtr& g) {
    std::vector<int> all(g->order());
    for (int i = 0; i < g->order(); ++i) all[i] = i;
    return SubsetIndex(g, std::move(all));
}

SubsetIndex SubsetIndex::single(const GroupPtr& g, int t) { return SubsetIndex(g, {t}); }

bool SubsetIndex::contains(int t) const {
    return std::binary_search(elements_.begin(), elements_.end(), t);
}

bool SubsetIndex::subset_of(const SubsetIndex& other) const {
    return std::includes(other.elements_.begin(), other.elements_.end(),
                         elements_.begin(), elements_.end());
}

SubsetIndex SubsetIndex::complement() const {
    std::vector<int> out;
    out.reserve(group_->order() - size());
    for (int i = 0; i < group_->order(); ++i)
        if (!contains(i)) out.push_back(i);
    return SubsetIndex(group_, std::move(out));
}

SubsetIndex SubsetIndex::inverse_set() const {
    std::vector<int> out;
    out.reserve(elements_.size());
    for (int e : elements_) out.push_back(group_->inv(e));
    return SubsetIndex(group_, std::move(out));
}

SubsetIndex SubsetIndex::union_with(const SubsetIndex& other) const {
    require_same_group(group_, other.group_, "SubsetIndex::union_with");
    std::vector<int> out;
    std::set_union(elements_.begin(), elements_.end(), other.elements_.begin(),
                   other.elements_.end(), std::back_inserter(out));
    return SubsetIndex(group_, std::move(out));
}

SubsetIndex SubsetIndex::intersect(const SubsetIndex& other) const {
    require_same_group(group_, other.group_, "SubsetIndex::intersect");
    std::vector<int> out;
    std::set_intersection(elements_.begin(), elements_.end(), other.elements_.begin(),
                          other.elements_.end(), std::back_inserter(out));
    return SubsetIndex(group_, std::move(out));
}

SubsetIndex SubsetIndex::product(const SubsetIndex& other) const {
    require_same_group(group_, other.group_, "SubsetIndex::product");
    std::vector<int> out;
    out.reserve(elements_.size() * other.elements_.size());
    for (int u : elements_)
        for (int s : other.elements_) out.push_back(group_->mul(u, s));
    return SubsetIndex(group_, std::move(out));
}

SubsetIndex SubsetIndex::ball(int radius) const {
    if (radius < 0) throw std::invalid_argument("SubsetIndex::ball: negative radius");
    if (is_empty() || radius == 0) return *this;
    std::vector<int> out;
    for (int x = 0; x < group_->order(); ++x) {
        const int d = distance_to(x);
        if (d >= 0 && d <= radius) out.push_back(x);
    }
    return SubsetIndex(group_, std::move(out));
}

int SubsetIndex::distance_to(int x) const {
    if (is_empty()) return -1;
    int best = group_->word_dist(x, elements_[0]);
    for (std::size_t i = 1; i < elements_.size() && best > 0; ++i)
        best = std::min(best, group_->word_dist(x, elements_[i]));
    return best;
}

NeighborhoodFamily NeighborhoodFamily::from_radii(const SubsetIndex& base,
                                                  std::vector<int> radii) {
    if (radii.empty()) throw std::invalid_argument("NeighborhoodFamily: empty radius list");
    for (std::size_t i = 1; i < radii.size(); ++i)
        if (radii[i] > radii[i - 1])
            throw std::invalid_argument("NeighborhoodFamily: radii must be non-increasing");
    NeighborhoodFamily fam;
    fam.base = base;
    fam.radii = radii;
    for (int r : radii) fam.chain.push_back(base.ball(r));
    return fam;
}

NeighborhoodFamily NeighborhoodFamily::from_chain(SubsetIndex base,
                                                  std::vector<SubsetIndex> chain) {
    if (chain.empty()) throw std::invalid_argument("NeighborhoodFamily: empty chain");
    for (std::size_t i = 0; i < chain.size(); ++i) {
        require_same_group(base.group(), chain[i].group(), "NeighborhoodFamily");
        if (!base.subset_of(chain[i]))
            throw std::invalid_argument("NeighborhoodFamily: chain member does not contain the base set");
        if (i > 0 && !chain[i].subset_of(chain[i - 1]))
            throw std::invalid_argument("NeighborhoodFamily: chain is not decreasing");
    }
    NeighborhoodFamily fam;
    fam.base = std::move(base);
    fam.chain = std::move(chain);
    return fam;
}

}  // namespace aglab
