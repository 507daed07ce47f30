#pragma once

#include <vector>

#include "aglab/group.hpp"

namespace aglab {

/// An ordered subset of group elements (sorted indices, no duplicates).
class SubsetIndex {
public:
    SubsetIndex() = default;
    SubsetIndex(GroupPtr group, std::vector<int> elements);

    static SubsetIndex empty(const GroupPtr& g);
    static SubsetIndex whole(const GroupPtr& g);
    static SubsetIndex single(const GroupPtr& g, int t);

    const GroupPtr& group() const { return group_; }
    int size() const { return static_cast<int>(elements_.size()); }
    bool is_empty() const { return elements_.empty(); }
    const std::vector<int>& elements() const { return elements_; }
    bool contains(int t) const;
    bool subset_of(const SubsetIndex& other) const;

    SubsetIndex complement() const;
    SubsetIndex inverse_set() const;  // S⁻¹
    SubsetIndex union_with(const SubsetIndex& other) const;
    SubsetIndex intersect(const SubsetIndex& other) const;
    SubsetIndex product(const SubsetIndex& other) const;  // {u·s}

    /// Word-metric ball {x : dist(x, S) ≤ r} (abelian backend).
    /// ball(0) = S; ball of the empty set is empty.
    SubsetIndex ball(int radius) const;

    /// min_{s∈S} word_dist(x, s); -1 for the empty set.
    int distance_to(int x) const;

private:
    GroupPtr group_;
    std::vector<int> elements_;
};

/// A decreasing chain S_1 ⊇ S_2 ⊇ ... ⊇ S of closed neighborhoods of the
/// base set, standing in for the topological neighborhood filter.
struct NeighborhoodFamily {
    SubsetIndex base;
    std::vector<SubsetIndex> chain;
    std::vector<int> radii;  // when ball-generated; empty for explicit chains

    /// Ball chain from a decreasing list of radii (radius 0 gives S itself).
    static NeighborhoodFamily from_radii(const SubsetIndex& base, std::vector<int> radii);
    static NeighborhoodFamily from_chain(SubsetIndex base, std::vector<SubsetIndex> chain);
};

}  // namespace aglab
