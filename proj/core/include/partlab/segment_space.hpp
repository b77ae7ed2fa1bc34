#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "partlab/infinite_partition.hpp"
#include "partlab/partition_order.hpp"
#include "partlab/segment.hpp"
#include "partlab/verdict.hpp"

namespace partlab {

// s*: s with the fresh singleton block {dom(s)} appended.
Segment star(const Segment& s);

// s is an initial segment of T: each block of s equals a T-block intersected
// with dom(s). Exact in both cases; only the restriction of T to dom(s)
// matters.
bool is_initial(const Segment& s, const Segment& t);
bool is_initial(const Segment& s, const InfinitePartition& x);

// Finest Y with s initial in Y and Y coarser than X: every X-block meeting
// dom(s) merges into the block of s holding its trace, the rest survive.
// Requires s coarser than X on dom(s).
InfinitePartition seg_meet(const Segment& s, const InfinitePartition& x);

struct FamilyFilter {
    std::optional<Segment> within;        // s initial in u
    std::optional<InfinitePartition> of;  // u* coarser than X, exact on dom(u*)
};

// Bounded segment family: all u with |u| = blockCount and dom(u) <= bound
// satisfying the filter, in canonical order (domain ascending, then
// lexicographic RGS). Enumeration is lazy and restartable.
class SegmentFamily {
public:
    SegmentFamily(int block_count, int domain_bound, FamilyFilter filter = {},
                  bool exact_domain = false);

    int block_count() const { return k_; }
    int domain_bound() const { return bound_; }

    // Visitor returns false to stop early.
    void for_each(const std::function<bool(const Segment&)>& visit) const;
    std::vector<Segment> members() const;
    long long size() const;

private:
    int k_;
    int bound_;
    FamilyFilter filter_;
    bool exact_domain_;
};

SegmentFamily enumerate_segments(int k, int domain_bound, FamilyFilter filter = {},
                                 bool exact_domain = false);

// Internal enumeration core shared with relativized families: the provider
// returns the first m labels of the filtering partition.
void enumerate_with_labels(int k, int domain_bound, bool exact_domain,
                           const std::optional<Segment>& within,
                           const std::function<std::vector<int>(int)>& of_labels,
                           const std::function<bool(const Segment&)>& visit);

// p_n(X): the unique s with s* initial in X and |s| = n — the restriction of
// X below min(X(n)). Requires more than n blocks.
Segment approx(const InfinitePartition& x, int n);

// Y lies in the dual Ellentuck neighborhood (s, X).
Verdict neighborhood_contains(const Segment& s, const InfinitePartition& x,
                              const InfinitePartition& y, int horizon = kDefaultHorizon);

// Equal domains and coarser; the finitization order on approximations.
bool fin_coarser(const Segment& s, const Segment& t);

}  // namespace partlab
