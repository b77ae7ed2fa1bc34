#pragma once

#include "partlab/infinite_partition.hpp"
#include "partlab/segment.hpp"
#include "partlab/verdict.hpp"

namespace partlab {

inline constexpr int kDefaultHorizon = 64;

// X is coarser than Y (each X-block a union of Y-blocks). Coarser plays the
// role of "smaller" throughout: filters are closed upward under refinement.

// Both finite, equal domains required: exact.
Verdict is_coarser(const Segment& p, const Segment& q);
// Finite vs infinite, relativized: each p-block is a union of q-blocks
// intersected with dom(p). Exact.
Verdict is_coarser(const Segment& p, const InfinitePartition& q);
// Both infinite: structural certificates where decidable, otherwise a
// counterexample scan below the horizon.
Verdict is_coarser(const InfinitePartition& p, const InfinitePartition& q,
                   int horizon = kDefaultHorizon);

// Finest partition coarser than both (lattice greatest lower bound).
Segment meet(const Segment& p, const Segment& q);
InfinitePartition meet(const InfinitePartition& a, const InfinitePartition& b);

// X with all blocks meeting {0..n-1} merged into one block.
Segment glue_initial(const Segment& p, int n);
InfinitePartition glue_initial(const InfinitePartition& x, int n);

// X coarser-star Y: some n has glue_initial(X, n) coarser than Y. A genuine
// Fails would need to refute every n in omega, so exhausting the horizon
// yields Unknown carrying the per-n refutations.
Verdict coarser_star(const InfinitePartition& x, const InfinitePartition& y,
                     int horizon = kDefaultHorizon);

}  // namespace partlab
