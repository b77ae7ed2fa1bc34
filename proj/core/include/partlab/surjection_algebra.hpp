#pragma once

#include <string>
#include <utility>
#include <vector>

#include "partlab/coloring.hpp"
#include "partlab/infinite_partition.hpp"
#include "partlab/partition_order.hpp"
#include "partlab/search.hpp"
#include "partlab/segment.hpp"
#include "partlab/surjection.hpp"

namespace partlab {

// f(X): the finest partition identifying f(n) with f(m) whenever n, m share
// an X-block. Restrictions use arguments up to the coverage bound so the
// closure is exact at the queried horizon.
InfinitePartition pushforward(const Surjection& f, const InfinitePartition& x);

// f^{-1}(X): block of n is the X-block of f(n). Exact at every restriction.
InfinitePartition preimage(const Surjection& f, const InfinitePartition& x);

// Blocks are the even-double images of X-blocks plus the odd-double images
// of Y-blocks; the fact3 projections recover the factors exactly.
InfinitePartition interleave(const InfinitePartition& x, const InfinitePartition& y);

enum class RespectClass { Respects, Disregards, CompletelyDisregards };

// Horizon-graded classification of f against X. Respects/CompletelyDisregards
// compare f^{-1}(f(X)) with X / the one-block pattern at the horizon;
// Disregards carries a positive certificate (a merge strictly between).
struct RespectVerdict {
    RespectClass label;
    int horizon;
    bool exact;
    std::string note;
    std::string label_text() const;
};

RespectVerdict classify_respect(const Surjection& f, const InfinitePartition& x,
                                int horizon = kDefaultHorizon);

// Finite injective assignment from an initial range, extended
// order-preservingly within blocks.
struct PartialPermutation {
    std::vector<std::pair<long, long>> pairs;
    bool is_injective() const;
};

// h mapping the k-th element of X(i) to the k-th element of g^{-1}(X)(i),
// emitted for all arguments below the bound. Requires every block of X
// infinite (descriptor-certified) and matching block counts at the bound.
PartialPermutation build_permutation(const InfinitePartition& x, const Surjection& g, int bound);

struct RespectWitness {
    WitnessResult search;
    RespectVerdict recheck;
    // The lemma coloring ties color 0 to Respects and color 1 to
    // CompletelyDisregards at the bound.
    bool consistent = false;
};

// Coarsenings of restrict(base, domain_bound) monochromatic under the
// disjoint-image coloring of f, re-verified through classify_respect on the
// singleton-tail extension of the witness.
RespectWitness respect_witness_search(const Surjection& f, const InfinitePartition& base,
                                      int domain_bound, int target_blocks);

}  // namespace partlab
