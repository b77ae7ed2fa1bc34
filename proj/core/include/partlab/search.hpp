#pragma once

#include <vector>

#include "partlab/coloring.hpp"
#include "partlab/infinite_partition.hpp"
#include "partlab/segment.hpp"

namespace partlab {

// Result of a witness search over the coarsening lattice. Degenerate marks a
// family with fewer than 2 members (vacuously monochromatic); Exhausted is a
// completed enumeration, not an error.
struct WitnessResult {
    bool found = false;
    Segment witness;
    int color = 0;
    bool degenerate = false;
    long long candidates = 0;

    bool exhausted() const { return !found; }
};

// Bounded family of a finite-scale partition X: all u with |u| = k,
// dom(u*) <= dom(X) and u* coarser than X relativized on dom(u*); optionally
// s initial in u.
std::vector<Segment> finite_scale_family(const Segment& x, int k);
std::vector<Segment> finite_scale_family(const Segment& x, int k, const Segment& within);

// Coarsenings of restrict(base, domain_bound) with exactly target_blocks
// blocks whose bounded family shares one color under pi. Depth-first over
// block groupings in canonical order (finest candidate first); the first
// witness wins; branches are pruned as soon as two decided members differ.
// The family arity defaults to the coloring's.
WitnessResult dr_witness_search(const Coloring& pi, const InfinitePartition& base,
                                int domain_bound, int target_blocks, int arity = -1);

// As above with an extra acceptance gate evaluated on monochromatic
// candidates; rejected candidates are skipped, not terminal.
using WitnessGate = std::function<bool(const Segment& witness, int color, bool degenerate)>;
WitnessResult dr_witness_search_gated(const Coloring& pi, const InfinitePartition& base,
                                      int domain_bound, int target_blocks, int arity,
                                      const WitnessGate& gate);

// Level-indexed variant: a coarsening X such that for every n < depth and
// every s initial in X with |s| = n+1, the bounded family of arity
// |s| + level_base is monochromatic.
WitnessResult scp_witness_search(const Coloring& pi, const InfinitePartition& base,
                                 int domain_bound, int depth, int level_base);

// Independent re-checks, recomputed from scratch.
bool verify_dr_witness(const Coloring& pi, const Segment& witness, int k, int* color_out = nullptr,
                       bool* degenerate_out = nullptr);
bool verify_scp_witness(const Coloring& pi, const Segment& witness, int depth, int level_base);

}  // namespace partlab
