#pragma once

#include <string>
#include <vector>

#include "partlab/family.hpp"
#include "partlab/infinite_partition.hpp"
#include "partlab/partition_order.hpp"
#include "partlab/surjection.hpp"
#include "partlab/verdict.hpp"

namespace partlab {

// Finitely generated partition-filter approximation. Star mode: X is a
// member when some finite meet of generators is coarser-star below X.
// Principal mode: the single generator is plainly coarser. File format:
// first line "mode: star|principal", then one partition expression per line.
class FilterGens {
public:
    enum class Mode { Star, Principal };

    FilterGens(Mode mode, std::vector<InfinitePartition> gens, int default_horizon = kDefaultHorizon);

    Mode mode() const { return mode_; }
    const std::vector<InfinitePartition>& gens() const { return gens_; }
    int default_horizon() const { return horizon_; }

    // Properness at the horizon: the meet of all generators, glued at the
    // horizon, still shows a second block within the scan window. Structural
    // fast path when the meet is certified infinite-block.
    Verdict proper(int horizon) const;
    Verdict proper() const { return proper(horizon_); }

    Verdict member(const InfinitePartition& x, int horizon) const;
    Verdict member(const InfinitePartition& x) const { return member(x, horizon_); }

    std::string to_text() const;
    static FilterGens parse_text(const std::string& text, int default_horizon = kDefaultHorizon);

private:
    Mode mode_;
    std::vector<InfinitePartition> gens_;
    int horizon_;
};

// f(F), generated lazily by images of finite meets of generators (images of
// meets, not meets of images: pushforward does not commute with the meet).
// Throws when every derived generator collapses to one block.
FilterGens push_filter(const Surjection& f, const FilterGens& F);

// f^{-1}(F): generators are preimages of generators (preimage distributes
// over meets, so the plain generator set suffices).
FilterGens preimage_filter(const Surjection& f, const FilterGens& F);

// Generators interleave(X, Y) over generator pairs; the fact3 projections
// recover the factors on generators exactly.
FilterGens interleave_filters(const FilterGens& D, const FilterGens& E);

// F = f(G) checked for the GIVEN f, on generators at the horizon: every
// F-generator is a member of push_filter(f, G) and vice versa.
Verdict below_check(const FilterGens& F, const FilterGens& G, const Surjection& f,
                    int horizon = kDefaultHorizon);

using DiagFamily = SegmentIndexedFamily;

// X is coarser than family(empty) and, for every s with s* initial in X and
// |s| < depth, the head-glued X is coarser than family(s).
Verdict diagonalizes(const InfinitePartition& x, const DiagFamily& family, int depth,
                     int horizon = kDefaultHorizon);

}  // namespace partlab
