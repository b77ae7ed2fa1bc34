#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "partlab/segment.hpp"
#include "partlab/surjection.hpp"

namespace partlab {

// A partition of omega given by a closed descriptor algebra. The block-index
// function satisfies restricted growth (blocks ordered by least element) and
// restrictions are prefix-coherent.
//
// Expression grammar (shared with the CLI):
//   singletons | intervals:<l> | intervals:(<l1>,<l2>,...) | residues:<k>
//   | prefix:[<rgs>];<tail> | glue(<expr>,<n>) | meet(<expr>,<expr>)
//   | push(<surj>,<expr>) | pre(<surj>,<expr>) | interleave(<expr>,<expr>)
class InfinitePartition {
public:
    // Affine eventual periodicity of the canonical block-index function:
    // index(n + period) = index(n) + delta for all n >= lead.
    struct Profile {
        int lead;
        int period;
        int delta;
    };

    enum class CountKind { Finite, Infinite, Unknown };
    struct BlockCount {
        CountKind kind = CountKind::Unknown;
        long value = 0;  // meaningful only when kind == Finite
        bool is_omega() const { return kind == CountKind::Infinite; }
        bool known_finite() const { return kind == CountKind::Finite; }
    };

    static InfinitePartition singletons();
    static InfinitePartition intervals(std::vector<int> pattern);
    static InfinitePartition residues(int k);
    // Head blocks occupy {0..dom(head)-1}; tail blocks follow as fresh blocks.
    static InfinitePartition with_prefix(const Segment& head, const InfinitePartition& tail);
    static InfinitePartition glued(const InfinitePartition& x, int n);
    static InfinitePartition meet_of(const InfinitePartition& a, const InfinitePartition& b);
    static InfinitePartition pushforward_of(const Surjection& f, const InfinitePartition& x);
    static InfinitePartition preimage_of(const Surjection& f, const InfinitePartition& x);
    static InfinitePartition interleave_of(const InfinitePartition& a, const InfinitePartition& b);

    // Canonical RGS of {b ∩ m : b}, empty cells dropped; length m.
    Segment restrict_to(int m) const;
    // Block index of a single element.
    int index_of(int n) const { return restrict_to(n + 1).label(n); }

    BlockCount block_count() const;
    bool all_blocks_infinite() const;
    std::optional<Profile> profile() const;

    // Exact-rewrite normal form; used by the structural order prover, never
    // by restriction computation.
    InfinitePartition normalized() const;
    bool same_expression(const InfinitePartition& o) const { return to_string() == o.to_string(); }

    const std::string& to_string() const;
    static InfinitePartition parse(std::string_view text);

    enum class Kind { Singletons, Intervals, Residues, Prefix, Glue, Meet, Push, Pre, Interleave };
    Kind kind() const;
    // Children/parameters, valid per kind.
    InfinitePartition child_a() const;
    InfinitePartition child_b() const;
    const Surjection& surjection() const;

    struct Node;

private:
    explicit InfinitePartition(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
    friend struct Node;
};

}  // namespace partlab
