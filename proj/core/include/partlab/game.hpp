#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "partlab/family.hpp"
#include "partlab/filter_lab.hpp"
#include "partlab/infinite_partition.hpp"
#include "partlab/segment.hpp"
#include "partlab/verdict.hpp"

namespace partlab {

// Alternating play: Player I's partitions X_1..X_n against Player II's
// segments s_1..s_n with per-move validity flags. Rules for move n:
//   |s_n| = n;  s_{n-1}* initial in s_n (s_0 = empty);
//   for all m < n: glue(s_n*, dom(s_m*)) coarser than X_{m+1} on dom(s_n*).
class Transcript {
public:
    int moves_i() const { return static_cast<int>(xs_.size()); }
    int moves_ii() const { return static_cast<int>(ss_.size()); }
    const InfinitePartition& x_move(int n) const { return xs_.at(static_cast<size_t>(n) - 1); }
    const Segment& s_move(int n) const { return ss_.at(static_cast<size_t>(n) - 1); }
    const Verdict& validity(int n) const { return flags_.at(static_cast<size_t>(n) - 1); }
    bool all_valid() const;

    void push_x(InfinitePartition x) { xs_.push_back(std::move(x)); }
    void push_s(Segment s, Verdict validity) {
        ss_.push_back(std::move(s));
        flags_.push_back(std::move(validity));
    }

    std::string to_text() const;

private:
    std::vector<InfinitePartition> xs_;
    std::vector<Segment> ss_;
    std::vector<Verdict> flags_;
};

// Referee check of candidate move s against the transcript so far (Player I
// must already have played move moves_ii()+1). All three clauses are decided
// exactly; the note names the violated rule.
Verdict validate_move(const Transcript& t, const Segment& s);

// Player I keyed by the opponent's last segment (root key: the empty
// segment), mirroring the X_s indexing.
class StrategyI {
public:
    explicit StrategyI(SegmentIndexedFamily family) : family_(std::move(family)) {}
    // Throws std::out_of_range on a totality gap.
    const InfinitePartition& next(const std::optional<Segment>& last) const {
        return family_.at(last.value_or(Segment()));
    }
    const SegmentIndexedFamily& family() const { return family_; }

private:
    SegmentIndexedFamily family_;
};

class StrategyII {
public:
    virtual ~StrategyII() = default;
    // Move for round t.moves_ii() + 1.
    virtual Segment next(const Transcript& t) = 0;
    virtual std::string name() const { return "strategy"; }
};

// Plays approx(X, n) at move n; valid against any Player I whose family X
// diagonalizes.
class FollowStrategy : public StrategyII {
public:
    explicit FollowStrategy(InfinitePartition x) : x_(std::move(x)) {}
    Segment next(const Transcript& t) override;
    std::string name() const override { return "follow(" + x_.to_string() + ")"; }

private:
    InfinitePartition x_;
};

struct PlayResult {
    Transcript transcript;
    bool completed = false;
    int aborted_move = 0;  // move number when not completed
    char offender = ' ';   // '1' = Player I, '2' = Player II
    std::string reason;
};

// Referee-driven play to the given depth. Moves whose domain exceeds the cap
// abort the play (engine policy; the rules do not bound domain growth).
PlayResult play(const StrategyI& one, StrategyII& two, int depth, int domain_cap = 64);

// The deepest played segment: every s_n extends the previous one, so the
// limit's restriction is s_depth.
Segment limit_prefix(const Transcript& t);

// Player I wins iff the limit partition escapes the filter. A finite
// transcript does not determine the limit, so the caller declares an
// extension consistent with limit_prefix. Holds = Player I wins, Fails =
// Player II wins, Unknown otherwise.
Verdict winner_check(const Transcript& t, const FilterGens& u, const InfinitePartition& extension,
                     int horizon = kDefaultHorizon);

}  // namespace partlab
