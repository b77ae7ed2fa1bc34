#include "partlab/game.hpp"

#include <sstream>
#include <stdexcept>

#include "partlab/partition_order.hpp"
#include "partlab/segment_space.hpp"

namespace partlab {

bool Transcript::all_valid() const {
    for (const auto& v : flags_)
        if (!v.is_holds()) return false;
    return true;
}

std::string Transcript::to_text() const {
    std::ostringstream os;
    for (size_t i = 0; i < xs_.size(); ++i) {
        os << "move " << (i + 1) << " I: " << xs_[i].to_string() << "\n";
        if (i < ss_.size())
            os << "move " << (i + 1) << " II: " << ss_[i].to_string() << " "
               << flags_[i].to_string() << "\n";
    }
    return os.str();
}

Verdict validate_move(const Transcript& t, const Segment& s) {
    int n = t.moves_ii() + 1;
    if (t.moves_i() < n)
        throw std::invalid_argument("validate_move: Player I has not played move " +
                                    std::to_string(n));
    if (s.block_count() != n)
        return Verdict::fails_note("rule |s_n|=n: move " + std::to_string(n) + " has " +
                                   std::to_string(s.block_count()) + " blocks");
    Segment prev_star = (n >= 2 ? t.s_move(n - 1) : Segment()).star();
    if (prev_star.domain() > s.domain() || !is_initial(prev_star, s))
        return Verdict::fails_note("rule s_{n-1}* initial in s_n");
    Segment s_star = s.star();
    for (int m = 0; m < n; ++m) {
        int cut = (m == 0 ? 0 : t.s_move(m).domain()) + 1;
        Verdict v = is_coarser(glue_initial(s_star, cut), t.x_move(m + 1));
        if (v.is_fails()) {
            Verdict out = Verdict::fails(v.counterexample()->first, v.counterexample()->second,
                                         "rule glue-coarser vs X_" + std::to_string(m + 1));
            return out;
        }
    }
    return Verdict::holds("all clauses hold");
}

Segment FollowStrategy::next(const Transcript& t) {
    return approx(x_, t.moves_ii() + 1);
}

PlayResult play(const StrategyI& one, StrategyII& two, int depth, int domain_cap) {
    if (depth < 1) throw std::invalid_argument("play: depth must be >= 1");
    PlayResult result;
    std::optional<Segment> last;
    for (int n = 1; n <= depth; ++n) {
        try {
            result.transcript.push_x(one.next(last));
        } catch (const std::out_of_range& e) {
            result.aborted_move = n;
            result.offender = '1';
            result.reason = std::string("strategy totality failure: ") + e.what();
            return result;
        }
        Segment s;
        try {
            s = two.next(result.transcript);
        } catch (const std::exception& e) {
            result.aborted_move = n;
            result.offender = '2';
            result.reason = std::string("strategy failure: ") + e.what();
            return result;
        }
        if (s.domain() > domain_cap) {
            result.aborted_move = n;
            result.offender = '2';
            result.reason = "domain cap " + std::to_string(domain_cap) + " exceeded";
            return result;
        }
        Verdict v = validate_move(result.transcript, s);
        result.transcript.push_s(s, v);
        if (!v.is_holds()) {
            result.aborted_move = n;
            result.offender = '2';
            result.reason = v.note();
            return result;
        }
        last = s;
    }
    result.completed = true;
    return result;
}

Segment limit_prefix(const Transcript& t) {
    if (t.moves_ii() < 1) throw std::invalid_argument("limit_prefix: empty transcript");
    if (!t.all_valid()) throw std::invalid_argument("limit_prefix: transcript has invalid moves");
    return t.s_move(t.moves_ii());
}

Verdict winner_check(const Transcript& t, const FilterGens& u, const InfinitePartition& extension,
                     int horizon) {
    Segment lp = limit_prefix(t);
    if (!is_initial(lp, extension))
        throw std::invalid_argument("winner_check: extension restriction differs from the limit prefix");
    Verdict membership = u.member(extension, horizon);
    if (membership.is_holds()) {
        Verdict out = Verdict::fails_note("Player II wins: limit is a filter member (" +
                                          membership.to_string() + ")");
        return out;
    }
    if (membership.is_fails()) {
        Verdict out = Verdict::holds("Player I wins: limit certified outside the filter (" +
                                     membership.to_string() + ")");
        return out;
    }
    return Verdict::unknown(horizon, "membership undecided at horizon");
}

}  // namespace partlab
