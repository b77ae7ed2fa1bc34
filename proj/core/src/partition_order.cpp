#include "partlab/partition_order.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace partlab {

namespace {

constexpr long kMaxDecisionWindow = 1 << 17;

// First counterexample pair (lexicographic): a, b in one q-block but split
// across p-blocks. Labels must cover a common domain.
std::optional<std::pair<int, int>> split_pair(const std::vector<int>& p,
                                              const std::vector<int>& q) {
    int n = static_cast<int>(std::min(p.size(), q.size()));
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (q[static_cast<size_t>(a)] == q[static_cast<size_t>(b)] &&
                p[static_cast<size_t>(a)] != p[static_cast<size_t>(b)])
                return std::make_pair(a, b);
    return std::nullopt;
}

bool structural_holds(const InfinitePartition& p, const InfinitePartition& q);

// p coarser than q by descriptor shape alone. All rules are exact theorems
// of the algebra; q is normalized by the caller.
bool structural_holds_normal(const InfinitePartition& p, const InfinitePartition& q) {
    auto pc = p.block_count();
    if (pc.known_finite() && pc.value == 1) return true;
    if (q.kind() == InfinitePartition::Kind::Singletons) return true;
    if (p.to_string() == q.to_string()) return true;
    // f-preimage of an f-pushforward is coarser than the original.
    if (p.kind() == InfinitePartition::Kind::Pre) {
        InfinitePartition inner = p.child_a();
        if (inner.kind() == InfinitePartition::Kind::Push &&
            p.surjection() == inner.surjection() &&
            inner.child_a().normalized().to_string() == q.to_string())
            return true;
    }
    // Gluing only coarsens the left side further.
    if (p.kind() == InfinitePartition::Kind::Glue && structural_holds(p.child_a(), q))
        return true;
    // A meet is coarser than each operand.
    if (p.kind() == InfinitePartition::Kind::Meet)
        if (structural_holds(p.child_a(), q) || structural_holds(p.child_b(), q)) return true;
    // Interleaves compare componentwise (the two halves never interact).
    if (p.kind() == InfinitePartition::Kind::Interleave &&
        q.kind() == InfinitePartition::Kind::Interleave)
        if (structural_holds(p.child_a(), q.child_a()) &&
            structural_holds(p.child_b(), q.child_b()))
            return true;
    return false;
}

bool structural_holds(const InfinitePartition& p, const InfinitePartition& q) {
    return structural_holds_normal(p.normalized(), q.normalized());
}

// Exact decision for a pair of affine eventually periodic partitions: all
// violations reduce by period shifts into [0, lead + period*(labels+2)).
std::optional<Verdict> periodic_decision(const InfinitePartition& p, const InfinitePartition& q) {
    auto pp = p.profile(), qp = q.profile();
    if (!pp || !qp) return std::nullopt;
    long period = std::lcm<long>(pp->period, qp->period);
    long lead = std::max(pp->lead, qp->lead);
    if (period <= 0 || period > 4096) return std::nullopt;
    std::vector<int> lp = p.restrict_to(static_cast<int>(lead + period)).labels();
    std::vector<int> lq = q.restrict_to(static_cast<int>(lead + period)).labels();
    int max_label = 0;
    for (int v : lp) max_label = std::max(max_label, v);
    for (int v : lq) max_label = std::max(max_label, v);
    long window = lead + period * (max_label + 3);
    if (window > kMaxDecisionWindow) return std::nullopt;
    std::vector<int> wp = p.restrict_to(static_cast<int>(window)).labels();
    std::vector<int> wq = q.restrict_to(static_cast<int>(window)).labels();
    if (auto pair = split_pair(wp, wq))
        return Verdict::fails(pair->first, pair->second, "periodic decision");
    return Verdict::holds("periodic decision at window " + std::to_string(window));
}

}  // namespace

Verdict is_coarser(const Segment& p, const Segment& q) {
    if (p.domain() != q.domain())
        throw std::invalid_argument("is_coarser: domain mismatch (" + std::to_string(p.domain()) +
                                    " vs " + std::to_string(q.domain()) + ")");
    if (auto pair = split_pair(p.labels(), q.labels()))
        return Verdict::fails(pair->first, pair->second, "exact");
    return Verdict::holds("exact");
}

Verdict is_coarser(const Segment& p, const InfinitePartition& q) {
    Segment r = q.restrict_to(p.domain());
    if (auto pair = split_pair(p.labels(), r.labels()))
        return Verdict::fails(pair->first, pair->second, "exact (relativized)");
    return Verdict::holds("exact (relativized)");
}

Verdict is_coarser(const InfinitePartition& p, const InfinitePartition& q, int horizon) {
    if (horizon <= 0) throw std::invalid_argument("is_coarser: horizon must be positive");
    InfinitePartition pn = p.normalized(), qn = q.normalized();
    if (structural_holds_normal(pn, qn)) return Verdict::holds("structural");
    if (auto decided = periodic_decision(pn, qn)) return *decided;
    std::vector<int> lp = p.restrict_to(horizon).labels();
    std::vector<int> lq = q.restrict_to(horizon).labels();
    if (auto pair = split_pair(lp, lq))
        return Verdict::fails(pair->first, pair->second, "scan at horizon");
    return Verdict::unknown(horizon, "no counterexample below horizon, no structural certificate");
}

Segment meet(const Segment& p, const Segment& q) {
    if (p.domain() != q.domain())
        throw std::invalid_argument("meet: domain mismatch");
    int n = p.domain();
    std::vector<int> parent(static_cast<size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
    };
    std::vector<int> last_p(static_cast<size_t>(n), -1), last_q(static_cast<size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        int& lp = last_p[static_cast<size_t>(p.label(i))];
        if (lp >= 0) unite(lp, i);
        lp = i;
        int& lq = last_q[static_cast<size_t>(q.label(i))];
        if (lq >= 0) unite(lq, i);
        lq = i;
    }
    std::vector<long long> roots(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) roots[static_cast<size_t>(i)] = find(i);
    return Segment::canonicalize(std::span<const long long>(roots));
}

InfinitePartition meet(const InfinitePartition& a, const InfinitePartition& b) {
    return InfinitePartition::meet_of(a, b);
}

Segment glue_initial(const Segment& p, int n) {
    if (n < 0 || n > p.domain())
        throw std::out_of_range("glue_initial: bound outside domain");
    if (n <= 1) return p;
    int merged_max = 0;
    for (int i = 0; i < n; ++i) merged_max = std::max(merged_max, p.label(i));
    std::vector<int> out(static_cast<size_t>(p.domain()));
    for (int i = 0; i < p.domain(); ++i) out[static_cast<size_t>(i)] = std::max(0, p.label(i) - merged_max);
    return Segment::from_rgs(std::move(out));
}

InfinitePartition glue_initial(const InfinitePartition& x, int n) {
    return InfinitePartition::glued(x, n);
}

Verdict coarser_star(const InfinitePartition& x, const InfinitePartition& y, int horizon) {
    if (horizon <= 0) throw std::invalid_argument("coarser_star: horizon must be positive");
    bool all_fails = true;
    Verdict out = Verdict::unknown(horizon);
    std::vector<std::string> refutations;
    for (int n = 0; n <= horizon; ++n) {
        Verdict v = is_coarser(glue_initial(x, n), y, horizon);
        if (v.is_holds()) {
            Verdict h = Verdict::holds_at(n, v.note());
            return h;
        }
        if (v.is_fails()) {
            refutations.push_back("n=" + std::to_string(n) + ": " + v.to_string());
        } else {
            all_fails = false;
        }
    }
    Verdict u = Verdict::unknown(horizon, all_fails ? "every glue bound refuted below horizon"
                                                    : "horizon exhausted");
    for (auto& r : refutations) u.add_detail(std::move(r));
    return u;
}

}  // namespace partlab
