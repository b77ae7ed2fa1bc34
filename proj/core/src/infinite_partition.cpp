#include "partlab/infinite_partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace partlab {

namespace {

// Margin applied to closure-based restrictions (meet, pushforward) so that
// identifications among the first m elements are already stable; soundness
// over the descriptor pool is enforced by the double-horizon property tests.
constexpr int kClosureMargin = 64;
constexpr int kMaxPeriod = 512;
constexpr int kMaxProfileWindow = 8192;

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
    }
};

}  // namespace

using NodePtr = std::shared_ptr<const InfinitePartition::Node>;

struct InfinitePartition::Node {
    Kind kind;
    std::vector<int> ints;  // intervals pattern / prefix head rgs
    int arg = 0;            // residues modulus / glue bound
    std::optional<Surjection> surj;
    NodePtr a, b;

    std::string repr;
    NodePtr norm;  // normal form; null when the node is its own normal form
    std::optional<Profile> prof;
    BlockCount count;
    bool all_inf = false;

    Segment restrict(int m) const;
    std::vector<int> canonical_labels(int m) const { return restrict(m).labels(); }

    static NodePtr make(Kind k, std::vector<int> ints, int arg, std::optional<Surjection> s,
                        NodePtr a, NodePtr b);
};

namespace {

std::string node_repr(InfinitePartition::Kind k, const std::vector<int>& ints, int arg,
                      const std::optional<Surjection>& s, const NodePtr& a, const NodePtr& b) {
    using Kind = InfinitePartition::Kind;
    std::ostringstream os;
    switch (k) {
        case Kind::Singletons:
            os << "singletons";
            break;
        case Kind::Intervals:
            os << "intervals:";
            if (ints.size() == 1) {
                os << ints[0];
            } else {
                os << '(';
                for (size_t i = 0; i < ints.size(); ++i) {
                    if (i) os << ',';
                    os << ints[i];
                }
                os << ')';
            }
            break;
        case Kind::Residues:
            os << "residues:" << arg;
            break;
        case Kind::Prefix: {
            os << "prefix:[";
            for (size_t i = 0; i < ints.size(); ++i) {
                if (i) os << ',';
                os << ints[i];
            }
            os << "];" << a->repr;
            break;
        }
        case Kind::Glue:
            os << "glue(" << a->repr << ',' << arg << ')';
            break;
        case Kind::Meet:
            os << "meet(" << a->repr << ',' << b->repr << ')';
            break;
        case Kind::Push:
            os << "push(" << s->to_string() << ',' << a->repr << ')';
            break;
        case Kind::Pre:
            os << "pre(" << s->to_string() << ',' << a->repr << ')';
            break;
        case Kind::Interleave:
            os << "interleave(" << a->repr << ',' << b->repr << ')';
            break;
    }
    return os.str();
}

// ---- restriction computation (never consults normal forms) ----

std::vector<int> intervals_labels(const std::vector<int>& pattern, int m) {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(m));
    int block = 0;
    size_t pi = 0;
    int left = pattern[0];
    for (int n = 0; n < m; ++n) {
        out.push_back(block);
        if (--left == 0) {
            ++block;
            pi = (pi + 1) % pattern.size();
            left = pattern[pi];
        }
    }
    return out;
}

}  // namespace

Segment InfinitePartition::Node::restrict(int m) const {
    if (m <= 0) return Segment();
    switch (kind) {
        case Kind::Singletons: {
            std::vector<int> out(static_cast<size_t>(m));
            std::iota(out.begin(), out.end(), 0);
            return Segment::from_rgs(std::move(out));
        }
        case Kind::Intervals:
            return Segment::from_rgs(intervals_labels(ints, m));
        case Kind::Residues: {
            std::vector<int> out(static_cast<size_t>(m));
            for (int n = 0; n < m; ++n) out[static_cast<size_t>(n)] = n % arg;
            return Segment::from_rgs(std::move(out));
        }
        case Kind::Prefix: {
            int len = static_cast<int>(ints.size());
            int head_blocks = ints.empty() ? 0 : 1 + *std::max_element(ints.begin(), ints.end());
            std::vector<int> out;
            out.reserve(static_cast<size_t>(m));
            for (int n = 0; n < std::min(m, len); ++n) out.push_back(ints[static_cast<size_t>(n)]);
            if (m > len) {
                std::vector<int> tail = a->canonical_labels(m - len);
                for (int v : tail) out.push_back(head_blocks + v);
            }
            return Segment::from_rgs(std::move(out));
        }
        case Kind::Glue: {
            std::vector<int> child = a->canonical_labels(std::max(m, arg));
            if (arg <= 1) {
                child.resize(static_cast<size_t>(m));
                return Segment::from_rgs(std::move(child));
            }
            int merged_max = *std::max_element(child.begin(), child.begin() + arg);
            std::vector<int> out(static_cast<size_t>(m));
            for (int n = 0; n < m; ++n)
                out[static_cast<size_t>(n)] = std::max(0, child[static_cast<size_t>(n)] - merged_max);
            return Segment::from_rgs(std::move(out));
        }
        case Kind::Meet: {
            int window = 2 * m + kClosureMargin;
            std::vector<int> la = a->canonical_labels(window);
            std::vector<int> lb = b->canonical_labels(window);
            UnionFind uf(static_cast<size_t>(window));
            std::vector<int> last_of_a(static_cast<size_t>(window), -1);
            std::vector<int> last_of_b(static_cast<size_t>(window), -1);
            for (int n = 0; n < window; ++n) {
                int& pa = last_of_a[static_cast<size_t>(la[static_cast<size_t>(n)])];
                if (pa >= 0) uf.unite(pa, n);
                pa = n;
                int& pb = last_of_b[static_cast<size_t>(lb[static_cast<size_t>(n)])];
                if (pb >= 0) uf.unite(pb, n);
                pb = n;
            }
            std::vector<long long> roots(static_cast<size_t>(m));
            for (int n = 0; n < m; ++n) roots[static_cast<size_t>(n)] = uf.find(n);
            return Segment::canonicalize(std::span<const long long>(roots));
        }
        case Kind::Push: {
            int value_window = 2 * m + kClosureMargin;
            long arg_window = surj->coverage_bound(value_window);
            std::vector<int> child = a->canonical_labels(static_cast<int>(arg_window));
            long max_value = 0;
            for (long n = 0; n < arg_window; ++n) max_value = std::max(max_value, surj->apply(n));
            UnionFind uf(static_cast<size_t>(max_value + 1));
            std::vector<long> block_rep(child.empty() ? 0 : static_cast<size_t>(*std::max_element(child.begin(), child.end())) + 1, -1);
            for (long n = 0; n < arg_window; ++n) {
                long v = surj->apply(n);
                long& rep = block_rep[static_cast<size_t>(child[static_cast<size_t>(n)])];
                if (rep >= 0) uf.unite(static_cast<int>(rep), static_cast<int>(v));
                else rep = v;
            }
            std::vector<long long> roots(static_cast<size_t>(m));
            for (int v = 0; v < m; ++v) roots[static_cast<size_t>(v)] = uf.find(v);
            return Segment::canonicalize(std::span<const long long>(roots));
        }
        case Kind::Pre: {
            long max_value = 0;
            for (int n = 0; n < m; ++n) max_value = std::max(max_value, surj->apply(n));
            std::vector<int> child = a->canonical_labels(static_cast<int>(max_value) + 1);
            std::vector<long long> out(static_cast<size_t>(m));
            for (int n = 0; n < m; ++n) out[static_cast<size_t>(n)] = child[static_cast<size_t>(surj->apply(n))];
            return Segment::canonicalize(std::span<const long long>(out));
        }
        case Kind::Interleave: {
            int ha = (m + 1) / 2, hb = m / 2;
            std::vector<int> la = a->canonical_labels(ha);
            std::vector<int> lb = b->canonical_labels(hb);
            std::vector<long long> out(static_cast<size_t>(m));
            for (int n = 0; n < m; ++n) {
                if (n % 2 == 0) out[static_cast<size_t>(n)] = 2LL * la[static_cast<size_t>(n / 2)];
                else out[static_cast<size_t>(n)] = 2LL * lb[static_cast<size_t>(n / 2)] + 1;
            }
            return Segment::canonicalize(std::span<const long long>(out));
        }
    }
    return Segment();
}

namespace {

using Kind = InfinitePartition::Kind;
using Profile = InfinitePartition::Profile;
using BlockCount = InfinitePartition::BlockCount;
using CountKind = InfinitePartition::CountKind;

NodePtr mk(Kind k, std::vector<int> ints = {}, int arg = 0,
           std::optional<Surjection> s = std::nullopt, NodePtr a = nullptr, NodePtr b = nullptr);
// Builds a node the normalizer has already certified as normal; sets
// norm = self and computes the semantic facts. Must not re-enter rewriting.
NodePtr mk_normal(Kind k, std::vector<int> ints = {}, int arg = 0,
                  std::optional<Surjection> s = std::nullopt, NodePtr a = nullptr,
                  NodePtr b = nullptr);

// ---- normalization (exact rewrites only; children must be normal) ----

bool is_one_block(const NodePtr& n) {
    return n->count.kind == CountKind::Finite && n->count.value == 1;
}

NodePtr normalize_build(Kind k, std::vector<int> ints, int arg, std::optional<Surjection> s,
                        NodePtr na, NodePtr nb);

void flatten_meet(const NodePtr& n, std::vector<NodePtr>& out) {
    if (n->kind == Kind::Meet) {
        flatten_meet(n->a, out);
        flatten_meet(n->b, out);
    } else {
        out.push_back(n);
    }
}

NodePtr normal_meet(std::vector<NodePtr> operands) {
    std::vector<NodePtr> flat;
    for (const auto& op : operands) flatten_meet(op, flat);
    for (const auto& op : flat)
        if (is_one_block(op)) return mk_normal(Kind::Residues, {}, 1);
    // The finest partition is neutral for the meet.
    std::erase_if(flat, [](const NodePtr& n) { return n->kind == Kind::Singletons; });
    if (flat.empty()) return mk_normal(Kind::Singletons);
    std::sort(flat.begin(), flat.end(),
              [](const NodePtr& x, const NodePtr& y) { return x->repr < y->repr; });
    flat.erase(std::unique(flat.begin(), flat.end(),
                           [](const NodePtr& x, const NodePtr& y) { return x->repr == y->repr; }),
               flat.end());
    if (flat.size() == 1) return flat[0];
    bool all_interleave = std::all_of(flat.begin(), flat.end(),
                                      [](const NodePtr& n) { return n->kind == Kind::Interleave; });
    if (all_interleave) {
        std::vector<NodePtr> lefts, rights;
        for (const auto& n : flat) {
            lefts.push_back(n->a);
            rights.push_back(n->b);
        }
        return mk_normal(Kind::Interleave, {}, 0, std::nullopt, normal_meet(std::move(lefts)),
                         normal_meet(std::move(rights)));
    }
    NodePtr acc = flat[0];
    for (size_t i = 1; i < flat.size(); ++i)
        acc = mk_normal(Kind::Meet, {}, 0, std::nullopt, acc, flat[i]);
    return acc;
}

NodePtr normalize_build(Kind k, std::vector<int> ints, int arg, std::optional<Surjection> s,
                        NodePtr na, NodePtr nb) {
    switch (k) {
        case Kind::Singletons:
        case Kind::Intervals:
        case Kind::Residues:
            return mk_normal(k, std::move(ints), arg, std::move(s), nullptr, nullptr);
        case Kind::Prefix:
            if (ints.empty()) return na;
            return mk_normal(k, std::move(ints), arg, std::nullopt, std::move(na), nullptr);
        case Kind::Glue: {
            if (arg <= 1) return na;
            if (na->kind == Kind::Glue)
                return normalize_build(Kind::Glue, {}, std::max(arg, na->arg), std::nullopt, na->a,
                                       nullptr);
            if (is_one_block(na)) return na;
            return mk_normal(Kind::Glue, {}, arg, std::nullopt, std::move(na), nullptr);
        }
        case Kind::Meet:
            return normal_meet({std::move(na), std::move(nb)});
        case Kind::Push: {
            if (s->kind() == Surjection::Kind::Identity) return na;
            if (na->kind == Kind::Interleave) {
                if (s->kind() == Surjection::Kind::Fact3F) return na->a;
                if (s->kind() == Surjection::Kind::Fact3G) return na->b;
            }
            return mk_normal(Kind::Push, {}, 0, std::move(s), std::move(na), nullptr);
        }
        case Kind::Pre: {
            if (s->kind() == Surjection::Kind::Identity) return na;
            if (na->kind == Kind::Meet) {
                std::vector<NodePtr> ops;
                flatten_meet(na, ops);
                std::vector<NodePtr> mapped;
                mapped.reserve(ops.size());
                for (auto& op : ops)
                    mapped.push_back(normalize_build(Kind::Pre, {}, 0, s, op, nullptr));
                return normal_meet(std::move(mapped));
            }
            return mk_normal(Kind::Pre, {}, 0, std::move(s), std::move(na), nullptr);
        }
        case Kind::Interleave:
            return mk_normal(Kind::Interleave, {}, 0, std::nullopt, std::move(na), std::move(nb));
    }
    return nullptr;
}

// ---- profiles, block counts, block-size certificates ----

// Checks index(n + period) = index(n) + delta on [lead, window) and again at
// a doubled window; rejected profiles fall back to horizon verdicts.
std::optional<Profile> derive_profile(const InfinitePartition::Node& node, int period, int lead0) {
    if (period <= 0 || period > kMaxPeriod) return std::nullopt;
    for (int lead = lead0; lead <= lead0 + 8 * period; lead += std::max(1, period)) {
        int w1 = lead + 4 * period;
        if (w1 + period > kMaxProfileWindow) return std::nullopt;
        std::vector<int> l1 = node.canonical_labels(w1 + period);
        int delta = l1[static_cast<size_t>(lead + period)] - l1[static_cast<size_t>(lead)];
        if (delta < 0) continue;
        bool ok = true;
        for (int n = lead; n < w1 && ok; ++n)
            ok = l1[static_cast<size_t>(n + period)] == l1[static_cast<size_t>(n)] + delta;
        if (!ok) continue;
        int w2 = 2 * w1;
        if (w2 + period > kMaxProfileWindow) return std::nullopt;
        std::vector<int> l2 = node.canonical_labels(w2 + period);
        ok = true;
        for (int n = lead; n < w2 && ok; ++n)
            ok = l2[static_cast<size_t>(n + period)] == l2[static_cast<size_t>(n)] + delta;
        if (ok) return Profile{lead, period, delta};
    }
    return std::nullopt;
}

std::optional<Profile> structural_profile(const InfinitePartition::Node& node) {
    switch (node.kind) {
        case Kind::Singletons:
            return Profile{0, 1, 1};
        case Kind::Intervals: {
            int sum = std::accumulate(node.ints.begin(), node.ints.end(), 0);
            return Profile{0, sum, static_cast<int>(node.ints.size())};
        }
        case Kind::Residues:
            return Profile{0, node.arg, 0};
        case Kind::Prefix: {
            if (!node.a->prof) return std::nullopt;
            const Profile& t = *node.a->prof;
            return Profile{static_cast<int>(node.ints.size()) + t.lead, t.period, t.delta};
        }
        case Kind::Glue: {
            if (!node.a->prof) return std::nullopt;
            const Profile& c = *node.a->prof;
            std::vector<int> lab = node.a->canonical_labels(std::max(node.arg, c.lead + c.period));
            int merged_max = *std::max_element(lab.begin(), lab.begin() + node.arg);
            if (c.delta == 0) return Profile{std::max(c.lead, node.arg), c.period, 0};
            int min_window = *std::min_element(lab.begin() + c.lead, lab.begin() + c.lead + c.period);
            int j = 0;
            while (min_window + j * c.delta <= merged_max) ++j;
            return Profile{c.lead + j * c.period, c.period, c.delta};
        }
        case Kind::Meet: {
            if (!node.a->prof || !node.b->prof) return std::nullopt;
            long p = std::lcm<long>(node.a->prof->period, node.b->prof->period);
            if (p > kMaxPeriod) return std::nullopt;
            return derive_profile(node, static_cast<int>(p),
                                  std::max(node.a->prof->lead, node.b->prof->lead));
        }
        case Kind::Interleave: {
            if (!node.a->prof || !node.b->prof) return std::nullopt;
            long p = 2 * std::lcm<long>(node.a->prof->period, node.b->prof->period);
            if (p > kMaxPeriod) return std::nullopt;
            return derive_profile(node, static_cast<int>(p),
                                  2 * std::max(node.a->prof->lead, node.b->prof->lead));
        }
        case Kind::Pre: {
            if (!node.a->prof) return std::nullopt;
            const Profile& c = *node.a->prof;
            int p = c.period, lead = c.lead;
            switch (node.surj->kind()) {
                case Surjection::Kind::Halving:
                case Surjection::Kind::Fact3F:
                case Surjection::Kind::Fact3G:
                    p = 2 * c.period;
                    lead = 2 * c.lead;
                    break;
                case Surjection::Kind::Table:
                    lead = c.lead + static_cast<int>(node.surj->coverage_bound(c.lead + 1));
                    break;
                default:
                    break;
            }
            return derive_profile(node, p, lead);
        }
        case Kind::Push:
            return std::nullopt;
    }
    return std::nullopt;
}

BlockCount count_from_profile(const InfinitePartition::Node& node, const Profile& p) {
    if (p.delta > 0) return {CountKind::Infinite, 0};
    std::vector<int> lab = node.canonical_labels(p.lead + p.period);
    int mx = lab.empty() ? -1 : *std::max_element(lab.begin(), lab.end());
    return {CountKind::Finite, mx + 1};
}

BlockCount structural_count(const InfinitePartition::Node& node) {
    switch (node.kind) {
        case Kind::Singletons:
        case Kind::Intervals:
            return {CountKind::Infinite, 0};
        case Kind::Residues:
            return {CountKind::Finite, node.arg};
        case Kind::Prefix: {
            int head = node.ints.empty() ? 0 : 1 + *std::max_element(node.ints.begin(), node.ints.end());
            if (node.a->count.kind == CountKind::Finite)
                return {CountKind::Finite, head + node.a->count.value};
            return node.a->count;
        }
        case Kind::Glue: {
            if (node.arg <= 1) return node.a->count;
            if (node.a->count.kind == CountKind::Infinite) return {CountKind::Infinite, 0};
            if (node.a->count.kind == CountKind::Finite) {
                std::vector<int> lab = node.a->canonical_labels(node.arg);
                int merged_max = *std::max_element(lab.begin(), lab.end());
                return {CountKind::Finite, node.a->count.value - merged_max};
            }
            return {CountKind::Unknown, 0};
        }
        case Kind::Pre:
            return node.a->count;
        case Kind::Interleave: {
            if (node.a->count.kind == CountKind::Infinite || node.b->count.kind == CountKind::Infinite)
                return {CountKind::Infinite, 0};
            if (node.a->count.kind == CountKind::Finite && node.b->count.kind == CountKind::Finite)
                return {CountKind::Finite, node.a->count.value + node.b->count.value};
            return {CountKind::Unknown, 0};
        }
        case Kind::Meet:
        case Kind::Push:
            return {CountKind::Unknown, 0};
    }
    return {CountKind::Unknown, 0};
}

bool structural_all_infinite(const InfinitePartition::Node& node) {
    switch (node.kind) {
        case Kind::Residues:
            return true;
        case Kind::Glue:
        case Kind::Pre:
            return node.a->all_inf;
        case Kind::Interleave:
            return node.a->all_inf && node.b->all_inf;
        default:
            return false;
    }
}

NodePtr mk_normal(Kind k, std::vector<int> ints, int arg, std::optional<Surjection> s, NodePtr a,
                  NodePtr b) {
    auto node = std::make_shared<InfinitePartition::Node>();
    node->kind = k;
    node->ints = std::move(ints);
    node->arg = arg;
    node->surj = std::move(s);
    node->a = std::move(a);
    node->b = std::move(b);
    node->repr = node_repr(k, node->ints, node->arg, node->surj, node->a, node->b);
    node->norm = nullptr;  // a null norm marks the node as its own normal form
    node->prof = structural_profile(*node);
    node->count = structural_count(*node);
    if (node->count.kind == CountKind::Unknown && node->prof)
        node->count = count_from_profile(*node, *node->prof);
    node->all_inf = structural_all_infinite(*node);
    return node;
}

NodePtr mk(Kind k, std::vector<int> ints, int arg, std::optional<Surjection> s, NodePtr a,
           NodePtr b) {
    auto node = std::make_shared<InfinitePartition::Node>();
    node->kind = k;
    node->ints = std::move(ints);
    node->arg = arg;
    node->surj = std::move(s);
    node->a = std::move(a);
    node->b = std::move(b);
    node->repr = node_repr(k, node->ints, node->arg, node->surj, node->a, node->b);

    NodePtr na = node->a ? (node->a->norm ? node->a->norm : node->a) : nullptr;
    NodePtr nb = node->b ? (node->b->norm ? node->b->norm : node->b) : nullptr;
    node->norm = normalize_build(k, node->ints, node->arg, node->surj, na, nb);
    node->prof = node->norm->prof;
    node->count = node->norm->count;
    node->all_inf = node->norm->all_inf;
    return node;
}

}  // namespace

NodePtr InfinitePartition::Node::make(Kind k, std::vector<int> ints, int arg,
                                      std::optional<Surjection> s, NodePtr a, NodePtr b) {
    return mk(k, std::move(ints), arg, std::move(s), std::move(a), std::move(b));
}

// ---- public API ----

InfinitePartition InfinitePartition::singletons() {
    return InfinitePartition(Node::make(Kind::Singletons, {}, 0, std::nullopt, nullptr, nullptr));
}

InfinitePartition InfinitePartition::intervals(std::vector<int> pattern) {
    if (pattern.empty()) throw std::invalid_argument("intervals: empty pattern");
    for (int l : pattern)
        if (l <= 0) throw std::invalid_argument("intervals: lengths must be positive");
    return InfinitePartition(Node::make(Kind::Intervals, std::move(pattern), 0, std::nullopt, nullptr, nullptr));
}

InfinitePartition InfinitePartition::residues(int k) {
    if (k < 1) throw std::invalid_argument("residues: modulus must be >= 1");
    return InfinitePartition(Node::make(Kind::Residues, {}, k, std::nullopt, nullptr, nullptr));
}

InfinitePartition InfinitePartition::with_prefix(const Segment& head, const InfinitePartition& tail) {
    return InfinitePartition(Node::make(Kind::Prefix, head.labels(), 0, std::nullopt, tail.node_, nullptr));
}

InfinitePartition InfinitePartition::glued(const InfinitePartition& x, int n) {
    if (n < 0) throw std::invalid_argument("glue: bound must be >= 0");
    return InfinitePartition(Node::make(Kind::Glue, {}, n, std::nullopt, x.node_, nullptr));
}

InfinitePartition InfinitePartition::meet_of(const InfinitePartition& a, const InfinitePartition& b) {
    return InfinitePartition(Node::make(Kind::Meet, {}, 0, std::nullopt, a.node_, b.node_));
}

InfinitePartition InfinitePartition::pushforward_of(const Surjection& f, const InfinitePartition& x) {
    return InfinitePartition(Node::make(Kind::Push, {}, 0, f, x.node_, nullptr));
}

InfinitePartition InfinitePartition::preimage_of(const Surjection& f, const InfinitePartition& x) {
    return InfinitePartition(Node::make(Kind::Pre, {}, 0, f, x.node_, nullptr));
}

InfinitePartition InfinitePartition::interleave_of(const InfinitePartition& a, const InfinitePartition& b) {
    return InfinitePartition(Node::make(Kind::Interleave, {}, 0, std::nullopt, a.node_, b.node_));
}

Segment InfinitePartition::restrict_to(int m) const {
    if (m < 0) throw std::invalid_argument("restrict: negative length");
    return node_->restrict(m);
}

InfinitePartition::BlockCount InfinitePartition::block_count() const { return node_->count; }
bool InfinitePartition::all_blocks_infinite() const { return node_->all_inf; }
std::optional<InfinitePartition::Profile> InfinitePartition::profile() const { return node_->prof; }
InfinitePartition InfinitePartition::normalized() const {
    return InfinitePartition(node_->norm ? node_->norm : node_);
}
const std::string& InfinitePartition::to_string() const { return node_->repr; }
InfinitePartition::Kind InfinitePartition::kind() const { return node_->kind; }
InfinitePartition InfinitePartition::child_a() const { return InfinitePartition(node_->a); }
InfinitePartition InfinitePartition::child_b() const { return InfinitePartition(node_->b); }
const Surjection& InfinitePartition::surjection() const { return *node_->surj; }

// ---- expression parser ----

namespace {

struct Parser {
    std::string_view text;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("parse error at " + std::to_string(pos) + ": " + what);
    }
    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_space();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }
    bool eat_word(std::string_view w) {
        skip_space();
        if (text.substr(pos, w.size()) == w) {
            pos += w.size();
            return true;
        }
        return false;
    }
    int parse_int() {
        skip_space();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        return std::stoi(std::string(text.substr(start, pos - start)));
    }

    std::vector<int> parse_rgs_literal() {
        skip_space();
        expect('[');
        std::vector<int> vals;
        skip_space();
        if (eat(']')) return vals;
        while (true) {
            vals.push_back(parse_int());
            if (eat(',')) continue;
            expect(']');
            break;
        }
        return vals;
    }

    // Unparenthesized pattern entries extend on ',' unless the following
    // integer immediately precedes ')' (that one belongs to an enclosing
    // glue). The canonical form parenthesizes multi-entry patterns.
    std::vector<int> parse_pattern() {
        std::vector<int> pattern;
        if (eat('(')) {
            while (true) {
                pattern.push_back(parse_int());
                if (eat(',')) continue;
                expect(')');
                break;
            }
            return pattern;
        }
        pattern.push_back(parse_int());
        while (true) {
            size_t save = pos;
            if (!eat(',')) break;
            skip_space();
            size_t digits_start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == digits_start) {
                pos = save;
                break;
            }
            size_t after = pos;
            skip_space();
            if (pos < text.size() && text[pos] == ')') {
                pos = save;
                break;
            }
            pattern.push_back(std::stoi(std::string(text.substr(digits_start, after - digits_start))));
            pos = after;
        }
        return pattern;
    }

    Surjection parse_surjection_arg() {
        skip_space();
        size_t start = pos;
        int bracket = 0;
        while (pos < text.size()) {
            char c = text[pos];
            if (c == '[') ++bracket;
            if (c == ']') --bracket;
            if (c == ',' && bracket == 0) break;
            ++pos;
        }
        return Surjection::parse(text.substr(start, pos - start));
    }

    InfinitePartition parse_expr() {
        skip_space();
        if (eat_word("singletons")) return InfinitePartition::singletons();
        if (eat_word("intervals:")) return InfinitePartition::intervals(parse_pattern());
        if (eat_word("residues:")) return InfinitePartition::residues(parse_int());
        if (eat_word("prefix:")) {
            Segment head = Segment::from_rgs(parse_rgs_literal());
            expect(';');
            InfinitePartition tail = parse_expr();
            return InfinitePartition::with_prefix(head, tail);
        }
        if (eat_word("glue(")) {
            InfinitePartition x = parse_expr();
            expect(',');
            int n = parse_int();
            expect(')');
            return InfinitePartition::glued(x, n);
        }
        if (eat_word("meet(")) {
            InfinitePartition a = parse_expr();
            expect(',');
            InfinitePartition b = parse_expr();
            expect(')');
            return InfinitePartition::meet_of(a, b);
        }
        if (eat_word("push(")) {
            Surjection f = parse_surjection_arg();
            expect(',');
            InfinitePartition x = parse_expr();
            expect(')');
            return InfinitePartition::pushforward_of(f, x);
        }
        if (eat_word("pre(")) {
            Surjection f = parse_surjection_arg();
            expect(',');
            InfinitePartition x = parse_expr();
            expect(')');
            return InfinitePartition::preimage_of(f, x);
        }
        if (eat_word("interleave(")) {
            InfinitePartition a = parse_expr();
            expect(',');
            InfinitePartition b = parse_expr();
            expect(')');
            return InfinitePartition::interleave_of(a, b);
        }
        fail("expected a partition expression");
    }
};

}  // namespace

InfinitePartition InfinitePartition::parse(std::string_view text) {
    Parser p{text};
    InfinitePartition result = p.parse_expr();
    p.skip_space();
    if (p.pos != text.size()) p.fail("trailing input");
    return result;
}

}  // namespace partlab
