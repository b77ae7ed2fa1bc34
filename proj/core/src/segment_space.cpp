#include "partlab/segment_space.hpp"

#include <algorithm>
#include <stdexcept>

namespace partlab {

Segment star(const Segment& s) { return s.star(); }

bool is_initial(const Segment& s, const Segment& t) {
    if (s.domain() > t.domain())
        throw std::invalid_argument("is_initial: dom(s) exceeds dom(t)");
    return t.prefix(s.domain()) == s;
}

bool is_initial(const Segment& s, const InfinitePartition& x) {
    return x.restrict_to(s.domain()) == s;
}

InfinitePartition seg_meet(const Segment& s, const InfinitePartition& x) {
    if (!is_coarser(s, x).is_holds())
        throw std::invalid_argument("seg_meet: s is not coarser than X on dom(s)");
    return meet(x, InfinitePartition::with_prefix(s, InfinitePartition::singletons()));
}

namespace {

struct Enumerator {
    int k;
    int bound;
    bool exact_domain;
    const std::optional<Segment>& within;
    const std::function<std::vector<int>(int)>& of_labels;
    const std::function<bool(const Segment&)>& visit;
    bool stopped = false;

    std::vector<int> u;
    std::vector<int> trace;      // filter labels on [0, d+1)
    std::vector<int> trace_rep;  // first u-label per filter trace, -1 when unseen

    void run() {
        if (k == 0) {
            // The empty segment is the unique 0-block partition.
            if (exact_domain && bound != 0) return;
            if (within && within->domain() > 0) return;
            if (!visit(Segment())) stopped = true;
            return;
        }
        int lo = std::max(k, within ? within->domain() : 1);
        for (int d = lo; d <= bound; ++d) {
            if (exact_domain && d != bound) continue;
            start_domain(d);
            if (stopped) return;
        }
    }

    void start_domain(int d) {
        if (of_labels) {
            trace = of_labels(d + 1);
            // dom(u) must be the fresh cell of u*: a minimum of a filter block.
            for (int j = 0; j < d; ++j)
                if (trace[static_cast<size_t>(j)] == trace[static_cast<size_t>(d)]) return;
            int traces = 0;
            for (int v : trace) traces = std::max(traces, v + 1);
            trace_rep.assign(static_cast<size_t>(traces), -1);
        }
        u.assign(static_cast<size_t>(d), 0);
        extend(0, -1, d);
    }

    void extend(int i, int max_so_far, int d) {
        if (stopped) return;
        if (i == d) {
            if (max_so_far != k - 1) return;
            Segment seg = Segment::from_rgs(u);
            if (!visit(seg)) stopped = true;
            return;
        }
        // Remaining positions must still introduce enough new blocks.
        if ((k - 1 - max_so_far) > (d - i)) return;
        int forced = -1;
        if (within && i < within->domain()) forced = within->label(i);
        if (of_labels) {
            int tr = trace[static_cast<size_t>(i)];
            int rep = trace_rep[static_cast<size_t>(tr)];
            if (rep >= 0) {
                // A filter trace must stay inside one u-block.
                if (forced >= 0 && forced != rep) return;
                forced = rep;
            }
        }
        int hi = std::min(max_so_far + 1, k - 1);
        int lo = 0;
        if (forced >= 0) {
            if (forced > hi) return;
            lo = hi = forced;
        }
        for (int lab = lo; lab <= hi; ++lab) {
            u[static_cast<size_t>(i)] = lab;
            int saved = -2;
            if (of_labels) {
                int tr = trace[static_cast<size_t>(i)];
                saved = trace_rep[static_cast<size_t>(tr)];
                if (saved < 0) trace_rep[static_cast<size_t>(tr)] = lab;
            }
            extend(i + 1, std::max(max_so_far, lab), d);
            if (of_labels && saved == -1)
                trace_rep[static_cast<size_t>(trace[static_cast<size_t>(i)])] = -1;
            if (stopped) return;
        }
    }
};

}  // namespace

void enumerate_with_labels(int k, int domain_bound, bool exact_domain,
                           const std::optional<Segment>& within,
                           const std::function<std::vector<int>(int)>& of_labels,
                           const std::function<bool(const Segment&)>& visit) {
    if (k < 0) throw std::invalid_argument("enumerate: negative block count");
    Enumerator e{k, domain_bound, exact_domain, within, of_labels, visit};
    e.run();
}

SegmentFamily::SegmentFamily(int block_count, int domain_bound, FamilyFilter filter,
                             bool exact_domain)
    : k_(block_count), bound_(domain_bound), filter_(std::move(filter)),
      exact_domain_(exact_domain) {
    if (k_ < 0) throw std::invalid_argument("SegmentFamily: negative block count");
    if (filter_.within && k_ > 0 && filter_.within->block_count() > k_)
        throw std::invalid_argument("SegmentFamily: |s| exceeds the family arity");
}

void SegmentFamily::for_each(const std::function<bool(const Segment&)>& visit) const {
    std::function<std::vector<int>(int)> of;
    if (filter_.of) {
        InfinitePartition x = *filter_.of;
        of = [x](int m) { return x.restrict_to(m).labels(); };
    }
    enumerate_with_labels(k_, bound_, exact_domain_, filter_.within, of, visit);
}

std::vector<Segment> SegmentFamily::members() const {
    std::vector<Segment> out;
    for_each([&](const Segment& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

long long SegmentFamily::size() const {
    long long n = 0;
    for_each([&](const Segment&) {
        ++n;
        return true;
    });
    return n;
}

SegmentFamily enumerate_segments(int k, int domain_bound, FamilyFilter filter, bool exact_domain) {
    return SegmentFamily(k, domain_bound, std::move(filter), exact_domain);
}

Segment approx(const InfinitePartition& x, int n) {
    if (n < 0) throw std::invalid_argument("approx: negative block count");
    if (n == 0) return Segment();
    auto bc = x.block_count();
    if (bc.known_finite() && bc.value <= n)
        throw std::invalid_argument("approx: partition has at most " + std::to_string(bc.value) +
                                    " blocks, need more than " + std::to_string(n));
    for (int window = std::max(16, 2 * (n + 1)); window <= (1 << 16); window *= 2) {
        Segment r = x.restrict_to(window);
        if (r.block_count() > n) {
            int pos = r.block_min(n);
            return r.prefix(pos);
        }
    }
    throw std::runtime_error("approx: block " + std::to_string(n) +
                             " not found within the scan cap");
}

Verdict neighborhood_contains(const Segment& s, const InfinitePartition& x,
                              const InfinitePartition& y, int horizon) {
    if (!is_coarser(s, x).is_holds())
        throw std::invalid_argument("malformed neighborhood: s is not coarser than X on dom(s)");
    if (!is_initial(s, y)) {
        Segment r = y.restrict_to(s.domain());
        for (int a = 0; a < s.domain(); ++a)
            for (int b = a + 1; b < s.domain(); ++b) {
                bool same_s = s.label(a) == s.label(b);
                bool same_y = r.label(a) == r.label(b);
                if (same_s != same_y) return Verdict::fails(a, b, "initial-segment clause");
            }
        return Verdict::fails_note("initial-segment clause");
    }
    Verdict order = is_coarser(y, x, horizon);
    if (order.is_holds()) return Verdict::holds("initial segment and coarser: " + order.note());
    return order;
}

bool fin_coarser(const Segment& s, const Segment& t) {
    if (s.domain() != t.domain()) return false;
    return is_coarser(s, t).is_holds();
}

}  // namespace partlab
