#include <random>

#include "doctest.h"
#include "partlab/partition_order.hpp"
#include "support/oracles.hpp"
#include "support/pool.hpp"

using namespace partlab;

namespace {
InfinitePartition P(const std::string& s) { return InfinitePartition::parse(s); }

// Independent certificate checkers used by the soundness suite: a Fails pair
// must lie in one right-hand block and split across left-hand blocks at the
// doubled horizon; a Holds must survive a doubled-horizon counterexample scan.
bool recheck_fails_pair(const InfinitePartition& p, const InfinitePartition& q,
                        std::pair<long, long> pair, int window) {
    Segment rp = p.restrict_to(window), rq = q.restrict_to(window);
    int a = static_cast<int>(pair.first), b = static_cast<int>(pair.second);
    if (b >= window) return false;
    return rq.label(a) == rq.label(b) && rp.label(a) != rp.label(b);
}

bool recheck_holds_scan(const InfinitePartition& p, const InfinitePartition& q, int window) {
    Segment rp = p.restrict_to(window), rq = q.restrict_to(window);
    for (int a = 0; a < window; ++a)
        for (int b = a + 1; b < window; ++b)
            if (rq.label(a) == rq.label(b) && rp.label(a) != rp.label(b)) return false;
    return true;
}
}  // namespace

TEST_CASE("relativized coarser for finite against infinite") {
    Verdict v = is_coarser(Segment::parse("[0,0,1]"), P("residues:2"));
    CHECK(v.is_fails());  // {0,2} is a residue trace split across the blocks
    CHECK(is_coarser(Segment::parse("[0,1,0]"), P("residues:2")).is_holds());
    CHECK(is_coarser(Segment::parse("[0,0,0]"), P("residues:1")).is_holds());
}

TEST_CASE("structural certificates for the infinite order") {
    CHECK(is_coarser(P("residues:2"), P("singletons"), 16).is_holds());
    CHECK(is_coarser(P("residues:1"), P("intervals:2"), 16).is_holds());
    CHECK(is_coarser(P("meet(intervals:2,intervals:3)"), P("intervals:2"), 16).is_holds());
    CHECK(is_coarser(P("pre(half,push(half,residues:3))"), P("residues:3"), 16).is_holds());
    CHECK(is_coarser(P("interleave(residues:1,residues:2)"),
                     P("interleave(intervals:2,residues:2)"), 16)
              .is_holds());
}

TEST_CASE("periodic decision is exact both ways") {
    CHECK(is_coarser(P("meet(intervals:2,intervals:3)"), P("intervals:6")).is_holds());
    CHECK(is_coarser(P("intervals:6"), P("meet(intervals:2,intervals:3)")).is_holds());
    Verdict v = is_coarser(P("intervals:3"), P("intervals:2"), 16);
    REQUIRE(v.is_fails());
    auto [a, b] = *v.counterexample();
    Segment r2 = P("intervals:2").restrict_to(16), r3 = P("intervals:3").restrict_to(16);
    CHECK(r2.label(static_cast<int>(a)) == r2.label(static_cast<int>(b)));
    CHECK(r3.label(static_cast<int>(a)) != r3.label(static_cast<int>(b)));
}

TEST_CASE("scan fallback yields Unknown without a certificate") {
    // Pushforwards of meets carry no profile; equal restrictions below the
    // horizon leave the verdict honestly open.
    Verdict v = is_coarser(P("push(half,meet(intervals:2,intervals:3))"), P("intervals:3"), 12);
    CHECK(v.is_unknown());
    CHECK(v.horizon() == 12);
}

TEST_CASE("coarser_star certificates and refutations") {
    CHECK(coarser_star(P("intervals:6"), P("intervals:2"), 8).witness() == 0);
    Verdict h2 = coarser_star(P("singletons"), P("prefix:[0,0];singletons"), 8);
    REQUIRE(h2.is_holds());
    CHECK(h2.witness() == 2);
    Verdict u = coarser_star(P("singletons"), P("residues:2"), 10);
    REQUIRE(u.is_unknown());
    CHECK(u.horizon() == 10);
    CHECK(u.note() == "every glue bound refuted below horizon");
    CHECK(u.details().size() == 11);  // one refutation per glue bound
}

TEST_CASE("verdict soundness: certificates re-validate at double horizon") {
    auto pool = fixtures::descriptor_pool();
    std::mt19937 rng(424242);
    int holds_seen = 0, fails_seen = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const auto& p = pool[rng() % pool.size()];
        const auto& q = pool[rng() % pool.size()];
        int horizon = 8 + static_cast<int>(rng() % 57);
        Verdict v = is_coarser(p, q, horizon);
        if (v.is_fails()) {
            ++fails_seen;
            REQUIRE(v.counterexample().has_value());
            CHECK(recheck_fails_pair(p, q, *v.counterexample(), 2 * horizon));
        } else if (v.is_holds()) {
            ++holds_seen;
            CHECK(recheck_holds_scan(p, q, 2 * horizon));
        }
    }
    CHECK(holds_seen > 0);
    CHECK(fails_seen > 0);
}

TEST_CASE("coarser_star witnesses re-validate at double horizon") {
    auto pool = fixtures::descriptor_pool();
    std::mt19937 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const auto& x = pool[rng() % pool.size()];
        const auto& y = pool[rng() % pool.size()];
        Verdict v = coarser_star(x, y, 24);
        if (v.is_holds()) {
            REQUIRE(v.witness().has_value());
            CHECK(recheck_holds_scan(glue_initial(x, static_cast<int>(*v.witness())), y, 48));
        }
    }
}
