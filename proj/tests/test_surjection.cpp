#include <map>
#include <set>

#include "doctest.h"
#include "partlab/partition_order.hpp"
#include "partlab/segment_space.hpp"
#include "partlab/surjection_algebra.hpp"
#include "support/pool.hpp"

using namespace partlab;

namespace {
InfinitePartition P(const std::string& s) { return InfinitePartition::parse(s); }
Segment S(const std::string& s) { return Segment::parse(s); }
}  // namespace

TEST_CASE("surjection grammar and coverage bounds") {
    for (const auto& f : fixtures::surjection_set()) {
        CHECK(Surjection::parse(f.to_string()) == f);
        // Coverage: every value below m is attained by an argument below the bound.
        for (int m : {1, 5, 16}) {
            std::set<long> attained;
            for (long n = 0; n < f.coverage_bound(m); ++n) attained.insert(f.apply(n));
            for (long v = 0; v < m; ++v) CHECK(attained.count(v) == 1);
        }
        CHECK(f.coverage_bound(8) <= f.coverage_bound(16));
    }
    CHECK(Surjection::fact3f().apply(6) == 3);
    CHECK(Surjection::fact3f().apply(7) == 0);
    CHECK(Surjection::fact3g().apply(7) == 3);
    CHECK(Surjection::fact3g().apply(6) == 0);
    CHECK_THROWS_AS(Surjection::table({2, 3}, 0), std::invalid_argument);  // 0 never attained
    CHECK_THROWS_AS(Surjection::table({0}, 2), std::invalid_argument);     // shift beyond table
    CHECK_THROWS_AS(Surjection::parse("nope"), std::invalid_argument);
}

TEST_CASE("pushforward merges image classes") {
    for (const auto& x : fixtures::descriptor_pool())
        CHECK(pushforward(Surjection::identity(), x).restrict_to(48) == x.restrict_to(48));
    CHECK(pushforward(Surjection::halving(), P("intervals:2")).restrict_to(16) ==
          P("singletons").restrict_to(16));
    CHECK(pushforward(Surjection::halving(), P("residues:2")).restrict_to(16).block_count() == 1);
}

TEST_CASE("preimage pulls labels back through f") {
    for (const auto& x : fixtures::descriptor_pool())
        CHECK(preimage(Surjection::identity(), x).restrict_to(48) == x.restrict_to(48));
    CHECK(preimage(Surjection::halving(), P("singletons")).restrict_to(24) ==
          P("intervals:2").restrict_to(24));
    CHECK(preimage(Surjection::halving(), P("residues:2")).restrict_to(8).to_string() ==
          "[0,0,1,1,0,0,1,1]");
}

TEST_CASE("preimage distributes over meet across the constructor set") {
    auto pool = fixtures::descriptor_pool();
    for (const auto& f : fixtures::surjection_set())
        for (const auto& x1 : pool)
            for (const auto& x2 : pool) {
                Segment lhs = preimage(f, meet(x1, x2)).restrict_to(64);
                Segment rhs = meet(preimage(f, x1), preimage(f, x2)).restrict_to(64);
                CHECK(lhs == rhs);
            }
}

TEST_CASE("preimage of pushforward is coarser") {
    for (const auto& f : fixtures::surjection_set())
        for (const auto& y : fixtures::descriptor_pool())
            CHECK_FALSE(is_coarser(preimage(f, pushforward(f, y)), y, 64).is_fails());
}

TEST_CASE("classification against the roundtrip") {
    for (const auto& x : fixtures::descriptor_pool()) {
        RespectVerdict rv = classify_respect(Surjection::identity(), x, 32);
        CHECK(rv.label == RespectClass::Respects);
        CHECK(rv.exact);
    }
    CHECK(classify_respect(Surjection::halving(), P("intervals:2"), 32).label ==
          RespectClass::Respects);
    CHECK(classify_respect(Surjection::halving(), P("residues:2"), 32).label ==
          RespectClass::CompletelyDisregards);
    RespectVerdict mid = classify_respect(Surjection::halving(), P("prefix:[0,0,1];intervals:2"), 16);
    CHECK(mid.label == RespectClass::Disregards);
    CHECK(mid.exact);
}

TEST_CASE("disjoint-image coloring of the lemma") {
    Coloring pi = lemma1_coloring(Surjection::halving());
    CHECK(pi.color_of(S("[0,1]")) == 1);
    CHECK(pi.color_of(S("[0,0,1]")) == 0);
    Coloring id = lemma1_coloring(Surjection::identity());
    for (const Segment& u : enumerate_segments(2, 5).members()) CHECK(id.color_of(u) == 0);
    CHECK_THROWS_AS(pi.color_of(S("[0,1,2]")), std::invalid_argument);
}

TEST_CASE("respect witness search re-verifies through the classifier") {
    RespectWitness rw = respect_witness_search(Surjection::halving(), P("singletons"), 8, 4);
    REQUIRE(rw.search.found);
    CHECK(rw.consistent);
    CHECK_FALSE(rw.search.degenerate);
    bool respects_or_cd = rw.recheck.label == RespectClass::Respects ||
                          rw.recheck.label == RespectClass::CompletelyDisregards;
    CHECK(respects_or_cd);
    // Independent monochromaticity pass over the full bounded family.
    Coloring pi = lemma1_coloring(Surjection::halving());
    for (const Segment& u : finite_scale_family(rw.search.witness, 2))
        CHECK(pi.color_of(u) == rw.search.color);

    RespectWitness id_search = respect_witness_search(Surjection::identity(), P("singletons"), 6, 3);
    REQUIRE(id_search.search.found);
    CHECK(id_search.search.witness == S("[0,1,2,2,2,2]"));  // first canonical 3-block coarsening
    CHECK(id_search.search.color == 0);

    RespectWitness exhausted = respect_witness_search(Surjection::halving(), P("residues:2"), 8, 3);
    CHECK_FALSE(exhausted.search.found);
}

TEST_CASE("interleave restriction and the fact3 roundtrip") {
    CHECK(interleave(P("residues:2"), P("singletons")).restrict_to(8).to_string() ==
          "[0,1,2,3,0,4,2,5]");
    CHECK(pushforward(Surjection::fact3f(), interleave(P("intervals:3"), P("residues:2")))
              .restrict_to(32) == P("intervals:3").restrict_to(32));
    auto pool = fixtures::descriptor_pool();
    for (const auto& x : pool)
        for (const auto& y : pool) {
            InfinitePartition il = interleave(x, y);
            CHECK(pushforward(Surjection::fact3f(), il).restrict_to(64) == x.restrict_to(64));
            CHECK(pushforward(Surjection::fact3g(), il).restrict_to(64) == y.restrict_to(64));
        }
    auto bc = interleave(P("residues:2"), P("residues:2")).block_count();
    CHECK(bc.value == 4);
}

TEST_CASE("order-preserving permutation from Fact-2 shape") {
    PartialPermutation h = build_permutation(P("residues:2"), Surjection::halving(), 8);
    std::vector<std::pair<long, long>> expected = {{0, 0}, {1, 2}, {2, 1}, {3, 3},
                                                   {4, 4}, {5, 6}, {6, 5}, {7, 7}};
    CHECK(h.pairs == expected);
    CHECK(h.is_injective());

    PartialPermutation id = build_permutation(P("residues:3"), Surjection::identity(), 9);
    for (auto [a, b] : id.pairs) CHECK(a == b);

    CHECK_THROWS_AS(build_permutation(P("intervals:2"), Surjection::halving(), 8),
                    std::invalid_argument);

    // Order preserved within each block, checked to the bound.
    Segment rx = P("residues:2").restrict_to(8);
    std::map<int, long> last_target;
    for (auto [from, to] : h.pairs) {
        int block = rx.label(static_cast<int>(from));
        auto it = last_target.find(block);
        if (it != last_target.end()) CHECK(it->second < to);
        last_target[block] = to;
    }
}
