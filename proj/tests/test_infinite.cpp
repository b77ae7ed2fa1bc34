#include <random>

#include "doctest.h"
#include "partlab/infinite_partition.hpp"
#include "partlab/partition_order.hpp"
#include "support/pool.hpp"

using namespace partlab;

namespace {
InfinitePartition P(const std::string& s) { return InfinitePartition::parse(s); }
}  // namespace

TEST_CASE("restrictions of the primitive descriptors") {
    CHECK(P("residues:2").restrict_to(5).to_string() == "[0,1,0,1,0]");
    CHECK(P("intervals:3").restrict_to(7).to_string() == "[0,0,0,1,1,1,2]");
    CHECK(P("singletons").restrict_to(4).to_string() == "[0,1,2,3]");
    CHECK(P("intervals:(1,2)").restrict_to(7).to_string() == "[0,1,1,2,3,3,4]");
    CHECK(P("prefix:[0,0];singletons").restrict_to(6).to_string() == "[0,0,1,2,3,4]");
    CHECK(P("prefix:[0,1,0];residues:2").restrict_to(8).to_string() == "[0,1,0,2,3,2,3,2]");
    CHECK(P("residues:2").restrict_to(0).to_string() == "[]");
}

TEST_CASE("glue and meet descriptors restrict correctly") {
    CHECK(P("glue(residues:3,2)").restrict_to(9).to_string() == "[0,0,1,0,0,1,0,0,1]");
    CHECK(P("glue(residues:2,2)").restrict_to(6).to_string() == "[0,0,0,0,0,0]");
    // Cutpoints of the interval meets intersect: extensionally intervals:6.
    for (int m : {6, 12, 36})
        CHECK(P("meet(intervals:2,intervals:3)").restrict_to(m) == P("intervals:6").restrict_to(m));
    // Idempotence, extensionally.
    for (const auto& x : fixtures::descriptor_pool())
        CHECK(meet(x, x).restrict_to(48) == x.restrict_to(48));
}

TEST_CASE("restrict prefix coherence over the pool") {
    for (const auto& x : fixtures::descriptor_pool()) {
        Segment full = x.restrict_to(64);
        for (int m = 0; m <= 64; m += 7) CHECK(x.restrict_to(m) == full.prefix(m));
    }
}

TEST_CASE("glue bounds are monotone and coarsen over the pool") {
    for (const auto& x : fixtures::descriptor_pool()) {
        for (int n = 0; n <= 16; ++n) {
            Segment g = glue_initial(x, n).restrict_to(48);
            Segment base = x.restrict_to(48);
            CHECK(is_coarser(g, base).is_holds());
            Segment g2 = glue_initial(x, n + 1).restrict_to(48);
            CHECK(is_coarser(g2, g).is_holds());
        }
        CHECK(glue_initial(x, 0).restrict_to(32) == x.restrict_to(32));
        CHECK(glue_initial(x, 1).restrict_to(32) == x.restrict_to(32));
    }
}

TEST_CASE("block counts derive from the descriptors") {
    auto omega = [](const InfinitePartition& x) { return x.block_count().is_omega(); };
    CHECK(omega(P("singletons")));
    CHECK(omega(P("intervals:2")));
    CHECK(omega(P("meet(intervals:2,intervals:3)")));
    CHECK(P("residues:2").block_count().value == 2);
    CHECK(P("residues:1").block_count().value == 1);
    CHECK(P("prefix:[0,1,0];residues:2").block_count().value == 4);
    CHECK(P("glue(residues:3,2)").block_count().value == 2);
    CHECK(P("interleave(residues:2,residues:3)").block_count().value == 5);
    CHECK(omega(P("interleave(residues:2,singletons)")));
    CHECK(P("pre(half,residues:3)").block_count().value == 3);
}

TEST_CASE("all-infinite-blocks certificates") {
    CHECK(P("residues:4").all_blocks_infinite());
    CHECK(P("glue(residues:4,3)").all_blocks_infinite());
    CHECK(P("interleave(residues:2,residues:3)").all_blocks_infinite());
    CHECK(P("pre(half,residues:2)").all_blocks_infinite());
    CHECK_FALSE(P("singletons").all_blocks_infinite());
    CHECK_FALSE(P("intervals:2").all_blocks_infinite());
    CHECK_FALSE(P("prefix:[0,0];residues:2").all_blocks_infinite());
}

TEST_CASE("normal forms rewrite exactly and only in the prover") {
    CHECK(P("push(id,residues:2)").normalized().to_string() == "residues:2");
    CHECK(P("pre(id,residues:2)").normalized().to_string() == "residues:2");
    CHECK(P("push(fact3f,interleave(intervals:3,residues:2))").normalized().to_string() ==
          "intervals:3");
    CHECK(P("push(fact3g,interleave(intervals:3,residues:2))").normalized().to_string() ==
          "residues:2");
    CHECK(P("glue(glue(singletons,2),5)").normalized().to_string() == "glue(singletons,5)");
    CHECK(P("glue(singletons,1)").normalized().to_string() == "singletons");
    CHECK(P("meet(residues:2,singletons)").normalized().to_string() == "residues:2");
    CHECK(P("meet(residues:2,residues:1)").normalized().to_string() == "residues:1");
    CHECK(P("meet(interleave(intervals:2,residues:2),interleave(intervals:3,residues:3))")
              .normalized()
              .to_string() == "interleave(meet(intervals:2,intervals:3),meet(residues:2,residues:3))");
    // The expression itself keeps its shape: restriction stays an honest
    // two-route computation.
    CHECK(P("push(fact3f,interleave(intervals:3,residues:2))").to_string() ==
          "push(fact3f,interleave(intervals:3,residues:2))");
    // Normal forms agree extensionally with the originals.
    for (const char* e :
         {"push(fact3f,interleave(intervals:3,residues:2))", "glue(glue(singletons,2),5)",
          "pre(half,meet(intervals:2,intervals:3))", "meet(residues:2,singletons)"}) {
        InfinitePartition x = P(e);
        CHECK(x.restrict_to(48) == x.normalized().restrict_to(48));
    }
}

TEST_CASE("expression grammar round-trips") {
    std::mt19937 rng(77);
    std::vector<std::string> surjections = {"id", "half", "fact3f", "fact3g",
                                            "table:[1,0,2];shift:0"};
    std::function<std::string(int)> gen = [&](int depth) -> std::string {
        int pick = static_cast<int>(rng() % (depth <= 0 ? 4 : 9));
        switch (pick) {
            case 0: return "singletons";
            case 1: return "residues:" + std::to_string(1 + rng() % 4);
            case 2: {
                int len = 1 + static_cast<int>(rng() % 3);
                std::string s = "intervals:";
                if (len == 1) return s + std::to_string(1 + rng() % 4);
                s += "(";
                for (int i = 0; i < len; ++i)
                    s += (i ? "," : "") + std::to_string(1 + rng() % 4);
                return s + ")";
            }
            case 3: {
                int len = static_cast<int>(rng() % 3) + 1;
                std::vector<int> rgs;
                int mx = -1;
                for (int i = 0; i < len; ++i) {
                    int v = static_cast<int>(rng() % static_cast<unsigned>(mx + 2));
                    rgs.push_back(v);
                    mx = std::max(mx, v);
                }
                std::string s = "prefix:[";
                for (int i = 0; i < len; ++i) s += (i ? "," : "") + std::to_string(rgs[static_cast<size_t>(i)]);
                return s + "];" + gen(depth - 1);
            }
            case 4: return "glue(" + gen(depth - 1) + "," + std::to_string(rng() % 6) + ")";
            case 5: return "meet(" + gen(depth - 1) + "," + gen(depth - 1) + ")";
            case 6: return "push(" + surjections[rng() % surjections.size()] + "," + gen(depth - 1) + ")";
            case 7: return "pre(" + surjections[rng() % surjections.size()] + "," + gen(depth - 1) + ")";
            default: return "interleave(" + gen(depth - 1) + "," + gen(depth - 1) + ")";
        }
    };
    for (int i = 0; i < 1000; ++i) {
        InfinitePartition x = P(gen(2));
        // parse . serialize is the identity on values; serialize . parse is
        // the identity on canonical text.
        CHECK(P(x.to_string()).to_string() == x.to_string());
    }
}

TEST_CASE("parse errors are position-annotated") {
    CHECK_THROWS_WITH_AS(P("residues:"), doctest::Contains("parse error at"), std::invalid_argument);
    CHECK_THROWS_AS(P("meet(singletons)"), std::invalid_argument);
    CHECK_THROWS_AS(P("intervals:0"), std::invalid_argument);
    CHECK_THROWS_AS(P("residues:0"), std::invalid_argument);
    CHECK_THROWS_AS(P("prefix:[1];singletons"), std::invalid_argument);
    CHECK_THROWS_AS(P("bogus"), std::invalid_argument);
    CHECK_THROWS_AS(P("singletons trailing"), std::invalid_argument);
}

TEST_CASE("profiles certify affine eventual periodicity") {
    auto check_profile = [](const InfinitePartition& x) {
        auto prof = x.profile();
        REQUIRE(prof.has_value());
        int window = prof->lead + 6 * prof->period;
        Segment r = x.restrict_to(window + prof->period);
        for (int n = prof->lead; n < window; ++n)
            CHECK(r.label(n + prof->period) == r.label(n) + prof->delta);
    };
    for (const auto& x : fixtures::descriptor_pool()) check_profile(x);
    check_profile(P("interleave(residues:2,intervals:3)"));
    check_profile(P("pre(half,intervals:2)"));
}
