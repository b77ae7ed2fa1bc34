#include <random>

#include "doctest.h"
#include "partlab/partition_order.hpp"
#include "partlab/segment.hpp"
#include "support/oracles.hpp"

using namespace partlab;

namespace {
Segment seg(const std::vector<int>& labels) { return Segment::canonicalize(labels); }
}  // namespace

TEST_CASE("canonicalize relabels by first appearance") {
    CHECK(seg({5, 5, 2, 5}).to_string() == "[0,0,1,0]");
    CHECK(seg({}).to_string() == "[]");
    CHECK(seg({0, 1, 0, 2}).to_string() == "[0,1,0,2]");
}

TEST_CASE("canonicalize is idempotent and relabeling-invariant") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 1000; ++trial) {
        int n = static_cast<int>(rng() % 9);
        std::vector<long long> labels(static_cast<size_t>(n));
        for (auto& v : labels) v = static_cast<long long>(rng() % 5);
        Segment s = Segment::canonicalize(std::span<const long long>(labels));
        // Idempotence on the canonical form.
        CHECK(Segment::canonicalize(s.labels()) == s);
        // Invariance under an arbitrary injective relabeling.
        long long offset = static_cast<long long>(rng() % 1000) + 7;
        std::vector<long long> relabeled(labels);
        for (auto& v : relabeled) v = v * 131 + offset;
        CHECK(Segment::canonicalize(std::span<const long long>(relabeled)) == s);
    }
}

TEST_CASE("from_rgs validates restricted growth") {
    CHECK_THROWS_AS(Segment::from_rgs({1}), std::invalid_argument);
    CHECK_THROWS_AS(Segment::from_rgs({0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Segment::from_rgs({0, -1}), std::invalid_argument);
    CHECK(Segment::from_rgs({0, 1, 0, 2}).block_count() == 3);
    CHECK(Segment::from_rgs({}).block_count() == 0);
}

TEST_CASE("segment literal parsing round-trips") {
    for (const char* text : {"[]", "[0]", "[0,1,0,2]", "[0,0,1]"}) {
        Segment s = Segment::parse(text);
        CHECK(s.to_string() == text);
    }
    CHECK(Segment::parse(" [ 0 , 1 ] ").to_string() == "[0,1]");
    CHECK_THROWS_AS(Segment::parse("0,1"), std::invalid_argument);
    CHECK_THROWS_AS(Segment::parse("[0,1"), std::invalid_argument);
    CHECK_THROWS_AS(Segment::parse("[1,0]"), std::invalid_argument);
}

TEST_CASE("is_coarser on segments matches the definitional oracle") {
    CHECK(is_coarser(seg({0, 0, 0, 0}), seg({0, 0, 1, 1})).is_holds());
    Verdict f = is_coarser(seg({0, 0, 1, 1}), seg({0, 1, 0, 1}));
    REQUIRE(f.is_fails());
    CHECK(f.counterexample() == std::pair<long, long>{0, 2});
    CHECK_THROWS_AS(is_coarser(seg({0}), seg({0, 1})), std::invalid_argument);

    for (const auto& p : oracles::all_partitions(4))
        for (const auto& q : oracles::all_partitions(4)) {
            CHECK(is_coarser(Segment::from_rgs(p), Segment::from_rgs(q)).is_holds() ==
                  oracles::def_coarser(p, q));
        }
}

TEST_CASE("coarser is a partial order on domain 5") {
    auto parts = oracles::all_partitions(5);
    std::vector<Segment> segs;
    for (const auto& p : parts) segs.push_back(Segment::from_rgs(p));
    REQUIRE(segs.size() == 52);
    for (const auto& s : segs) CHECK(is_coarser(s, s).is_holds());
    for (const auto& s : segs)
        for (const auto& t : segs) {
            bool st = is_coarser(s, t).is_holds();
            bool ts = is_coarser(t, s).is_holds();
            if (st && ts) CHECK(s == t);
        }
    // Transitivity, exhaustive on the smaller domain to keep the cube cheap.
    auto parts4 = oracles::all_partitions(4);
    for (const auto& a : parts4)
        for (const auto& b : parts4)
            for (const auto& c : parts4)
                if (oracles::def_coarser(a, b) && oracles::def_coarser(b, c))
                    CHECK(oracles::def_coarser(a, c));
}

TEST_CASE("meet is the brute-force greatest lower bound") {
    CHECK(meet(seg({0, 0, 1, 1}), seg({0, 1, 0, 1})).to_string() == "[0,0,0,0]");
    for (int n = 0; n <= 5; ++n) {
        auto parts = oracles::all_partitions(n);
        for (const auto& p : parts)
            for (const auto& q : parts) {
                Segment m = meet(Segment::from_rgs(p), Segment::from_rgs(q));
                auto glb = oracles::brute_glb(p, q);
                REQUIRE(glb.has_value());
                CHECK(m.labels() == *glb);
            }
    }
}

TEST_CASE("meet is commutative, associative, idempotent") {
    for (int n = 3; n <= 5; ++n) {
        auto parts = oracles::all_partitions(n);
        std::vector<Segment> segs;
        for (const auto& p : parts) segs.push_back(Segment::from_rgs(p));
        for (const auto& s : segs) CHECK(meet(s, s) == s);
        for (const auto& s : segs)
            for (const auto& t : segs) CHECK(meet(s, t) == meet(t, s));
        if (n > 4) continue;  // the associativity cube on 5 is slow in debug builds
        for (const auto& s : segs)
            for (const auto& t : segs)
                for (const auto& u : segs) CHECK(meet(meet(s, t), u) == meet(s, meet(t, u)));
    }
}

TEST_CASE("glue_initial merges the touched blocks into one") {
    CHECK(glue_initial(seg({0, 1, 2, 0, 1, 2, 0, 1, 2}), 2).to_string() == "[0,0,1,0,0,1,0,0,1]");
    Segment p = seg({0, 1, 0, 2, 1});
    CHECK(glue_initial(p, 0) == p);
    CHECK(glue_initial(p, 1) == p);
    CHECK_THROWS_AS(glue_initial(p, 6), std::out_of_range);
    for (const auto& q : oracles::all_partitions(5)) {
        Segment s = Segment::from_rgs(q);
        for (int n = 0; n <= 5; ++n) {
            Segment g = glue_initial(s, n);
            CHECK(is_coarser(g, s).is_holds());
            if (n + 1 <= 5) CHECK(is_coarser(glue_initial(s, std::min(n + 1, 5)), g).is_holds());
        }
    }
}
