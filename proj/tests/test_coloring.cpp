#include <map>
#include <set>

#include "doctest.h"
#include "partlab/coloring.hpp"
#include "partlab/partition_order.hpp"
#include "partlab/segment_space.hpp"
#include "support/oracles.hpp"

using namespace partlab;

namespace {
InfinitePartition P(const std::string& s) { return InfinitePartition::parse(s); }
Segment S(const std::string& s) { return Segment::parse(s); }
}  // namespace

TEST_CASE("membership coloring marks the bounded family of Z") {
    Coloring all0 = mk_membership_coloring(P("singletons"), 2);
    for (const Segment& u : enumerate_segments(2, 6).members()) CHECK(all0.color_of(u) == 0);
    Coloring pi = mk_membership_coloring(P("residues:3"), 2);
    CHECK(pi.color_of(S("[0,1]")) == 0);
    CHECK(pi.color_of(S("[0,0,1]")) == 1);
    // Rule agrees with its defining predicate over the enumerated domain.
    for (const Segment& u : enumerate_segments(2, 6).members())
        CHECK((pi.color_of(u) == 0) == is_coarser(star(u), P("residues:3")).is_holds());
}

TEST_CASE("min coloring composes tau with the block minima of s*") {
    SetColoring parity(2, 2);
    for (int a = 1; a <= 6; ++a)
        for (int b = a + 1; b <= 6; ++b) parity.set({a, b}, (a + b) % 2);
    Coloring pi = mk_min_coloring(parity, 2);
    CHECK(pi.color_of(S("[0,1]")) == 1);    // Min(s*)\{0} = {1,2}
    CHECK(pi.color_of(S("[0,0,1]")) == 1);  // {2,3}
    CHECK(pi.color_of(S("[0,1,0]")) == 0);  // {1,3}
    Coloring zero = mk_min_coloring(SetColoring::constant(2, 2, 0), 2);
    for (const Segment& u : enumerate_segments(2, 5).members()) CHECK(zero.color_of(u) == 0);
    // Partial tau surfaces as an error.
    SetColoring partial(2, 2);
    partial.set({1, 2}, 0);
    Coloring pp = mk_min_coloring(partial, 2);
    CHECK_THROWS_AS(pp.color_of(S("[0,0,1]")), std::out_of_range);
}

TEST_CASE("diag coloring compares the head-glued star against the family") {
    SegmentIndexedFamily finest = SegmentIndexedFamily::constant(P("singletons"));
    Coloring all0 = mk_diag_coloring(finest);
    for (const Segment& t : enumerate_segments(2, 5).members()) CHECK(all0.color_of(t) == 0);
    for (const Segment& t : enumerate_segments(3, 5).members()) CHECK(all0.color_of(t) == 0);

    SegmentIndexedFamily res2 = SegmentIndexedFamily::constant(P("residues:2"));
    CHECK(mk_diag_coloring(res2).color_of(S("[0,1]")) == 1);
    SegmentIndexedFamily int2 = SegmentIndexedFamily::constant(P("intervals:2"));
    CHECK(mk_diag_coloring(int2).color_of(S("[0,1]")) == 1);
    CHECK_THROWS_AS(all0.color_of(S("[0]")), std::invalid_argument);
    SegmentIndexedFamily gap;
    gap.set_root(P("singletons"));
    CHECK_THROWS_AS(mk_diag_coloring(gap).color_of(S("[0,1,2]")), std::out_of_range);
}

TEST_CASE("relativization of the [0]-singletons neighborhood") {
    Relativization rel(S("[0]"), P("singletons"));
    CHECK(rel.y_prime().restrict_to(8) == P("singletons").restrict_to(8));
    CHECK(rel.r_blocks() == 1);
    CHECK(rel.in_r(0));
    CHECK_FALSE(rel.in_r(1));
    CHECK(rel.comp_element(0) == 1);  // the order bijection is the predecessor map
    CHECK(rel.comp_element(3) == 4);
    CHECK(rel.z_restrict(6) == P("singletons").restrict_to(6));
    CHECK(rel.xi(S("[0,1]")) == S("[0,0,1]"));  // block 0 absorbs element 0
}

TEST_CASE("xi lands in the neighborhood and is injective") {
    for (const char* ye : {"singletons", "intervals:2", "intervals:(1,2)"}) {
        InfinitePartition y = P(ye);
        Segment s = y.restrict_to(2);
        if (!is_coarser(s, y).is_holds()) continue;
        Relativization rel(s, y);
        int arity = s.block_count() + 2;
        std::vector<Segment> us = rel.z_family(arity, 6);
        std::set<Segment> images;
        for (const Segment& u : us) {
            Segment lift = rel.xi(u);
            CHECK(is_initial(s, lift));
            CHECK(is_coarser(star(lift), y).is_holds());
            CHECK(lift.block_count() == arity);
            CHECK(images.insert(lift).second);  // injective
        }
        CHECK_FALSE(us.empty());
    }
}

TEST_CASE("tau is pi after xi") {
    Coloring pi = mk_membership_coloring(P("residues:3"), 2);
    auto [rel, tau] = relativize(pi, S("[0]"), P("singletons"));
    for (const Segment& u : rel.z_family(2, 6)) CHECK(tau.color_of(u) == pi.color_of(rel.xi(u)));
    auto [rel2, tau2] = relativize(Coloring::constant(3, 2), S("[0]"), P("residues:2"));
    for (const Segment& u : rel2.z_family(2, 6)) CHECK(tau2.color_of(u) == 2);
    CHECK_THROWS_AS(relativize(pi, S("[]"), P("singletons")), std::invalid_argument);
}

TEST_CASE("coloring tables round-trip through the file format") {
    std::map<Segment, int> table;
    for (const Segment& u : enumerate_segments(2, 4).members())
        table[u] = u.domain() % 2;
    Coloring c = Coloring::from_table(2, 4, 2, table);
    Coloring back = Coloring::parse_text(c.to_text());
    for (const Segment& u : enumerate_segments(2, 4).members())
        CHECK(back.color_of(u) == c.color_of(u));
    CHECK_THROWS_AS(back.color_of(S("[0,1,0,0,2]")), std::out_of_range);

    Coloring rule = Coloring::parse_rule("rule:membership(residues:3,2)");
    CHECK(rule.color_of(S("[0,1]")) == 0);
    CHECK(Coloring::parse_text(rule.to_text()).color_of(S("[0,0,1]")) == 1);

    SetColoring tau(2, 2);
    tau.set({1, 2}, 1);
    tau.set({1, 3}, 0);
    SetColoring back_tau = SetColoring::parse_text(tau.to_text());
    CHECK(back_tau.at({2, 1}) == 1);
    CHECK(back_tau.at({1, 3}) == 0);
}
