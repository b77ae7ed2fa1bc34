#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "partlab/family.hpp"
#include "partlab/infinite_partition.hpp"
#include "partlab/segment.hpp"
#include "partlab/surjection.hpp"

namespace partlab {

// Coloring of n-element sets of positive integers; the tau side of the
// min-reduction. Keys are sorted subsets.
class SetColoring {
public:
    SetColoring(int arity, int colors) : arity_(arity), colors_(colors) {}
    static SetColoring constant(int arity, int colors, int value);

    int arity() const { return arity_; }
    int colors() const { return colors_; }
    void set(std::vector<int> key, int color);
    // Throws std::out_of_range on partiality.
    int at(const std::vector<int>& key) const;

    std::string to_text() const;
    static SetColoring parse_text(const std::string& text);

private:
    int arity_;
    int colors_;
    std::map<std::vector<int>, int> table_;
};

// Total color assignment on segments: a frozen table over an enumerated
// domain, or a named rule evaluated on demand. Rule-backed colorings accept
// any arity their predicate makes sense for; tables are strict.
class Coloring {
public:
    int colors() const { return colors_; }
    std::optional<int> arity() const { return arity_; }
    // Largest dom(u) the coloring is total on (nullopt for rules).
    std::optional<int> domain_bound() const { return bound_; }
    const std::string& rule() const { return rule_; }

    int color_of(const Segment& u) const;

    static Coloring constant(int colors, int value);
    static Coloring from_table(int arity, int bound, int colors, std::map<Segment, int> table);
    static Coloring custom(int colors, std::optional<int> arity,
                           std::function<int(const Segment&)> eval, std::string rule);

    // Serialized table format: "arity k; bound n; colors r" header then
    // "RGS -> color" lines. Named rules serialize as their rule string.
    std::string to_text() const;
    static Coloring parse_text(const std::string& text);
    // "rule:membership(<expr>,k)" | "rule:min(<tau-file-inline>,n)" |
    // "rule:diag(<family-file-inline>)" | "rule:lemma1(<surj>)" |
    // "rule:constant(r,c)"
    static Coloring parse_rule(std::string_view text);

private:
    int colors_ = 2;
    std::optional<int> arity_;
    std::optional<int> bound_;
    std::string rule_;
    std::function<int(const Segment&)> eval_;
    std::shared_ptr<const std::map<Segment, int>> table_;
};

// Color 0 exactly on members of the bounded segment family of Z: u* coarser
// than Z, checked exactly on dom(u*).
Coloring mk_membership_coloring(const InfinitePartition& z, int k);

// pi(s) = tau(Min(s*) \ {0}); arity n.
Coloring mk_min_coloring(const SetColoring& tau, int n);

// Diagonal coloring over segments with at least 2 blocks: color 0 when the
// head-glued t* is coarser than family(s_t), where s_t is the unique segment
// with s_t* initial in t and |s_t| = |t| - 2.
Coloring mk_diag_coloring(const SegmentIndexedFamily& family);

// Color 0 when the two blocks of s have disjoint images under f.
Coloring lemma1_coloring(const Surjection& f);

// The relativization of Corollary-1 shape: Y' = seg_meet(s, Y), R the union
// of its first |s| blocks, f the order bijection from the complement of R,
// Z the image of the remaining blocks.
class Relativization {
public:
    Relativization(Segment s, InfinitePartition y);

    const Segment& s() const { return s_; }
    const InfinitePartition& y() const { return y_; }
    const InfinitePartition& y_prime() const { return yp_; }
    int r_blocks() const { return nplus1_; }

    bool in_r(int m) const;
    // j-th element of the complement of R.
    int comp_element(int rank) const;
    // Z = f(Y_R): restriction of the image partition.
    Segment z_restrict(int m) const;
    std::vector<Segment> z_family(int arity, int domain_bound) const;
    // The lift: blocks i < |s| are (Y'(i) ∩ dom) plus the pullback of u(i),
    // later blocks are pure pullbacks.
    Segment xi(const Segment& u) const;

private:
    std::vector<int> yp_labels(int m) const;
    Segment s_;
    InfinitePartition y_;
    InfinitePartition yp_;
    int nplus1_;
};

// tau(u) = pi(xi(u)); tau shares pi's color range and arity.
std::pair<Relativization, Coloring> relativize(const Coloring& pi, const Segment& s,
                                               const InfinitePartition& y);

}  // namespace partlab
