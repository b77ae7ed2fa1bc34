#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace partlab {

// A finite partition of an initial domain {0..n-1}, stored as its restricted
// growth string: entry i is the index of the block containing i, blocks
// ordered by their least element. The empty string is the unique partition
// of 0.
class Segment {
public:
    Segment() = default;

    // Relabels an arbitrary block-label sequence by order of first
    // appearance. Idempotent on valid RGS.
    static Segment canonicalize(std::span<const long long> labels);
    static Segment canonicalize(const std::vector<int>& labels);

    // Validates an already-canonical RGS; throws std::invalid_argument.
    static Segment from_rgs(std::vector<int> rgs);

    // Parses "[0,1,0]" (whitespace tolerated, "[]" is the empty segment).
    static Segment parse(std::string_view text);
    std::string to_string() const;

    int domain() const { return static_cast<int>(rgs_.size()); }
    int block_count() const { return blocks_; }
    bool empty() const { return rgs_.empty(); }

    int label(int i) const { return rgs_[static_cast<size_t>(i)]; }
    const std::vector<int>& labels() const { return rgs_; }

    std::vector<std::vector<int>> blocks() const;
    // Least element of block b.
    int block_min(int b) const;
    // Min(s): block minima in block order (ascending).
    std::vector<int> minima() const;

    // s*: appends dom(s) as a fresh singleton block.
    Segment star() const;
    // First m entries (a prefix of an RGS is an RGS).
    Segment prefix(int m) const;

    bool operator==(const Segment&) const = default;
    // Canonical enumeration order: by domain, then lexicographic RGS.
    std::strong_ordering operator<=>(const Segment& o) const;

private:
    std::vector<int> rgs_;
    int blocks_ = 0;
};

}  // namespace partlab
