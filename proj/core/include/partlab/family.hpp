#pragma once

#include <map>
#include <optional>
#include <string>

#include "partlab/infinite_partition.hpp"
#include "partlab/segment.hpp"

namespace partlab {

// Map from segments (canonical RGS keys) to partitions, with an optional
// catch-all. Backs diagonalization families, Player-I strategies and the
// diagonal coloring. File format:
//   root: <expr>
//   on [<rgs>]: <expr>
//   default: <expr>
class SegmentIndexedFamily {
public:
    SegmentIndexedFamily() = default;
    static SegmentIndexedFamily constant(const InfinitePartition& x);

    void set_root(const InfinitePartition& x) { set(Segment(), x); }
    void set(const Segment& s, const InfinitePartition& x);
    void set_default(const InfinitePartition& x) { default_ = x; }

    bool covers(const Segment& s) const;
    // Throws std::out_of_range on a coverage gap.
    const InfinitePartition& at(const Segment& s) const;
    const InfinitePartition& root() const { return at(Segment()); }

    std::string to_text() const;
    static SegmentIndexedFamily parse_text(const std::string& text);

private:
    std::map<Segment, InfinitePartition> entries_;
    std::optional<InfinitePartition> default_;
};

}  // namespace partlab
