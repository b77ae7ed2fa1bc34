#pragma once

// Shared fixtures: the 10-member descriptor pool and the surjection
// constructor set used across the property and acceptance suites.

#include <vector>

#include "partlab/infinite_partition.hpp"
#include "partlab/surjection.hpp"

namespace fixtures {

inline std::vector<partlab::InfinitePartition> descriptor_pool() {
    using partlab::InfinitePartition;
    return {
        InfinitePartition::parse("singletons"),
        InfinitePartition::parse("residues:2"),
        InfinitePartition::parse("residues:3"),
        InfinitePartition::parse("intervals:2"),
        InfinitePartition::parse("intervals:3"),
        InfinitePartition::parse("intervals:(1,2)"),
        InfinitePartition::parse("prefix:[0,0];singletons"),
        InfinitePartition::parse("prefix:[0,1,0];residues:2"),
        InfinitePartition::parse("glue(intervals:2,3)"),
        InfinitePartition::parse("meet(intervals:2,intervals:3)"),
    };
}

inline std::vector<partlab::Surjection> surjection_set() {
    using partlab::Surjection;
    return {
        Surjection::identity(),
        Surjection::halving(),
        Surjection::fact3f(),
        Surjection::fact3g(),
        Surjection::table({1, 0, 2}, 0),
        Surjection::table({0, 0, 1}, 2),
    };
}

}  // namespace fixtures
