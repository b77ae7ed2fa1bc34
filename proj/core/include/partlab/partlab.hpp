#pragma once

#include "partlab/coloring.hpp"
#include "partlab/family.hpp"
#include "partlab/filter_lab.hpp"
#include "partlab/game.hpp"
#include "partlab/infinite_partition.hpp"
#include "partlab/partition_order.hpp"
#include "partlab/search.hpp"
#include "partlab/segment.hpp"
#include "partlab/segment_space.hpp"
#include "partlab/surjection.hpp"
#include "partlab/surjection_algebra.hpp"
#include "partlab/verdict.hpp"
