#pragma once

#include "stochmatch/augmenting.hpp"
#include "stochmatch/b_matching.hpp"
#include "stochmatch/bounds.hpp"
#include "stochmatch/brute_force.hpp"
#include "stochmatch/edge_coloring.hpp"
#include "stochmatch/edge_list_io.hpp"
#include "stochmatch/estimate.hpp"
#include "stochmatch/graph.hpp"
#include "stochmatch/instances.hpp"
#include "stochmatch/matching_cover.hpp"
#include "stochmatch/max_matching.hpp"
#include "stochmatch/simulate.hpp"
#include "stochmatch/sparsify.hpp"
