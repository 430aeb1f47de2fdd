#pragma once

#include "il/bitset.hpp"
#include "il/capacity.hpp"
#include "il/config.hpp"
#include "il/cotree.hpp"
#include "il/domination.hpp"
#include "il/error.hpp"
#include "il/flow.hpp"
#include "il/generators.hpp"
#include "il/graph.hpp"
#include "il/interval.hpp"
#include "il/io.hpp"
#include "il/matching.hpp"
#include "il/mis_enumeration.hpp"
#include "il/oracles.hpp"
#include "il/permutation.hpp"
#include "il/product.hpp"
#include "il/product_alpha.hpp"
#include "il/ratio.hpp"
#include "il/ratio_subset.hpp"
#include "il/split.hpp"
#include "il/traversal.hpp"
#include "il/tree_decomposition.hpp"
