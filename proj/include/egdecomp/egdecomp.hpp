#pragma once

#include "bench.hpp"
#include "connectivity.hpp"
#include "core.hpp"
#include "decomposition.hpp"
#include "expander_decomposer.hpp"
#include "expansion.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "io.hpp"
#include "paths_cycles.hpp"
#include "pipeline.hpp"
#include "random.hpp"
