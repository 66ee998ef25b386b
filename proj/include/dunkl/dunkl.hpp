#pragma once

#include "dunkl/density.hpp"
#include "dunkl/freeze.hpp"
#include "dunkl/hermite.hpp"
#include "dunkl/hypergeometric.hpp"
#include "dunkl/intertwine.hpp"
#include "dunkl/partition.hpp"
#include "dunkl/rational.hpp"
#include "dunkl/rng.hpp"
#include "dunkl/simulation.hpp"
#include "dunkl/stats.hpp"
#include "dunkl/symfunc.hpp"
