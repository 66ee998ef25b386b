#pragma once

#include "dunkl/symfunc/evaluate.hpp"
#include "dunkl/symfunc/jack.hpp"
#include "dunkl/symfunc/monomial_operator.hpp"
#include "dunkl/symfunc/sympoly.hpp"
