#pragma once

#include "fuzzysum/error.hpp"
#include "fuzzysum/fuzzy_number.hpp"
#include "fuzzysum/expr.hpp"
#include "fuzzysum/fuzzy_function.hpp"
#include "fuzzysum/quadrature.hpp"
#include "fuzzysum/integration.hpp"
#include "fuzzysum/tauberian.hpp"
#include "fuzzysum/summability.hpp"
#include "fuzzysum/io.hpp"
