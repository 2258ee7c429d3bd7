#pragma once

/**
 * @file qsym.hpp
 * @brief Umbrella header for the library (everything except the command line).
 */

#include "algebra.hpp"
#include "composition.hpp"
#include "element.hpp"
#include "integer.hpp"
#include "io.hpp"
#include "schur_like.hpp"
#include "tableau.hpp"
#include "transition.hpp"
#include "verify.hpp"
