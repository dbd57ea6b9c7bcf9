#pragma once

#include "quadboard/amplitude.hpp"
#include "quadboard/bessel.hpp"
#include "quadboard/dirac.hpp"
#include "quadboard/errors.hpp"
#include "quadboard/linear.hpp"
#include "quadboard/paths.hpp"
#include "quadboard/propagator.hpp"
#include "quadboard/rational.hpp"
#include "quadboard/real.hpp"
#include "quadboard/spacetime.hpp"
