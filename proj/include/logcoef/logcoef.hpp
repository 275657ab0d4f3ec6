#pragma once

// Umbrella header.

#include "logcoef/atlas.hpp"
#include "logcoef/dilog.hpp"
#include "logcoef/membership.hpp"
#include "logcoef/polynomial.hpp"
#include "logcoef/quadrature.hpp"
#include "logcoef/render.hpp"
#include "logcoef/schwarz.hpp"
#include "logcoef/search.hpp"
#include "logcoef/series.hpp"
#include "logcoef/spec_parser.hpp"
#include "logcoef/verifier.hpp"
