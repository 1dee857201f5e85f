#pragma once

// Umbrella header.

#include "qcalc/expr.hpp"
#include "qcalc/identities.hpp"
#include "qcalc/jet.hpp"
#include "qcalc/numeric.hpp"
#include "qcalc/polynomial.hpp"
#include "qcalc/qoperator.hpp"
#include "qcalc/qsymbols.hpp"
#include "qcalc/rational.hpp"
#include "qcalc/sampling.hpp"
#include "qcalc/scalar.hpp"
#include "qcalc/series.hpp"
