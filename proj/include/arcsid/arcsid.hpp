#pragma once

// Umbrella header: the full exact-arithmetic identity engine.

#include "arcsid/errors.hpp"
#include "arcsid/rational.hpp"
#include "arcsid/qpi2.hpp"
#include "arcsid/combinatorics.hpp"
#include "arcsid/quadrature.hpp"
#include "arcsid/series.hpp"
#include "arcsid/report.hpp"
#include "arcsid/catalog.hpp"
#include "arcsid/identities.hpp"
#include "arcsid/dsl.hpp"
#include "arcsid/dsl_corpus.hpp"
