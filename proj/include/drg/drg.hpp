#pragma once

// Everything in one include.

#include "drg/error.hpp"
#include "drg/exact.hpp"
#include "drg/polynomial.hpp"
#include "drg/arrays.hpp"
#include "drg/spectra.hpp"
#include "drg/geometric.hpp"
#include "drg/graph.hpp"
#include "drg/generators.hpp"
#include "drg/graph_analysis.hpp"
#include "drg/numeric.hpp"
#include "drg/cliques.hpp"
#include "drg/records.hpp"
#include "drg/enumerator.hpp"
#include "drg/report.hpp"
