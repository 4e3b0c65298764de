#pragma once

// Umbrella header for the cisgraph library.

#include "cis/enumerate.hpp"
#include "cis/error.hpp"
#include "cis/families.hpp"
#include "cis/graph.hpp"
#include "cis/graph6.hpp"
#include "cis/groups.hpp"
#include "cis/predicate_expr.hpp"
#include "cis/reduction.hpp"
#include "cis/report.hpp"
#include "cis/small_graphs.hpp"
#include "cis/suites.hpp"
#include "cis/symmetry.hpp"
#include "cis/vertex_set.hpp"
