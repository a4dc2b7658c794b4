#pragma once

// Umbrella header for the general-position subset selection toolkit.

#include "gpss/generators.hpp"
#include "gpss/graph.hpp"
#include "gpss/hull.hpp"
#include "gpss/instance.hpp"
#include "gpss/io.hpp"
#include "gpss/kernel.hpp"
#include "gpss/line.hpp"
#include "gpss/line_detect.hpp"
#include "gpss/order_type.hpp"
#include "gpss/point.hpp"
#include "gpss/predicates.hpp"
#include "gpss/rational.hpp"
#include "gpss/solve.hpp"
