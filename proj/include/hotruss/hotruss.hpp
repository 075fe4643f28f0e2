#pragma once

// Umbrella header: higher-order (k,tau)-truss decomposition toolkit.

#include "hotruss/baseline.hpp"
#include "hotruss/bounds.hpp"
#include "hotruss/generator.hpp"
#include "hotruss/graph.hpp"
#include "hotruss/io.hpp"
#include "hotruss/optimized.hpp"
#include "hotruss/oracle.hpp"
#include "hotruss/result.hpp"
#include "hotruss/stats.hpp"
#include "hotruss/support.hpp"
#include "hotruss/topr.hpp"
