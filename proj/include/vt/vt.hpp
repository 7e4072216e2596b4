#pragma once

#include "vt/circulant.hpp"
#include "vt/cuts.hpp"
#include "vt/cycles.hpp"
#include "vt/edgecut.hpp"
#include "vt/error.hpp"
#include "vt/graph.hpp"
#include "vt/io.hpp"
#include "vt/metric.hpp"
#include "vt/parallel.hpp"
#include "vt/path_set.hpp"
#include "vt/report.hpp"
#include "vt/routing.hpp"
#include "vt/torus.hpp"
