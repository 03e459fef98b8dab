#pragma once

// Umbrella header.
#include "mbs/bench.hpp"
#include "mbs/circular_arc_solver.hpp"
#include "mbs/error.hpp"
#include "mbs/generate.hpp"
#include "mbs/geometry.hpp"
#include "mbs/graph.hpp"
#include "mbs/interval_solver.hpp"
#include "mbs/io.hpp"
#include "mbs/oracle.hpp"
#include "mbs/rational.hpp"
#include "mbs/rect_solver.hpp"
#include "mbs/reductions.hpp"
#include "mbs/shifting_ptas.hpp"
#include "mbs/solve.hpp"
#include "mbs/unit_disk_general.hpp"
#include "mbs/unit_disk_line.hpp"
