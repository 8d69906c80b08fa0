#pragma once

// poscones: exact numerical rings of Grassmannians, their products, and
// projectivized bundles over curves, with the positive-cone toolbox
// (pseudoeffective / nef / pliant / complete-intersection) on top.

#include "errors.hpp"
#include "rational.hpp"
#include "linalg.hpp"
#include "partition.hpp"
#include "ring.hpp"
#include "chern.hpp"
#include "cone.hpp"
#include "grassmann.hpp"
#include "projbundle.hpp"
#include "positivity.hpp"
#include "expr.hpp"
#include "model_io.hpp"
