#ifndef HOMCX_HOMCX_HPP
#define HOMCX_HOMCX_HPP

#include "homcx/cell.hpp"
#include "homcx/color_set.hpp"
#include "homcx/connectivity.hpp"
#include "homcx/cycle_reduction.hpp"
#include "homcx/frame.hpp"
#include "homcx/graph.hpp"
#include "homcx/homology.hpp"
#include "homcx/loop_contraction.hpp"
#include "homcx/skeleton.hpp"
#include "homcx/smith.hpp"

#endif  // HOMCX_HOMCX_HPP
