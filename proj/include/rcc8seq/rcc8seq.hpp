#pragma once

#include "rcc8seq/composition.hpp"
#include "rcc8seq/fragments.hpp"
#include "rcc8seq/network.hpp"
#include "rcc8seq/planner.hpp"
#include "rcc8seq/projection.hpp"
#include "rcc8seq/qcn_io.hpp"
#include "rcc8seq/relation.hpp"
#include "rcc8seq/sequence.hpp"
#include "rcc8seq/solver.hpp"
#include "rcc8seq/verify.hpp"
