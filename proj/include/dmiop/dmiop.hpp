#pragma once

#include "dmiop/error.hpp"
#include "dmiop/rational.hpp"
#include "dmiop/bigreal.hpp"
#include "dmiop/polynomial.hpp"
#include "dmiop/matrix.hpp"
#include "dmiop/params.hpp"
#include "dmiop/report.hpp"
#include "dmiop/base_family.hpp"
#include "dmiop/multi_indexed.hpp"
#include "dmiop/recurrence.hpp"
#include "dmiop/comparators.hpp"
#include "dmiop/dual_system.hpp"
#include "dmiop/closure.hpp"
#include "dmiop/shape_invariance.hpp"
#include "dmiop/qlimit.hpp"
#include "dmiop/serialize.hpp"
#include "dmiop/run.hpp"
