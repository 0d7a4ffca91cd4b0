#pragma once

#include "psmod/arith.hpp"
#include "psmod/constructions.hpp"
#include "psmod/domain.hpp"
#include "psmod/error.hpp"
#include "psmod/ideals.hpp"
#include "psmod/integer.hpp"
#include "psmod/lattice.hpp"
#include "psmod/modules.hpp"
#include "psmod/order.hpp"
#include "psmod/ratpoly.hpp"
#include "psmod/refine.hpp"
#include "psmod/syntax.hpp"
