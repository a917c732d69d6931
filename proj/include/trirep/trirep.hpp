#pragma once

#include "trirep/code.hpp"
#include "trirep/complex.hpp"
#include "trirep/enumerator.hpp"
#include "trirep/error.hpp"
#include "trirep/gadgets.hpp"
#include "trirep/gf2.hpp"
#include "trirep/matching.hpp"
#include "trirep/represent.hpp"
