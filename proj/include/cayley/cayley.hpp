#pragma once

#include "cayley/algebra.hpp"
#include "cayley/bitset.hpp"
#include "cayley/errors.hpp"
#include "cayley/group.hpp"
#include "cayley/numeric.hpp"
#include "cayley/parse.hpp"
#include "cayley/report.hpp"
#include "cayley/scenarios.hpp"
#include "cayley/subset.hpp"
#include "cayley/walk.hpp"

namespace cayley {

inline constexpr const char* version = "0.1.0";

}  // namespace cayley
