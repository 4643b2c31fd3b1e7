#pragma once

#include "mudom/boundary.hpp"
#include "mudom/domain312.hpp"
#include "mudom/domain333.hpp"
#include "mudom/geometry.hpp"
#include "mudom/json_io.hpp"
#include "mudom/linalg.hpp"
#include "mudom/realization.hpp"
#include "mudom/rng.hpp"
#include "mudom/schwarz.hpp"
#include "mudom/tetrablock.hpp"
#include "mudom/types.hpp"
