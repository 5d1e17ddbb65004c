#pragma once

// Umbrella header. report_json.hpp is left out so that library users who do
// not need JSON do not pull in nlohmann/json.

#include "holeham/enumerate.hpp"
#include "holeham/generators.hpp"
#include "holeham/graph.hpp"
#include "holeham/graph6.hpp"
#include "holeham/hamilton.hpp"
#include "holeham/holes.hpp"
#include "holeham/invariants.hpp"
#include "holeham/rotation.hpp"
#include "holeham/sharpness.hpp"
#include "holeham/theorems.hpp"
#include "holeham/verify.hpp"
#include "holeham/vertex_set.hpp"
