#pragma once

// Umbrella header: graphs, transmissions, integer set families, the TI
// graph families, structural constructions, and exhaustive enumeration.

#include "tigraph/dot.hpp"
#include "tigraph/enumerate.hpp"
#include "tigraph/error.hpp"
#include "tigraph/families.hpp"
#include "tigraph/graph.hpp"
#include "tigraph/graph6.hpp"
#include "tigraph/setfam.hpp"
#include "tigraph/structure.hpp"
#include "tigraph/transmission.hpp"
