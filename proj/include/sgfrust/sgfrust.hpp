#pragma once
// Umbrella header for the signed-graph frustration toolkit.

#include "balance.hpp"
#include "core.hpp"
#include "criticality.hpp"
#include "families.hpp"
#include "frustration.hpp"
#include "io.hpp"
#include "isomorphism.hpp"
#include "structure.hpp"
#include "surgery.hpp"
