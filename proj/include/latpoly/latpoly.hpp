#pragma once

// Umbrella header.

#include "latpoly/canonical.hpp"
#include "latpoly/cones.hpp"
#include "latpoly/core.hpp"
#include "latpoly/database.hpp"
#include "latpoly/ehrhart.hpp"
#include "latpoly/families.hpp"
#include "latpoly/fixtures.hpp"
#include "latpoly/matrix.hpp"
#include "latpoly/parallel.hpp"
#include "latpoly/point.hpp"
#include "latpoly/polytope.hpp"
#include "latpoly/polytope_enum.hpp"
#include "latpoly/properties.hpp"
#include "latpoly/simplex_enum.hpp"
#include "latpoly/volume_vectors.hpp"
