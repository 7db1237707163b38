#pragma once

#include "graphinv/error.hpp"
#include "graphinv/families.hpp"
#include "graphinv/generators.hpp"
#include "graphinv/graph.hpp"
#include "graphinv/inverse.hpp"
#include "graphinv/isomorphism.hpp"
#include "graphinv/matrix.hpp"
#include "graphinv/rational.hpp"
#include "graphinv/sachs.hpp"
#include "graphinv/spectra.hpp"
