#pragma once

// Umbrella header for the oriented-matroid workbench.

#include "errors.hpp"
#include "limits.hpp"
#include "rng.hpp"
#include "subsets.hpp"
#include "sign_vector.hpp"
#include "rational_matrix.hpp"
#include "chirotope.hpp"
#include "circuits.hpp"
#include "covectors.hpp"
#include "poset.hpp"
#include "gf2.hpp"
#include "simplicial.hpp"
#include "matching.hpp"
#include "rainbow.hpp"
#include "colorful.hpp"
#include "transversal.hpp"
#include "altwords.hpp"
