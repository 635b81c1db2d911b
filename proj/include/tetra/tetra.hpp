#pragma once

#include "tetra/analytic_sqrt.hpp"
#include "tetra/config.hpp"
#include "tetra/disc_map.hpp"
#include "tetra/domains.hpp"
#include "tetra/errors.hpp"
#include "tetra/geodesics.hpp"
#include "tetra/left_inverse.hpp"
#include "tetra/lifting.hpp"
#include "tetra/mat2.hpp"
#include "tetra/polynomial.hpp"
#include "tetra/rng.hpp"
#include "tetra/rootcount.hpp"
#include "tetra/sampling.hpp"
#include "tetra/scalar.hpp"
#include "tetra/transforms.hpp"
#include "tetra/verifier.hpp"
