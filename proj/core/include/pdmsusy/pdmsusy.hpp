#pragma once

#include "pdmsusy/errors.hpp"
#include "pdmsusy/expr.hpp"
#include "pdmsusy/grid.hpp"
#include "pdmsusy/mass.hpp"
#include "pdmsusy/numerics.hpp"
#include "pdmsusy/quadrature.hpp"
#include "pdmsusy/shapeinv.hpp"
#include "pdmsusy/susy.hpp"
