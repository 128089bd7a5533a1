#pragma once

#include "disk.hpp"
#include "errors.hpp"
#include "extrapolation.hpp"
#include "legendre.hpp"
#include "numeric.hpp"
#include "partitions.hpp"
#include "perturbation.hpp"
#include "sphere.hpp"
#include "vandermonde.hpp"
