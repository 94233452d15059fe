#pragma once

#include "flagdesic/closure.hpp"
#include "flagdesic/equigeo.hpp"
#include "flagdesic/errors.hpp"
#include "flagdesic/flag.hpp"
#include "flagdesic/linalg.hpp"
#include "flagdesic/matrix.hpp"
#include "flagdesic/metric.hpp"
#include "flagdesic/partition.hpp"
#include "flagdesic/scalar.hpp"
