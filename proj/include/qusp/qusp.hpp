#pragma once

#include "qusp/error.hpp"
#include "qusp/identities.hpp"
#include "qusp/kernels.hpp"
#include "qusp/matrix.hpp"
#include "qusp/measures.hpp"
#include "qusp/parameters.hpp"
#include "qusp/real.hpp"
#include "qusp/recurrence.hpp"
#include "qusp/representation.hpp"
#include "qusp/tridiagonal_eigen.hpp"
#include "qusp/trig.hpp"
