#pragma once

// Umbrella header.

#include "qeuler/binomial.hpp"
#include "qeuler/continuation.hpp"
#include "qeuler/errors.hpp"
#include "qeuler/exact_euler.hpp"
#include "qeuler/numeric.hpp"
#include "qeuler/poly_z.hpp"
#include "qeuler/qzeta.hpp"
#include "qeuler/rational_q.hpp"
#include "qeuler/scalar_kernel.hpp"
