#pragma once

#include <gmpxx.h>

namespace kingmesh {

// Arbitrary-precision signed integer used for every count and coefficient.
using Integer = mpz_class;

}  // namespace kingmesh
