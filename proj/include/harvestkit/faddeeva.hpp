#pragma once

#include "harvestkit/common.hpp"

namespace harvestkit {

// Faddeeva function w(z) = exp(-z^2) erfc(-iz).
// Series / shifted-Taylor / continued-fraction regions after Poppe & Wijers;
// relative accuracy ~1e-13 over the tested domain. Throws
// SpecialFunctionOverflow when the y < 0 reflection term exp(-z^2) overflows.
cplx faddeeva_w(cplx z);

// erfc(z) computed through w: erfc(z) = exp(-z^2) w(iz), stable for Re z >= 0.
cplx erfc_complex(cplx z);

}  // namespace harvestkit
