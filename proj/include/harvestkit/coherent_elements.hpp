#pragma once

#include "harvestkit/measures.hpp"
#include "harvestkit/model.hpp"
#include "harvestkit/quadrature.hpp"

namespace harvestkit {

// First-order transition amplitudes A_nu^± = lambda int dt chi_nu(t) e^{±i Omega t} V(x_nu, t).
// For the real isotropic alpha family, a_minus = conj(a_plus).
struct FirstOrderAmplitudes {
    cplx a_plus_a, a_minus_a;
    cplx a_plus_b, a_minus_b;
};

// One-point function v(x, t) of the displaced state, reduced to a radial
// integral: (2/sqrt(pi)) int dk k^{3/2} alpha(k) sinc(k|x|) cos(kt).
double one_point_v(const CoherentGaussian& amp, const Vec3& x, double t,
                   const QuadratureConfig& cfg);

// Smearing the one-point function multiplies the radial integrand by
// (2 pi)^{3/2} F(k); gated by a position-space convolution oracle in the tests.
double smeared_v(const DetectorParams& detector, const CoherentGaussian& amp, double t,
                 const QuadratureConfig& cfg);

FirstOrderAmplitudes first_order_amplitudes(const DetectorPair& pair, const CoherentGaussian& amp,
                                            const QuadratureConfig& cfg);

// Full O(lambda^2) state for a coherent field: ground-state projector, the
// first-order block from A_nu^±, and the X-form second order where every
// coherent two-point correction factorizes into products of the same
// amplitudes (L_{nu eta} += A_nu^+ A_eta^-, M += -A_A^+ A_B^+). Trace is
// renormalized to exactly 1 through the gg entry.
TwoDetectorDensityMatrix assemble_coherent_rho(const DetectorPair& pair,
                                               const CoherentGaussian& amp,
                                               const MatrixElements& base,
                                               const QuadratureConfig& cfg);

}  // namespace harvestkit
