#pragma once

#include "harvestkit/model.hpp"
#include "harvestkit/quadrature.hpp"
#include "harvestkit/vacuum_elements.hpp"

namespace harvestkit {

// Squeezed-state contributions to the matrix elements (massless field, 3+1,
// identical Gaussian detectors). Uniform amplitudes reduce to 1D radial
// integrals; bandlimited and general amplitudes go through 3D cubature.

cplx l_sq_uniform(const DetectorPair& pair, const SqueezedUniform& amp, Leg nu, Leg eta,
                  const ProfileFT& profiles, const QuadratureConfig& cfg);
cplx m_sq_uniform(const DetectorPair& pair, const SqueezedUniform& amp, const ProfileFT& profiles,
                  const QuadratureConfig& cfg);

cplx l_sq_bandlimited(const DetectorPair& pair, const SqueezedBandlimited& amp, Leg nu, Leg eta,
                      const ProfileFT& profiles, const QuadratureConfig& cfg);
cplx m_sq_bandlimited(const DetectorPair& pair, const SqueezedBandlimited& amp,
                      const ProfileFT& profiles, const QuadratureConfig& cfg);

cplx l_sq_general(const DetectorPair& pair, const SqueezedGeneral& amp, Leg nu, Leg eta,
                  const ProfileFT& profiles, const QuadratureConfig& cfg);
cplx m_sq_general(const DetectorPair& pair, const SqueezedGeneral& amp, const ProfileFT& profiles,
                  const QuadratureConfig& cfg);

// zeta(k) -> e^{i k.x0} zeta(k); pure wrapper, no evaluation.
SqueezedGeneral phase_shift_zeta(const FieldState& squeezed_state, const Vec3& x0);

// Squeezed-quadrature noise reduction: dB = -20 log10(e) r.
double r_from_db(double noise_db);
double db_from_r(double r);

// Cancellation-safe core for the identical-detector negativity at large r.
// The e^{2r}-sized parts of L and |M| cancel pointwise inside one combined
// integrand instead of between two finished quadratures.
struct SqueezedNegCore {
    double re_m_minus_lbar;  // Re(e^{-i Omega Dp} M^sq) - (L^sq_AA + L^sq_BB)/2
    double re_m;             // Re(e^{-i Omega Dp} M^sq)
    double im_m;             // Im(e^{-i Omega Dp} M^sq)
    double delta_l;          // L^sq_AA - L^sq_BB (single difference quadrature)
};
SqueezedNegCore sq_uniform_neg_core(const DetectorPair& pair, const SqueezedUniform& amp,
                                    const ProfileFT& profiles, const QuadratureConfig& cfg);

}  // namespace harvestkit
