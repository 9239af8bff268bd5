#pragma once

#include "harvestkit/model.hpp"
#include "harvestkit/quadrature.hpp"

namespace harvestkit {

// Second-order density-matrix entries, coupling prefactors included.
// l_aa, l_bb are excitation probabilities (real >= 0 up to quadrature noise);
// under A<->B relabeling l_aa<->l_bb, l_ab -> conj(l_ab), m -> m.
struct MatrixElements {
    cplx l_aa{0, 0};
    cplx l_bb{0, 0};
    cplx l_ab{0, 0};
    cplx m{0, 0};
};

enum class Leg { A, B };

// Wightman-vacuum contribution to L_{nu eta}, reduced to a 1D radial integral
// (isotropic smearing; the angular average of exp(-i k.dx) is sin(kd)/(kd)).
cplx l_vac(const DetectorPair& pair, Leg nu, Leg eta, const ProfileFT& profiles,
           const QuadratureConfig& cfg);

// Vacuum M: the nested double time integral per mode is evaluated in closed
// form through the Faddeeva function (Gaussian switching only).
cplx m_vac(const DetectorPair& pair, const ProfileFT& profiles, const QuadratureConfig& cfg);

MatrixElements vacuum_elements(const DetectorPair& pair, const ProfileFT& profiles,
                               const QuadratureConfig& cfg);

// Closed form of int dt int_{-inf}^t dt' chi_nu(t) chi_eta(t') e^{i(Om_nu - w)t}
// e^{i(Om_eta + w)t'} for unit-width Gaussian switchings centered at t_nu, t_eta.
// Exposed for the oracle test that gates the closed form against 2D quadrature.
cplx time_ordered_gaussian_kernel(double omega, double gap_nu, double gap_eta, double t_nu,
                                  double t_eta);

}  // namespace harvestkit
