#pragma once

#include "harvestkit/model.hpp"
#include "harvestkit/quadrature.hpp"
#include "harvestkit/vacuum_elements.hpp"

namespace harvestkit {

struct ThermalSetup {
    DetectorPair pair;
    double beta = 1.0;
    double mass = 0.0;

    void validate() const {
        pair.validate();
        if (!(beta > 0)) throw DomainError("ThermalSetup: beta must be > 0");
        if (mass < 0) throw DomainError("ThermalSetup: mass must be >= 0");
    }
};

// Bose-Einstein occupation 1/(e^x - 1), evaluated through expm1 so the k -> 0
// endpoint stays accurate. The perturbation hook exists for the selfcheck
// fault-injection contract and is zero in normal operation.
double bose_occupation(double x);
void set_bose_perturbation(double relative_shift);  // test hook

// Thermal additions to the vacuum elements (1D radial form, isotropic profiles,
// omega = sqrt(k^2 + mass^2)).
cplx l_thermal(const ThermalSetup& setup, Leg nu, Leg eta, const ProfileFT& profiles,
               const QuadratureConfig& cfg);
cplx m_thermal(const ThermalSetup& setup, const ProfileFT& profiles, const QuadratureConfig& cfg);

MatrixElements thermal_elements(const ThermalSetup& setup, const ProfileFT& profiles,
                                const QuadratureConfig& cfg);

// h(k) = 1/(e^{beta2 w} - 1) - 1/(e^{beta1 w} - 1); strictly positive for
// beta1 > beta2 (hotter state more occupied).
double bose_difference_h(double k, double beta1, double beta2, double mass);

// D(k) = |F(k)|^2 (|chi(w - Omega)| - |chi(w + Omega)|)^2 for identical detectors.
double d_function(double k, const DetectorPair& pair, const ProfileFT& profiles,
                  double mass = 0.0);

// Lower bound on dN/dbeta where N > 0: pi lambda^2 int d^3k D(k) e^{bw}/(e^{bw}-1)^2.
double negativity_rate_bound(const ThermalSetup& setup, const ProfileFT& profiles,
                             const QuadratureConfig& cfg);

// Thermal part of the massless (3+1) two-point function at (x, t; 0, 0),
// r = |x|: quadrature of sin(kr)cos(kt)/(e^{beta k}-1)/(2 pi^2 r) vs the
// coth closed form. Both refuse within 1e-3 of the light cone.
double thermal_wightman_numeric(double r, double t, double beta, const QuadratureConfig& cfg);
double thermal_wightman_closed(double r, double t, double beta);

}  // namespace harvestkit
