#pragma once

#include <functional>

#include "harvestkit/common.hpp"

namespace harvestkit {

struct QuadratureConfig {
    double abs_tol = 1e-10;
    double rel_tol = 1e-9;
    int max_subdivisions = 4000;
    double envelope_cutoff = 1e-2;  // tail truncation at envelope(k) <= envelope_cutoff * abs_tol

    void validate() const {
        if (!(abs_tol > 0) || !(rel_tol > 0) || max_subdivisions < 1 || !(envelope_cutoff > 0))
            throw DomainError("QuadratureConfig: tolerances and cutoff must be positive, max_subdivisions >= 1");
    }
};

struct QuadratureResult {
    cplx value{0.0, 0.0};
    double error_estimate = 0.0;
    int subdivisions_used = 0;
};

using Integrand1D = std::function<cplx(double)>;
using Envelope = std::function<double(double)>;
using Integrand2D = std::function<cplx(double, double)>;
using Integrand3D = std::function<cplx(const Vec3&)>;

// Integral of f over [0, inf). envelope must dominate |f| from some point on and
// decrease; it sets the truncation radius and the tail bound added to the error.
// max_frequency, when positive, caps the initial panel width at one oscillation
// period 2*pi/max_frequency of the fastest phase factor in f.
QuadratureResult integrate_semi_infinite(const Integrand1D& f, const Envelope& envelope,
                                         const QuadratureConfig& cfg, double max_frequency = 0.0);

// Adaptive Gauss-Kronrod 7/15 on a finite interval (shared panel tree for Re/Im).
QuadratureResult integrate_interval(const Integrand1D& f, double a, double b,
                                    const QuadratureConfig& cfg, double max_frequency = 0.0);

// Genz-Malik degree-7/5 embedded cubature, adaptive by bisection of the
// largest-error box along its most variable axis.
QuadratureResult integrate_rect_2d(const Integrand2D& f, const std::array<double, 2>& lo,
                                   const std::array<double, 2>& hi, const QuadratureConfig& cfg);

QuadratureResult integrate_box_3d(const Integrand3D& f, const Vec3& lo, const Vec3& hi,
                                  const QuadratureConfig& cfg);

}  // namespace harvestkit
