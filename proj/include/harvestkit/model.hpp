#pragma once

#include <functional>
#include <variant>

#include "harvestkit/common.hpp"

namespace harvestkit {

// All quantities are dimensionless in units of the switching width tau:
// gap = Omega*tau, smearing_width = sigma/tau, positions and times in tau.
struct DetectorParams {
    double gap = 1.0;
    double smearing_width = 1.0;
    Vec3 center{0.0, 0.0, 0.0};
    double switch_center = 0.0;
    double coupling = 1.0;

    void validate() const {
        if (!(smearing_width > 0)) throw DomainError("DetectorParams: smearing_width must be > 0");
        if (!(coupling > 0)) throw DomainError("DetectorParams: coupling must be > 0");
    }
};

struct DetectorPair {
    DetectorParams a, b;

    double separation() const { return norm(a.center - b.center); }
    double delta_minus() const { return b.switch_center - a.switch_center; }
    double delta_plus() const { return b.switch_center + a.switch_center; }

    // gaps, widths and couplings equal; centers may differ
    bool identical() const {
        return a.gap == b.gap && a.smearing_width == b.smearing_width && a.coupling == b.coupling;
    }
    void validate() const {
        a.validate();
        b.validate();
    }
};

struct Vacuum {};
struct Thermal {
    double beta = 1.0;
    double mass = 0.0;
};
struct SqueezedUniform {
    double r = 0.0;
    double theta = 0.0;
};
struct SqueezedBandlimited {
    Vec3 k_center{0.0, 0.0, 0.0};
    double epsilon = 1.0;
    double r = 0.0;
    double theta = 0.0;
};
struct SqueezedGeneral {
    std::function<cplx(const Vec3&)> zeta;
    std::function<double(double)> support_envelope;  // decreasing bound on |zeta| vs |k|
};
struct CoherentGaussian {
    double amplitude = 0.0;  // a0
    double width = 1.0;      // sigma_alpha
};

using FieldState =
    std::variant<Vacuum, Thermal, SqueezedUniform, SqueezedBandlimited, SqueezedGeneral, CoherentGaussian>;

void validate(const FieldState& state);

// Fourier transforms of the coupling profiles, centered at the origin.
// Detector positions and switching centers never enter here; each element
// engine threads them through as explicit phase factors.
struct ProfileFT {
    std::function<double(double)> smearing_a;   // \bar F_A(|k|)
    std::function<double(double)> smearing_b;   // \bar F_B(|k|)
    std::function<double(double)> switching;    // centered \bar chi(omega), even
};

// \bar F(k) = (2 pi)^{-3/2} exp(-sigma^2 k^2 / 4) for the normalized Gaussian
// F(x) = pi^{-3/2} sigma^{-3} exp(-|x|^2/sigma^2).
double gaussian_smearing_ft(double sigma, double k);

// FT of chi(t) = exp(-t^2) in tau units: exp(-omega^2/4)/sqrt(2).
double gaussian_switching_ft(double omega);

double dispersion(double k, double mass);

ProfileFT gaussian_profiles(const DetectorPair& pair);

}  // namespace harvestkit
