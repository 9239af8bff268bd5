#include "harvestkit/coherent_elements.hpp"

#include "harvestkit/radial.hpp"

namespace harvestkit {

namespace {

constexpr double kTwoOverSqrtPi = 1.12837916709551257388;

double alpha_of(const CoherentGaussian& amp, double k) {
    return amp.amplitude * std::exp(-amp.width * amp.width * k * k / 4.0);
}

double radial_v(const CoherentGaussian& amp, double extra_gauss_width2, double ax, double t,
                const QuadratureConfig& cfg) {
    // extra_gauss_width2 = sigma^2 of an optional smearing factor e^{-sigma^2 k^2/4}
    auto f = [&](double k) -> cplx {
        const double a = alpha_of(amp, k) * std::exp(-extra_gauss_width2 * k * k / 4.0);
        return kTwoOverSqrtPi * std::pow(k, 1.5) * a * sinc(k * ax) * std::cos(k * t);
    };
    GaussDecayEnvelope env{kTwoOverSqrtPi * std::abs(amp.amplitude), 1.5,
                           (amp.width * amp.width + extra_gauss_width2) / 4.0, 0.0};
    return integrate_semi_infinite(f, env, cfg, ax + std::abs(t)).value.real();
}

}  // namespace

double one_point_v(const CoherentGaussian& amp, const Vec3& x, double t,
                   const QuadratureConfig& cfg) {
    validate(FieldState{amp});
    if (amp.amplitude == 0.0) return 0.0;
    return radial_v(amp, 0.0, norm(x), t, cfg);
}

double smeared_v(const DetectorParams& detector, const CoherentGaussian& amp, double t,
                 const QuadratureConfig& cfg) {
    detector.validate();
    if (amp.amplitude == 0.0) return 0.0;
    const double s = detector.smearing_width;
    return radial_v(amp, s * s, norm(detector.center), t, cfg);
}

FirstOrderAmplitudes first_order_amplitudes(const DetectorPair& pair, const CoherentGaussian& amp,
                                            const QuadratureConfig& cfg) {
    pair.validate();
    FirstOrderAmplitudes out{};
    if (amp.amplitude == 0.0) return out;
    auto amplitude = [&](const DetectorParams& det, int sign) -> cplx {
        auto f = [&](double t) -> cplx {
            const double chi = std::exp(-(t - det.switch_center) * (t - det.switch_center));
            const double v = smeared_v(det, amp, t, cfg);
            const double ph = sign * det.gap * t;
            return det.coupling * chi * v * cplx{std::cos(ph), std::sin(ph)};
        };
        return integrate_interval(f, det.switch_center - 8.0, det.switch_center + 8.0, cfg,
                                  std::abs(det.gap))
            .value;
    };
    out.a_plus_a = amplitude(pair.a, +1);
    out.a_minus_a = amplitude(pair.a, -1);
    out.a_plus_b = amplitude(pair.b, +1);
    out.a_minus_b = amplitude(pair.b, -1);
    return out;
}

TwoDetectorDensityMatrix assemble_coherent_rho(const DetectorPair& pair,
                                               const CoherentGaussian& amp,
                                               const MatrixElements& base,
                                               const QuadratureConfig& cfg) {
    const FirstOrderAmplitudes fo = first_order_amplitudes(pair, amp, cfg);

    // second order: every coherent two-point correction is a product of
    // first-order amplitudes (w^coh = v v')
    MatrixElements el = base;
    el.l_aa += fo.a_plus_a * fo.a_minus_a;
    el.l_bb += fo.a_plus_b * fo.a_minus_b;
    el.l_ab += fo.a_plus_a * fo.a_minus_b;
    el.m += -fo.a_plus_a * fo.a_plus_b;

    TwoDetectorDensityMatrix rho = assemble_xform(el);

    // first order: i [rho0, mu_nu] V couples gg to the single excitations
    const cplx i{0.0, 1.0};
    rho(0, 2) += i * fo.a_minus_a;
    rho(2, 0) += -i * fo.a_plus_a;
    rho(0, 1) += i * fo.a_minus_b;
    rho(1, 0) += -i * fo.a_plus_b;

    const double herm = rho.hermiticity_residual();
    if (herm > 1e-10)
        throw NonHermitianInput("assemble_coherent_rho: hermiticity residual " +
                                std::to_string(herm) + " signals a pairing bug");
    return rho;
}

}  // namespace harvestkit
