#include "harvestkit/vacuum_elements.hpp"

#include "harvestkit/faddeeva.hpp"
#include "harvestkit/radial.hpp"

namespace harvestkit {

namespace {

const DetectorParams& pick(const DetectorPair& pair, Leg leg) {
    return leg == Leg::A ? pair.a : pair.b;
}

const std::function<double(double)>& smearing_of(const ProfileFT& profiles, Leg leg) {
    return leg == Leg::A ? profiles.smearing_a : profiles.smearing_b;
}

cplx phase(double arg) { return {std::cos(arg), std::sin(arg)}; }

}  // namespace

cplx time_ordered_gaussian_kernel(double omega, double gap_nu, double gap_eta, double t_nu,
                                  double t_eta) {
    const double a = gap_nu - omega;
    const double b = gap_eta + omega;
    const double dt = t_nu - t_eta;
    const cplx front = phase(a * t_nu + b * t_eta);
    const double gap_sum = gap_nu + gap_eta;
    const cplx half_amp =
        (M_PI / 2.0) * std::exp(-gap_sum * gap_sum / 8.0 - dt * dt / 2.0) *
        phase(-dt * (a - b) / 2.0);
    const cplx z{(a - b) / (2.0 * M_SQRT2), -dt / M_SQRT2};
    if (dt <= 0.0) return front * half_amp * faddeeva_w(z);
    // Reflect w(z) = 2 exp(-z^2) - w(-z); the exp term reassembles into the
    // unrestricted double Gaussian integral, which is bounded.
    const cplx full = M_PI * std::exp(-(a * a + b * b) / 4.0) * front;
    return full - front * half_amp * faddeeva_w(-z);
}

cplx l_vac(const DetectorPair& pair, Leg nu, Leg eta, const ProfileFT& profiles,
           const QuadratureConfig& cfg) {
    pair.validate();
    const DetectorParams& dn = pick(pair, nu);
    const DetectorParams& de = pick(pair, eta);
    const auto& Fn = smearing_of(profiles, nu);
    const auto& Fe = smearing_of(profiles, eta);
    const auto& chi = profiles.switching;
    const double d = norm(dn.center - de.center);
    const double pref = 4.0 * M_PI * M_PI * dn.coupling * de.coupling;

    auto f = [&](double k) -> cplx {
        const double amp =
            pref * k * Fn(k) * Fe(k) * sinc(k * d) * chi(k + dn.gap) * chi(k + de.gap);
        return amp * phase((k + dn.gap) * dn.switch_center - (k + de.gap) * de.switch_center);
    };
    // |chi| <= 1/sqrt(2) each; F carries the Gaussian decay.
    const double sn = dn.smearing_width, se = de.smearing_width;
    GaussDecayEnvelope env{pref * Fn(0) * Fe(0) * 0.5, 1.0, (sn * sn + se * se) / 4.0, 0.0};
    const double max_freq = d + std::abs(dn.switch_center) + std::abs(de.switch_center);
    return integrate_semi_infinite(f, env, cfg, max_freq).value;
}

cplx m_vac(const DetectorPair& pair, const ProfileFT& profiles, const QuadratureConfig& cfg) {
    pair.validate();
    const auto& FA = profiles.smearing_a;
    const auto& FB = profiles.smearing_b;
    const double d = pair.separation();
    const double pref = -2.0 * M_PI * pair.a.coupling * pair.b.coupling;

    auto f = [&](double k) -> cplx {
        const cplx tab = time_ordered_gaussian_kernel(k, pair.a.gap, pair.b.gap,
                                                      pair.a.switch_center, pair.b.switch_center);
        const cplx tba = time_ordered_gaussian_kernel(k, pair.b.gap, pair.a.gap,
                                                      pair.b.switch_center, pair.a.switch_center);
        return pref * k * FA(k) * FB(k) * sinc(k * d) * (tab + tba);
    };
    const double sa = pair.a.smearing_width, sb = pair.b.smearing_width;
    // |T| <= pi (1 + 3/2) generously covers both branches of the kernel.
    GaussDecayEnvelope env{std::abs(pref) * FA(0) * FB(0) * 5.0 * M_PI, 1.0,
                           (sa * sa + sb * sb) / 4.0, 0.0};
    const double max_freq = d + std::abs(pair.a.switch_center) + std::abs(pair.b.switch_center) +
                            2.0;  // the Faddeeva kernel itself oscillates on the dt scale
    return integrate_semi_infinite(f, env, cfg, max_freq).value;
}

MatrixElements vacuum_elements(const DetectorPair& pair, const ProfileFT& profiles,
                               const QuadratureConfig& cfg) {
    MatrixElements el;
    el.l_aa = l_vac(pair, Leg::A, Leg::A, profiles, cfg);
    el.l_bb = l_vac(pair, Leg::B, Leg::B, profiles, cfg);
    el.l_ab = l_vac(pair, Leg::A, Leg::B, profiles, cfg);
    el.m = m_vac(pair, profiles, cfg);
    return el;
}

}  // namespace harvestkit
