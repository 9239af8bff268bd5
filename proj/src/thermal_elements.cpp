#include "harvestkit/thermal_elements.hpp"

#include "harvestkit/radial.hpp"

namespace harvestkit {

namespace {

double g_bose_perturbation = 0.0;

cplx phase(double arg) { return {std::cos(arg), std::sin(arg)}; }

const DetectorParams& pick(const DetectorPair& pair, Leg leg) {
    return leg == Leg::A ? pair.a : pair.b;
}
const std::function<double(double)>& smearing_of(const ProfileFT& profiles, Leg leg) {
    return leg == Leg::A ? profiles.smearing_a : profiles.smearing_b;
}

// envelope = amp [ k + 1/beta ] exp(-alpha k^2 - beta k), as a decreasing majorant:
// covers Bose <= e^{-beta k}(1 + 1/(beta k)) times the k^2/omega <= k measure.
Envelope thermal_envelope(double amp, double alpha, double beta) {
    GaussDecayEnvelope e1{amp, 1.0, alpha, -beta};
    GaussDecayEnvelope e0{amp / beta, 0.0, alpha, -beta};
    return [e1, e0](double k) { return e1(k) + e0(k); };
}

}  // namespace

double bose_occupation(double x) {
    const double n = 1.0 / std::expm1(x);
    return g_bose_perturbation == 0.0 ? n : n * (1.0 + g_bose_perturbation);
}

void set_bose_perturbation(double relative_shift) { g_bose_perturbation = relative_shift; }

cplx l_thermal(const ThermalSetup& setup, Leg nu, Leg eta, const ProfileFT& profiles,
               const QuadratureConfig& cfg) {
    setup.validate();
    const DetectorPair& pair = setup.pair;
    const DetectorParams& dn = pick(pair, nu);
    const DetectorParams& de = pick(pair, eta);
    const auto& Fn = smearing_of(profiles, nu);
    const auto& Fe = smearing_of(profiles, eta);
    const auto& chi = profiles.switching;
    const double d = norm(dn.center - de.center);
    const double m = setup.mass;
    const double beta = setup.beta;
    const double pref = 4.0 * M_PI * M_PI * dn.coupling * de.coupling;

    auto f = [&, pref](double k) -> cplx {
        if (k <= 0.0) return cplx{0.0, 0.0};
        const double w = dispersion(k, m);
        if (w <= 0.0) return cplx{0.0, 0.0};
        const double common = pref * (k * k / w) * Fn(k) * Fe(k) * sinc(k * d) * bose_occupation(beta * w);
        const cplx rot = chi(w - dn.gap) * chi(w - de.gap) *
                         phase(-(w - dn.gap) * dn.switch_center + (w - de.gap) * de.switch_center);
        const cplx antirot = chi(w + dn.gap) * chi(w + de.gap) *
                             phase((w + dn.gap) * dn.switch_center - (w + de.gap) * de.switch_center);
        return common * (rot + antirot);
    };
    const double sn = dn.smearing_width, se = de.smearing_width;
    auto env = thermal_envelope(pref * Fn(0) * Fe(0) * 1.0 * 2.0, (sn * sn + se * se) / 4.0, beta);
    const double max_freq = d + std::abs(dn.switch_center) + std::abs(de.switch_center);
    return integrate_semi_infinite(f, env, cfg, max_freq).value;
}

cplx m_thermal(const ThermalSetup& setup, const ProfileFT& profiles, const QuadratureConfig& cfg) {
    setup.validate();
    const DetectorPair& pair = setup.pair;
    const auto& FA = profiles.smearing_a;
    const auto& FB = profiles.smearing_b;
    const auto& chi = profiles.switching;
    const double d = pair.separation();
    const double m = setup.mass;
    const double beta = setup.beta;
    const double tA = pair.a.switch_center, tB = pair.b.switch_center;
    const double pref = -4.0 * M_PI * M_PI * pair.a.coupling * pair.b.coupling;

    auto f = [&, pref](double k) -> cplx {
        if (k <= 0.0) return cplx{0.0, 0.0};
        const double w = dispersion(k, m);
        if (w <= 0.0) return cplx{0.0, 0.0};
        const double common =
            pref * (k * k / w) * FA(k) * FB(k) * sinc(k * d) * bose_occupation(beta * w);
        const cplx t1 = chi(w - pair.a.gap) * chi(w + pair.b.gap) *
                        phase(-(w - pair.a.gap) * tA + (w + pair.b.gap) * tB);
        const cplx t2 = chi(w + pair.a.gap) * chi(w - pair.b.gap) *
                        phase((w + pair.a.gap) * tA - (w - pair.b.gap) * tB);
        return common * (t1 + t2);
    };
    const double sa = pair.a.smearing_width, sb = pair.b.smearing_width;
    auto env =
        thermal_envelope(std::abs(pref) * FA(0) * FB(0) * 2.0, (sa * sa + sb * sb) / 4.0, beta);
    const double max_freq = d + std::abs(tA) + std::abs(tB);
    return integrate_semi_infinite(f, env, cfg, max_freq).value;
}

MatrixElements thermal_elements(const ThermalSetup& setup, const ProfileFT& profiles,
                                const QuadratureConfig& cfg) {
    MatrixElements el = vacuum_elements(setup.pair, profiles, cfg);
    el.l_aa += l_thermal(setup, Leg::A, Leg::A, profiles, cfg);
    el.l_bb += l_thermal(setup, Leg::B, Leg::B, profiles, cfg);
    el.l_ab += l_thermal(setup, Leg::A, Leg::B, profiles, cfg);
    el.m += m_thermal(setup, profiles, cfg);
    return el;
}

double bose_difference_h(double k, double beta1, double beta2, double mass) {
    if (!(beta1 > 0) || !(beta2 > 0)) throw DomainError("bose_difference_h: betas must be > 0");
    if (!(k > 0) && mass == 0.0) throw DomainError("bose_difference_h: k must be > 0 when massless");
    const double w = dispersion(k, mass);
    return 1.0 / std::expm1(beta2 * w) - 1.0 / std::expm1(beta1 * w);
}

double d_function(double k, const DetectorPair& pair, const ProfileFT& profiles, double mass) {
    if (!pair.identical()) throw DomainError("d_function: detectors must be identical");
    const double w = dispersion(k, mass);
    const double F = profiles.smearing_a(k);
    const double diff = std::abs(profiles.switching(w - pair.a.gap)) -
                        std::abs(profiles.switching(w + pair.a.gap));
    return F * F * diff * diff;
}

double negativity_rate_bound(const ThermalSetup& setup, const ProfileFT& profiles,
                             const QuadratureConfig& cfg) {
    setup.validate();
    if (!setup.pair.identical())
        throw DomainError("negativity_rate_bound: detectors must be identical");
    const double beta = setup.beta;
    const double m = setup.mass;
    const double lam2 = setup.pair.a.coupling * setup.pair.a.coupling;
    const double pref = 4.0 * M_PI * M_PI * lam2;

    auto f = [&](double k) -> cplx {
        if (k <= 0.0) return cplx{0.0, 0.0};
        const double w = dispersion(k, m);
        const double x = beta * w;
        if (x <= 0.0) return cplx{0.0, 0.0};
        // e^x/(e^x-1)^2, written to stay finite for large x
        const double ex = std::exp(-x);
        const double g = (x > 1e-8) ? ex / ((1.0 - ex) * (1.0 - ex)) : 1.0 / (x * x);
        return pref * k * k * d_function(k, setup.pair, profiles, m) * g;
    };
    const double s = setup.pair.a.smearing_width;
    const double F0 = profiles.smearing_a(0);
    // D <= F(k)^2 / 2; g <= e^{-beta k}(1 + 1/(beta k))^2 -- fold the square into 2/beta margin
    GaussDecayEnvelope e2{pref * F0 * F0, 2.0, s * s / 2.0, -beta};
    GaussDecayEnvelope e0{pref * F0 * F0 * 2.0 / (beta * beta), 0.0, s * s / 2.0, -beta};
    Envelope env = [e2, e0](double k) { return e2(k) + e0(k); };
    return integrate_semi_infinite(f, env, cfg).value.real();
}

double thermal_wightman_numeric(double r, double t, double beta, const QuadratureConfig& cfg) {
    if (!(r > 0)) throw DomainError("thermal_wightman_numeric: r must be > 0");
    if (!(beta > 0)) throw DomainError("thermal_wightman_numeric: beta must be > 0");
    if (std::abs(r - std::abs(t)) < 1e-3)
        throw LightConeProximity("thermal_wightman_numeric: |r - |t|| < 1e-3");
    const double pref = 1.0 / (2.0 * M_PI * M_PI * r);
    auto f = [&](double k) -> cplx {
        return pref * std::sin(k * r) * std::cos(k * t) * bose_occupation(beta * k);
    };
    GaussDecayEnvelope exp_part{pref * (1.0 + 4.0 / beta), 0.0, 1e-30, -beta};
    Envelope env = [exp_part](double k) { return exp_part(k); };
    return integrate_semi_infinite(f, env, cfg, std::abs(r) + std::abs(t)).value.real();
}

double thermal_wightman_closed(double r, double t, double beta) {
    if (!(r > 0)) throw DomainError("thermal_wightman_closed: r must be > 0");
    if (!(beta > 0)) throw DomainError("thermal_wightman_closed: beta must be > 0");
    if (std::abs(r - std::abs(t)) < 1e-3)
        throw LightConeProximity("thermal_wightman_closed: |r - |t|| < 1e-3");
    const double lightcone = -1.0 / (4.0 * M_PI * M_PI * (r * r - t * t));
    const double cp = 1.0 / std::tanh(M_PI * (r + t) / beta);
    const double cm = 1.0 / std::tanh(M_PI * (r - t) / beta);
    return lightcone + (cp + cm) / (8.0 * M_PI * r * beta);
}

}  // namespace harvestkit
