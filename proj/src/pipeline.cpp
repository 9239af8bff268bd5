#include "harvestkit/pipeline.hpp"

#include "harvestkit/radial.hpp"

namespace harvestkit {

namespace {

cplx phase(double arg) { return {std::cos(arg), std::sin(arg)}; }

MatrixElements add(const MatrixElements& a, const MatrixElements& b) {
    return MatrixElements{a.l_aa + b.l_aa, a.l_bb + b.l_bb, a.l_ab + b.l_ab, a.m + b.m};
}

CorrelationReport report_from_elements(const MatrixElements& el, bool identical) {
    CorrelationReport rep;
    const double laa = el.l_aa.real(), lbb = el.l_bb.real();
    const double mm = std::abs(el.m);
    const double e1 = identical && std::abs(laa - lbb) < 1e-13 * (laa + lbb)
                          ? 0.5 * (laa + lbb) - mm
                          : 0.5 * (laa + lbb - std::sqrt((laa - lbb) * (laa - lbb) + 4 * mm * mm));
    rep.min_pt_eigenvalue = e1;
    rep.negativity = std::max(0.0, -e1);
    const auto mi = mutual_information(el);
    rep.mutual_information = mi.value;
    rep.l_plus = mi.l_plus;
    rep.l_minus = mi.l_minus;
    return rep;
}

// Stable route for identical detectors under uniform squeezing: combine the
// vacuum pieces with the single-quadrature squeezed core, then evaluate
// -E1 = (|M| - Lbar) + (sqrt((dL/2)^2 + |M|^2) - |M|) without cancellation.
CorrelationReport squeezed_uniform_report(const DetectorPair& pair, const SqueezedUniform& amp,
                                          const ProfileFT& profiles, const QuadratureConfig& cfg) {
    const MatrixElements vac = vacuum_elements(pair, profiles, cfg);
    const SqueezedNegCore core = sq_uniform_neg_core(pair, amp, profiles, cfg);

    const cplx m_vac_rot = vac.m * phase(-pair.a.gap * pair.delta_plus());
    const double lbar_vac = 0.5 * (vac.l_aa.real() + vac.l_bb.real());
    const double re_m = m_vac_rot.real() + core.re_m;
    const double im_m = m_vac_rot.imag() + core.im_m;
    const double abs_m = std::hypot(re_m, im_m);
    const double re_m_minus_lbar = (m_vac_rot.real() - lbar_vac) + core.re_m_minus_lbar;
    const double delta_l = core.delta_l;  // vacuum L_nn is translation invariant

    const double circ = (re_m > 0) ? im_m * im_m / (abs_m + re_m) : abs_m - re_m;
    const double half_dl = 0.5 * std::abs(delta_l);
    const double root_gain =
        half_dl * half_dl / (std::sqrt(half_dl * half_dl + abs_m * abs_m) + abs_m);
    const double neg_e1 = re_m_minus_lbar + circ + root_gain;

    CorrelationReport rep;
    rep.min_pt_eigenvalue = -neg_e1;
    rep.negativity = std::max(0.0, neg_e1);

    // mutual information needs L_AB explicitly; fine in double until r ~ 12
    MatrixElements el = vac;
    el.l_aa += l_sq_uniform(pair, amp, Leg::A, Leg::A, profiles, cfg);
    el.l_bb += l_sq_uniform(pair, amp, Leg::B, Leg::B, profiles, cfg);
    el.l_ab += l_sq_uniform(pair, amp, Leg::A, Leg::B, profiles, cfg);
    const auto mi = mutual_information(el);
    rep.mutual_information = mi.value;
    rep.l_plus = mi.l_plus;
    rep.l_minus = mi.l_minus;
    return rep;
}

}  // namespace

MatrixElements elements_for(const DetectorPair& pair, const FieldState& state,
                            const ProfileFT& profiles, const QuadratureConfig& cfg) {
    pair.validate();
    validate(state);
    const MatrixElements vac = vacuum_elements(pair, profiles, cfg);
    return std::visit(
        [&](const auto& s) -> MatrixElements {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Vacuum> || std::is_same_v<T, CoherentGaussian>) {
                return vac;
            } else if constexpr (std::is_same_v<T, Thermal>) {
                ThermalSetup setup{pair, s.beta, s.mass};
                MatrixElements th;
                th.l_aa = l_thermal(setup, Leg::A, Leg::A, profiles, cfg);
                th.l_bb = l_thermal(setup, Leg::B, Leg::B, profiles, cfg);
                th.l_ab = l_thermal(setup, Leg::A, Leg::B, profiles, cfg);
                th.m = m_thermal(setup, profiles, cfg);
                return add(vac, th);
            } else if constexpr (std::is_same_v<T, SqueezedUniform>) {
                MatrixElements sq;
                sq.l_aa = l_sq_uniform(pair, s, Leg::A, Leg::A, profiles, cfg);
                sq.l_bb = l_sq_uniform(pair, s, Leg::B, Leg::B, profiles, cfg);
                sq.l_ab = l_sq_uniform(pair, s, Leg::A, Leg::B, profiles, cfg);
                sq.m = m_sq_uniform(pair, s, profiles, cfg);
                return add(vac, sq);
            } else if constexpr (std::is_same_v<T, SqueezedBandlimited>) {
                MatrixElements sq;
                sq.l_aa = l_sq_bandlimited(pair, s, Leg::A, Leg::A, profiles, cfg);
                sq.l_bb = l_sq_bandlimited(pair, s, Leg::B, Leg::B, profiles, cfg);
                sq.l_ab = l_sq_bandlimited(pair, s, Leg::A, Leg::B, profiles, cfg);
                sq.m = m_sq_bandlimited(pair, s, profiles, cfg);
                return add(vac, sq);
            } else {
                static_assert(std::is_same_v<T, SqueezedGeneral>);
                MatrixElements sq;
                sq.l_aa = l_sq_general(pair, s, Leg::A, Leg::A, profiles, cfg);
                sq.l_bb = l_sq_general(pair, s, Leg::B, Leg::B, profiles, cfg);
                sq.l_ab = l_sq_general(pair, s, Leg::A, Leg::B, profiles, cfg);
                sq.m = m_sq_general(pair, s, profiles, cfg);
                return add(vac, sq);
            }
        },
        state);
}

CorrelationReport correlation_report(const DetectorPair& pair, const FieldState& state,
                                     const ProfileFT& profiles, const QuadratureConfig& cfg) {
    pair.validate();
    validate(state);
    if (const auto* u = std::get_if<SqueezedUniform>(&state); u && pair.identical() && u->r > 0)
        return squeezed_uniform_report(pair, *u, profiles, cfg);
    if (const auto* c = std::get_if<CoherentGaussian>(&state)) {
        const MatrixElements vac = vacuum_elements(pair, profiles, cfg);
        const TwoDetectorDensityMatrix rho = assemble_coherent_rho(pair, *c, vac, cfg);
        CorrelationReport rep;
        rep.negativity = negativity(rho);
        const auto ev = eigenvalues_hermitian_4(partial_transpose_a(rho));
        rep.min_pt_eigenvalue = ev[0];
        const FirstOrderAmplitudes fo = first_order_amplitudes(pair, *c, cfg);
        MatrixElements el = vac;
        el.l_aa += fo.a_plus_a * fo.a_minus_a;
        el.l_bb += fo.a_plus_b * fo.a_minus_b;
        el.l_ab += fo.a_plus_a * fo.a_minus_b;
        const auto mi = mutual_information(el);
        rep.mutual_information = mi.value;
        rep.l_plus = mi.l_plus;
        rep.l_minus = mi.l_minus;
        return rep;
    }
    const MatrixElements el = elements_for(pair, state, profiles, cfg);
    return report_from_elements(el, pair.identical());
}

HighTElements thermal_highT_elements(const DetectorPair& pair, double mass,
                                     const ProfileFT& profiles, const QuadratureConfig& cfg) {
    pair.validate();
    const auto& chi = profiles.switching;
    auto scaled_l = [&](const DetectorParams& dn, const DetectorParams& de,
                        const std::function<double(double)>& Fn,
                        const std::function<double(double)>& Fe) -> cplx {
        const double d = norm(dn.center - de.center);
        const double pref = 4.0 * M_PI * M_PI * dn.coupling * de.coupling;
        auto f = [&](double k) -> cplx {
            if (k <= 0.0) return cplx{0, 0};
            const double w = dispersion(k, mass);
            if (w <= 0.0) return cplx{0, 0};
            const double common = pref * (k * k / (w * w)) * Fn(k) * Fe(k) * sinc(k * d);
            const cplx rot = chi(w - dn.gap) * chi(w - de.gap) *
                             phase(-(w - dn.gap) * dn.switch_center + (w - de.gap) * de.switch_center);
            const cplx antirot = chi(w + dn.gap) * chi(w + de.gap) *
                                 phase((w + dn.gap) * dn.switch_center - (w + de.gap) * de.switch_center);
            return common * (rot + antirot);
        };
        const double sn = dn.smearing_width, se = de.smearing_width;
        GaussDecayEnvelope env{pref * Fn(0) * Fe(0), 0.0, (sn * sn + se * se) / 4.0, 0.0};
        const double mf = d + std::abs(dn.switch_center) + std::abs(de.switch_center);
        return integrate_semi_infinite(f, env, cfg, mf).value;
    };
    HighTElements out;
    out.l_nn = 0.5 * (scaled_l(pair.a, pair.a, profiles.smearing_a, profiles.smearing_a).real() +
                      scaled_l(pair.b, pair.b, profiles.smearing_b, profiles.smearing_b).real());
    out.l_ab = scaled_l(pair.a, pair.b, profiles.smearing_a, profiles.smearing_b);
    return out;
}

double highT_mi_slope(const DetectorPair& pair, double mass, const ProfileFT& profiles,
                      const QuadratureConfig& cfg) {
    const HighTElements h = thermal_highT_elements(pair, mass, profiles, cfg);
    const double lnn = h.l_nn;
    const double lab = std::abs(h.l_ab);
    auto xlogx = [](double x) { return x > 0 ? x * std::log(x) : 0.0; };
    const double lp = lnn + lab, lm = lnn - lab;
    return xlogx(lp) + xlogx(lm) - 2.0 * xlogx(lnn);
}

}  // namespace harvestkit
