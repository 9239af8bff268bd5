#include "harvestkit/squeezed_elements.hpp"

#include "harvestkit/radial.hpp"

namespace harvestkit {

namespace {

constexpr double kOriginGuard = 1e-8;  // excised ball around k = 0; mass O(guard^2)

cplx phase(double arg) { return {std::cos(arg), std::sin(arg)}; }

const DetectorParams& pick(const DetectorPair& pair, Leg leg) {
    return leg == Leg::A ? pair.a : pair.b;
}

void require_identical(const DetectorPair& pair, const char* who) {
    if (!pair.identical()) throw DomainError(std::string(who) + ": detectors must be identical");
}

struct UniformGeom {
    double gap, lam2, dt, tsum, d, p;
};

UniformGeom geom_for(const DetectorPair& pair, Leg nu, Leg eta) {
    const DetectorParams& dn = pick(pair, nu);
    const DetectorParams& de = pick(pair, eta);
    return UniformGeom{dn.gap,
                       dn.coupling * de.coupling,
                       dn.switch_center - de.switch_center,
                       dn.switch_center + de.switch_center,
                       norm(dn.center - de.center),
                       norm(dn.center + de.center)};
}

// L^sq radial integrand factors for a uniform amplitude, identical detectors:
//   s^2 [chi(k-W)^2 e^{-i(k-W)dt} + chi(k+W)^2 e^{i(k+W)dt}] sinc(kd)
// - 2 s c chi(k-W) chi(k+W) e^{i W dt} cos(k tsum - theta) sinc(kp)
cplx l_uniform_kernel(double k, const UniformGeom& g, double s, double c, double theta,
                      const ProfileFT& pf) {
    const double F2 = pf.smearing_a(k) * pf.smearing_a(k);
    const double cm = pf.switching(k - g.gap);
    const double cp = pf.switching(k + g.gap);
    const cplx rot = cm * cm * phase(-(k - g.gap) * g.dt);
    const cplx antirot = cp * cp * phase((k + g.gap) * g.dt);
    const cplx cross = 2.0 * cm * cp * phase(g.gap * g.dt) * std::cos(k * g.tsum - theta);
    return k * F2 * (s * s * (rot + antirot) * sinc(k * g.d) - s * c * cross * sinc(k * g.p));
}

// M^sq radial integrand (phase e^{i W Dp} kept outside):
//   2 s^2 chi(k-W) chi(k+W) cos(k Dm) sinc(kd)
// - s c [e^{-i theta} chi(k+W)^2 e^{i k Dp} + e^{i theta} chi(k-W)^2 e^{-i k Dp}] sinc(kp)
cplx m_uniform_kernel(double k, const DetectorPair& pair, double s, double c, double theta,
                      const ProfileFT& pf) {
    const double gap = pair.a.gap;
    const double dm = pair.delta_minus();
    const double dp = pair.delta_plus();
    const double d = pair.separation();
    const double p = norm(pair.a.center + pair.b.center);
    const double F2 = pf.smearing_a(k) * pf.smearing_a(k);
    const double cm = pf.switching(k - gap);
    const double cp = pf.switching(k + gap);
    const double diag = 2.0 * cm * cp * std::cos(k * dm);
    const cplx cross = cp * cp * phase(k * dp - theta) + cm * cm * phase(-(k * dp - theta));
    return k * F2 * (s * s * diag * sinc(k * d) - s * c * cross * sinc(k * p));
}

GaussDecayEnvelope uniform_envelope(const DetectorPair& pair, const ProfileFT& pf, double s,
                                    double c) {
    const double sig = pair.a.smearing_width;
    const double gap = std::abs(pair.a.gap);
    const double F0 = pf.smearing_a(0);
    // chi(k-W)^2 <= e^{-(k-W)^2/2}/2; bound the pair sum by 2 e^{gap^2/2} e^{-k^2/2 + gap k}/2
    const double amp = 4.0 * M_PI * M_PI * pair.a.coupling * pair.b.coupling * F0 * F0 *
                       (s * s + s * c) * 2.0 * std::exp(gap * gap / 2.0);
    return GaussDecayEnvelope{amp, 1.0, sig * sig / 2.0 + 0.5, gap};
}

double uniform_max_freq(const DetectorPair& pair) {
    const double tmax = std::abs(pair.a.switch_center) + std::abs(pair.b.switch_center);
    return pair.separation() + norm(pair.a.center + pair.b.center) + 2.0 * tmax;
}

// ---- 3D kernels (bandlimited / general zeta) ----

struct Box3Kernel {
    const DetectorPair& pair;
    const ProfileFT& pf;
    Leg nu, eta;
    bool is_m;

    cplx operator()(const Vec3& kv, double r, double theta) const {
        const double k = norm(kv);
        if (k < kOriginGuard || r == 0.0) return {0.0, 0.0};
        const double s = std::sinh(r);
        const double c = std::cosh(r);
        const double F = pf.smearing_a(k);
        const double F2 = F * F;
        if (!is_m) {
            const DetectorParams& dn = pick(pair, nu);
            const DetectorParams& de = pick(pair, eta);
            const double gap = dn.gap;
            const double dt = dn.switch_center - de.switch_center;
            const double tsum = dn.switch_center + de.switch_center;
            const Vec3 dx = dn.center - de.center;
            const Vec3 xs = dn.center + de.center;
            const double cm = pf.switching(k - gap);
            const double cp = pf.switching(k + gap);
            cplx acc = s * s * cm * cm * phase(-(k - gap) * dt + dot(kv, dx));
            acc += s * s * cp * cp * phase((k + gap) * dt - dot(kv, dx));
            acc -= s * c * cm * cp * phase(k * tsum - theta + gap * dt - dot(kv, xs));
            acc -= s * c * cm * cp * phase(-(k * tsum - theta) + gap * dt + dot(kv, xs));
            return M_PI * dn.coupling * de.coupling / k * F2 * acc;
        }
        const double gap = pair.a.gap;
        const double dm = pair.delta_minus();
        const double dp = pair.delta_plus();
        const Vec3 dx = pair.a.center - pair.b.center;
        const Vec3 xs = pair.a.center + pair.b.center;
        const double cm = pf.switching(k - gap);
        const double cp = pf.switching(k + gap);
        cplx acc = s * s * cm * cp * (phase(k * dm + dot(kv, dx)) + phase(-k * dm - dot(kv, dx)));
        acc -= s * c * cp * cp * phase(k * dp - theta - dot(kv, xs));
        acc -= s * c * cm * cm * phase(-(k * dp - theta) + dot(kv, xs));
        return -M_PI * pair.a.coupling * pair.b.coupling / k * F2 * acc * phase(gap * dp);
    }
};

double band_radius(const SqueezedBandlimited& amp) {
    double r = 0.0;
    for (int i = 0; i < 3; ++i) r = std::max(r, std::abs(amp.k_center[i]) + amp.epsilon / 2.0);
    return r;
}

// Truncation radius for general zeta: walk outward until the radial bound
// (squeeze growth times Gaussian profile decay) drops under the cutoff.
double general_radius(const DetectorPair& pair, const ProfileFT& pf,
                      const std::function<double(double)>& support_env,
                      const QuadratureConfig& cfg) {
    const double gap = std::abs(pair.a.gap);
    auto bound = [&](double k) {
        const double renv = support_env(k);
        const double sfac = std::sinh(renv) * (std::sinh(renv) + std::cosh(renv));
        const double F = pf.smearing_a(k);
        const double chis = std::exp(gap * gap / 2.0) * std::exp(-k * k / 2.0 + gap * k);
        return 4.0 * M_PI * M_PI * k * k * F * F * sfac * chis;
    };
    const double target = cfg.envelope_cutoff * cfg.abs_tol;
    // start past the chi resonance peak so the scan sees the decaying side
    double k = std::max(1.0, gap + 8.0);
    while (bound(k) > target && k < 1e6) k *= 1.5;
    if (k >= 1e6) throw InvalidEnvelope("sq_general: support envelope does not truncate");
    return k;
}

}  // namespace

cplx l_sq_uniform(const DetectorPair& pair, const SqueezedUniform& amp, Leg nu, Leg eta,
                  const ProfileFT& profiles, const QuadratureConfig& cfg) {
    require_identical(pair, "l_sq_uniform");
    if (amp.r == 0.0) return {0.0, 0.0};
    const UniformGeom g = geom_for(pair, nu, eta);
    const double s = std::sinh(amp.r), c = std::cosh(amp.r);
    const double pref = 4.0 * M_PI * M_PI * g.lam2;
    auto f = [&](double k) -> cplx {
        return pref * l_uniform_kernel(k, g, s, c, amp.theta, profiles);
    };
    return integrate_semi_infinite(f, uniform_envelope(pair, profiles, s, c), cfg,
                                   uniform_max_freq(pair))
        .value;
}

cplx m_sq_uniform(const DetectorPair& pair, const SqueezedUniform& amp, const ProfileFT& profiles,
                  const QuadratureConfig& cfg) {
    require_identical(pair, "m_sq_uniform");
    if (amp.r == 0.0) return {0.0, 0.0};
    const double s = std::sinh(amp.r), c = std::cosh(amp.r);
    const double pref = -4.0 * M_PI * M_PI * pair.a.coupling * pair.b.coupling;
    auto f = [&](double k) -> cplx {
        return pref * m_uniform_kernel(k, pair, s, c, amp.theta, profiles);
    };
    const cplx global = phase(pair.a.gap * pair.delta_plus());
    return global * integrate_semi_infinite(f, uniform_envelope(pair, profiles, s, c), cfg,
                                            uniform_max_freq(pair))
                        .value;
}

SqueezedNegCore sq_uniform_neg_core(const DetectorPair& pair, const SqueezedUniform& amp,
                                    const ProfileFT& profiles, const QuadratureConfig& cfg) {
    require_identical(pair, "sq_uniform_neg_core");
    SqueezedNegCore core{0, 0, 0, 0};
    if (amp.r == 0.0) return core;
    const double s = std::sinh(amp.r), c = std::cosh(amp.r);
    const double lam2 = pair.a.coupling * pair.b.coupling;
    const double pref = 4.0 * M_PI * M_PI * lam2;
    const UniformGeom gaa = geom_for(pair, Leg::A, Leg::A);
    const UniformGeom gbb = geom_for(pair, Leg::B, Leg::B);
    const auto env = uniform_envelope(pair, profiles, s, c);
    const double mf = uniform_max_freq(pair);

    // single combined integrand: Re(rotated M^sq kernel) - (L_AA + L_BB)/2 kernels
    auto f_core = [&](double k) -> cplx {
        const cplx m_k = -m_uniform_kernel(k, pair, s, c, amp.theta, profiles);
        const cplx laa = l_uniform_kernel(k, gaa, s, c, amp.theta, profiles);
        const cplx lbb = l_uniform_kernel(k, gbb, s, c, amp.theta, profiles);
        return pref * (m_k.real() - 0.5 * (laa.real() + lbb.real()));
    };
    core.re_m_minus_lbar = integrate_semi_infinite(f_core, env, cfg, mf).value.real();

    auto f_m = [&](double k) -> cplx { return -pref * m_uniform_kernel(k, pair, s, c, amp.theta, profiles); };
    const cplx m_sq = integrate_semi_infinite(f_m, env, cfg, mf).value;
    core.re_m = m_sq.real();
    core.im_m = m_sq.imag();

    auto f_dl = [&](double k) -> cplx {
        const cplx laa = l_uniform_kernel(k, gaa, s, c, amp.theta, profiles);
        const cplx lbb = l_uniform_kernel(k, gbb, s, c, amp.theta, profiles);
        return pref * (laa - lbb);
    };
    core.delta_l = integrate_semi_infinite(f_dl, env, cfg, mf).value.real();
    return core;
}

cplx l_sq_bandlimited(const DetectorPair& pair, const SqueezedBandlimited& amp, Leg nu, Leg eta,
                      const ProfileFT& profiles, const QuadratureConfig& cfg) {
    require_identical(pair, "l_sq_bandlimited");
    validate(FieldState{amp});
    if (amp.r == 0.0) return {0.0, 0.0};
    Box3Kernel kern{pair, profiles, nu, eta, false};
    auto f = [&](const Vec3& kv) -> cplx { return kern(kv, amp.r, amp.theta); };
    const Vec3 half{amp.epsilon / 2.0, amp.epsilon / 2.0, amp.epsilon / 2.0};
    return integrate_box_3d(f, amp.k_center - half, amp.k_center + half, cfg).value;
}

cplx m_sq_bandlimited(const DetectorPair& pair, const SqueezedBandlimited& amp,
                      const ProfileFT& profiles, const QuadratureConfig& cfg) {
    require_identical(pair, "m_sq_bandlimited");
    validate(FieldState{amp});
    if (amp.r == 0.0) return {0.0, 0.0};
    Box3Kernel kern{pair, profiles, Leg::A, Leg::B, true};
    auto f = [&](const Vec3& kv) -> cplx { return kern(kv, amp.r, amp.theta); };
    const Vec3 half{amp.epsilon / 2.0, amp.epsilon / 2.0, amp.epsilon / 2.0};
    return integrate_box_3d(f, amp.k_center - half, amp.k_center + half, cfg).value;
}

cplx l_sq_general(const DetectorPair& pair, const SqueezedGeneral& amp, Leg nu, Leg eta,
                  const ProfileFT& profiles, const QuadratureConfig& cfg) {
    require_identical(pair, "l_sq_general");
    validate(FieldState{amp});
    Box3Kernel kern{pair, profiles, nu, eta, false};
    auto f = [&](const Vec3& kv) -> cplx {
        const cplx z = amp.zeta(kv);
        return kern(kv, std::abs(z), std::arg(z));
    };
    const double R = general_radius(pair, profiles, amp.support_envelope, cfg);
    return integrate_box_3d(f, Vec3{-R, -R, -R}, Vec3{R, R, R}, cfg).value;
}

cplx m_sq_general(const DetectorPair& pair, const SqueezedGeneral& amp, const ProfileFT& profiles,
                  const QuadratureConfig& cfg) {
    require_identical(pair, "m_sq_general");
    validate(FieldState{amp});
    Box3Kernel kern{pair, profiles, Leg::A, Leg::B, true};
    auto f = [&](const Vec3& kv) -> cplx {
        const cplx z = amp.zeta(kv);
        return kern(kv, std::abs(z), std::arg(z));
    };
    const double R = general_radius(pair, profiles, amp.support_envelope, cfg);
    return integrate_box_3d(f, Vec3{-R, -R, -R}, Vec3{R, R, R}, cfg).value;
}

SqueezedGeneral phase_shift_zeta(const FieldState& squeezed_state, const Vec3& x0) {
    SqueezedGeneral out;
    if (const auto* u = std::get_if<SqueezedUniform>(&squeezed_state)) {
        const double r = u->r, th = u->theta;
        out.zeta = [r, th, x0](const Vec3& k) { return std::polar(r, th + dot(k, x0)); };
        out.support_envelope = [r](double) { return r; };
        return out;
    }
    if (const auto* b = std::get_if<SqueezedBandlimited>(&squeezed_state)) {
        const SqueezedBandlimited amp = *b;
        out.zeta = [amp, x0](const Vec3& k) -> cplx {
            for (int i = 0; i < 3; ++i)
                if (std::abs(k[i] - amp.k_center[i]) >= amp.epsilon / 2.0) return {0.0, 0.0};
            return std::polar(amp.r, amp.theta + dot(k, x0));
        };
        const double R = band_radius(amp);
        const double r = amp.r;
        out.support_envelope = [r, R](double k) { return k <= R ? r : 0.0; };
        return out;
    }
    if (const auto* g = std::get_if<SqueezedGeneral>(&squeezed_state)) {
        auto zeta = g->zeta;
        out.zeta = [zeta, x0](const Vec3& k) { return zeta(k) * std::polar(1.0, dot(k, x0)); };
        out.support_envelope = g->support_envelope;
        return out;
    }
    throw DomainError("phase_shift_zeta: state carries no squeezing amplitude");
}

double r_from_db(double noise_db) {
    if (noise_db > 0) throw DomainError("r_from_db: squeezing reduces noise, need noise_db <= 0");
    return -noise_db / (20.0 * std::log10(std::exp(1.0)));
}

double db_from_r(double r) {
    if (r < 0) throw DomainError("db_from_r: r must be >= 0");
    return -20.0 * std::log10(std::exp(1.0)) * r;
}

}  // namespace harvestkit
