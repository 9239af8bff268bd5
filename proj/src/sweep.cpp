#include "harvestkit/sweep.hpp"

#include <atomic>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

namespace harvestkit {

namespace {

struct KindName {
    SweepKind kind;
    const char* name;
};
constexpr KindName kKindNames[] = {
    {SweepKind::ThermalNeg, "thermal-neg"},   {SweepKind::ThermalGap, "thermal-gap"},
    {SweepKind::ThermalMi, "thermal-mi"},     {SweepKind::SqueezeCom, "squeeze-com"},
    {SweepKind::SqueezeR, "squeeze-r"},       {SweepKind::SqueezeBand, "squeeze-band"},
    {SweepKind::CoherentCheck, "coherent-check"}, {SweepKind::WightmanCheck, "wightman-check"},
    {SweepKind::Selfcheck, "selfcheck"},
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// evaluate grid points on a small worker pool; results land in grid order
template <typename F>
std::vector<std::string> evaluate_rows(int n, int workers, const F& row_fn) {
    std::vector<std::string> rows(n);
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) rows[i] = row_fn(i);
        return rows;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    std::atomic<bool> failed{false};
    std::string first_error;
    std::mutex err_mutex;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (;;) {
                const int i = next.fetch_add(1);
                if (i >= n || failed.load()) return;
                try {
                    rows[i] = row_fn(i);
                } catch (const std::exception& e) {
                    std::lock_guard<std::mutex> lock(err_mutex);
                    if (!failed.exchange(true)) first_error = e.what();
                    return;
                }
            }
        });
    for (auto& t : pool) t.join();
    if (failed.load()) throw ComputeError(first_error);
    return rows;
}

}  // namespace

const char* to_string(SweepKind kind) {
    for (const auto& kn : kKindNames)
        if (kn.kind == kind) return kn.name;
    return "?";
}

std::optional<SweepKind> kind_from_string(const std::string& name) {
    for (const auto& kn : kKindNames)
        if (name == kn.name) return kn.kind;
    return std::nullopt;
}

std::vector<double> GridSpec::values() const {
    validate();
    std::vector<double> out(points);
    if (log_scale) {
        const double lmin = std::log(min), lmax = std::log(max);
        for (int i = 0; i < points; ++i)
            out[i] = std::exp(lmin + (lmax - lmin) * i / (points - 1));
    } else {
        for (int i = 0; i < points; ++i) out[i] = min + (max - min) * i / (points - 1);
    }
    return out;
}

DetectorPair SweepSpec::make_pair() const {
    DetectorPair pair;
    pair.a = DetectorParams{omega, sigma, Vec3{x_com + d / 2.0, 0, 0},
                            (delta_plus - delta_minus) / 2.0, lambda};
    pair.b = DetectorParams{omega, sigma, Vec3{x_com - d / 2.0, 0, 0},
                            (delta_plus + delta_minus) / 2.0, lambda};
    return pair;
}

void SweepSpec::validate() const {
    make_pair().validate();
    quadrature.validate();
    if (kind != SweepKind::Selfcheck && kind != SweepKind::WightmanCheck) variable.validate();
    if (workers < 1) throw ConfigError("workers must be >= 1");
}

SweepSpec default_spec(SweepKind kind) {
    SweepSpec s;
    s.kind = kind;
    switch (kind) {
        case SweepKind::ThermalNeg:
            s.omega = 3.0;
            s.d = 1.0;
            s.variable = {0.0, 2.0, 81, false};
            break;
        case SweepKind::ThermalGap:
            s.omega = 0.0;  // swept
            s.d = 2.0;
            s.temperature = 0.2;
            s.variable = {0.0, 8.0, 161, false};
            break;
        case SweepKind::ThermalMi:
            s.omega = 3.0;
            s.d = 1.0;
            s.variable = {0.05, 20.0, 100, false};
            break;
        case SweepKind::SqueezeCom:
            s.omega = 1.0;
            s.d = 2.0;
            s.r = 1.0;
            s.variable = {-4.0, 4.0, 81, false};
            break;
        case SweepKind::SqueezeR:
            s.omega = 1.0;
            s.d = 2.0;
            s.variable = {0.0, 4.0, 81, false};
            break;
        case SweepKind::SqueezeBand:
            s.omega = 1.0;
            s.d = 2.0;
            s.r = 1.0;
            s.k_center = {1.0, 0.0, 0.0};
            s.variable = {0.2, 12.0, 40, false};
            s.quadrature.abs_tol = 1e-8;
            s.quadrature.rel_tol = 1e-6;
            s.quadrature.max_subdivisions = 60000;
            break;
        case SweepKind::CoherentCheck:
            s.omega = 1.0;
            s.d = 1.0;
            s.lambda = 0.01;
            s.variable = {0.0, 5.0, 11, false};
            break;
        case SweepKind::WightmanCheck:
        case SweepKind::Selfcheck:
            break;
    }
    return s;
}

void apply_config_entry(SweepSpec& spec, const std::string& key, const std::string& value,
                        int line) {
    auto bad = [&](const std::string& why) {
        std::ostringstream os;
        os << "config: " << why << " for key '" << key << "'";
        if (line > 0) os << " at line " << line;
        throw ConfigError(os.str());
    };
    auto as_double = [&]() {
        try {
            std::size_t pos = 0;
            const double v = std::stod(value, &pos);
            if (pos != value.size()) bad("trailing characters in number '" + value + "'");
            return v;
        } catch (const std::logic_error&) {
            bad("invalid number '" + value + "'");
            return 0.0;
        }
    };
    auto as_int = [&]() {
        const double v = as_double();
        if (v != static_cast<int>(v)) bad("expected integer");
        return static_cast<int>(v);
    };

    if (key == "omega") spec.omega = as_double();
    else if (key == "sigma") spec.sigma = as_double();
    else if (key == "lambda") spec.lambda = as_double();
    else if (key == "d") spec.d = as_double();
    else if (key == "delta-minus") spec.delta_minus = as_double();
    else if (key == "delta-plus") spec.delta_plus = as_double();
    else if (key == "x-com") spec.x_com = as_double();
    else if (key == "mass") spec.mass = as_double();
    else if (key == "temperature") spec.temperature = as_double();
    else if (key == "r") spec.r = as_double();
    else if (key == "theta") spec.theta = as_double();
    else if (key == "sigma-alpha") spec.sigma_alpha = as_double();
    else if (key == "kc-x") spec.k_center[0] = as_double();
    else if (key == "kc-y") spec.k_center[1] = as_double();
    else if (key == "kc-z") spec.k_center[2] = as_double();
    else if (key == "grid-min") spec.variable.min = as_double();
    else if (key == "grid-max") spec.variable.max = as_double();
    else if (key == "grid-points") spec.variable.points = as_int();
    else if (key == "grid-scale") {
        if (value == "log") spec.variable.log_scale = true;
        else if (value == "linear") spec.variable.log_scale = false;
        else bad("grid-scale must be 'linear' or 'log'");
    } else if (key == "out") spec.output_path = value;
    else if (key == "abs-tol") spec.quadrature.abs_tol = as_double();
    else if (key == "rel-tol") spec.quadrature.rel_tol = as_double();
    else if (key == "max-subdivisions") spec.quadrature.max_subdivisions = as_int();
    else if (key == "envelope-cutoff") spec.quadrature.envelope_cutoff = as_double();
    else if (key == "workers") spec.workers = as_int();
    else bad("unknown key");
}

SweepSpec parse_config(const std::string& path, SweepSpec base) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open '" + path + "'");
    std::map<std::string, int> seen;
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string s = raw;
        if (const auto hash = s.find('#'); hash != std::string::npos) s.erase(hash);
        auto trim = [](std::string t) {
            const auto b = t.find_first_not_of(" \t\r");
            const auto e = t.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string{} : t.substr(b, e - b + 1);
        };
        s = trim(s);
        if (s.empty()) continue;
        const auto eq = s.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config: expected 'key = value' at line " + std::to_string(lineno));
        const std::string key = trim(s.substr(0, eq));
        const std::string value = trim(s.substr(eq + 1));
        if (key.empty()) throw ConfigError("config: empty key at line " + std::to_string(lineno));
        if (const auto it = seen.find(key); it != seen.end())
            throw ConfigError("config: duplicate key '" + key + "' at lines " +
                              std::to_string(it->second) + " and " + std::to_string(lineno));
        seen[key] = lineno;
        apply_config_entry(base, key, value, lineno);
    }
    return base;
}

namespace {

void write_header(std::ostream& os, const SweepSpec& spec, const std::string& columns) {
    os << "# harvestkit " << kVersion << "\n";
    os << "# kind = " << to_string(spec.kind) << "\n";
    os << "# omega = " << fmt(spec.omega) << "\n";
    os << "# sigma = " << fmt(spec.sigma) << "\n";
    os << "# lambda = " << fmt(spec.lambda) << "\n";
    os << "# d = " << fmt(spec.d) << "\n";
    os << "# delta-minus = " << fmt(spec.delta_minus) << "\n";
    os << "# delta-plus = " << fmt(spec.delta_plus) << "\n";
    os << "# x-com = " << fmt(spec.x_com) << "\n";
    os << "# mass = " << fmt(spec.mass) << "\n";
    os << "# temperature = " << fmt(spec.temperature) << "\n";
    os << "# r = " << fmt(spec.r) << "\n";
    os << "# theta = " << fmt(spec.theta) << "\n";
    os << "# sigma-alpha = " << fmt(spec.sigma_alpha) << "\n";
    os << "# k-center = " << fmt(spec.k_center[0]) << " " << fmt(spec.k_center[1]) << " "
       << fmt(spec.k_center[2]) << "\n";
    if (spec.kind != SweepKind::WightmanCheck) {
        os << "# grid = " << fmt(spec.variable.min) << " .. " << fmt(spec.variable.max) << " ("
           << spec.variable.points << (spec.variable.log_scale ? ", log" : ", linear") << ")\n";
    }
    os << "# quadrature: abs-tol = " << fmt(spec.quadrature.abs_tol)
       << ", rel-tol = " << fmt(spec.quadrature.rel_tol)
       << ", max-subdivisions = " << spec.quadrature.max_subdivisions
       << ", envelope-cutoff = " << fmt(spec.quadrature.envelope_cutoff) << "\n";
    os << columns << "\n";
}

std::string standard_row(double x, const MatrixElements& el, const CorrelationReport& rep,
                         double lambda) {
    std::ostringstream os;
    const double lnn = 0.5 * (el.l_aa.real() + el.l_bb.real());
    os << fmt(x) << "," << fmt(lnn) << "," << fmt(el.l_ab.real()) << "," << fmt(el.l_ab.imag())
       << "," << fmt(el.m.real()) << "," << fmt(el.m.imag()) << "," << fmt(rep.negativity) << ","
       << fmt(rep.negativity / (lambda * lambda)) << "," << fmt(rep.mutual_information);
    return os.str();
}

constexpr const char* kStandardColumns =
    "x,l_nn,re_l_ab,im_l_ab,re_m,im_m,negativity,negativity_norm,mutual_information";

int run_standard_sweep(const SweepSpec& spec) {
    const std::vector<double> grid = spec.variable.values();

    auto state_for = [&](double x) -> std::pair<DetectorPair, FieldState> {
        SweepSpec point = spec;
        switch (spec.kind) {
            case SweepKind::ThermalNeg:
            case SweepKind::ThermalMi: {
                const DetectorPair pair = point.make_pair();
                if (x <= 0.0) return {pair, Vacuum{}};
                return {pair, Thermal{1.0 / x, spec.mass}};
            }
            case SweepKind::ThermalGap: {
                point.omega = x;
                const DetectorPair pair = point.make_pair();
                if (spec.temperature <= 0.0) return {pair, Vacuum{}};
                return {pair, Thermal{1.0 / spec.temperature, spec.mass}};
            }
            case SweepKind::SqueezeCom: {
                point.x_com = x;
                return {point.make_pair(), SqueezedUniform{spec.r, spec.theta}};
            }
            case SweepKind::SqueezeR: {
                if (x <= 0.0) return {point.make_pair(), Vacuum{}};
                return {point.make_pair(), SqueezedUniform{x, spec.theta}};
            }
            case SweepKind::SqueezeBand: {
                return {point.make_pair(), SqueezedBandlimited{spec.k_center, x, spec.r, spec.theta}};
            }
            default:
                throw ComputeError("run_standard_sweep: unexpected kind");
        }
    };

    auto row_fn = [&](int i) -> std::string {
        const double x = grid[i];
        try {
            const auto [pair, state] = state_for(x);
            const ProfileFT pf = gaussian_profiles(pair);
            const MatrixElements el = elements_for(pair, state, pf, spec.quadrature);
            const CorrelationReport rep = correlation_report(pair, state, pf, spec.quadrature);
            return standard_row(x, el, rep, spec.lambda);
        } catch (const Error& e) {
            throw ComputeError("at grid point x = " + fmt(x) + ": " + e.what());
        }
    };

    const auto rows = evaluate_rows(static_cast<int>(grid.size()), spec.workers, row_fn);
    std::ofstream os(spec.output_path);
    if (!os) throw ConfigError("cannot open output path '" + spec.output_path + "'");
    write_header(os, spec, kStandardColumns);
    for (const auto& r : rows) os << r << "\n";
    return 0;
}

int run_coherent_check(const SweepSpec& spec) {
    const std::vector<double> grid = spec.variable.values();
    const DetectorPair pair = spec.make_pair();
    const ProfileFT profiles = gaussian_profiles(pair);
    const CorrelationReport base =
        correlation_report(pair, CoherentGaussian{0.0, spec.sigma_alpha}, profiles, spec.quadrature);

    auto row_fn = [&](int i) -> std::string {
        const double a0 = grid[i];
        try {
            const CorrelationReport rep = correlation_report(
                pair, CoherentGaussian{a0, spec.sigma_alpha}, profiles, spec.quadrature);
            std::ostringstream os;
            os << fmt(a0) << "," << fmt(rep.negativity) << ","
               << fmt(std::abs(rep.negativity - base.negativity)) << ","
               << fmt(rep.mutual_information);
            return os.str();
        } catch (const Error& e) {
            throw ComputeError("at grid point a0 = " + fmt(a0) + ": " + e.what());
        }
    };
    const auto rows = evaluate_rows(static_cast<int>(grid.size()), spec.workers, row_fn);
    std::ofstream os(spec.output_path);
    if (!os) throw ConfigError("cannot open output path '" + spec.output_path + "'");
    write_header(os, spec, "a0,negativity,residual_vs_vacuum,mutual_information");
    for (const auto& r : rows) os << r << "\n";
    return 0;
}

int run_wightman_check(const SweepSpec& spec) {
    struct Point {
        double r, t, beta;
    };
    std::vector<Point> pts;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            for (int l = 0; l < 3; ++l) {
                const double r = 0.5 + 0.75 * i;
                const double t = -1.8 + 0.9 * j;
                const double beta = 0.5 + 1.25 * l;
                pts.push_back({r, t, beta});
            }
    auto row_fn = [&](int i) -> std::string {
        const auto [r, t, beta] = pts[i];
        try {
            const double num = thermal_wightman_numeric(r, t, beta, spec.quadrature);
            const double clo = thermal_wightman_closed(r, t, beta);
            std::ostringstream os;
            os << fmt(r) << "," << fmt(t) << "," << fmt(beta) << "," << fmt(num) << "," << fmt(clo)
               << "," << fmt(std::abs(num - clo));
            return os.str();
        } catch (const Error& e) {
            throw ComputeError("at (r,t,beta) = (" + fmt(r) + "," + fmt(t) + "," + fmt(beta) +
                               "): " + e.what());
        }
    };
    const auto rows = evaluate_rows(static_cast<int>(pts.size()), spec.workers, row_fn);
    std::ofstream os(spec.output_path);
    if (!os) throw ConfigError("cannot open output path '" + spec.output_path + "'");
    write_header(os, spec, "r,t,beta,numeric,closed,abs_diff");
    for (const auto& r : rows) os << r << "\n";
    return 0;
}

}  // namespace

int run_sweep(const SweepSpec& spec) {
    spec.validate();
    switch (spec.kind) {
        case SweepKind::Selfcheck:
            return run_selfcheck();
        case SweepKind::CoherentCheck:
            return run_coherent_check(spec);
        case SweepKind::WightmanCheck:
            return run_wightman_check(spec);
        default:
            return run_standard_sweep(spec);
    }
}

}  // namespace harvestkit
