#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "harvestkit/sweep.hpp"

using namespace harvestkit;

namespace {

void add_common_flags(CLI::App* sub, SweepSpec& spec, std::string& config_path) {
    sub->add_option("--config", config_path, "flat key = value config file (flags override)");
    sub->add_option("--out", spec.output_path, "output CSV path")->capture_default_str();
    sub->add_option("--omega", spec.omega, "detector gap (tau units)")->capture_default_str();
    sub->add_option("--sigma", spec.sigma, "smearing width")->capture_default_str();
    sub->add_option("--lambda", spec.lambda, "coupling strength")->capture_default_str();
    sub->add_option("--d", spec.d, "detector separation")->capture_default_str();
    sub->add_option("--delta-minus", spec.delta_minus, "t_B - t_A")->capture_default_str();
    sub->add_option("--delta-plus", spec.delta_plus, "t_B + t_A")->capture_default_str();
    sub->add_option("--x-com", spec.x_com, "center of mass x position")->capture_default_str();
    sub->add_option("--mass", spec.mass, "field mass (thermal only)")->capture_default_str();
    sub->add_option("--temperature", spec.temperature, "fixed temperature (thermal-gap)")
        ->capture_default_str();
    sub->add_option("--r", spec.r, "squeezing amplitude")->capture_default_str();
    sub->add_option("--theta", spec.theta, "squeezing phase")->capture_default_str();
    sub->add_option("--sigma-alpha", spec.sigma_alpha, "coherent amplitude width")
        ->capture_default_str();
    sub->add_option("--kc-x", spec.k_center[0], "squeezing box center kx")->capture_default_str();
    sub->add_option("--kc-y", spec.k_center[1], "squeezing box center ky")->capture_default_str();
    sub->add_option("--kc-z", spec.k_center[2], "squeezing box center kz")->capture_default_str();
    sub->add_option("--grid-min", spec.variable.min, "sweep grid minimum")->capture_default_str();
    sub->add_option("--grid-max", spec.variable.max, "sweep grid maximum")->capture_default_str();
    sub->add_option("--grid-points", spec.variable.points, "sweep grid points")
        ->capture_default_str();
    sub->add_flag_callback("--grid-log", [&spec] { spec.variable.log_scale = true; },
                           "logarithmic grid");
    sub->add_option("--abs-tol", spec.quadrature.abs_tol, "quadrature absolute tolerance")
        ->capture_default_str();
    sub->add_option("--rel-tol", spec.quadrature.rel_tol, "quadrature relative tolerance")
        ->capture_default_str();
    sub->add_option("--max-subdivisions", spec.quadrature.max_subdivisions,
                    "quadrature subdivision budget")
        ->capture_default_str();
    sub->add_option("--envelope-cutoff", spec.quadrature.envelope_cutoff,
                    "tail truncation factor")
        ->capture_default_str();
    sub->add_option("--workers", spec.workers, "worker threads (HARVESTKIT_WORKERS fallback)")
        ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"harvestkit: Unruh-DeWitt detector pair correlations in thermal and squeezed "
                 "field states"};
    app.require_subcommand(1);

    struct SubState {
        SweepSpec spec;
        std::string config_path;
        CLI::App* sub = nullptr;
    };
    std::vector<SubState> subs;
    subs.reserve(9);
    for (SweepKind kind :
         {SweepKind::ThermalNeg, SweepKind::ThermalGap, SweepKind::ThermalMi, SweepKind::SqueezeCom,
          SweepKind::SqueezeR, SweepKind::SqueezeBand, SweepKind::CoherentCheck,
          SweepKind::WightmanCheck, SweepKind::Selfcheck}) {
        subs.push_back(SubState{default_spec(kind), {}, nullptr});
        auto& st = subs.back();
        st.sub = app.add_subcommand(to_string(kind), "");
        if (kind != SweepKind::Selfcheck) add_common_flags(st.sub, st.spec, st.config_path);
    }

    if (const char* env_workers = std::getenv("HARVESTKIT_WORKERS")) {
        const int w = std::atoi(env_workers);
        if (w >= 1)
            for (auto& st : subs) st.spec.workers = w;
    }

    CLI11_PARSE(app, argc, argv);

    try {
        for (auto& st : subs) {
            if (!st.sub->parsed()) continue;
            SweepSpec spec = st.spec;
            if (!st.config_path.empty()) {
                // precedence: defaults < HARVESTKIT_WORKERS < config file < flags
                SweepSpec base = default_spec(spec.kind);
                if (const char* env_workers = std::getenv("HARVESTKIT_WORKERS")) {
                    const int w = std::atoi(env_workers);
                    if (w >= 1) base.workers = w;
                }
                spec = parse_config(st.config_path, base);
                for (const CLI::Option* opt : st.sub->get_options()) {
                    if (opt->count() == 0 || opt->get_name() == "--config") continue;
                    const std::string name = opt->get_name();
                    if (name.rfind("--", 0) != 0 || opt->results().empty()) continue;
                    const std::string key = name.substr(2);
                    if (key == "grid-log") {
                        spec.variable.log_scale = true;
                        continue;
                    }
                    apply_config_entry(spec, key, opt->results().back(), 0);
                }
            }
            return run_sweep(spec);
        }
        return 0;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const ComputeError& e) {
        std::cerr << "compute error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
