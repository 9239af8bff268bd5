#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "harvestkit/pipeline.hpp"

namespace harvestkit {

inline constexpr const char* kVersion = "0.1.0";

enum class SweepKind {
    ThermalNeg,
    ThermalGap,
    ThermalMi,
    SqueezeCom,
    SqueezeR,
    SqueezeBand,
    CoherentCheck,
    WightmanCheck,
    Selfcheck,
};

const char* to_string(SweepKind kind);
std::optional<SweepKind> kind_from_string(const std::string& name);

struct GridSpec {
    double min = 0.0;
    double max = 1.0;
    int points = 2;
    bool log_scale = false;

    void validate() const {
        if (points < 2) throw ConfigError("grid: points must be >= 2");
        if (!(min < max)) throw ConfigError("grid: min must be < max");
        if (log_scale && !(min > 0)) throw ConfigError("grid: log scale requires min > 0");
    }
    std::vector<double> values() const;
};

struct SweepSpec {
    SweepKind kind = SweepKind::Selfcheck;
    // detector pair parameters (tau units); detectors sit at (x_com +- d/2, 0, 0)
    double omega = 3.0;
    double sigma = 1.0;
    double lambda = 0.1;
    double d = 1.0;
    double delta_minus = 0.0;
    double delta_plus = 0.0;
    double x_com = 0.0;
    // field-state parameters
    double mass = 0.0;
    double temperature = 0.2;  // fixed T for thermal-gap
    double r = 1.0;
    double theta = 0.0;
    Vec3 k_center{1.0, 0.0, 0.0};
    double sigma_alpha = 1.0;
    GridSpec variable;
    std::string output_path = "sweep.csv";
    QuadratureConfig quadrature;
    int workers = 1;

    DetectorPair make_pair() const;
    void validate() const;
};

// Flat `key = value` config format; '#' starts a comment. Unknown and
// duplicate keys are hard errors carrying line numbers.
SweepSpec parse_config(const std::string& path, SweepSpec base);
void apply_config_entry(SweepSpec& spec, const std::string& key, const std::string& value,
                        int line /* 0 = command line */);
SweepSpec default_spec(SweepKind kind);

// Runs the sweep and writes the CSV; returns process exit status (0 ok).
int run_sweep(const SweepSpec& spec);

// Oracle/invariant suites at reduced density; prints one line per suite.
// Returns 0 when every suite passes, 4 otherwise.
int run_selfcheck();

}  // namespace harvestkit
