#pragma once

#include <algorithm>

#include "harvestkit/common.hpp"

namespace harvestkit {

// Decreasing majorant of amp * k^p * exp(-alpha k^2 + beta k): flat at the peak
// value up to the stationary point, the function itself beyond. All radial
// integrands in this library are bounded by this family (Bose and Faddeeva
// factors bounded separately into amp/beta).
struct GaussDecayEnvelope {
    double amp = 1.0;
    double p = 1.0;      // polynomial power, >= 0
    double alpha = 0.5;  // Gaussian rate, > 0
    double beta = 0.0;   // linear exponent

    double peak_k() const {
        if (p <= 0.0) return std::max(0.0, beta / (2.0 * alpha));
        const double root = std::sqrt(beta * beta + 8.0 * alpha * p);
        // conjugate form avoids cancellation when beta < 0
        return beta <= 0.0 ? 2.0 * p / (root - beta) : (beta + root) / (4.0 * alpha);
    }
    double raw(double k) const { return amp * std::pow(k, p) * std::exp(-alpha * k * k + beta * k); }
    double operator()(double k) const {
        const double ks = peak_k();
        return raw(std::max(k, ks));
    }
};

}  // namespace harvestkit
