#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace harvestkit {

using cplx = std::complex<double>;
using Vec3 = std::array<double, 3>;

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
inline Vec3 operator*(double s, const Vec3& a) { return {s * a[0], s * a[1], s * a[2]}; }
inline double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

// sin(x)/x with the removable singularity filled in by series for small |x|.
inline double sinc(double x) {
    if (std::abs(x) < 1e-4) {
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sin(x) / x;
}

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct QuadratureError : Error {
    using Error::Error;
};
struct NonConvergence : QuadratureError {
    using QuadratureError::QuadratureError;
};
struct InvalidEnvelope : QuadratureError {
    using QuadratureError::QuadratureError;
};
struct DegenerateBox : QuadratureError {
    using QuadratureError::QuadratureError;
};

struct DomainError : Error {
    using Error::Error;
};
struct SpecialFunctionOverflow : Error {
    using Error::Error;
};
struct LightConeProximity : Error {
    using Error::Error;
};
struct InvalidElements : Error {
    using Error::Error;
};
struct NonHermitianInput : Error {
    using Error::Error;
};
struct ConfigError : Error {
    using Error::Error;
};
struct ComputeError : Error {
    using Error::Error;
};

}  // namespace harvestkit
