#include "harvestkit/faddeeva.hpp"

#include <cmath>

namespace harvestkit {

namespace {

constexpr double kTwoOverSqrtPi = 1.12837916709551257388;

// w(z) for x >= 0, y >= 0.
cplx w_first_quadrant(double x, double y) {
    const double xq = x / 6.3;
    const double yq = y / 4.4;
    const double qrho0 = xq * xq + yq * yq;
    const double xquad = x * x - y * y;
    const double yquad = 2.0 * x * y;

    if (qrho0 < 0.085264) {
        // Maclaurin series for 1 - erf(-iz), then multiply by exp(-z^2).
        const double qrho = (1.0 - 0.85 * yq) * std::sqrt(qrho0);
        const int n = static_cast<int>(std::lround(6.0 + 72.0 * qrho));
        int j = 2 * n + 1;
        double xsum = 1.0 / j;
        double ysum = 0.0;
        for (int i = n; i >= 1; --i) {
            j -= 2;
            const double xaux = (xsum * xquad - ysum * yquad) / i;
            ysum = (xsum * yquad + ysum * xquad) / i;
            xsum = xaux + 1.0 / j;
        }
        const double u1 = -kTwoOverSqrtPi * (xsum * y + ysum * x) + 1.0;
        const double v1 = kTwoOverSqrtPi * (xsum * x - ysum * y);
        const double daux = std::exp(-xquad);
        const double u2 = daux * std::cos(yquad);
        const double v2 = -daux * std::sin(yquad);
        return {u1 * u2 - v1 * v2, u1 * v2 + v1 * u2};
    }

    double h = 0.0, h2 = 0.0, qlambda = 0.0;
    int kapn = 0, nu = 0;
    if (qrho0 >= 1.0) {
        // Laplace continued fraction.
        const double qrho = std::sqrt(qrho0);
        nu = static_cast<int>(3.0 + 1442.0 / (26.0 * qrho + 77.0));
    } else {
        // Truncated Taylor expansion with shift h (Gautschi-style).
        const double qrho = (1.0 - yq) * std::sqrt(1.0 - qrho0);
        h = 1.88 * qrho;
        h2 = 2.0 * h;
        kapn = static_cast<int>(std::lround(7.0 + 34.0 * qrho));
        nu = static_cast<int>(std::lround(16.0 + 26.0 * qrho));
    }
    const bool use_h = h > 0.0;
    if (use_h) qlambda = std::pow(h2, kapn);

    double rx = 0.0, ry = 0.0, sx = 0.0, sy = 0.0;
    for (int n = nu; n >= 0; --n) {
        const int np1 = n + 1;
        const double tx = y + h + np1 * rx;
        const double ty = x - np1 * ry;
        const double c = 0.5 / (tx * tx + ty * ty);
        rx = c * tx;
        ry = c * ty;
        if (use_h && n <= kapn) {
            const double t = qlambda + sx;
            sx = rx * t - ry * sy;
            sy = ry * t + rx * sy;
            qlambda /= h2;
        }
    }
    double u, v;
    if (!use_h) {
        u = kTwoOverSqrtPi * rx;
        v = kTwoOverSqrtPi * ry;
    } else {
        u = kTwoOverSqrtPi * sx;
        v = kTwoOverSqrtPi * sy;
    }
    if (y == 0.0) u = std::exp(-x * x);
    return {u, v};
}

}  // namespace

cplx faddeeva_w(cplx z) {
    const double x = z.real();
    const double y = z.imag();
    if (y >= 0.0) {
        if (x >= 0.0) return w_first_quadrant(x, y);
        return std::conj(w_first_quadrant(-x, y));  // w(-conj(z)) = conj(w(z))
    }
    // w(z) = 2 exp(-z^2) - w(-z), with Im(-z) > 0.
    const double re_exponent = y * y - x * x;
    if (re_exponent > 708.0)
        throw SpecialFunctionOverflow("faddeeva_w: exp(-z^2) overflows for Im z < 0, |Im z| too large");
    const cplx refl = 2.0 * std::exp(cplx(re_exponent, -2.0 * x * y));
    const cplx wneg = (x <= 0.0) ? w_first_quadrant(-x, -y) : std::conj(w_first_quadrant(x, -y));
    return refl - wneg;
}

cplx erfc_complex(cplx z) {
    const cplx iz(-z.imag(), z.real());
    if (z.real() >= 0.0) {
        const cplx e = std::exp(-z * z);
        return e * faddeeva_w(iz);
    }
    // erfc(-z) = 2 - erfc(z)
    const cplx e = std::exp(-z * z);
    return 2.0 - e * faddeeva_w(-iz);
}

}  // namespace harvestkit
