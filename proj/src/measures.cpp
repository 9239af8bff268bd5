#include "harvestkit/measures.hpp"

#include <algorithm>
#include <cmath>

namespace harvestkit {

namespace {

double xlogx(double x) {
    if (x < 1e-300) return 0.0;
    return x * std::log(x);
}

double clamp_diagonal(double x, const char* name) {
    if (x < -1e-12)
        throw InvalidElements(std::string(name) + " is negative beyond the quadrature floor: " +
                              std::to_string(x));
    return std::max(x, 0.0);
}

}  // namespace

double TwoDetectorDensityMatrix::hermiticity_residual() const {
    double r = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) r = std::max(r, std::abs(m[i][j] - std::conj(m[j][i])));
    return r;
}

TwoDetectorDensityMatrix assemble_xform(const MatrixElements& el) {
    const double imag_residual = std::max(std::abs(el.l_aa.imag()), std::abs(el.l_bb.imag()));
    if (imag_residual > 1e-10)
        throw InvalidElements("assemble_xform: diagonal elements have imaginary residual " +
                              std::to_string(imag_residual));
    const double laa = clamp_diagonal(el.l_aa.real(), "L_AA");
    const double lbb = clamp_diagonal(el.l_bb.real(), "L_BB");
    if (laa + lbb > 1.0)
        throw InvalidElements("assemble_xform: L_AA + L_BB > 1, outside the perturbative regime");
    TwoDetectorDensityMatrix rho;
    rho(0, 0) = 1.0 - laa - lbb;
    rho(1, 1) = lbb;
    rho(2, 2) = laa;
    rho(3, 3) = 0.0;
    rho(2, 1) = el.l_ab;
    rho(1, 2) = std::conj(el.l_ab);
    rho(3, 0) = el.m;
    rho(0, 3) = std::conj(el.m);
    return rho;
}

TwoDetectorDensityMatrix partial_transpose_a(const TwoDetectorDensityMatrix& rho) {
    TwoDetectorDensityMatrix out;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int ap = 0; ap < 2; ++ap)
                for (int bp = 0; bp < 2; ++bp)
                    out(2 * ap + b, 2 * a + bp) = rho(2 * a + b, 2 * ap + bp);
    return out;
}

std::array<double, 4> eigenvalues_hermitian_4(const TwoDetectorDensityMatrix& m_in) {
    double scale = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) scale += std::norm(m_in(i, j));
    scale = std::sqrt(scale);
    if (m_in.hermiticity_residual() > 1e-8 * std::max(scale, 1.0))
        throw NonHermitianInput("eigenvalues_hermitian_4: matrix is not Hermitian");

    std::array<std::array<cplx, 4>, 4> a = m_in.m;
    // symmetrize away rounding-level asymmetry
    for (int i = 0; i < 4; ++i) {
        a[i][i] = cplx(a[i][i].real(), 0.0);
        for (int j = i + 1; j < 4; ++j) {
            const cplx avg = 0.5 * (a[i][j] + std::conj(a[j][i]));
            a[i][j] = avg;
            a[j][i] = std::conj(avg);
        }
    }

    auto offdiag = [&]() {
        double s = 0.0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) s += 2.0 * std::norm(a[i][j]);
        return std::sqrt(s);
    };

    const double tol = 1e-14 * std::max(scale, 1e-300);
    for (int sweep = 0; sweep < 100; ++sweep) {
        if (offdiag() <= tol) break;
        if (sweep == 99)
            throw NonConvergence("eigenvalues_hermitian_4: Jacobi did not converge in 100 sweeps");
        for (int p = 0; p < 4; ++p)
            for (int q = p + 1; q < 4; ++q) {
                const cplx apq = a[p][q];
                const double r = std::abs(apq);
                if (r <= 1e-300) continue;
                const cplx u = apq / r;  // e^{i phi}
                const double app = a[p][p].real();
                const double aqq = a[q][q].real();
                const double tau = (aqq - app) / (2.0 * r);
                // small-magnitude root of t^2 - 2 tau t - 1 = 0 zeroes a[p][q]
                const double t = (tau >= 0 ? -1.0 : 1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                // Columns: col_p' = c*col_p + s*conj(u)*col_q ; col_q' = -s*u*col_p + c*col_q
                for (int i = 0; i < 4; ++i) {
                    const cplx aip = a[i][p], aiq = a[i][q];
                    a[i][p] = c * aip + s * std::conj(u) * aiq;
                    a[i][q] = -s * u * aip + c * aiq;
                }
                for (int j = 0; j < 4; ++j) {
                    const cplx apj = a[p][j], aqj = a[q][j];
                    a[p][j] = c * apj + s * u * aqj;
                    a[q][j] = -s * std::conj(u) * apj + c * aqj;
                }
                a[p][q] = cplx(0.0, 0.0);
                a[q][p] = cplx(0.0, 0.0);
                a[p][p] = cplx(a[p][p].real(), 0.0);
                a[q][q] = cplx(a[q][q].real(), 0.0);
            }
    }
    std::array<double, 4> ev{a[0][0].real(), a[1][1].real(), a[2][2].real(), a[3][3].real()};
    std::sort(ev.begin(), ev.end());
    return ev;
}

double negativity(const TwoDetectorDensityMatrix& rho) {
    const auto ev = eigenvalues_hermitian_4(partial_transpose_a(rho));
    double n = 0.0;
    for (double e : ev) n += std::max(0.0, -e);
    return n;
}

double negativity_xform(const MatrixElements& el, bool identical) {
    const double laa = el.l_aa.real();
    const double lbb = el.l_bb.real();
    const double mm = std::abs(el.m);
    if (identical) {
        const double lnn = 0.5 * (laa + lbb);
        return std::max(0.0, mm - lnn);
    }
    const double e1 = 0.5 * (laa + lbb - std::sqrt((laa - lbb) * (laa - lbb) + 4.0 * mm * mm));
    return std::max(0.0, -e1);
}

MutualInformationResult mutual_information(const MatrixElements& el) {
    const double laa = clamp_diagonal(el.l_aa.real(), "L_AA");
    const double lbb = clamp_diagonal(el.l_bb.real(), "L_BB");
    const double lab2 = std::norm(el.l_ab);
    if (lab2 > laa * lbb + 1e-12)
        throw InvalidElements("mutual_information: |L_AB|^2 exceeds L_AA L_BB (Cauchy-Schwarz gate)");
    MutualInformationResult out;
    if (lab2 == 0.0) {
        out.l_plus = std::max(laa, lbb);
        out.l_minus = std::min(laa, lbb);
        out.value = 0.0;  // L_pm coincide with the marginals exactly
        return out;
    }
    const double root = std::sqrt((laa - lbb) * (laa - lbb) + 4.0 * lab2);
    out.l_plus = 0.5 * (laa + lbb + root);
    out.l_minus = std::max(0.0, 0.5 * (laa + lbb - root));
    out.value = xlogx(out.l_plus) + xlogx(out.l_minus) - xlogx(laa) - xlogx(lbb);
    return out;
}

}  // namespace harvestkit
