#pragma once

#include <array>

#include "harvestkit/vacuum_elements.hpp"

namespace harvestkit {

// 4x4 density matrix of the detector pair in the basis {gg, ge, eg, ee}.
struct TwoDetectorDensityMatrix {
    std::array<std::array<cplx, 4>, 4> m{};

    cplx& operator()(int i, int j) { return m[i][j]; }
    const cplx& operator()(int i, int j) const { return m[i][j]; }

    cplx trace() const { return m[0][0] + m[1][1] + m[2][2] + m[3][3]; }
    double hermiticity_residual() const;
};

struct CorrelationReport {
    double negativity = 0.0;
    double min_pt_eigenvalue = 0.0;
    double mutual_information = 0.0;
    double l_plus = 0.0;
    double l_minus = 0.0;
};

// X-form matrix: diag(1 - L_AA - L_BB, L_BB, L_AA, 0) with M on the
// anti-diagonal corners and L_AB on the inner off-diagonal.
TwoDetectorDensityMatrix assemble_xform(const MatrixElements& el);

// Transposes the A indices: entry[(a,b),(a',b')] -> entry[(a',b),(a,b')].
TwoDetectorDensityMatrix partial_transpose_a(const TwoDetectorDensityMatrix& rho);

// Cyclic complex Jacobi rotations, deterministic sweep order, ascending output.
std::array<double, 4> eigenvalues_hermitian_4(const TwoDetectorDensityMatrix& m);

double negativity(const TwoDetectorDensityMatrix& rho);

// X-form shortcut: E_1 = (L_AA + L_BB - sqrt((L_AA - L_BB)^2 + 4|M|^2))/2,
// N = max(0, -E_1). The identical flag takes L_AA = L_BB as exact.
double negativity_xform(const MatrixElements& el, bool identical);

// O(lambda^2) mutual information through L_plus/L_minus; pair (value, L_pm).
struct MutualInformationResult {
    double value = 0.0;
    double l_plus = 0.0;
    double l_minus = 0.0;
};
MutualInformationResult mutual_information(const MatrixElements& el);

}  // namespace harvestkit
