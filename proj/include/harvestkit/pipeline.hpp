#pragma once

#include "harvestkit/coherent_elements.hpp"
#include "harvestkit/measures.hpp"
#include "harvestkit/squeezed_elements.hpp"
#include "harvestkit/thermal_elements.hpp"

namespace harvestkit {

// Matrix elements for a detector pair against any field state. For coherent
// states these are the alpha-independent (vacuum) parts; the alpha-dependent
// corrections live in assemble_coherent_rho.
MatrixElements elements_for(const DetectorPair& pair, const FieldState& state,
                            const ProfileFT& profiles, const QuadratureConfig& cfg);

// Negativity, PT eigenvalue, mutual information and L_pm for the pair/state.
// Identical-detector uniform squeezing takes a cancellation-safe route so the
// e^{2r}-sized parts of L and |M| never meet in floating point.
CorrelationReport correlation_report(const DetectorPair& pair, const FieldState& state,
                                     const ProfileFT& profiles, const QuadratureConfig& cfg);

// beta-scaled high-temperature limits script-L = lim beta * L(beta), the
// coefficients of the linear growth of mutual information with T.
struct HighTElements {
    double l_nn;
    cplx l_ab;
};
HighTElements thermal_highT_elements(const DetectorPair& pair, double mass,
                                     const ProfileFT& profiles, const QuadratureConfig& cfg);

// Slope of I vs T in the high-temperature limit.
double highT_mi_slope(const DetectorPair& pair, double mass, const ProfileFT& profiles,
                      const QuadratureConfig& cfg);

}  // namespace harvestkit
