#include "harvestkit/model.hpp"

namespace harvestkit {

double gaussian_smearing_ft(double sigma, double k) {
    if (!(sigma > 0)) throw DomainError("gaussian_smearing_ft: sigma must be > 0");
    constexpr double norm3 = 0.063493635934240969389;  // (2 pi)^{-3/2}
    return norm3 * std::exp(-sigma * sigma * k * k / 4.0);
}

double gaussian_switching_ft(double omega) {
    return std::exp(-omega * omega / 4.0) * M_SQRT1_2;
}

double dispersion(double k, double mass) {
    if (k < 0 || mass < 0) throw DomainError("dispersion: k and mass must be >= 0");
    return std::hypot(k, mass);
}

ProfileFT gaussian_profiles(const DetectorPair& pair) {
    pair.validate();
    const double sa = pair.a.smearing_width;
    const double sb = pair.b.smearing_width;
    return ProfileFT{
        [sa](double k) { return gaussian_smearing_ft(sa, k); },
        [sb](double k) { return gaussian_smearing_ft(sb, k); },
        [](double w) { return gaussian_switching_ft(w); },
    };
}

void validate(const FieldState& state) {
    std::visit(
        [](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Thermal>) {
                if (!(s.beta > 0)) throw DomainError("Thermal: beta must be > 0");
                if (s.mass < 0) throw DomainError("Thermal: mass must be >= 0");
            } else if constexpr (std::is_same_v<T, SqueezedUniform>) {
                if (s.r < 0) throw DomainError("SqueezedUniform: r must be >= 0");
            } else if constexpr (std::is_same_v<T, SqueezedBandlimited>) {
                if (!(s.epsilon > 0)) throw DomainError("SqueezedBandlimited: epsilon must be > 0");
                if (s.r < 0) throw DomainError("SqueezedBandlimited: r must be >= 0");
            } else if constexpr (std::is_same_v<T, SqueezedGeneral>) {
                if (!s.zeta || !s.support_envelope)
                    throw DomainError("SqueezedGeneral: zeta and support_envelope required");
            } else if constexpr (std::is_same_v<T, CoherentGaussian>) {
                if (!(s.width > 0)) throw DomainError("CoherentGaussian: width must be > 0");
            }
        },
        state);
}

}  // namespace harvestkit
