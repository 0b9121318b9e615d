#pragma once

#include "core/transducer.hpp"

namespace qtx {

using Mat3 = Eigen::Matrix3cd;

// Frequency-domain input-output map over the channels (microwave port,
// optical port, mechanical bath), evaluated at probe detuning omega.
struct ScatteringMatrix {
    double omega = 0.0;
    Mat3 entries;
};

// Drift matrix of the linearized mode amplitudes (a_1, a_2, b) at matched
// detuning:
//   M = [[-d1/2,     0, -iG1],
//        [    0, -d2/2, -iG2],
//        [ -iG1,  -iG2, -dm/2]].
// All eigenvalues have non-positive real part for positive damping.
Mat3 drift_matrix(const TransducerParams& p);

// S(omega) = I - K† (-i omega I - M)^{-1} K with K = diag(sqrt(d1), sqrt(d2),
// sqrt(dm)). Unitary for real omega since the three channels exhaust all
// damping.
ScatteringMatrix scattering_matrix(const TransducerParams& p, double omega);

// eta(omega) = |S_21(omega)|^2; on resonance this reduces to the analytic
// 4 C1 C2 / (1 + C1 + C2)^2.
double spectral_efficiency(const TransducerParams& p, double omega);

// Thermal quanta referred to the input: n_th |S_23(omega)|^2 / eta(omega).
// The denominator is floored at 1e-9 so the figure stays finite when the
// conversion path is closed.
double added_noise_quanta(const TransducerParams& p, double omega);

}  // namespace qtx
