#include "core/scattering.hpp"

#include <cmath>

#include "core/errors.hpp"

namespace qtx {

Mat3 drift_matrix(const TransducerParams& p) {
    p.validate();
    const double g1 = cavity_rate(p.gamma[0], p.n_pump[0]);
    const double g2 = cavity_rate(p.gamma[1], p.n_pump[1]);
    const Complex mi{0.0, -1.0};

    Mat3 m = Mat3::Zero();
    m(0, 0) = -0.5 * p.delta[0];
    m(1, 1) = -0.5 * p.delta[1];
    m(2, 2) = -0.5 * p.delta_m;
    m(0, 2) = mi * g1;
    m(1, 2) = mi * g2;
    m(2, 0) = mi * g1;
    m(2, 1) = mi * g2;
    return m;
}

ScatteringMatrix scattering_matrix(const TransducerParams& p, double omega) {
    if (!std::isfinite(omega)) {
        throw InvalidArgument("probe detuning must be finite");
    }
    const Mat3 m = drift_matrix(p);
    Mat3 k = Mat3::Zero();
    k(0, 0) = std::sqrt(p.delta[0]);
    k(1, 1) = std::sqrt(p.delta[1]);
    k(2, 2) = std::sqrt(p.delta_m);

    const Mat3 a = Complex(0.0, -omega) * Mat3::Identity() - m;
    // Cannot be singular for stable M and real omega; guarded anyway.
    const Complex det = a.determinant();
    if (std::abs(det) < 1e-14) {
        throw DegenerateSystem("resonance singularity in scattering solve");
    }
    ScatteringMatrix s;
    s.omega = omega;
    s.entries = Mat3::Identity() - k.adjoint() * a.inverse() * k;
    return s;
}

double spectral_efficiency(const TransducerParams& p, double omega) {
    const ScatteringMatrix s = scattering_matrix(p, omega);
    return std::norm(s.entries(1, 0));
}

double added_noise_quanta(const TransducerParams& p, double omega) {
    const ScatteringMatrix s = scattering_matrix(p, omega);
    const double eta = std::norm(s.entries(1, 0));
    return p.n_th * std::norm(s.entries(1, 2)) / std::max(eta, 1e-9);
}

}  // namespace qtx
