#include "core/transducer.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "core/errors.hpp"

namespace qtx {

namespace {

void require_finite(double v, const char* name) {
    if (!std::isfinite(v)) {
        throw InvalidArgument(std::string(name) + " must be finite");
    }
}

void require_positive(double v, const char* name) {
    require_finite(v, name);
    if (v <= 0.0) {
        throw InvalidArgument(std::string(name) + " must be > 0");
    }
}

void require_nonnegative(double v, const char* name) {
    require_finite(v, name);
    if (v < 0.0) {
        throw InvalidArgument(std::string(name) + " must be >= 0");
    }
}

void require_three_modes(const ModeSpace& space) {
    if (space.modes() != 3) {
        throw InvalidArgument("transducer Hamiltonians require a three-mode space");
    }
}

}  // namespace

void TransducerParams::validate() const {
    require_finite(omega_m, "omega_m");
    require_finite(omega_c[0], "omega_c_1");
    require_finite(omega_c[1], "omega_c_2");
    require_finite(epsilon[0], "epsilon_1");
    require_finite(epsilon[1], "epsilon_2");
    require_finite(omega_d[0], "omega_d_1");
    require_finite(omega_d[1], "omega_d_2");
    require_positive(gamma[0], "gamma_1");
    require_positive(gamma[1], "gamma_2");
    require_positive(delta[0], "delta_1");
    require_positive(delta[1], "delta_2");
    require_positive(delta_m, "delta_m");
    require_nonnegative(n_th, "n_th");
    require_nonnegative(n_th_cavity[0], "n_th_cavity_1");
    require_nonnegative(n_th_cavity[1], "n_th_cavity_2");
    require_nonnegative(n_pump[0], "n_pump_1");
    require_nonnegative(n_pump[1], "n_pump_2");
}

double cavity_rate(double gamma_l, double n_l) {
    require_positive(gamma_l, "gamma_l");
    require_nonnegative(n_l, "n_l");
    return gamma_l * std::sqrt(n_l);
}

double cooperativity(double g, double delta_l, double delta_m) {
    require_finite(g, "cavity rate");
    require_positive(delta_l, "delta_l");
    require_positive(delta_m, "delta_m");
    return 4.0 * g * g / (delta_l * delta_m);
}

CooperativityPair cooperativities(const TransducerParams& p) {
    return {cooperativity(cavity_rate(p.gamma[0], p.n_pump[0]), p.delta[0], p.delta_m),
            cooperativity(cavity_rate(p.gamma[1], p.n_pump[1]), p.delta[1], p.delta_m)};
}

double conversion_efficiency(const CooperativityPair& c, EtaDenominator form) {
    if (c.c1 < 0.0 || c.c2 < 0.0) {
        throw InvalidArgument("cooperativities must be >= 0");
    }
    const double denom = 1.0 + c.c1 + c.c2;
    switch (form) {
        case EtaDenominator::Squared:
            return 4.0 * c.c1 * c.c2 / (denom * denom);
        case EtaDenominator::Linear:
            return 4.0 * c.c1 * c.c2 / denom;
    }
    throw InvalidArgument("unknown efficiency form");
}

CMat build_full_hamiltonian(const TransducerParams& p, const ModeSpace& space, double t) {
    p.validate();
    require_three_modes(space);
    const int dim = space.total_dim();

    const CMat n_m = embed(number_operator(space.cutoff(2)), 2, space);
    const CMat b = embed(annihilation(space.cutoff(2)), 2, space);
    const CMat b_pos = b + b.adjoint();  // b† + b

    CMat h = p.omega_m * n_m;
    for (int l = 0; l < 2; ++l) {
        const CMat a = embed(annihilation(space.cutoff(l)), l, space);
        const CMat n_l = embed(number_operator(space.cutoff(l)), l, space);
        h += p.omega_c[l] * n_l;
        h += p.gamma[l] * b_pos * n_l;
        const Complex phase = std::exp(Complex(0.0, -p.omega_d[l] * t));
        h += Complex(0.0, p.epsilon[l]) *
             (phase * a.adjoint() - std::conj(phase) * a);
    }
    (void)dim;
    return h;
}

CMat build_beam_splitter_hamiltonian(const TransducerParams& p, const ModeSpace& space) {
    p.validate();
    require_three_modes(space);

    const CMat b = embed(annihilation(space.cutoff(2)), 2, space);
    CMat h = CMat::Zero(space.total_dim(), space.total_dim());
    for (int l = 0; l < 2; ++l) {
        const double g = cavity_rate(p.gamma[l], p.n_pump[l]);
        const CMat a = embed(annihilation(space.cutoff(l)), l, space);
        h += g * (a * b.adjoint() + a.adjoint() * b);
    }
    return h;
}

double default_time_step(const TransducerParams& p) {
    const double g1 = cavity_rate(p.gamma[0], p.n_pump[0]);
    const double g2 = cavity_rate(p.gamma[1], p.n_pump[1]);
    const double top = std::max({p.delta[0], p.delta[1], p.delta_m, g1, g2});
    return 0.005 / top;
}

}  // namespace qtx
