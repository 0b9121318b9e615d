#pragma once

#include <array>

#include "core/fock.hpp"

namespace qtx {

// Physical parameters of the three-mode converter: two electromagnetic
// cavities coupled through one mechanical mode. Everything is expressed in
// dimensionless units with the mechanical damping rate delta_m = 1 as the
// frequency unit; indices 0/1 refer to the microwave/optical cavity.
struct TransducerParams {
    double omega_m = 5.0;                       // mechanical frequency
    std::array<double, 2> omega_c{20.0, 30.0};  // cavity frequencies
    std::array<double, 2> gamma{0.02, 0.02};    // single-photon optomechanical couplings
    std::array<double, 2> epsilon{0.0, 0.0};    // pump drive amplitudes
    std::array<double, 2> omega_d{20.0, 30.0};  // pump drive frequencies
    std::array<double, 2> delta{10.0, 10.0};    // cavity damping rates
    double delta_m = 1.0;                       // mechanical damping rate
    double n_th = 2.0;                          // mechanical bath occupation
    std::array<double, 2> n_th_cavity{0.0, 0.0};  // optional cavity bath occupations
    std::array<double, 2> n_pump{0.0, 0.0};     // pump-induced mean photon numbers

    // Throws InvalidArgument naming the offending field.
    void validate() const;
};

struct CooperativityPair {
    double c1 = 0.0;
    double c2 = 0.0;
};

// The bounded matched-conversion form (squared denominator) is the default
// everywhere; the historic unbounded form is kept selectable for comparison
// plots only and may exceed 1.
enum class EtaDenominator { Squared, Linear };

// G_l = gamma_l * sqrt(n_l), the pump-enhanced cavity rate.
double cavity_rate(double gamma_l, double n_l);

// C = 4 G^2 / (delta_l * delta_m).
double cooperativity(double g, double delta_l, double delta_m);

CooperativityPair cooperativities(const TransducerParams& p);

// eta = 4 C1 C2 / (1 + C1 + C2)^2 for the Squared form; strictly < 1.
double conversion_efficiency(const CooperativityPair& c,
                             EtaDenominator form = EtaDenominator::Squared);

// Full driven Hamiltonian at time t:
//   H(t) = omega_m n_m + sum_l [ omega_cl n_l + gamma_l (b† + b) n_l
//          + i eps_l (a_l† e^{-i omega_dl t} - a_l e^{+i omega_dl t}) ]
// space must have exactly three modes in the fixed ordering.
CMat build_full_hamiltonian(const TransducerParams& p, const ModeSpace& space, double t);

// Linearized beam-splitter Hamiltonian in the displaced fluctuation frame,
//   H' = sum_l G_l (a_l b† + a_l† b),
// valid at matched detuning; conserves the total excitation number.
CMat build_beam_splitter_hamiltonian(const TransducerParams& p, const ModeSpace& space);

// Fixed RK4 step used by simulation runs: 0.005 / max(rates).
double default_time_step(const TransducerParams& p);

}  // namespace qtx
