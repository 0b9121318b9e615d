#pragma once

#include <functional>
#include <vector>

#include "core/transducer.hpp"

namespace qtx {

struct CollapseChannel {
    CMat op;            // jump operator on the full space
    double rate = 0.0;  // >= 0
};

// Generator of the master equation
//   drho/dt = -i[H, rho] + sum_k rate_k (C rho C† - ½{C†C, rho}).
// The right-hand side is always applied matrix-free; the dense
// (dim²)×(dim²) superoperator is materialized only on demand (dim <= 100).
class Liouvillian {
public:
    Liouvillian(CMat hamiltonian, std::vector<CollapseChannel> channels);

    int dim() const { return static_cast<int>(h_.rows()); }
    const CMat& hamiltonian() const { return h_; }
    const std::vector<CollapseChannel>& channels() const { return channels_; }

    // Row-stacked vec convention: L acts on vec(rho) of the row-major matrix.
    CMat superoperator() const;

private:
    friend CMat apply_liouvillian(const Liouvillian&, const CMat&);

    CMat h_;
    std::vector<CollapseChannel> channels_;
    CMat h_eff_;                    // H - (i/2) sum rate C†C
    std::vector<CMat> scaled_ops_;  // sqrt(rate) * C
};

CMat apply_liouvillian(const Liouvillian& l, const CMat& rho);
CMat apply_liouvillian(const Liouvillian& l, const DensityMatrix& rho);

// Classical fixed-step RK4. The step count is round(t_final/dt), with the
// step width adjusted so the steps tile [0, t_final] exactly. Trace drift
// beyond 1e-6 aborts with NumericalInstability naming the step.
DensityMatrix evolve(const Liouvillian& l, const DensityMatrix& rho0, double t_final,
                     double dt);

// Time-dependent variant; the Hamiltonian is re-evaluated at the four RK4
// stage times.
using HamiltonianFn = std::function<CMat(double)>;
DensityMatrix evolve(const HamiltonianFn& hamiltonian,
                     const std::vector<CollapseChannel>& channels,
                     const DensityMatrix& rho0, double t_final, double dt);

// Unique steady state of the generator: solves L vec(rho) = 0 with one row
// replaced by the trace constraint. Throws DegenerateSystem when the kernel
// is not one-dimensional. The one-argument form labels the result with a
// single-slot ModeSpace of matching dimension.
DensityMatrix steady_state(const Liouvillian& l);
DensityMatrix steady_state(const Liouvillian& l, const ModeSpace& space);

// Damping channels of the three-mode device: thermal bath (n_th) on the
// mechanical mode, baths on the electromagnetic modes at their configured
// occupations (zero-temperature by default).
std::vector<CollapseChannel> transducer_channels(const TransducerParams& p,
                                                 const ModeSpace& space);

}  // namespace qtx
