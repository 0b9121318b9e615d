#include "core/lindblad.hpp"

#include <cmath>
#include <string>

#include "core/errors.hpp"

namespace qtx {

namespace {

constexpr Complex kImag{0.0, 1.0};

// Dissipator applied through pre-scaled jump operators: with
// H_eff = H - (i/2) sum rate C†C the full generator collapses to
//   drho = -i (H_eff rho - rho H_eff†) + sum (sC) rho (sC)†.
CMat apply_generator(const CMat& h_eff, const std::vector<CMat>& scaled_ops,
                     const CMat& rho) {
    CMat out = -kImag * (h_eff * rho - rho * h_eff.adjoint());
    for (const CMat& c : scaled_ops) {
        out.noalias() += c * rho * c.adjoint();
    }
    return out;
}

CMat effective_hamiltonian(const CMat& h, const std::vector<CollapseChannel>& channels) {
    CMat h_eff = h;
    for (const auto& ch : channels) {
        h_eff -= 0.5 * kImag * ch.rate * (ch.op.adjoint() * ch.op);
    }
    return h_eff;
}

std::vector<CMat> scale_channels(const std::vector<CollapseChannel>& channels) {
    std::vector<CMat> scaled;
    scaled.reserve(channels.size());
    for (const auto& ch : channels) {
        if (ch.rate > 0.0) {
            scaled.push_back(std::sqrt(ch.rate) * ch.op);
        }
    }
    return scaled;
}

void check_channels(int dim, const std::vector<CollapseChannel>& channels) {
    for (const auto& ch : channels) {
        if (ch.rate < 0.0 || !std::isfinite(ch.rate)) {
            throw InvalidArgument("collapse rate must be finite and >= 0");
        }
        if (ch.op.rows() != dim || ch.op.cols() != dim) {
            throw InvalidArgument("collapse operator dim does not match system dim " +
                                  std::to_string(dim));
        }
    }
}

DensityMatrix run_rk4(const std::function<CMat(double, const CMat&)>& rhs,
                      const DensityMatrix& rho0, double t_final, double dt) {
    if (dt <= 0.0 || !std::isfinite(dt)) {
        throw InvalidArgument("time step must be > 0");
    }
    if (t_final < 0.0 || !std::isfinite(t_final)) {
        throw InvalidArgument("final time must be >= 0");
    }
    if (t_final == 0.0) {
        return rho0;
    }

    const long steps = std::max(1L, std::lround(t_final / dt));
    const double h = t_final / static_cast<double>(steps);

    CMat rho = rho0.matrix();
    for (long s = 0; s < steps; ++s) {
        const double t = static_cast<double>(s) * h;
        const CMat k1 = rhs(t, rho);
        const CMat k2 = rhs(t + 0.5 * h, rho + (0.5 * h) * k1);
        const CMat k3 = rhs(t + 0.5 * h, rho + (0.5 * h) * k2);
        const CMat k4 = rhs(t + h, rho + h * k3);
        rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

        const double trace_err = std::abs(rho.trace() - Complex(1.0, 0.0));
        if (trace_err > 1e-6 || !std::isfinite(trace_err)) {
            throw NumericalInstability("trace drift " + std::to_string(trace_err) +
                                       " at step " + std::to_string(s + 1) + " of " +
                                       std::to_string(steps));
        }
    }

    const double trace_err = std::abs(rho.trace() - Complex(1.0, 0.0));
    if (trace_err >= 1e-7) {
        throw NumericalInstability("final trace off by " + std::to_string(trace_err) +
                                   " after " + std::to_string(steps) + " steps");
    }
    const double herm = hermiticity_defect(rho);
    if (herm >= 1e-8) {
        throw NumericalInstability("final state Hermiticity defect " +
                                   std::to_string(herm) + " after " +
                                   std::to_string(steps) + " steps");
    }
    return DensityMatrix(rho0.space(), std::move(rho));
}

}  // namespace

Liouvillian::Liouvillian(CMat hamiltonian, std::vector<CollapseChannel> channels)
    : h_(std::move(hamiltonian)), channels_(std::move(channels)) {
    if (h_.rows() != h_.cols()) {
        throw InvalidArgument("Hamiltonian must be square");
    }
    check_channels(dim(), channels_);
    h_eff_ = effective_hamiltonian(h_, channels_);
    scaled_ops_ = scale_channels(channels_);
}

CMat apply_liouvillian(const Liouvillian& l, const CMat& rho) {
    if (rho.rows() != l.dim() || rho.cols() != l.dim()) {
        throw InvalidArgument("state dim does not match Liouvillian dim " +
                              std::to_string(l.dim()));
    }
    return apply_generator(l.h_eff_, l.scaled_ops_, rho);
}

CMat apply_liouvillian(const Liouvillian& l, const DensityMatrix& rho) {
    return apply_liouvillian(l, rho.matrix());
}

CMat Liouvillian::superoperator() const {
    const int n = dim();
    if (n > 100) {
        throw InvalidArgument("dense superoperator limited to dim <= 100, got " +
                              std::to_string(n));
    }
    const CMat eye = identity(n);
    // Row-stacked vec: vec(A X B) = (A ⊗ Bᵀ) vec(X).
    CMat sup = -kImag * (kron(h_, eye) - kron(eye, h_.transpose()));
    for (const auto& ch : channels_) {
        if (ch.rate == 0.0) {
            continue;
        }
        const CMat ctc = ch.op.adjoint() * ch.op;
        sup += ch.rate * (kron(ch.op, ch.op.conjugate()) -
                          0.5 * kron(ctc, eye) - 0.5 * kron(eye, ctc.transpose()));
    }
    return sup;
}

DensityMatrix evolve(const Liouvillian& l, const DensityMatrix& rho0, double t_final,
                     double dt) {
    if (rho0.space().total_dim() != l.dim()) {
        throw InvalidArgument("initial state dim does not match Liouvillian");
    }
    return run_rk4([&l](double, const CMat& rho) { return apply_liouvillian(l, rho); },
                   rho0, t_final, dt);
}

DensityMatrix evolve(const HamiltonianFn& hamiltonian,
                     const std::vector<CollapseChannel>& channels,
                     const DensityMatrix& rho0, double t_final, double dt) {
    const int n = rho0.space().total_dim();
    check_channels(n, channels);
    const std::vector<CMat> scaled = scale_channels(channels);
    CMat damping = CMat::Zero(n, n);
    for (const auto& ch : channels) {
        damping -= 0.5 * kImag * ch.rate * (ch.op.adjoint() * ch.op);
    }
    auto rhs = [&](double t, const CMat& rho) {
        CMat h_eff = hamiltonian(t);
        if (h_eff.rows() != n || h_eff.cols() != n) {
            throw InvalidArgument("Hamiltonian dim does not match state");
        }
        h_eff += damping;
        return apply_generator(h_eff, scaled, rho);
    };
    return run_rk4(rhs, rho0, t_final, dt);
}

DensityMatrix steady_state(const Liouvillian& l) {
    return steady_state(l, ModeSpace({l.dim()}));
}

DensityMatrix steady_state(const Liouvillian& l, const ModeSpace& space) {
    const int n = l.dim();
    if (space.total_dim() != n) {
        throw InvalidArgument("mode space dim does not match Liouvillian");
    }
    CMat sup = l.superoperator();

    // Replace the first row with Tr(rho) = 1; diagonal entries of the
    // row-stacked vec sit at k = i*(n+1).
    sup.row(0).setZero();
    for (int i = 0; i < n; ++i) {
        sup(0, i * (n + 1)) = 1.0;
    }
    CVec rhs = CVec::Zero(n * n);
    rhs(0) = 1.0;

    const Eigen::PartialPivLU<CMat> lu(sup);
    // A degenerate generator leaves the trace-constrained system singular,
    // which surfaces as vanishing pivots in U.
    const Eigen::VectorXd pivots = lu.matrixLU().diagonal().cwiseAbs();
    if (pivots.minCoeff() <= 1e-12 * pivots.maxCoeff()) {
        throw DegenerateSystem("steady state is not unique (singular generator)");
    }
    const CVec sol = lu.solve(rhs);
    if (!sol.allFinite()) {
        throw DegenerateSystem("steady-state solve produced non-finite values; "
                               "generator likely has multiple steady states");
    }

    CMat rho(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            rho(i, j) = sol(i * n + j);
        }
    }
    rho = 0.5 * (rho + rho.adjoint().eval());
    rho /= rho.trace();

    const double residual = max_abs(apply_liouvillian(l, rho));
    if (!(residual < 1e-8)) {
        throw DegenerateSystem("steady state residual " + std::to_string(residual) +
                               "; generator degenerate or ill-conditioned");
    }
    return DensityMatrix(space, std::move(rho));
}

std::vector<CollapseChannel> transducer_channels(const TransducerParams& p,
                                                 const ModeSpace& space) {
    p.validate();
    if (space.modes() != 3) {
        throw InvalidArgument("transducer channels require a three-mode space");
    }
    std::vector<CollapseChannel> channels;
    for (int l = 0; l < 2; ++l) {
        const CMat a = embed(annihilation(space.cutoff(l)), l, space);
        channels.push_back({a, p.delta[l] * (p.n_th_cavity[l] + 1.0)});
        if (p.n_th_cavity[l] > 0.0) {
            channels.push_back({a.adjoint(), p.delta[l] * p.n_th_cavity[l]});
        }
    }
    const CMat b = embed(annihilation(space.cutoff(2)), 2, space);
    channels.push_back({b, p.delta_m * (p.n_th + 1.0)});
    if (p.n_th > 0.0) {
        channels.push_back({b.adjoint(), p.delta_m * p.n_th});
    }
    return channels;
}

}  // namespace qtx
