#include "core/fock.hpp"

#include <cmath>
#include <string>

#include "core/errors.hpp"

namespace qtx {

ModeSpace::ModeSpace(std::vector<int> cutoffs) : cutoffs_(std::move(cutoffs)) {
    if (cutoffs_.empty()) {
        throw InvalidArgument("ModeSpace requires at least one mode");
    }
    total_dim_ = 1;
    for (int n : cutoffs_) {
        if (n < 2) {
            throw InvalidArgument("Fock cutoff must be >= 2, got " + std::to_string(n));
        }
        total_dim_ *= n;
    }
}

int ModeSpace::cutoff(int slot) const {
    if (slot < 0 || slot >= modes()) {
        throw InvalidArgument("mode slot " + std::to_string(slot) + " out of range");
    }
    return cutoffs_[static_cast<size_t>(slot)];
}

CMat annihilation(int cutoff) {
    if (cutoff < 2) {
        throw InvalidArgument("annihilation cutoff must be >= 2, got " +
                              std::to_string(cutoff));
    }
    CMat a = CMat::Zero(cutoff, cutoff);
    for (int i = 0; i + 1 < cutoff; ++i) {
        a(i, i + 1) = std::sqrt(static_cast<double>(i + 1));
    }
    return a;
}

CMat creation(int cutoff) { return annihilation(cutoff).adjoint(); }

CMat number_operator(int cutoff) {
    if (cutoff < 2) {
        throw InvalidArgument("number operator cutoff must be >= 2, got " +
                              std::to_string(cutoff));
    }
    CMat n = CMat::Zero(cutoff, cutoff);
    for (int i = 0; i < cutoff; ++i) {
        n(i, i) = static_cast<double>(i);
    }
    return n;
}

CMat embed(const CMat& op, int slot, const ModeSpace& space) {
    if (op.rows() != op.cols()) {
        throw InvalidArgument("embed requires a square operator");
    }
    if (op.rows() != space.cutoff(slot)) {
        throw InvalidArgument("operator dim " + std::to_string(op.rows()) +
                              " does not match cutoff " +
                              std::to_string(space.cutoff(slot)) + " of slot " +
                              std::to_string(slot));
    }
    CMat out = (slot == 0) ? op : identity(space.cutoff(0));
    for (int s = 1; s < space.modes(); ++s) {
        out = kron(out, (s == slot) ? op : identity(space.cutoff(s)));
    }
    return out;
}

DensityMatrix::DensityMatrix(ModeSpace space, CMat entries)
    : space_(std::move(space)), entries_(std::move(entries)) {
    if (entries_.rows() != space_.total_dim() || entries_.cols() != space_.total_dim()) {
        throw InvalidArgument("density matrix entries do not match space dim " +
                              std::to_string(space_.total_dim()));
    }
}

DensityMatrix DensityMatrix::vacuum(const ModeSpace& space) {
    CMat m = CMat::Zero(space.total_dim(), space.total_dim());
    m(0, 0) = 1.0;
    return DensityMatrix(space, std::move(m));
}

DensityMatrix DensityMatrix::pure(const ModeSpace& space, const CVec& psi) {
    if (psi.size() != space.total_dim()) {
        throw InvalidArgument("state vector does not match space dim");
    }
    const double norm = psi.norm();
    if (norm <= 0.0) {
        throw InvalidArgument("state vector has zero norm");
    }
    CVec n = psi / norm;
    CMat m = n * n.adjoint();
    return DensityMatrix(space, std::move(m));
}

void DensityMatrix::validate(double herm_tol, double trace_tol, double eig_floor) const {
    const double herm = hermiticity_defect(entries_);
    if (herm > herm_tol) {
        throw NumericalInstability("density matrix not Hermitian: defect " +
                                   std::to_string(herm));
    }
    const double trace_err = std::abs(entries_.trace() - Complex(1.0, 0.0));
    if (trace_err > trace_tol) {
        throw NumericalInstability("density matrix trace off by " +
                                   std::to_string(trace_err));
    }
    Eigen::SelfAdjointEigenSolver<CMat> es(0.5 * (entries_ + entries_.adjoint()),
                                           Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < eig_floor) {
        throw NumericalInstability("density matrix has eigenvalue " +
                                   std::to_string(es.eigenvalues().minCoeff()) +
                                   " below floor");
    }
}

DensityMatrix thermal_state(int cutoff, double n_th) {
    if (n_th < 0.0) {
        throw InvalidArgument("thermal occupation must be >= 0");
    }
    ModeSpace space({cutoff});
    CMat m = CMat::Zero(cutoff, cutoff);
    const double ratio = n_th / (n_th + 1.0);
    double p = 1.0;
    double norm = 0.0;
    for (int n = 0; n < cutoff; ++n) {
        m(n, n) = p;
        norm += p;
        p *= ratio;
    }
    m /= norm;
    return DensityMatrix(space, std::move(m));
}

Complex expectation(const CMat& rho, const CMat& op) {
    if (rho.rows() != op.rows() || rho.cols() != op.cols() || rho.rows() != rho.cols()) {
        throw InvalidArgument("expectation dimension mismatch");
    }
    // Tr(rho*op) = sum_ik rho_ik op_ki without forming the product.
    return rho.cwiseProduct(op.transpose()).sum();
}

Complex expectation(const DensityMatrix& rho, const CMat& op) {
    return expectation(rho.matrix(), op);
}

}  // namespace qtx
