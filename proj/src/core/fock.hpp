#pragma once

#include <vector>

#include "core/linalg.hpp"

namespace qtx {

// Truncated multi-mode Fock space. Mode ordering is fixed throughout the
// project: slot 0 microwave, slot 1 optical, slot 2 mechanical. Slot 0 is
// the leftmost (slowest-varying) factor in the tensor product.
class ModeSpace {
public:
    explicit ModeSpace(std::vector<int> cutoffs);

    int modes() const { return static_cast<int>(cutoffs_.size()); }
    int cutoff(int slot) const;
    int total_dim() const { return total_dim_; }

private:
    std::vector<int> cutoffs_;
    int total_dim_ = 0;
};

// N x N ladder operator with a[i, i+1] = sqrt(i+1). cutoff >= 2.
CMat annihilation(int cutoff);
CMat creation(int cutoff);
CMat number_operator(int cutoff);

// I ⊗ ... ⊗ op ⊗ ... ⊗ I with op acting on the given slot.
CMat embed(const CMat& op, int slot, const ModeSpace& space);

// Density matrix over a ModeSpace. Construction stores the entries as given;
// validate() checks the state axioms (Hermitian, unit trace, positive).
class DensityMatrix {
public:
    DensityMatrix(ModeSpace space, CMat entries);

    static DensityMatrix vacuum(const ModeSpace& space);
    static DensityMatrix pure(const ModeSpace& space, const CVec& psi);

    const ModeSpace& space() const { return space_; }
    const CMat& matrix() const { return entries_; }
    CMat& matrix() { return entries_; }

    void validate(double herm_tol = 1e-10, double trace_tol = 1e-9,
                  double eig_floor = -1e-8) const;

private:
    ModeSpace space_;
    CMat entries_;
};

// Single-mode thermal state with mean occupation n_th, truncated and
// renormalized at the cutoff.
DensityMatrix thermal_state(int cutoff, double n_th);

// Tr(rho * op). Real up to roundoff when op is Hermitian and rho valid.
Complex expectation(const DensityMatrix& rho, const CMat& op);
Complex expectation(const CMat& rho, const CMat& op);

}  // namespace qtx
