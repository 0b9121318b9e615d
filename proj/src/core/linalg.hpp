#pragma once

#include <Eigen/Dense>
#include <complex>

namespace qtx {

using Complex = std::complex<double>;

// Operators and density matrices are stored dense and row-major, so the raw
// buffer of a matrix is its row-stacked vectorization. The superoperator in
// lindblad.cpp relies on that convention.
using CMat = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using CVec = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;
using RVec = Eigen::VectorXd;
using RMat = Eigen::MatrixXd;

CMat kron(const CMat& a, const CMat& b);

CMat identity(int dim);

// max_ij |m_ij|
double max_abs(const CMat& m);

// max_ij |m_ij - conj(m_ji)|
double hermiticity_defect(const CMat& m);

}  // namespace qtx
