#pragma once

#include <complex>

#include <Eigen/Dense>

namespace qrep {

// Dense matrix exponential exp(scale*m) by scaling-and-squaring around a
// degree-13 Pade approximant. Chosen over eigendecomposition because the
// generators handled here are non-Hermitian and may be defective at
// exceptional parameter points. Dimension is capped at 243. Throws
// ConvergenceFailureError when the result is not finite.
Eigen::MatrixXcd matrix_exponential(const Eigen::MatrixXcd& m,
                                    std::complex<double> scale = {1.0, 0.0});

}  // namespace qrep
