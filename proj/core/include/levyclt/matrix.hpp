#pragma once

#include <Eigen/Dense>

namespace levyclt {

// Unique PSD square root via eigendecomposition. Eigenvalues in
// [-1e-8 * lambda_max, 0) are clamped to zero (symmetrisation noise);
// anything below that throws NotPSD. Asymmetry beyond 1e-12 (relative to
// the largest entry) is rejected.
Eigen::MatrixXd psd_sqrt(const Eigen::MatrixXd& M);

// Operator (spectral) norm.
double opnorm(const Eigen::MatrixXd& M);

} // namespace levyclt
