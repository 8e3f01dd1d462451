#pragma once

#include "levyclt/measures.hpp"

#include <Eigen/Dense>
#include <vector>

namespace levyclt {

// Generating triplet (Sigma, gamma, nu) with unit-ball cutoff convention.
// Zero-mean convention: gamma = 0 for the isotropic measure families.
struct LevyTriplet {
    Eigen::MatrixXd gaussian_cov;
    Eigen::VectorXd drift;
    RadialLevyMeasure measure;

    int dim() const { return static_cast<int>(gaussian_cov.rows()); }

    static LevyTriplet isotropic(const RadialLevyMeasure& m,
                                 const Eigen::MatrixXd& gaussian_cov);
    static LevyTriplet pure_gaussian(const Eigen::MatrixXd& gaussian_cov);
};

// Centering A(t) = t E[X_1] and scaling B(t) = sqrt(t) * Delta(t) with
// Delta(t)^2 = Sigma(t) = Sigma + int_{|v| < kappa sqrt(t)} v v^T nu(dv).
struct ScalingPair {
    double t = 1.0;
    double kappa = 1.0;
    Eigen::VectorXd A;
    Eigen::MatrixXd B;
    Eigen::MatrixXd delta; // Delta(t)
};

Eigen::MatrixXd truncated_cov(const LevyTriplet& triplet, double t, double kappa);

ScalingPair scaling_pair(const LevyTriplet& triplet, double t, double kappa);

// Smallest kappa on the grid {e^{k/4} : k = 0, 1, ...} with
// lambda_min(Sigma(1)) > tol; throws NoValidKappa past kappa_max = e^8.
double choose_kappa(const LevyTriplet& triplet, double tol = 1e-8);

// mu_t = -t int_{|v| > kappa sqrt(t)} v nu(dv); zero for the isotropic
// families (when the first moment exists).
Eigen::VectorXd centering_drift(const LevyTriplet& triplet, double t, double kappa);

// Same tail drift for a finite atomic measure sum_i weight_i * delta_{v_i}.
struct MeasureAtom {
    double weight;
    Eigen::VectorXd position;
};
Eigen::VectorXd centering_drift(const std::vector<MeasureAtom>& atoms, double t,
                                double kappa);

// 4c * opnorm(Delta(1)^{-1})^3 * t^{-1/2} * M_3(kappa sqrt(t)).
double berry_esseen_bound(const LevyTriplet& triplet, double t, double kappa,
                          double c = 1.0);

// mu(x) = (1/2) Sigma_Y x^2 + 2 int_(0,inf) (1 - cos(x v)) nu_Y(dv) for a
// symmetric one-dimensional triplet; oscillation handled by half-period
// panels with compensated summation.
double char_exponent_1d(const LevyTriplet& triplet, double x);

} // namespace levyclt
