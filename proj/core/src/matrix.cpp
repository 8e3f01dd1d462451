#include "levyclt/matrix.hpp"
#include "levyclt/errors.hpp"

#include <cmath>

namespace levyclt {

Eigen::MatrixXd psd_sqrt(const Eigen::MatrixXd& M) {
    if (M.rows() != M.cols())
        throw ConfigError("psd_sqrt requires a square matrix");
    const double scale = std::max(1.0, M.cwiseAbs().maxCoeff());
    if ((M - M.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
        throw NotPSD("matrix is not symmetric");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (M + M.transpose()));
    if (es.info() != Eigen::Success)
        throw NumericError("eigendecomposition failed");
    Eigen::VectorXd ev = es.eigenvalues();
    const double lmax = std::max(0.0, ev.maxCoeff());
    for (int i = 0; i < ev.size(); ++i) {
        if (ev[i] < -1e-8 * std::max(lmax, 1e-300))
            throw NotPSD("matrix has a significantly negative eigenvalue");
        if (ev[i] < 0.0)
            ev[i] = 0.0;
    }
    return es.eigenvectors() * ev.cwiseSqrt().asDiagonal() * es.eigenvectors().transpose();
}

double opnorm(const Eigen::MatrixXd& M) {
    if (M.size() == 0)
        return 0.0;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
    return svd.singularValues()(0);
}

} // namespace levyclt
