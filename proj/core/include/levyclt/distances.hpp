#pragma once

#include "levyclt/simulate.hpp"

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace levyclt {

enum class DistanceClass {
    KolmogorovRays,
    HalfSpaces,
    CenteredBalls,
    TwoSampleRays,
    Wasserstein1,
};

std::string distance_class_name(DistanceClass c);

struct DistanceEstimate {
    DistanceClass cls = DistanceClass::KolmogorovRays;
    double value = 0.0;
    double ci = 0.0; // advisory half-width, never part of the value
    bool exact = false;
    std::uint32_t n = 0;
    std::uint32_t d = 0;
    std::optional<double> t;
};

// JSON-lines record {class, value, ci, exact, n, d, t?}.
std::string to_jsonl(const DistanceEstimate& e);

using Cdf = std::function<double(double)>;

// sup_x |F_n(x) - F(x)| for continuous F: max over order statistics of
// max(i/n - F(x_i), F(x_i) - (i-1)/n). Input is sorted (verified).
DistanceEstimate ks_1d_one_sample(const std::vector<double>& sorted_sample,
                                  const Cdf& cdf);

// Exact hyper-ray (Kolmogorov) distance against a product Gaussian with
// the given per-axis scales; corner enumeration with left limits, d <= 3.
DistanceEstimate dk_product_gaussian(const SampleBatch& sample,
                                     const Eigen::VectorXd& scales);

// Exact two-sample ray distance over the pooled coordinate grid (d <= 2,
// d = 3 behind a size guard); larger cases fall back to a seeded
// stochastic ray search flagged inexact (or throw if not allowed).
DistanceEstimate dk_two_sample(const SampleBatch& a, const SampleBatch& b,
                               bool allow_approx = true,
                               std::uint64_t search_seed = 0x5EEDull);

// Max over supplied unit directions w of the 1-d KS distance between
// <w, X> and N(0, w' cov w); a lower bound for the convex-class distance.
DistanceEstimate halfspace_distance(const SampleBatch& sample,
                                    const Eigen::MatrixXd& cov,
                                    const std::vector<Eigen::VectorXd>& directions);

// d axes, 2d normalised diagonal pairs, 64 seeded uniform directions.
std::vector<Eigen::VectorXd> default_directions(int d, std::uint64_t seed);

// 1-d KS between {|row - center|} and a reference radial CDF.
DistanceEstimate ball_class_distance(const SampleBatch& sample, const Cdf& radial_cdf,
                                     const Eigen::VectorXd& center);

// Exact piecewise integral of |F_n - F| (quantile handle locates the
// crossing inside each segment; analytic tails by mapped quadrature).
DistanceEstimate w1_1d(const std::vector<double>& sorted_sample, const Cdf& cdf,
                       const Cdf& quantile);

} // namespace levyclt
