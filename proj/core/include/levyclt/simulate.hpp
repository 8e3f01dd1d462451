#pragma once

#include "levyclt/rng.hpp"
#include "levyclt/scaling.hpp"
#include "levyclt/tail_table.hpp"

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <vector>

namespace levyclt {

// Operation tags entering stream keys; fixed values keep outputs stable.
enum class SimOp : std::uint64_t {
    Increment = 1,
    RandomWalk = 2,
    Circle = 3,
    SmallJump = 4,
};

struct SampleBatch {
    double t = 0.0;
    std::uint32_t n = 0;
    std::uint32_t d = 0;
    std::vector<double> values; // row-major n x d
    std::uint64_t seed = 0;
    std::uint64_t fingerprint = 0;
    bool approximate = false;

    // Per-row jump metadata (filled by the compound-Poisson samplers).
    std::vector<std::uint32_t> jump_counts;
    std::vector<double> max_jump;

    double* row(std::uint32_t i) { return values.data() + static_cast<size_t>(i) * d; }
    const double* row(std::uint32_t i) const {
        return values.data() + static_cast<size_t>(i) * d;
    }
};

std::uint64_t triplet_fingerprint(const LevyTriplet& triplet);

// Exact compound Poisson + Gaussian increment X_t (finite activity).
// Replicate blocks of kBlockRows rows each own a counter-based stream, so
// the result is independent of the thread count.
SampleBatch sample_increment(const LevyTriplet& triplet, double t, std::uint32_t n,
                             std::uint64_t seed, std::uint64_t grid_index = 0,
                             int threads = 1,
                             const RadialSampler* sampler = nullptr);

// One jump: inverse-CDF radius, uniform direction (normalised Gaussian).
Eigen::VectorXd sample_radial_jump(const RadialSampler& sampler, CounterRng& rng);

struct StepSampler {
    int dim = 1;
    std::function<void(CounterRng&, double*)> draw;
};

// Poisson embedding of a random walk: row = sum of N ~ Poisson(t) steps.
SampleBatch embed_random_walk(const StepSampler& step, double t, std::uint32_t n,
                              std::uint64_t seed, int threads = 1);

struct AsmussenRow {
    double n = 0.0;
    double estimate = 0.0; // n * mean |X_{1/n}|^p
    double ci = 0.0;       // 1.96 * SE of the estimate
    double target = 0.0;   // int |v|^p nu(dv); may be +inf
};

// Small-time moment experiment: n * E|X_{1/n}|^p against the measure's
// p-th absolute moment.
std::vector<AsmussenRow> asmussen_small_time(const LevyTriplet& triplet, int p,
                                             const std::vector<std::uint32_t>& n_list,
                                             std::uint32_t mc_size, std::uint64_t seed,
                                             int threads = 1);

// Uniform law on the circle of radius 1 + 1/n_param in the first two
// coordinates.
SampleBatch sample_circle(std::uint32_t n_param, std::uint32_t size, int d,
                          std::uint64_t seed);

// Jumps above eps kept exact; jumps below eps replaced by a Gaussian with
// the matched truncated covariance. For the finite-activity families with
// eps <= sigma_shell this equals sample_increment in law.
SampleBatch small_jump_approx(const LevyTriplet& triplet, double eps, double t,
                              std::uint32_t n, std::uint64_t seed, int threads = 1);

} // namespace levyclt
