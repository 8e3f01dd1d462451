#include "levyclt/simulate.hpp"
#include "levyclt/errors.hpp"
#include "levyclt/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <optional>
#include <random>
#include <thread>

namespace levyclt {
namespace {

std::uint64_t mix_double(std::uint64_t h, double v) {
    std::uint64_t bits;
    static_assert(sizeof(bits) == sizeof(v));
    std::memcpy(&bits, &v, sizeof(bits));
    return mix64(h ^ (bits + 0x9E3779B97F4A7C15ULL * (h >> 32 | 1)));
}

void run_blocks(std::uint32_t n, int threads,
                const std::function<void(std::uint32_t block, std::uint32_t row_begin,
                                         std::uint32_t row_end)>& work) {
    const std::uint32_t blocks = (n + kBlockRows - 1) / kBlockRows;
    if (threads <= 1 || blocks <= 1) {
        for (std::uint32_t b = 0; b < blocks; ++b)
            work(b, b * kBlockRows, std::min(n, (b + 1) * kBlockRows));
        return;
    }
    std::vector<std::thread> pool;
    const int nt = std::min<std::uint32_t>(threads, blocks);
    pool.reserve(nt);
    for (int ti = 0; ti < nt; ++ti) {
        pool.emplace_back([&, ti]() {
            for (std::uint32_t b = ti; b < blocks; b += nt)
                work(b, b * kBlockRows, std::min(n, (b + 1) * kBlockRows));
        });
    }
    for (auto& th : pool)
        th.join();
}

} // namespace

std::uint64_t triplet_fingerprint(const LevyTriplet& triplet) {
    std::uint64_t h = 0x243F6A8885A308D3ULL;
    h = mix64(h ^ static_cast<std::uint64_t>(triplet.measure.family));
    h = mix64(h ^ static_cast<std::uint64_t>(triplet.measure.dim));
    h = mix_double(h, triplet.measure.sigma_shell);
    h = mix_double(h, triplet.measure.beta);
    h = mix_double(h, triplet.measure.outer_radius);
    for (int i = 0; i < triplet.gaussian_cov.rows(); ++i)
        for (int j = 0; j < triplet.gaussian_cov.cols(); ++j)
            h = mix_double(h, triplet.gaussian_cov(i, j));
    for (int i = 0; i < triplet.drift.size(); ++i)
        h = mix_double(h, triplet.drift[i]);
    return h;
}

Eigen::VectorXd sample_radial_jump(const RadialSampler& sampler, CounterRng& rng) {
    const int d = sampler.measure().dim;
    const double r = sampler.draw_radius(rng);
    Eigen::VectorXd v(d);
    if (d == 1) {
        v[0] = (rng() >> 63) ? r : -r;
        return v;
    }
    std::normal_distribution<double> norm;
    double nrm2 = 0.0;
    do {
        nrm2 = 0.0;
        for (int j = 0; j < d; ++j) {
            v[j] = norm(rng);
            nrm2 += v[j] * v[j];
        }
    } while (nrm2 == 0.0);
    v *= r / std::sqrt(nrm2);
    return v;
}

namespace {

SampleBatch compound_poisson_batch(const LevyTriplet& triplet, double t,
                                   std::uint32_t n, std::uint64_t seed,
                                   std::uint64_t grid_index, int threads,
                                   const RadialSampler* sampler, SimOp op,
                                   bool approximate) {
    const int d = triplet.dim();
    SampleBatch batch;
    batch.t = t;
    batch.n = n;
    batch.d = static_cast<std::uint32_t>(d);
    batch.seed = seed;
    batch.fingerprint = triplet_fingerprint(triplet);
    batch.approximate = approximate;
    batch.values.assign(static_cast<size_t>(n) * d, 0.0);
    batch.jump_counts.assign(n, 0);
    batch.max_jump.assign(n, 0.0);

    const bool has_jumps = triplet.measure.family != MeasureFamily::Zero;
    std::optional<RadialSampler> local_sampler;
    if (has_jumps && sampler == nullptr)
        local_sampler.emplace(triplet.measure);
    const RadialSampler* rs = has_jumps ? (sampler ? sampler : &*local_sampler) : nullptr;
    const double lambda = has_jumps ? t * rs->total_mass() : 0.0;

    const bool has_gauss = triplet.gaussian_cov.cwiseAbs().maxCoeff() > 0.0;
    Eigen::MatrixXd gauss_factor;
    if (has_gauss)
        gauss_factor = std::sqrt(t) * psd_sqrt(triplet.gaussian_cov);
    const Eigen::VectorXd drift_term = t * triplet.drift;
    const bool has_drift = drift_term.cwiseAbs().maxCoeff() > 0.0;

    run_blocks(n, threads, [&](std::uint32_t block, std::uint32_t lo, std::uint32_t hi) {
        CounterRng rng(stream_key(seed, static_cast<std::uint64_t>(op), grid_index, block));
        std::poisson_distribution<std::uint32_t> pois(lambda);
        std::normal_distribution<double> norm;
        Eigen::VectorXd z(d);
        for (std::uint32_t i = lo; i < hi; ++i) {
            double* out = batch.row(i);
            double maxj = 0.0;
            std::uint32_t count = 0;
            if (has_jumps && lambda > 0.0) {
                count = pois(rng);
                if (d == 1) {
                    double acc = 0.0;
                    for (std::uint32_t k = 0; k < count; ++k) {
                        const double r = rs->draw_radius(rng);
                        acc += (rng() >> 63) ? r : -r;
                        if (r > maxj)
                            maxj = r;
                    }
                    out[0] = acc;
                } else {
                    for (std::uint32_t k = 0; k < count; ++k) {
                        const double r = rs->draw_radius(rng);
                        double nrm2 = 0.0;
                        do {
                            nrm2 = 0.0;
                            for (int j = 0; j < d; ++j) {
                                z[j] = norm(rng);
                                nrm2 += z[j] * z[j];
                            }
                        } while (nrm2 == 0.0);
                        const double s = r / std::sqrt(nrm2);
                        for (int j = 0; j < d; ++j)
                            out[j] += s * z[j];
                        if (r > maxj)
                            maxj = r;
                    }
                }
            }
            if (has_gauss) {
                for (int j = 0; j < d; ++j)
                    z[j] = norm(rng);
                for (int j = 0; j < d; ++j) {
                    double acc = 0.0;
                    for (int k = 0; k < d; ++k)
                        acc += gauss_factor(j, k) * z[k];
                    out[j] += acc;
                }
            }
            if (has_drift)
                for (int j = 0; j < d; ++j)
                    out[j] += drift_term[j];
            batch.jump_counts[i] = count;
            batch.max_jump[i] = maxj;
        }
    });
    return batch;
}

} // namespace

SampleBatch sample_increment(const LevyTriplet& triplet, double t, std::uint32_t n,
                             std::uint64_t seed, std::uint64_t grid_index,
                             int threads, const RadialSampler* sampler) {
    if (!(t > 0.0))
        throw ConfigError("sample_increment requires t > 0");
    if (triplet.measure.family != MeasureFamily::Zero &&
        !std::isfinite(tail_mass(triplet.measure, 0.0)))
        throw InfiniteActivity("measure has infinite activity; use small_jump_approx");
    return compound_poisson_batch(triplet, t, n, seed, grid_index, threads, sampler,
                                  SimOp::Increment, false);
}

SampleBatch embed_random_walk(const StepSampler& step, double t, std::uint32_t n,
                              std::uint64_t seed, int threads) {
    if (!(t > 0.0))
        throw ConfigError("embed_random_walk requires t > 0");
    if (step.dim < 1 || !step.draw)
        throw ConfigError("invalid step sampler");
    const int d = step.dim;
    SampleBatch batch;
    batch.t = t;
    batch.n = n;
    batch.d = static_cast<std::uint32_t>(d);
    batch.seed = seed;
    batch.values.assign(static_cast<size_t>(n) * d, 0.0);
    batch.jump_counts.assign(n, 0);
    batch.max_jump.assign(n, 0.0);
    run_blocks(n, threads, [&](std::uint32_t block, std::uint32_t lo, std::uint32_t hi) {
        CounterRng rng(stream_key(seed, static_cast<std::uint64_t>(SimOp::RandomWalk), 0, block));
        std::poisson_distribution<std::uint32_t> pois(t);
        std::vector<double> xi(d);
        for (std::uint32_t i = lo; i < hi; ++i) {
            const std::uint32_t count = pois(rng);
            double* out = batch.row(i);
            double maxstep = 0.0;
            for (std::uint32_t k = 0; k < count; ++k) {
                step.draw(rng, xi.data());
                double nrm2 = 0.0;
                for (int j = 0; j < d; ++j) {
                    out[j] += xi[j];
                    nrm2 += xi[j] * xi[j];
                }
                maxstep = std::max(maxstep, std::sqrt(nrm2));
            }
            batch.jump_counts[i] = count;
            batch.max_jump[i] = maxstep;
        }
    });
    return batch;
}

std::vector<AsmussenRow> asmussen_small_time(const LevyTriplet& triplet, int p,
                                             const std::vector<std::uint32_t>& n_list,
                                             std::uint32_t mc_size, std::uint64_t seed,
                                             int threads) {
    if (p < 1 || p > 3)
        throw ConfigError("asmussen_small_time supports p in {1,2,3}");
    if (n_list.empty())
        throw ConfigError("empty divisor list");
    const double target = total_moment(triplet.measure, p);
    const bool has_jumps = triplet.measure.family != MeasureFamily::Zero;
    std::vector<AsmussenRow> rows;
    rows.reserve(n_list.size());
    std::optional<RadialSampler> sampler_storage;
    if (has_jumps)
        sampler_storage.emplace(triplet.measure);
    const RadialSampler* rs = has_jumps ? &*sampler_storage : nullptr;
    for (size_t idx = 0; idx < n_list.size(); ++idx) {
        const double n = n_list[idx];
        SampleBatch batch = sample_increment(triplet, 1.0 / n, mc_size, seed, idx,
                                             threads, rs);
        double sum = 0.0, sumsq = 0.0;
        for (std::uint32_t i = 0; i < batch.n; ++i) {
            double nrm2 = 0.0;
            const double* r = batch.row(i);
            for (std::uint32_t j = 0; j < batch.d; ++j)
                nrm2 += r[j] * r[j];
            const double g = std::pow(nrm2, 0.5 * p);
            sum += g;
            sumsq += g * g;
        }
        const double mean = sum / mc_size;
        const double var = std::max(0.0, sumsq / mc_size - mean * mean);
        AsmussenRow row;
        row.n = n;
        row.estimate = n * mean;
        row.ci = n * 1.96 * std::sqrt(var / mc_size);
        row.target = target;
        rows.push_back(row);
    }
    return rows;
}

SampleBatch sample_circle(std::uint32_t n_param, std::uint32_t size, int d,
                          std::uint64_t seed) {
    if (d < 2)
        throw ConfigError("sample_circle requires d >= 2");
    if (n_param < 1)
        throw ConfigError("sample_circle requires n_param >= 1");
    SampleBatch batch;
    batch.t = 0.0;
    batch.n = size;
    batch.d = static_cast<std::uint32_t>(d);
    batch.seed = seed;
    batch.values.assign(static_cast<size_t>(size) * d, 0.0);
    const double radius = 1.0 + 1.0 / n_param;
    run_blocks(size, 1, [&](std::uint32_t block, std::uint32_t lo, std::uint32_t hi) {
        CounterRng rng(stream_key(seed, static_cast<std::uint64_t>(SimOp::Circle), n_param, block));
        for (std::uint32_t i = lo; i < hi; ++i) {
            const double theta = 2.0 * M_PI * rng.uniform();
            double* out = batch.row(i);
            out[0] = radius * std::cos(theta);
            out[1] = radius * std::sin(theta);
        }
    });
    return batch;
}

SampleBatch small_jump_approx(const LevyTriplet& triplet, double eps, double t,
                              std::uint32_t n, std::uint64_t seed, int threads) {
    if (!(eps > 0.0))
        throw InvalidCutoff("small_jump_approx requires eps > 0");
    if (!(t > 0.0))
        throw ConfigError("small_jump_approx requires t > 0");
    const int d = triplet.dim();
    // Covariance of the removed small jumps; zero when eps is below the shell.
    const double m2_below = truncated_moment(triplet.measure, 2, eps);
    LevyTriplet effective = triplet;
    effective.gaussian_cov =
        triplet.gaussian_cov + (m2_below / d) * Eigen::MatrixXd::Identity(d, d);
    if (triplet.measure.family != MeasureFamily::Zero &&
        eps > triplet.measure.sigma_shell) {
        if (triplet.measure.family == MeasureFamily::BoundedShell &&
            eps >= triplet.measure.outer_radius) {
            effective.measure = RadialLevyMeasure::zero(d);
        } else {
            effective.measure.sigma_shell = eps;
        }
    }
    return compound_poisson_batch(effective, t, n, seed, 0, threads, nullptr,
                                  SimOp::SmallJump, true);
}

} // namespace levyclt
