#pragma once

#include "levyclt/distances.hpp"
#include "levyclt/scaling.hpp"
#include "levyclt/simulate.hpp"

#include <functional>
#include <string>
#include <vector>

namespace levyclt {

enum class ScalingMode { AdaptiveBc, FixedSqrtSigma };

std::string scaling_mode_name(ScalingMode m);

struct SweepRow {
    double t = 0.0;
    std::vector<DistanceEstimate> estimates; // one per requested class
    std::uint64_t seed = 0;
    std::uint32_t mc_size = 0;
};

struct SweepReport {
    std::uint64_t fingerprint = 0;
    ScalingMode mode = ScalingMode::AdaptiveBc;
    double kappa = 1.0;
    std::uint64_t seed = 0;
    std::vector<DistanceClass> classes;
    std::vector<double> grid;
    std::vector<SweepRow> rows;
};

// Simulate, normalise by the mode's (A, B), estimate distances against the
// standard Gaussian. Grid must be geometric with ratio in (1, 10];
// mc_size >= 1000. Deterministic given the seed (thread count never enters
// the stream layout).
SweepReport sweep(const LevyTriplet& triplet, ScalingMode mode,
                  const std::vector<double>& t_grid, std::uint32_t mc_size,
                  const std::vector<DistanceClass>& classes, double kappa,
                  std::uint64_t seed, int threads = 1);

// Same, sharing each grid point's raw batch across several modes.
std::vector<SweepReport> sweep_multi(const LevyTriplet& triplet,
                                     const std::vector<ScalingMode>& modes,
                                     const std::vector<double>& t_grid,
                                     std::uint32_t mc_size,
                                     const std::vector<DistanceClass>& classes,
                                     double kappa, std::uint64_t seed,
                                     int threads = 1);

std::vector<double> geometric_grid(double t_min, double t_max, double ratio);

struct PartialIntegralSeries {
    std::vector<double> T;
    std::vector<double> I; // trapezoid of d(t) in log t, cumulative
    double first_decade_increment = 0.0;
    double last_decade_increment = 0.0;
};

PartialIntegralSeries partial_integral(const SweepReport& report,
                                       DistanceClass cls);
PartialIntegralSeries partial_integral(const SweepReport& report);

enum class TrendVerdict { Bounded, Growing, Inconclusive };

std::string trend_verdict_name(TrendVerdict v);

// Last-decade increment < 1/2 first-decade -> Bounded; >= 0.8 -> Growing.
TrendVerdict trend_verdict(const PartialIntegralSeries& series);

enum class RateModel { PowerLaw, LogDecay, Constant };

struct RateFit {
    RateModel model = RateModel::Constant;
    double a = 0.0; // amplitude
    double p = 0.0; // PowerLaw exponent
    double rms = 0.0;
};

// Least squares of log d-hat against the model's log-prediction, using the
// grid points whose estimate exceeds twice its CI (needs >= 5 of them).
RateFit rate_fit(const SweepReport& report, RateModel model, DistanceClass cls);
RateFit rate_fit(const SweepReport& report, RateModel model);

struct CfCheckRow {
    double t = 0.0;
    double x = 0.0;
    double t_mu = 0.0;    // t * mu(x / B_c(t))
    double half_x2 = 0.0; // x^2 / 2
    double ratio = 0.0;
};

// Quadrature-only characteristic-exponent CLT check (no Monte Carlo).
std::vector<CfCheckRow> cf_clt_check(const LevyTriplet& triplet,
                                     const std::vector<double>& x_list,
                                     const std::vector<double>& t_list,
                                     double kappa);

struct TruncationProb {
    double formula = 0.0; // 1 - exp(-t nu_bar(kappa sqrt(t)))
    double bound = 0.0;   // t nu_bar(kappa sqrt(t))
};

TruncationProb truncation_event_prob(const LevyTriplet& triplet, double t,
                                     double kappa);

using Schedule = std::function<double(int)>; // 1-based index, decreasing to 0

struct ExtractionResult {
    std::vector<double> t;  // selected times, increasing
    std::vector<double> g;  // tabulated values at those times
    std::vector<int> m;     // m(n) used to select entry n (m[0] = 1)
};

// Constructive selection of t_n with t_{n+1}/t_n -> 1 and g(t_n) -> 0 from
// a tabulation of g on a grid of [1, T]. Suffix-integral thresholds S(eps)
// are scanned on the grid; candidates must satisfy h < upsilon_{m(n)}
// strictly. SelectionFailure when a window inside the grid has no
// admissible point; normal return once the next window passes the horizon.
ExtractionResult extract_vanishing_sequence(const std::vector<double>& t_grid,
                                            const std::vector<double>& g_values,
                                            const Schedule& delta = nullptr,
                                            const Schedule& upsilon = nullptr);

struct RegimeRow {
    double beta = 0.0;
    MomentClass mclass = MomentClass::FiniteVariance;
    ScalingMode mode = ScalingMode::AdaptiveBc;
    bool applicable = true; // false: FixedSqrtSigma with infinite variance
    TrendVerdict verdict = TrendVerdict::Inconclusive;
    bool fit_ok = false;
    RateFit fit; // LogDecay fit when fit_ok
};

std::vector<RegimeRow> regime_report(const std::vector<double>& beta_list, int d,
                                     const std::vector<double>& t_grid,
                                     std::uint32_t mc_size, std::uint64_t seed,
                                     int threads = 1);

// Deterministic serialisations (17 significant digits, fixed key order).
std::string sweep_report_json(const SweepReport& report);
std::string sweep_report_csv(const SweepReport& report);

} // namespace levyclt
