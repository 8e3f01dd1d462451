#include "levyclt/diagnostics.hpp"
#include "levyclt/errors.hpp"
#include "levyclt/matrix.hpp"
#include "levyclt/special.hpp"

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>

namespace levyclt {
namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void validate_grid(const std::vector<double>& grid) {
    if (grid.empty())
        throw ConfigError("empty time grid");
    for (double t : grid)
        if (!(t >= 1.0))
            throw ConfigError("grid times must be >= 1");
    if (grid.size() >= 2) {
        const double ratio = grid[1] / grid[0];
        if (!(ratio > 1.0 && ratio <= 10.0))
            throw ConfigError("grid ratio must lie in (1, 10]");
        for (size_t i = 1; i + 1 < grid.size(); ++i) {
            const double r = grid[i + 1] / grid[i];
            if (std::fabs(r - ratio) > 1e-9 * ratio)
                throw ConfigError("grid is not geometric");
        }
    }
}

size_t class_index(const SweepReport& report, DistanceClass cls) {
    for (size_t i = 0; i < report.classes.size(); ++i)
        if (report.classes[i] == cls)
            return i;
    throw ConfigError("distance class not present in report");
}

std::vector<DistanceEstimate> estimate_classes(const SampleBatch& norm,
                                               const std::vector<DistanceClass>& classes,
                                               double t, std::uint64_t seed) {
    std::vector<DistanceEstimate> out;
    out.reserve(classes.size());
    const int d = static_cast<int>(norm.d);
    for (DistanceClass cls : classes) {
        DistanceEstimate e;
        switch (cls) {
        case DistanceClass::KolmogorovRays: {
            if (d >= 2) {
                const double work = std::pow(static_cast<double>(norm.n), d);
                if (work > 2e9)
                    throw DimensionTooLarge("ray enumeration too large at this mc size");
            }
            e = dk_product_gaussian(norm, Eigen::VectorXd::Ones(d));
            break;
        }
        case DistanceClass::HalfSpaces:
            e = halfspace_distance(norm, Eigen::MatrixXd::Identity(d, d),
                                   default_directions(d, seed));
            break;
        case DistanceClass::CenteredBalls:
            e = ball_class_distance(norm, [d](double r) { return chi_cdf(r, d); },
                                    Eigen::VectorXd::Zero(d));
            break;
        case DistanceClass::Wasserstein1: {
            if (d != 1)
                throw ConfigError("Wasserstein1 sweep class requires d = 1");
            std::vector<double> s(norm.values);
            std::sort(s.begin(), s.end());
            e = w1_1d(s, [](double x) { return normal_cdf(x); },
                      [](double p) { return normal_quantile(p); });
            break;
        }
        case DistanceClass::TwoSampleRays:
            throw ConfigError("TwoSampleRays is not a sweep class");
        }
        e.t = t;
        out.push_back(e);
    }
    return out;
}

} // namespace

std::string scaling_mode_name(ScalingMode m) {
    return m == ScalingMode::AdaptiveBc ? "AdaptiveBc" : "FixedSqrtSigma";
}

std::vector<double> geometric_grid(double t_min, double t_max, double ratio) {
    if (!(t_min >= 1.0) || !(t_max >= t_min) || !(ratio > 1.0 && ratio <= 10.0))
        throw ConfigError("invalid geometric grid parameters");
    std::vector<double> grid;
    // Fixed point count avoids drift: n = round(log(t_max/t_min)/log(ratio)).
    const int steps = static_cast<int>(std::lround(std::log(t_max / t_min) / std::log(ratio)));
    for (int i = 0; i <= steps; ++i)
        grid.push_back(t_min * std::pow(ratio, i));
    return grid;
}

std::vector<SweepReport> sweep_multi(const LevyTriplet& triplet,
                                     const std::vector<ScalingMode>& modes,
                                     const std::vector<double>& t_grid,
                                     std::uint32_t mc_size,
                                     const std::vector<DistanceClass>& classes,
                                     double kappa, std::uint64_t seed, int threads) {
    validate_grid(t_grid);
    if (modes.empty())
        throw ConfigError("no scaling modes requested");
    if (classes.empty())
        throw ConfigError("no distance classes requested");
    if (mc_size < 1000)
        throw ConfigError("mc_size must be >= 1000");
    if (!(kappa >= 1.0))
        throw ConfigError("kappa must be >= 1");
    const int d = triplet.dim();

    Eigen::MatrixXd fixed_delta;
    for (ScalingMode m : modes) {
        if (m == ScalingMode::FixedSqrtSigma) {
            if (moment_class(triplet.measure) == MomentClass::InfiniteVariance)
                throw IndeterminateMoment("FixedSqrtSigma needs a finite second moment");
            const double m2 = total_moment(triplet.measure, 2);
            fixed_delta = psd_sqrt(triplet.gaussian_cov +
                                   (m2 / d) * Eigen::MatrixXd::Identity(d, d));
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(fixed_delta,
                                                              Eigen::EigenvaluesOnly);
            if (es.eigenvalues().minCoeff() <= 1e-12)
                throw DegenerateScaling("sigma^2 is rank deficient");
        }
    }

    std::optional<RadialSampler> sampler;
    if (triplet.measure.family != MeasureFamily::Zero)
        sampler.emplace(triplet.measure);

    std::vector<SweepReport> reports(modes.size());
    for (size_t mi = 0; mi < modes.size(); ++mi) {
        reports[mi].fingerprint = triplet_fingerprint(triplet);
        reports[mi].mode = modes[mi];
        reports[mi].kappa = kappa;
        reports[mi].seed = seed;
        reports[mi].classes = classes;
        reports[mi].grid = t_grid;
    }

    for (size_t gi = 0; gi < t_grid.size(); ++gi) {
        const double t = t_grid[gi];
        const SampleBatch batch = sample_increment(triplet, t, mc_size, seed, gi,
                                                   threads, sampler ? &*sampler : nullptr);
        for (size_t mi = 0; mi < modes.size(); ++mi) {
            Eigen::VectorXd A;
            Eigen::MatrixXd Binv;
            if (modes[mi] == ScalingMode::AdaptiveBc) {
                const ScalingPair sp = scaling_pair(triplet, t, kappa);
                A = sp.A;
                Binv = sp.B.inverse();
            } else {
                A = Eigen::VectorXd::Zero(d);
                Binv = (std::sqrt(t) * fixed_delta).inverse();
            }
            SampleBatch norm = batch;
            if (d == 1) {
                const double binv = Binv(0, 0), a0 = A[0];
                for (double& v : norm.values)
                    v = binv * (v - a0);
            } else {
                Eigen::VectorXd x(d), z(d);
                for (std::uint32_t i = 0; i < norm.n; ++i) {
                    double* r = norm.row(i);
                    for (int j = 0; j < d; ++j)
                        x[j] = r[j] - A[j];
                    z = Binv * x;
                    for (int j = 0; j < d; ++j)
                        r[j] = z[j];
                }
            }
            SweepRow row;
            row.t = t;
            row.seed = seed;
            row.mc_size = mc_size;
            row.estimates = estimate_classes(norm, classes, t, seed);
            reports[mi].rows.push_back(std::move(row));
        }
    }
    return reports;
}

SweepReport sweep(const LevyTriplet& triplet, ScalingMode mode,
                  const std::vector<double>& t_grid, std::uint32_t mc_size,
                  const std::vector<DistanceClass>& classes, double kappa,
                  std::uint64_t seed, int threads) {
    return sweep_multi(triplet, {mode}, t_grid, mc_size, classes, kappa, seed,
                       threads)[0];
}

PartialIntegralSeries partial_integral(const SweepReport& report, DistanceClass cls) {
    if (report.rows.empty())
        throw ConfigError("empty report");
    const size_t ci = class_index(report, cls);
    const size_t n = report.rows.size();
    PartialIntegralSeries out;
    out.T.resize(n);
    out.I.resize(n);
    std::vector<double> s(n), v(n);
    for (size_t i = 0; i < n; ++i) {
        out.T[i] = report.rows[i].t;
        s[i] = std::log(report.rows[i].t);
        v[i] = report.rows[i].estimates[ci].value;
    }
    out.I[0] = 0.0;
    for (size_t i = 1; i < n; ++i)
        out.I[i] = out.I[i - 1] + 0.5 * (v[i] + v[i - 1]) * (s[i] - s[i - 1]);
    const double ln10 = std::log(10.0);
    auto nearest = [&s](double target) {
        size_t best = 0;
        for (size_t i = 1; i < s.size(); ++i)
            if (std::fabs(s[i] - target) < std::fabs(s[best] - target))
                best = i;
        return best;
    };
    if (s.back() - s.front() <= ln10) {
        out.first_decade_increment = out.last_decade_increment = out.I.back();
    } else {
        out.first_decade_increment = out.I[nearest(s.front() + ln10)];
        out.last_decade_increment = out.I.back() - out.I[nearest(s.back() - ln10)];
    }
    return out;
}

PartialIntegralSeries partial_integral(const SweepReport& report) {
    if (report.classes.empty())
        throw ConfigError("report has no classes");
    return partial_integral(report, report.classes.front());
}

std::string trend_verdict_name(TrendVerdict v) {
    switch (v) {
    case TrendVerdict::Bounded:
        return "Bounded";
    case TrendVerdict::Growing:
        return "Growing";
    case TrendVerdict::Inconclusive:
        return "Inconclusive";
    }
    return "?";
}

TrendVerdict trend_verdict(const PartialIntegralSeries& series) {
    const double first = series.first_decade_increment;
    const double last = series.last_decade_increment;
    if (first <= 0.0)
        return last <= 0.0 ? TrendVerdict::Bounded : TrendVerdict::Growing;
    if (last < 0.5 * first)
        return TrendVerdict::Bounded;
    if (last >= 0.8 * first)
        return TrendVerdict::Growing;
    return TrendVerdict::Inconclusive;
}

RateFit rate_fit(const SweepReport& report, RateModel model, DistanceClass cls) {
    const size_t ci = class_index(report, cls);
    std::vector<double> lt, ly;
    for (const auto& row : report.rows) {
        const DistanceEstimate& e = row.estimates[ci];
        if (e.value > 2.0 * e.ci && e.value > 0.0 && row.t > 1.0 + 1e-9) {
            lt.push_back(std::log(row.t));
            ly.push_back(std::log(e.value));
        }
    }
    if (lt.size() < 5)
        throw InsufficientSignal("fewer than 5 grid points above twice their CI");
    const size_t n = lt.size();
    RateFit fit;
    fit.model = model;
    auto rms_of = [&](const std::function<double(double)>& pred) {
        double acc = 0.0;
        for (size_t i = 0; i < n; ++i) {
            const double r = ly[i] - pred(lt[i]);
            acc += r * r;
        }
        return std::sqrt(acc / n);
    };
    switch (model) {
    case RateModel::Constant: {
        double mean = 0.0;
        for (double y : ly)
            mean += y;
        mean /= n;
        fit.a = std::exp(mean);
        fit.rms = rms_of([mean](double) { return mean; });
        break;
    }
    case RateModel::LogDecay: {
        // log d = log a - log log t
        double mean = 0.0;
        for (size_t i = 0; i < n; ++i)
            mean += ly[i] + std::log(lt[i]);
        mean /= n;
        fit.a = std::exp(mean);
        fit.rms = rms_of([mean](double s) { return mean - std::log(s); });
        break;
    }
    case RateModel::PowerLaw: {
        // log d = log a - p log t
        double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
        for (size_t i = 0; i < n; ++i) {
            sx += lt[i];
            sy += ly[i];
            sxx += lt[i] * lt[i];
            sxy += lt[i] * ly[i];
        }
        const double det = n * sxx - sx * sx;
        if (det == 0.0)
            throw InsufficientSignal("degenerate grid for power-law fit");
        const double slope = (n * sxy - sx * sy) / det;
        const double intercept = (sy - slope * sx) / n;
        fit.p = -slope;
        fit.a = std::exp(intercept);
        fit.rms = rms_of([slope, intercept](double s) { return intercept + slope * s; });
        break;
    }
    }
    return fit;
}

RateFit rate_fit(const SweepReport& report, RateModel model) {
    if (report.classes.empty())
        throw ConfigError("report has no classes");
    return rate_fit(report, model, report.classes.front());
}

std::vector<CfCheckRow> cf_clt_check(const LevyTriplet& triplet,
                                     const std::vector<double>& x_list,
                                     const std::vector<double>& t_list, double kappa) {
    if (triplet.dim() != 1)
        throw ConfigError("cf_clt_check requires d = 1");
    if (moment_class(triplet.measure) == MomentClass::InfiniteVariance)
        throw IndeterminateMoment("cf_clt_check requires finite variance");
    std::vector<CfCheckRow> rows;
    for (double t : t_list) {
        const ScalingPair sp = scaling_pair(triplet, t, kappa);
        const double bc = sp.B(0, 0);
        for (double x : x_list) {
            if (x == 0.0)
                throw ConfigError("x = 0 is excluded (0/0 ratio)");
            CfCheckRow row;
            row.t = t;
            row.x = x;
            row.t_mu = t * char_exponent_1d(triplet, x / bc);
            row.half_x2 = 0.5 * x * x;
            row.ratio = row.t_mu / row.half_x2;
            rows.push_back(row);
        }
    }
    return rows;
}

TruncationProb truncation_event_prob(const LevyTriplet& triplet, double t,
                                     double kappa) {
    if (!(t >= 1.0))
        throw ConfigError("truncation_event_prob requires t >= 1");
    const double bound = t * tail_mass(triplet.measure, kappa * std::sqrt(t));
    return {1.0 - std::exp(-bound), bound};
}

ExtractionResult extract_vanishing_sequence(const std::vector<double>& t_grid,
                                            const std::vector<double>& g_values,
                                            const Schedule& delta,
                                            const Schedule& upsilon) {
    if (t_grid.size() != g_values.size() || t_grid.size() < 2)
        throw ConfigError("tabulation needs matching t/g arrays of length >= 2");
    const size_t n = t_grid.size();
    std::vector<double> u(n), h(n);
    for (size_t i = 0; i < n; ++i) {
        if (!(t_grid[i] >= 1.0) || (i > 0 && !(t_grid[i] > t_grid[i - 1])))
            throw ConfigError("t grid must be increasing and >= 1");
        if (!std::isfinite(g_values[i]))
            throw ConfigError("tabulated g must be finite");
        u[i] = std::log(t_grid[i]);
        h[i] = std::fabs(g_values[i]);
    }
    const Schedule dl = delta ? delta : Schedule([](int k) { return 1.0 / std::sqrt(k); });
    const Schedule up = upsilon ? upsilon : Schedule([](int k) { return 1.0 / std::sqrt(k); });

    // Suffix trapezoid integrals of h in u.
    std::vector<double> suffix(n, 0.0);
    for (size_t i = n - 1; i-- > 0;)
        suffix[i] = suffix[i + 1] + 0.5 * (h[i] + h[i + 1]) * (u[i + 1] - u[i]);

    // S(eps_m) as a grid index; eps_m decreasing => indices non-decreasing.
    auto s_index = [&](int m) -> size_t {
        const double eps = dl(m) * up(m);
        size_t lo = 0, hi = n - 1;
        while (lo < hi) {
            const size_t mid = (lo + hi) / 2;
            if (suffix[mid] <= eps)
                hi = mid;
            else
                lo = mid + 1;
        }
        return lo;
    };

    ExtractionResult out;
    // First point: earliest index at or past S(eps_1) that already clears
    // the threshold; the emitted sequence then satisfies h <= upsilon_{m}
    // at every entry, not only from the second one on.
    size_t cur = s_index(1);
    while (cur < n && !(h[cur] < up(1)))
        ++cur;
    if (cur >= n)
        throw SelectionFailure("no admissible starting point past the suffix threshold");
    out.t.push_back(t_grid[cur]);
    out.g.push_back(g_values[cur]);
    out.m.push_back(1);
    int step = 1;  // n in the construction
    int m_cur = 1; // m(n), non-decreasing
    const double tol = 1e-12 * std::max(1.0, std::fabs(u.back()));
    while (true) {
        while (m_cur + 1 <= step && u[s_index(m_cur + 1)] <= u[cur] + tol)
            ++m_cur;
        const double dm = dl(m_cur);
        const double vm = up(m_cur);
        const double lo = u[cur] + dm;
        const double hi = u[cur] + 2.0 * dm;
        if (lo > u.back() + tol)
            break; // horizon consumed
        const size_t first =
            std::lower_bound(u.begin(), u.end(), lo - tol) - u.begin();
        const size_t last =
            std::upper_bound(u.begin(), u.end(), hi + tol) - u.begin();
        if (first >= last)
            throw SelectionFailure("no grid point in the selection window (grid too coarse)");
        size_t best = first;
        for (size_t j = first + 1; j < last; ++j)
            if (h[j] < h[best])
                best = j;
        if (!(h[best] < vm))
            throw SelectionFailure("no admissible point below the threshold in the window");
        cur = best;
        out.t.push_back(t_grid[cur]);
        out.g.push_back(g_values[cur]);
        out.m.push_back(m_cur);
        ++step;
    }
    if (out.t.size() < 2)
        throw HorizonExhausted("grid ends before the first selection window");
    return out;
}

std::vector<RegimeRow> regime_report(const std::vector<double>& beta_list, int d,
                                     const std::vector<double>& t_grid,
                                     std::uint32_t mc_size, std::uint64_t seed,
                                     int threads) {
    std::vector<RegimeRow> rows;
    for (double beta : beta_list) {
        const auto measure = RadialLevyMeasure::power_log(std::exp(1.0), beta, d);
        const auto triplet =
            LevyTriplet::isotropic(measure, Eigen::MatrixXd::Zero(d, d));
        const double kappa = choose_kappa(triplet);
        const MomentClass mc = moment_class(measure);
        std::vector<ScalingMode> modes{ScalingMode::AdaptiveBc};
        if (mc != MomentClass::InfiniteVariance)
            modes.push_back(ScalingMode::FixedSqrtSigma);
        const auto reports = sweep_multi(triplet, modes, t_grid, mc_size,
                                         {DistanceClass::KolmogorovRays}, kappa, seed,
                                         threads);
        for (size_t mi = 0; mi < modes.size(); ++mi) {
            RegimeRow row;
            row.beta = beta;
            row.mclass = mc;
            row.mode = modes[mi];
            row.verdict = trend_verdict(partial_integral(reports[mi]));
            try {
                row.fit = rate_fit(reports[mi], RateModel::LogDecay);
                row.fit_ok = true;
            } catch (const InsufficientSignal&) {
                row.fit_ok = false;
            }
            rows.push_back(row);
        }
        if (mc == MomentClass::InfiniteVariance) {
            RegimeRow row;
            row.beta = beta;
            row.mclass = mc;
            row.mode = ScalingMode::FixedSqrtSigma;
            row.applicable = false;
            rows.push_back(row);
        }
    }
    return rows;
}

std::string sweep_report_json(const SweepReport& report) {
    char buf[64];
    std::string out = "{\n";
    std::snprintf(buf, sizeof(buf), "%016" PRIx64, report.fingerprint);
    out += "  \"fingerprint\": \"" + std::string(buf) + "\",\n";
    out += "  \"mode\": \"" + scaling_mode_name(report.mode) + "\",\n";
    out += "  \"kappa\": " + fmt(report.kappa) + ",\n";
    std::snprintf(buf, sizeof(buf), "%" PRIu64, report.seed);
    out += "  \"seed\": " + std::string(buf) + ",\n";
    out += "  \"classes\": [";
    for (size_t i = 0; i < report.classes.size(); ++i)
        out += (i ? ", \"" : "\"") + distance_class_name(report.classes[i]) + "\"";
    out += "],\n  \"grid\": [";
    for (size_t i = 0; i < report.grid.size(); ++i)
        out += (i ? ", " : "") + fmt(report.grid[i]);
    out += "],\n  \"rows\": [\n";
    for (size_t i = 0; i < report.rows.size(); ++i) {
        const SweepRow& row = report.rows[i];
        out += "    {\"t\": " + fmt(row.t) + ", \"mc\": " + std::to_string(row.mc_size) +
               ", \"estimates\": [";
        for (size_t j = 0; j < row.estimates.size(); ++j)
            out += (j ? ", " : "") + to_jsonl(row.estimates[j]);
        out += "]}";
        out += i + 1 < report.rows.size() ? ",\n" : "\n";
    }
    out += "  ],\n";
    const PartialIntegralSeries pi = partial_integral(report);
    out += "  \"partial_integral\": {\"T\": [";
    for (size_t i = 0; i < pi.T.size(); ++i)
        out += (i ? ", " : "") + fmt(pi.T[i]);
    out += "], \"I\": [";
    for (size_t i = 0; i < pi.I.size(); ++i)
        out += (i ? ", " : "") + fmt(pi.I[i]);
    out += "], \"first_decade_increment\": " + fmt(pi.first_decade_increment) +
           ", \"last_decade_increment\": " + fmt(pi.last_decade_increment) + "}\n";
    out += "}\n";
    return out;
}

std::string sweep_report_csv(const SweepReport& report) {
    std::string out = "t,mc,seed";
    for (DistanceClass c : report.classes) {
        out += "," + distance_class_name(c) + "_value";
        out += "," + distance_class_name(c) + "_ci";
    }
    out += "\n";
    char buf[64];
    for (const SweepRow& row : report.rows) {
        out += fmt(row.t) + "," + std::to_string(row.mc_size);
        std::snprintf(buf, sizeof(buf), ",%" PRIu64, row.seed);
        out += buf;
        for (const DistanceEstimate& e : row.estimates)
            out += "," + fmt(e.value) + "," + fmt(e.ci);
        out += "\n";
    }
    return out;
}

} // namespace levyclt
