// Acceptance suite: one checkable claim per criterion, pinned tolerances.
// Each criterion prints exactly one PASS/FAIL line on stdout.

#include "levyclt/diagnostics.hpp"
#include "levyclt/distances.hpp"
#include "levyclt/errors.hpp"
#include "levyclt/matrix.hpp"
#include "levyclt/measures.hpp"
#include "levyclt/rng.hpp"
#include "levyclt/scaling.hpp"
#include "levyclt/simulate.hpp"
#include "levyclt/special.hpp"

#include <cmath>
#include <initializer_list>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace levyclt;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

void note(Outcome& out, bool ok, const std::string& what) {
    if (!ok) {
        out.pass = false;
        if (!out.detail.empty())
            out.detail += "; ";
        out.detail += what;
    }
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

LevyTriplet power_log_triplet(double beta, int d) {
    return LevyTriplet::isotropic(RadialLevyMeasure::power_log(std::exp(1.0), beta, d),
                                  Eigen::MatrixXd::Zero(d, d));
}

// Independent sphere-area oracle: Simpson on sin^{d-2} over [0, pi],
// chained from the two-point 0-sphere.
double sphere_area_oracle(int d) {
    double area = 2.0; // d = 1
    for (int k = 2; k <= d; ++k) {
        const int n = 200000;
        const double h = M_PI / n;
        double acc = 0.0; // sin^{k-2}(0) = sin^{k-2}(pi) = 0 for k > 2
        if (k == 2)
            acc = 2.0; // sin^0 endpoints
        for (int i = 1; i < n; ++i)
            acc += std::pow(std::sin(i * h), k - 2) * (i % 2 ? 4.0 : 2.0);
        area *= acc * h / 3.0;
    }
    return area;
}

// ---- 1: truncated covariance against the closed form --------------------

Outcome criterion1() {
    Outcome out;
    const double kappa = std::exp(1.0);
    for (int d : {1, 2, 3}) {
        const auto triplet = power_log_triplet(2.0, d);
        const double cd = sphere_area_oracle(d);
        for (double t : {10.0, 1e3, 1e6}) {
            const auto cov = truncated_cov(triplet, t, kappa);
            const double truth =
                (cd / d) * (1.0 - 1.0 / std::log(kappa * std::sqrt(t)));
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) {
                    const double want = (i == j) ? truth : 0.0;
                    const double err = std::fabs(cov(i, j) - want) / truth;
                    note(out, err <= 1e-6,
                         "d=" + std::to_string(d) + " t=" + fmt(t) + " entry(" +
                             std::to_string(i) + "," + std::to_string(j) +
                             ") rel err " + fmt(err));
                }
        }
    }
    return out;
}

// ---- 2: small-time third-moment limit ------------------------------------

Outcome criterion2() {
    Outcome out;
    const auto triplet = power_log_triplet(3.0, 2);
    const double target = total_moment(triplet.measure, 3);
    const std::vector<std::uint32_t> n_list{64, 256, 1024, 4096};
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
        const auto rows = asmussen_small_time(triplet, 3, n_list, 1000000, seed);
        std::vector<double> errs;
        for (const auto& r : rows) {
            const double ratio = std::isfinite(target) ? r.estimate / target : 0.0;
            errs.push_back(std::fabs(ratio - 1.0));
        }
        note(out, errs.back() <= 0.05,
             "seed " + std::to_string(seed) + ": |ratio-1| at n=4096 is " +
                 fmt(errs.back()) + " (target moment = " + fmt(target) + ")");
        int inversions = 0;
        for (size_t i = 1; i < errs.size(); ++i)
            inversions += (errs[i] > errs[i - 1] + 1e-12);
        note(out, inversions <= 1,
             "seed " + std::to_string(seed) + ": " + std::to_string(inversions) +
                 " error inversions");
    }
    return out;
}

// ---- 3: characteristic-function CLT by quadrature ------------------------

Outcome criterion3() {
    Outcome out;
    const auto triplet = power_log_triplet(2.0, 1);
    const double kappa = choose_kappa(triplet);
    const auto rows = cf_clt_check(triplet, {0.5, 1.0, 2.0}, {1e4, 1e6, 1e8}, kappa);
    for (double x : {0.5, 1.0, 2.0}) {
        double prev = 1e300;
        for (const auto& r : rows) {
            if (r.x != x)
                continue;
            const double dev = std::fabs(r.ratio - 1.0);
            note(out, dev < prev,
                 "x=" + fmt(x) + " t=" + fmt(r.t) + ": deviation " + fmt(dev) +
                     " not below " + fmt(prev));
            prev = dev;
            if (r.t == 1e8)
                note(out, dev <= 0.02,
                     "x=" + fmt(x) + " final deviation " + fmt(dev) + " > 0.02");
        }
    }
    return out;
}

// ---- 4: truncation probability vs Monte Carlo frequency -------------------

Outcome criterion4() {
    Outcome out;
    const auto triplet = power_log_triplet(2.0, 1);
    const double kappa = choose_kappa(triplet);
    const std::uint32_t n = 100000;
    for (double t : {1.0, 10.0}) {
        const auto p = truncation_event_prob(triplet, t, kappa);
        const auto batch = sample_increment(triplet, t, n, 0xACCE5ull);
        const double cutoff = kappa * std::sqrt(t);
        int count = 0;
        for (double mj : batch.max_jump)
            count += (mj > cutoff);
        const double freq = static_cast<double>(count) / n;
        const double se = std::sqrt(p.formula * (1.0 - p.formula) / n);
        note(out, std::fabs(freq - p.formula) <= 3.0 * se,
             "t=" + fmt(t) + ": |" + fmt(freq) + " - " + fmt(p.formula) + "| > 3se=" +
                 fmt(3.0 * se));
    }
    return out;
}

// ---- 5: exact ray distance vs brute force ---------------------------------

double brute_force_dk(const SampleBatch& b, const Eigen::VectorXd& scales) {
    const int d = static_cast<int>(b.d);
    std::vector<std::vector<double>> coords(d);
    for (int k = 0; k < d; ++k) {
        for (std::uint32_t i = 0; i < b.n; ++i)
            coords[k].push_back(b.row(i)[k]);
        coords[k].push_back(std::numeric_limits<double>::infinity());
    }
    double best = 0.0;
    const size_t n_idx = coords[0].size();
    std::vector<size_t> idx(d, 0);
    std::vector<int> limit(d, 0);
    size_t total = 1;
    for (int k = 0; k < d; ++k)
        total *= n_idx * 2;
    for (size_t code = 0; code < total; ++code) {
        size_t c = code;
        for (int k = 0; k < d; ++k) {
            idx[k] = c % n_idx;
            c /= n_idx;
            limit[k] = c % 2;
            c /= 2;
        }
        double gauss = 1.0;
        for (int k = 0; k < d; ++k) {
            const double v = coords[k][idx[k]];
            gauss *= std::isinf(v) ? 1.0 : normal_cdf(v / scales(k));
        }
        int count = 0;
        for (std::uint32_t i = 0; i < b.n; ++i) {
            bool in = true;
            for (int k = 0; k < d; ++k) {
                const double x = b.row(i)[k], v = coords[k][idx[k]];
                in &= limit[k] ? (x < v) : (x <= v);
            }
            count += in;
        }
        best = std::max(best, std::fabs(double(count) / b.n - gauss));
    }
    return best;
}

Outcome criterion5() {
    Outcome out;
    CounterRng rng(0x5CA1Eull);
    for (int trial = 0; trial < 1000; ++trial) {
        const int d = 1 + (trial % 2);
        const std::uint32_t n = 1 + static_cast<std::uint32_t>(rng.uniform() * 20) % 20;
        Eigen::VectorXd scales(d);
        for (int k = 0; k < d; ++k)
            scales(k) = 0.5 + 1.5 * rng.uniform();
        SampleBatch b;
        b.d = d;
        b.n = n;
        for (std::uint32_t i = 0; i < n * d; ++i)
            b.values.push_back(3.0 * (2.0 * rng.uniform() - 1.0));
        const auto est = dk_product_gaussian(b, scales);
        const double oracle = brute_force_dk(b, scales);
        if (std::fabs(est.value - oracle) > 1e-10) {
            note(out, false,
                 "case " + std::to_string(trial) + " (n=" + std::to_string(n) +
                     ", d=" + std::to_string(d) + "): " + fmt(est.value) + " vs " +
                     fmt(oracle));
            break;
        }
    }
    SampleBatch p1;
    p1.d = 1;
    p1.n = 1;
    p1.values = {0.0};
    note(out, dk_product_gaussian(p1, Eigen::VectorXd::Ones(1)).value == 0.5,
         "n=1, d=1 analytic value is not exactly 0.5");
    SampleBatch p2;
    p2.d = 2;
    p2.n = 1;
    p2.values = {0.0, 0.0};
    note(out, dk_product_gaussian(p2, Eigen::VectorXd::Ones(2)).value == 0.75,
         "n=1, d=2 analytic value is not exactly 0.75");
    return out;
}

// ---- 6: regime separation ---------------------------------------------------

Outcome criterion6() {
    Outcome out;
    const auto grid = geometric_grid(1e2, 1e6, std::pow(10.0, 0.25));
    const std::uint32_t mc = 100000;
    const std::uint64_t seed = 2024;
    const std::vector<DistanceClass> classes{DistanceClass::KolmogorovRays};

    const auto t2 = power_log_triplet(2.0, 1);
    const double k2 = choose_kappa(t2);
    const auto both = sweep_multi(t2, {ScalingMode::FixedSqrtSigma,
                                       ScalingMode::AdaptiveBc},
                                  grid, mc, classes, k2, seed, 1);

    // (a) beta = 2, fixed sqrt(sigma) scaling.
    {
        const auto& rep = both[0];
        double rms_log = -1.0, rms_const = -1.0, rms_pow = -1.0, a_fit = 0.0;
        try {
            const auto f = rate_fit(rep, RateModel::LogDecay);
            rms_log = f.rms;
            a_fit = f.a;
        } catch (const NumericError& e) {
            note(out, false, std::string("(a) LogDecay fit failed: ") + e.what());
        }
        try {
            rms_const = rate_fit(rep, RateModel::Constant).rms;
        } catch (const NumericError&) {
            rms_const = 1e300;
        }
        try {
            rms_pow = rate_fit(rep, RateModel::PowerLaw).rms;
        } catch (const NumericError&) {
            rms_pow = 1e300;
        }
        if (rms_log >= 0.0) {
            note(out, rms_log < rms_const,
                 "(a) LogDecay rms " + fmt(rms_log) + " not below Constant " +
                     fmt(rms_const));
            note(out, rms_log < rms_pow,
                 "(a) LogDecay rms " + fmt(rms_log) + " not below PowerLaw " +
                     fmt(rms_pow));
            note(out, a_fit > 0.0, "(a) fitted amplitude " + fmt(a_fit) + " <= 0");
        }
        const auto series = partial_integral(rep);
        const auto verdict = trend_verdict(series);
        note(out, verdict == TrendVerdict::Growing,
             "(a) verdict " + trend_verdict_name(verdict) + " (first-decade " +
                 fmt(series.first_decade_increment) + ", last-decade " +
                 fmt(series.last_decade_increment) + ", ratio " +
                 fmt(series.last_decade_increment /
                     series.first_decade_increment) + ", need >= 0.8)");
    }

    // (b) beta = 2, adaptive B_c scaling.
    {
        const auto series = partial_integral(both[1]);
        const auto verdict = trend_verdict(series);
        note(out, verdict == TrendVerdict::Bounded,
             "(b) verdict " + trend_verdict_name(verdict) + " (ratio " +
                 fmt(series.last_decade_increment /
                     series.first_decade_increment) + ", need < 0.5)");
    }

    // (c) beta = 3, fixed sqrt(sigma) scaling.
    {
        const auto t3 = power_log_triplet(3.0, 1);
        const auto rep = sweep(t3, ScalingMode::FixedSqrtSigma, grid, mc, classes,
                               choose_kappa(t3), seed, 1);
        const auto series = partial_integral(rep);
        const auto verdict = trend_verdict(series);
        note(out, verdict == TrendVerdict::Bounded,
             "(c) verdict " + trend_verdict_name(verdict) + " (ratio " +
                 fmt(series.last_decade_increment /
                     series.first_decade_increment) + ", need < 0.5)");
    }
    return out;
}

// ---- 7: circle separation ----------------------------------------------------

Outcome criterion7() {
    Outcome out;
    const Cdf radial_cdf = [](double r) { return r >= 1.0 ? 1.0 : 0.0; };
    const Eigen::VectorXd center = Eigen::VectorXd::Zero(2);
    const std::vector<std::uint32_t> n_params{2, 10, 100};
    std::vector<double> avg(n_params.size(), 0.0);
    const int n_seeds = 5;
    for (int s = 0; s < n_seeds; ++s) {
        const std::uint64_t seed = 1000 + s;
        SampleBatch ref = sample_circle(1, 10000, 2, mix64(seed ^ 0xC1BCu));
        for (double& v : ref.values)
            v *= 0.5; // radius 2 halved: exactly the unit circle
        for (size_t k = 0; k < n_params.size(); ++k) {
            const auto batch = sample_circle(n_params[k], 4096, 2, seed);
            if (s == 0) {
                const auto ball = ball_class_distance(batch, radial_cdf, center);
                note(out, ball.value == 1.0,
                     "ball-class distance at n=" + std::to_string(n_params[k]) +
                         " is " + fmt(ball.value) + ", not exactly 1");
            }
            const auto dk = dk_two_sample(batch, ref);
            avg[k] += dk.value / n_seeds;
            if (n_params[k] >= 50)
                note(out, dk.value <= 0.2,
                     "seed " + std::to_string(seed) + " n=" +
                         std::to_string(n_params[k]) + ": d_K " + fmt(dk.value) +
                         " > 0.2");
        }
    }
    for (size_t k = 1; k < avg.size(); ++k)
        note(out, avg[k] <= avg[k - 1] + 1e-12,
             "mean d_K increases from n=" + std::to_string(n_params[k - 1]) +
                 " (" + fmt(avg[k - 1]) + ") to n=" + std::to_string(n_params[k]) +
                 " (" + fmt(avg[k]) + ")");
    return out;
}

// ---- 8: square-root difference inequalities -----------------------------------

Outcome criterion8() {
    Outcome out;
    CounterRng rng(0x88ull);
    for (int trial = 0; trial < 10000; ++trial) {
        const int d = 1 + static_cast<int>(rng.uniform() * 5) % 5;
        Eigen::MatrixXd g1(d, d), g2(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                g1(i, j) = 2.0 * rng.uniform() - 1.0;
                g2(i, j) = 2.0 * rng.uniform() - 1.0;
            }
        const Eigen::MatrixXd n1 = g1 * g1.transpose();
        const Eigen::MatrixXd n2 = g2 * g2.transpose();
        const Eigen::MatrixXd diff = psd_sqrt(n1 + n2) - psd_sqrt(n1);
        const double tr = diff.trace();
        const double frob = std::sqrt((diff * diff).trace());
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(diff);
        const double lmin = es.eigenvalues().minCoeff();
        if (frob > tr + 1e-9 || lmin < -1e-9) {
            note(out, false,
                 "pair " + std::to_string(trial) + ": frob " + fmt(frob) + ", trace " +
                     fmt(tr) + ", lambda_min " + fmt(lmin));
            break;
        }
    }
    return out;
}

// ---- 9: vanishing-sequence extraction ------------------------------------------

Outcome criterion9() {
    Outcome out;
    const int n = 20000;
    std::vector<double> t(n), g(n);
    const double u_max = std::log(1e6);
    for (int i = 0; i < n; ++i) {
        const double u = 0.005 + i * ((u_max - 0.005) / (n - 1));
        t[i] = std::exp(u);
        g[i] = 1.0 / (u * u);
    }
    // 100 seeded unit spikes.
    CounterRng rng(0x5B1CEull);
    std::vector<bool> spike(n, false);
    for (int k = 0; k < 100; ++k) {
        const int idx = 1 + static_cast<int>(rng.uniform() * (n - 2));
        spike[idx] = true;
        g[idx] = 1.0;
    }
    try {
        const auto res = extract_vanishing_sequence(t, g);
        for (size_t i = 0; i < res.t.size(); ++i) {
            const size_t idx = std::lower_bound(t.begin(), t.end(), res.t[i]) -
                               t.begin();
            note(out, idx < spike.size() && !spike[idx],
                 "entry " + std::to_string(i) + " sits on a spike");
            note(out, res.g[i] <= 1.0 / std::sqrt(double(res.m[i])) + 1e-12,
                 "entry " + std::to_string(i) + ": g " + fmt(res.g[i]) +
                     " above upsilon_m " + fmt(1.0 / std::sqrt(double(res.m[i]))));
            if (i > 0) {
                const double ratio = std::log(res.t[i] / res.t[i - 1]);
                const double dm = 1.0 / std::sqrt(double(res.m[i]));
                note(out, ratio >= dm - 1e-9 && ratio <= 2.0 * dm + 1e-9,
                     "entry " + std::to_string(i) + ": log-ratio " + fmt(ratio) +
                         " outside [" + fmt(dm) + ", " + fmt(2.0 * dm) + "]");
            }
        }
        note(out, res.t.size() >= 5, "only " + std::to_string(res.t.size()) +
                                         " entries selected");
    } catch (const NumericError& e) {
        note(out, false, std::string("extraction threw: ") + e.what());
    }

    std::vector<double> ones(n, 1.0);
    bool threw = false;
    try {
        extract_vanishing_sequence(t, ones);
    } catch (const SelectionFailure&) {
        threw = true;
    }
    note(out, threw, "g == 1 did not raise SelectionFailure");
    return out;
}

// ---- 10: byte-identical sweep reruns --------------------------------------------

std::string slurp(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    std::ostringstream buf;
    buf << is.rdbuf();
    return buf.str();
}

Outcome criterion10() {
    Outcome out;
    const std::string base =
        std::string(LEVYCLT_CLI_PATH) +
        " sweep --family powerlog --sigma-shell 2.718281828459045 --beta 2"
        " --dim 1 --t-min 100 --t-max 100000 --t-ratio 3.1622776601683795"
        " --mc 5000 --seed 4242 ";
    const int r1 = std::system((base + "--threads 1 --out /tmp/levyclt_acc_a"
                                " 2>/dev/null").c_str());
    const int r2 = std::system((base + "--threads 1 --out /tmp/levyclt_acc_b"
                                " 2>/dev/null").c_str());
    const int r3 = std::system((base + "--threads 4 --out /tmp/levyclt_acc_c"
                                " 2>/dev/null").c_str());
    note(out, r1 == 0 && r2 == 0 && r3 == 0, "sweep subcommand failed");
    if (out.pass) {
        const auto ja = slurp("/tmp/levyclt_acc_a.json");
        note(out, !ja.empty() && ja == slurp("/tmp/levyclt_acc_b.json"),
             "rerun with identical config differs");
        note(out, ja == slurp("/tmp/levyclt_acc_c.json"),
             "rerun with --threads 4 differs");
        note(out, slurp("/tmp/levyclt_acc_a.csv") == slurp("/tmp/levyclt_acc_c.csv"),
             "csv differs across thread counts");
    }
    return out;
}

using Criterion = Outcome (*)();

const Criterion kCriteria[] = {criterion1, criterion2, criterion3, criterion4,
                               criterion5, criterion6, criterion7, criterion8,
                               criterion9, criterion10};

} // namespace

int main(int argc, char** argv) {
    int first = 1, last = 10;
    if (argc > 1) {
        first = last = std::atoi(argv[1]);
        if (first < 1 || first > 10) {
            std::fprintf(stderr, "usage: acceptance [1..10]\n");
            return 2;
        }
    }
    int failures = 0;
    for (int i = first; i <= last; ++i) {
        Outcome out;
        try {
            out = kCriteria[i - 1]();
        } catch (const std::exception& e) {
            out.pass = false;
            out.detail = std::string("unexpected exception: ") + e.what();
        }
        if (out.pass) {
            std::printf("criterion %d: PASS\n", i);
        } else {
            std::printf("criterion %d: FAIL — %s\n", i, out.detail.c_str());
            ++failures;
        }
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
