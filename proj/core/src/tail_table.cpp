#include "levyclt/tail_table.hpp"
#include "levyclt/errors.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>

namespace levyclt {
namespace {

constexpr double kTailFloor = 1e-14; // table covers tails down to this ratio

std::vector<double> pchip_slopes(const std::vector<double>& x,
                                 const std::vector<double>& y) {
    const size_t n = x.size();
    std::vector<double> m(n, 0.0);
    if (n < 2)
        return m;
    std::vector<double> h(n - 1), d(n - 1);
    for (size_t i = 0; i + 1 < n; ++i) {
        h[i] = x[i + 1] - x[i];
        d[i] = (y[i + 1] - y[i]) / h[i];
    }
    if (n == 2) {
        m[0] = m[1] = d[0];
        return m;
    }
    for (size_t i = 1; i + 1 < n; ++i) {
        if (d[i - 1] * d[i] <= 0.0) {
            m[i] = 0.0;
        } else {
            const double w1 = 2.0 * h[i] + h[i - 1];
            const double w2 = h[i] + 2.0 * h[i - 1];
            m[i] = (w1 + w2) / (w1 / d[i - 1] + w2 / d[i]);
        }
    }
    // One-sided endpoint slopes, clamped for monotonicity.
    auto endpoint = [](double h0, double h1, double d0, double d1) {
        double s = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
        if (s * d0 <= 0.0)
            s = 0.0;
        else if (d0 * d1 < 0.0 && std::fabs(s) > 3.0 * std::fabs(d0))
            s = 3.0 * d0;
        return s;
    };
    m[0] = endpoint(h[0], h[1], d[0], d[1]);
    m[n - 1] = endpoint(h[n - 2], h[n - 3], d[n - 2], d[n - 3]);
    return m;
}

double hermite(double x0, double x1, double y0, double y1, double m0, double m1,
               double x) {
    const double h = x1 - x0;
    const double s = (x - x0) / h;
    const double s2 = s * s;
    const double s3 = s2 * s;
    return (2.0 * s3 - 3.0 * s2 + 1.0) * y0 + (s3 - 2.0 * s2 + s) * h * m0 +
           (-2.0 * s3 + 3.0 * s2) * y1 + (s3 - s2) * h * m1;
}

} // namespace

RadialSampler::RadialSampler(const RadialLevyMeasure& measure) : measure_(measure) {
    if (measure.family == MeasureFamily::Zero)
        throw ConfigError("cannot sample from the zero measure");
    total_mass_ = tail_mass(measure, 0.0);
    if (!(total_mass_ > 0.0) || !std::isfinite(total_mass_))
        throw InfiniteActivity("total jump intensity must be finite and positive");
    min_radius_ = measure.sigma_shell;
    build_knots();
    build_fast_table();
}

void RadialSampler::build_knots() {
    // Outer radius where the normalised tail drops to kTailFloor.
    double lo = min_radius_;
    double hi = 2.0 * min_radius_;
    while (tail_mass(measure_, hi) / total_mass_ > kTailFloor) {
        lo = hi;
        hi *= 2.0;
        if (measure_.family == MeasureFamily::BoundedShell && hi > measure_.outer_radius) {
            hi = measure_.outer_radius;
            break;
        }
        if (hi > 1e300)
            throw TableBuildFailure("tail table upper radius search diverged");
    }
    for (int i = 0; i < 80; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (tail_mass(measure_, mid) / total_mass_ > kTailFloor)
            lo = mid;
        else
            hi = mid;
    }
    max_radius_ = hi;

    const int n0 = 512;
    const double u_lo = std::log(min_radius_);
    const double u_hi = std::log(max_radius_);
    knot_u_.resize(n0);
    knot_y_.resize(n0);
    for (int i = 0; i < n0; ++i) {
        const double u = u_lo + (u_hi - u_lo) * i / (n0 - 1);
        knot_u_[i] = u;
        knot_y_[i] = std::log(std::max(tail_mass(measure_, std::exp(u)) / total_mass_,
                                       1e-300));
    }
    for (size_t i = 0; i + 1 < knot_y_.size(); ++i)
        if (!(knot_y_[i + 1] < knot_y_[i]))
            throw TableBuildFailure("tail table is not strictly decreasing");
    knot_slope_ = pchip_slopes(knot_u_, knot_y_);

    // Refine where the interpolant misses the quadrature value at segment
    // midpoints; repeat until within tolerance or the knot budget is hit.
    for (int pass = 0; pass < 5 && knot_u_.size() < 4096; ++pass) {
        std::vector<double> nu, ny;
        bool refined = false;
        for (size_t i = 0; i + 1 < knot_u_.size(); ++i) {
            nu.push_back(knot_u_[i]);
            ny.push_back(knot_y_[i]);
            const double um = 0.5 * (knot_u_[i] + knot_u_[i + 1]);
            const double exact =
                std::log(std::max(tail_mass(measure_, std::exp(um)) / total_mass_, 1e-300));
            const double interp = hermite(knot_u_[i], knot_u_[i + 1], knot_y_[i],
                                          knot_y_[i + 1], knot_slope_[i],
                                          knot_slope_[i + 1], um);
            if (std::fabs(interp - exact) > 1e-9 * std::max(1.0, std::fabs(exact))) {
                nu.push_back(um);
                ny.push_back(exact);
                refined = true;
            }
        }
        nu.push_back(knot_u_.back());
        ny.push_back(knot_y_.back());
        if (!refined)
            break;
        knot_u_ = std::move(nu);
        knot_y_ = std::move(ny);
        for (size_t i = 0; i + 1 < knot_y_.size(); ++i)
            if (!(knot_y_[i + 1] < knot_y_[i]))
                throw TableBuildFailure("tail table refinement broke monotonicity");
        knot_slope_ = pchip_slopes(knot_u_, knot_y_);
    }
}

double RadialSampler::pchip_value(double u_log) const {
    if (u_log <= knot_u_.front())
        return knot_y_.front();
    if (u_log >= knot_u_.back())
        return knot_y_.back();
    const auto it = std::upper_bound(knot_u_.begin(), knot_u_.end(), u_log);
    const size_t i = static_cast<size_t>(it - knot_u_.begin()) - 1;
    return hermite(knot_u_[i], knot_u_[i + 1], knot_y_[i], knot_y_[i + 1],
                   knot_slope_[i], knot_slope_[i + 1], u_log);
}

double RadialSampler::pchip_invert(double y) const {
    if (y >= knot_y_.front())
        return knot_u_.front();
    if (y <= knot_y_.back())
        return knot_u_.back();
    // knot_y_ decreasing: binary search for the bracketing segment.
    size_t lo = 0, hi = knot_y_.size() - 1;
    while (hi - lo > 1) {
        const size_t mid = (lo + hi) / 2;
        if (knot_y_[mid] > y)
            lo = mid;
        else
            hi = mid;
    }
    double a = knot_u_[lo], b = knot_u_[hi];
    double u = 0.5 * (a + b);
    for (int it = 0; it < 100; ++it) {
        const double f = pchip_value(u) - y;
        if (f > 0.0)
            a = u;
        else
            b = u;
        // Newton with bisection fallback.
        const double h = knot_u_[hi] - knot_u_[lo];
        const double df = (pchip_value(u + 1e-7 * h) - pchip_value(u - 1e-7 * h)) /
                          (2e-7 * h);
        double next = df != 0.0 ? u - f / df : 0.5 * (a + b);
        if (!(next > a && next < b))
            next = 0.5 * (a + b);
        if (std::fabs(next - u) < 1e-13 * std::max(1.0, std::fabs(u)))
            return next;
        u = next;
    }
    return u;
}

double RadialSampler::radius_from_uniform(double u) const {
    if (!(u > 0.0 && u <= 1.0))
        throw ConfigError("radius_from_uniform requires u in (0, 1]");
    return std::exp(pchip_invert(std::log(u)));
}

void RadialSampler::build_fast_table() {
    fast_radius_.assign(static_cast<size_t>(kBands) * (kSubBins + 1), 0.0);
    for (int k = 0; k < kBands; ++k) {
        const double base = std::ldexp(1.0, -k - 1);
        for (int j = 0; j <= kSubBins; ++j) {
            const double u = base * (1.0 + static_cast<double>(j) / kSubBins);
            fast_radius_[static_cast<size_t>(k) * (kSubBins + 1) + j] =
                std::exp(pchip_invert(std::log(u)));
        }
    }
}

double RadialSampler::draw_radius(CounterRng& rng) const {
    const std::uint64_t raw = rng();
    const std::uint64_t mant = raw >> 11; // top 53 bits
    const double u = (static_cast<double>(mant) + 1.0) * 0x1.0p-53;
    const std::uint64_t bits = std::bit_cast<std::uint64_t>(u);
    const int e = static_cast<int>((bits >> 52) & 0x7FF);
    int k = 1022 - e;
    if (k < 0)
        return min_radius_; // u == 1
    if (k >= kBands)
        return max_radius_; // probability < 2^-47
    const double frac = static_cast<double>(bits & ((1ULL << 52) - 1)) * 0x1.0p-52;
    const double pos = frac * kSubBins;
    const int j = static_cast<int>(pos);
    const double w = pos - j;
    const double* row = fast_radius_.data() + static_cast<size_t>(k) * (kSubBins + 1);
    return row[j] * (1.0 - w) + row[j + 1] * w;
}

} // namespace levyclt
