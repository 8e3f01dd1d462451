#include "levyclt/distances.hpp"
#include "levyclt/errors.hpp"
#include "levyclt/quadrature.hpp"
#include "levyclt/special.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

namespace levyclt {
namespace {

std::vector<double> sorted_unique(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

size_t rank_of(const std::vector<double>& grid, double v) {
    return static_cast<size_t>(std::lower_bound(grid.begin(), grid.end(), v) -
                               grid.begin());
}

double fmt_check(double v) {
    if (!std::isfinite(v))
        throw NumericError("non-finite distance value");
    return v;
}

struct Point2 {
    double x, y;
};

// Exact sup over closed rays of |F_n - G| for a product reference
// G(x, y) = Gx(x) * Gy(y), with left limits per coordinate. Sweeps
// x-levels; per level evaluates empirical counts for x< and x<=.
double sup_rays_2d(const std::vector<Point2>& pts, const std::function<double(double)>& Gx,
                   const std::function<double(double)>& Gy) {
    const double n = static_cast<double>(pts.size());
    std::vector<double> xs, ys;
    xs.reserve(pts.size());
    ys.reserve(pts.size());
    for (const auto& p : pts) {
        xs.push_back(p.x);
        ys.push_back(p.y);
    }
    xs = sorted_unique(std::move(xs));
    ys = sorted_unique(std::move(ys));
    std::vector<double> gy(ys.size());
    for (size_t j = 0; j < ys.size(); ++j)
        gy[j] = Gy(ys[j]);
    std::vector<Point2> order(pts);
    std::sort(order.begin(), order.end(),
              [](const Point2& a, const Point2& b) { return a.x < b.x; });
    std::vector<std::uint32_t> cnt(ys.size(), 0);
    double best = 0.0;
    auto scan = [&](double gx) {
        double cum = 0.0;
        for (size_t j = 0; j < ys.size(); ++j) {
            const double flt = cum / n; // y < ys[j]
            cum += cnt[j];
            const double fle = cum / n; // y <= ys[j]
            const double g = gx * gy[j];
            best = std::max({best, std::fabs(flt - g), std::fabs(fle - g)});
        }
        best = std::max(best, std::fabs(cum / n - gx)); // y = +inf
    };
    size_t next = 0;
    for (size_t ix = 0; ix <= xs.size(); ++ix) {
        const double gx = ix < xs.size() ? Gx(xs[ix]) : 1.0;
        scan(gx); // x < level
        while (next < order.size() && (ix < xs.size() && order[next].x == xs[ix])) {
            ++cnt[rank_of(ys, order[next].y)];
            ++next;
        }
        scan(gx); // x <= level
    }
    return best;
}

struct Point3 {
    double x, y, z;
};

double sup_rays_3d(const std::vector<Point3>& pts, const std::function<double(double)>& Gx,
                   const std::function<double(double)>& Gy,
                   const std::function<double(double)>& Gz) {
    const double n = static_cast<double>(pts.size());
    std::vector<double> xs, ys, zs;
    for (const auto& p : pts) {
        xs.push_back(p.x);
        ys.push_back(p.y);
        zs.push_back(p.z);
    }
    xs = sorted_unique(std::move(xs));
    ys = sorted_unique(std::move(ys));
    zs = sorted_unique(std::move(zs));
    if (static_cast<double>(xs.size()) * ys.size() * zs.size() > 2e9)
        throw DimensionTooLarge("3-d corner enumeration exceeds the work guard");
    const size_t ny = ys.size(), nz = zs.size();
    std::vector<double> gyv(ny), gzv(nz);
    for (size_t j = 0; j < ny; ++j)
        gyv[j] = Gy(ys[j]);
    for (size_t k = 0; k < nz; ++k)
        gzv[k] = Gz(zs[k]);
    std::vector<Point3> order(pts);
    std::sort(order.begin(), order.end(),
              [](const Point3& a, const Point3& b) { return a.x < b.x; });
    std::vector<std::uint32_t> cnt(ny * nz, 0);
    // P[a][b] = count of points (x-filtered) with y-rank < a and z-rank < b.
    std::vector<double> P((ny + 1) * (nz + 1), 0.0);
    auto at = [&](size_t a, size_t b) -> double { return P[a * (nz + 1) + b]; };
    double best = 0.0;
    auto scan = [&](double gx) {
        for (size_t a = 0; a <= ny; ++a) {
            for (size_t b = 0; b <= nz; ++b) {
                double v = 0.0;
                if (a > 0 && b > 0)
                    v = static_cast<double>(cnt[(a - 1) * nz + (b - 1)]) +
                        at(a - 1, b) + at(a, b - 1) - at(a - 1, b - 1);
                P[a * (nz + 1) + b] = v;
            }
        }
        for (size_t j = 0; j <= ny; ++j) {
            const double gyj = j < ny ? gyv[j] : 1.0;
            for (size_t k = 0; k <= nz; ++k) {
                const double gzk = k < nz ? gzv[k] : 1.0;
                const double g = gx * gyj * gzk;
                // (le, le), (lt, le), (le, lt), (lt, lt); for the +inf
                // corners the limits coincide.
                const size_t jl = j < ny ? j + 1 : ny;
                const size_t kl = k < nz ? k + 1 : nz;
                best = std::max({best, std::fabs(at(jl, kl) / n - g),
                                 std::fabs(at(j, kl) / n - g),
                                 std::fabs(at(jl, k) / n - g),
                                 std::fabs(at(j, k) / n - g)});
            }
        }
    };
    size_t next = 0;
    for (size_t ix = 0; ix <= xs.size(); ++ix) {
        const double gx = ix < xs.size() ? Gx(xs[ix]) : 1.0;
        scan(gx);
        while (next < order.size() && ix < xs.size() && order[next].x == xs[ix]) {
            ++cnt[rank_of(ys, order[next].y) * nz + rank_of(zs, order[next].z)];
            ++next;
        }
        scan(gx);
    }
    return best;
}

double ks_value_1d(const std::vector<double>& sorted_sample, const Cdf& cdf) {
    const size_t n = sorted_sample.size();
    double best = 0.0;
    for (size_t i = 0; i < n; ++i) {
        const double f = cdf(sorted_sample[i]);
        best = std::max({best, (i + 1.0) / n - f, f - static_cast<double>(i) / n});
    }
    return best;
}

std::vector<double> sorted_copy_checked(const std::vector<double>& sample) {
    if (sample.empty())
        throw EmptySample("empty sample");
    std::vector<double> s(sample);
    if (!std::is_sorted(s.begin(), s.end()))
        std::sort(s.begin(), s.end());
    return s;
}

double dk_product_gaussian_value(const SampleBatch& sample, const Eigen::VectorXd& scales) {
    const std::uint32_t d = sample.d;
    if (d == 1) {
        std::vector<double> s(sample.values);
        std::sort(s.begin(), s.end());
        const double sc = scales[0];
        return ks_value_1d(s, [sc](double x) { return normal_cdf(x / sc); });
    }
    if (d == 2) {
        std::vector<Point2> pts(sample.n);
        for (std::uint32_t i = 0; i < sample.n; ++i)
            pts[i] = {sample.row(i)[0], sample.row(i)[1]};
        const double s0 = scales[0], s1 = scales[1];
        return sup_rays_2d(pts, [s0](double x) { return normal_cdf(x / s0); },
                           [s1](double y) { return normal_cdf(y / s1); });
    }
    std::vector<Point3> pts(sample.n);
    for (std::uint32_t i = 0; i < sample.n; ++i)
        pts[i] = {sample.row(i)[0], sample.row(i)[1], sample.row(i)[2]};
    const double s0 = scales[0], s1 = scales[1], s2 = scales[2];
    return sup_rays_3d(pts, [s0](double x) { return normal_cdf(x / s0); },
                       [s1](double y) { return normal_cdf(y / s1); },
                       [s2](double z) { return normal_cdf(z / s2); });
}

} // namespace

std::string distance_class_name(DistanceClass c) {
    switch (c) {
    case DistanceClass::KolmogorovRays:
        return "KolmogorovRays";
    case DistanceClass::HalfSpaces:
        return "HalfSpaces";
    case DistanceClass::CenteredBalls:
        return "CenteredBalls";
    case DistanceClass::TwoSampleRays:
        return "TwoSampleRays";
    case DistanceClass::Wasserstein1:
        return "Wasserstein1";
    }
    return "?";
}

std::string to_jsonl(const DistanceEstimate& e) {
    char buf[256];
    std::string out = "{\"class\":\"" + distance_class_name(e.cls) + "\"";
    std::snprintf(buf, sizeof(buf), ",\"value\":%.17g,\"ci\":%.17g,\"exact\":%s,\"n\":%u,\"d\":%u",
                  e.value, e.ci, e.exact ? "true" : "false", e.n, e.d);
    out += buf;
    if (e.t) {
        std::snprintf(buf, sizeof(buf), ",\"t\":%.17g", *e.t);
        out += buf;
    }
    out += "}";
    return out;
}

DistanceEstimate ks_1d_one_sample(const std::vector<double>& sorted_sample,
                                  const Cdf& cdf) {
    const std::vector<double> s = sorted_copy_checked(sorted_sample);
    DistanceEstimate e;
    e.cls = DistanceClass::KolmogorovRays;
    e.value = fmt_check(ks_value_1d(s, cdf));
    e.ci = 1.36 / std::sqrt(static_cast<double>(s.size()));
    e.exact = true;
    e.n = static_cast<std::uint32_t>(s.size());
    e.d = 1;
    return e;
}

DistanceEstimate dk_product_gaussian(const SampleBatch& sample,
                                     const Eigen::VectorXd& scales) {
    if (sample.n == 0)
        throw EmptySample("empty sample");
    if (sample.d > 3)
        throw DimensionTooLarge("exact ray enumeration supports d <= 3");
    if (scales.size() != sample.d)
        throw ConfigError("scales dimension mismatch");
    for (int j = 0; j < scales.size(); ++j)
        if (!(scales[j] > 0.0))
            throw ConfigError("scales must be positive");
    DistanceEstimate e;
    e.cls = DistanceClass::KolmogorovRays;
    e.value = fmt_check(dk_product_gaussian_value(sample, scales));
    e.exact = true;
    e.n = sample.n;
    e.d = sample.d;
    if (sample.d >= 2 && sample.n <= 512) {
        // Bootstrap CI (200 resamples) on the cheap exact path.
        CounterRng rng(mix64(sample.seed ^ 0xB00757A9ULL));
        std::vector<double> vals;
        vals.reserve(200);
        SampleBatch res = sample;
        for (int b = 0; b < 200; ++b) {
            for (std::uint32_t i = 0; i < sample.n; ++i) {
                const std::uint32_t pick =
                    static_cast<std::uint32_t>(rng() % sample.n);
                for (std::uint32_t j = 0; j < sample.d; ++j)
                    res.row(i)[j] = sample.row(pick)[j];
            }
            vals.push_back(dk_product_gaussian_value(res, scales));
        }
        std::sort(vals.begin(), vals.end());
        e.ci = 0.5 * (vals[189] - vals[9]); // ~90% spread half-width
    } else {
        e.ci = 1.36 / std::sqrt(static_cast<double>(sample.n));
    }
    return e;
}

DistanceEstimate dk_two_sample(const SampleBatch& a, const SampleBatch& b,
                               bool allow_approx, std::uint64_t search_seed) {
    if (a.n == 0 || b.n == 0)
        throw EmptySample("empty sample");
    if (a.d != b.d)
        throw ConfigError("dimension mismatch between samples");
    const std::uint32_t d = a.d;
    const double na = a.n, nb = b.n;
    DistanceEstimate e;
    e.cls = DistanceClass::TwoSampleRays;
    e.n = a.n + b.n;
    e.d = d;
    e.ci = 1.36 * std::sqrt(1.0 / na + 1.0 / nb);
    const bool exact_ok = d <= 2 || (d == 3 && a.n + b.n <= 2000);
    if (!exact_ok && !allow_approx)
        throw DimensionTooLarge("exact two-sample enumeration not available at this size");
    if (d == 1 && exact_ok) {
        std::vector<double> va(a.values), vb(b.values);
        std::sort(va.begin(), va.end());
        std::sort(vb.begin(), vb.end());
        double best = 0.0;
        size_t ia = 0, ib = 0;
        while (ia < va.size() || ib < vb.size()) {
            const double v = ia < va.size() && (ib >= vb.size() || va[ia] <= vb[ib])
                                 ? va[ia]
                                 : vb[ib];
            while (ia < va.size() && va[ia] == v)
                ++ia;
            while (ib < vb.size() && vb[ib] == v)
                ++ib;
            best = std::max(best, std::fabs(ia / na - ib / nb));
        }
        e.value = fmt_check(best);
        e.exact = true;
        return e;
    }
    if (exact_ok && d == 2) {
        // Pooled-grid sweep with per-coordinate left limits; both empirical
        // CDFs are evaluated with the same ray.
        std::vector<double> ys;
        for (std::uint32_t i = 0; i < a.n; ++i)
            ys.push_back(a.row(i)[1]);
        for (std::uint32_t i = 0; i < b.n; ++i)
            ys.push_back(b.row(i)[1]);
        ys = sorted_unique(std::move(ys));
        struct Tagged {
            double x;
            std::uint32_t yr;
            bool from_a;
        };
        std::vector<Tagged> order;
        order.reserve(a.n + b.n);
        for (std::uint32_t i = 0; i < a.n; ++i)
            order.push_back({a.row(i)[0], static_cast<std::uint32_t>(rank_of(ys, a.row(i)[1])), true});
        for (std::uint32_t i = 0; i < b.n; ++i)
            order.push_back({b.row(i)[0], static_cast<std::uint32_t>(rank_of(ys, b.row(i)[1])), false});
        std::sort(order.begin(), order.end(),
                  [](const Tagged& p, const Tagged& q) { return p.x < q.x; });
        std::vector<std::uint32_t> ca(ys.size(), 0), cb(ys.size(), 0);
        double best = 0.0;
        auto scan = [&]() {
            double cuma = 0.0, cumb = 0.0;
            for (size_t j = 0; j < ys.size(); ++j) {
                best = std::max(best, std::fabs(cuma / na - cumb / nb)); // y < ys[j]
                cuma += ca[j];
                cumb += cb[j];
                best = std::max(best, std::fabs(cuma / na - cumb / nb)); // y <= ys[j]
            }
        };
        size_t next = 0;
        while (next < order.size()) {
            const double level = order[next].x;
            scan(); // x < level
            while (next < order.size() && order[next].x == level) {
                if (order[next].from_a)
                    ++ca[order[next].yr];
                else
                    ++cb[order[next].yr];
                ++next;
            }
            scan(); // x <= level
        }
        scan(); // x = +inf
        e.value = fmt_check(best);
        e.exact = true;
        return e;
    }
    if (exact_ok && d == 3) {
        // Difference-of-empiricals via the one-sample 3-d sweep run on the
        // pooled points with signed weights is messier than two plain
        // sweeps; at this guarded size just enumerate pooled corners.
        std::vector<double> xs, ys, zs;
        auto collect = [&](const SampleBatch& s) {
            for (std::uint32_t i = 0; i < s.n; ++i) {
                xs.push_back(s.row(i)[0]);
                ys.push_back(s.row(i)[1]);
                zs.push_back(s.row(i)[2]);
            }
        };
        collect(a);
        collect(b);
        xs = sorted_unique(std::move(xs));
        ys = sorted_unique(std::move(ys));
        zs = sorted_unique(std::move(zs));
        double best = 0.0;
        // For each corner and each of the 8 open/closed combos, count both
        // samples. O(levels^3 * (na+nb)) is too big; use per-x-level count
        // grids as in the one-sample sweep, for both samples at once.
        const size_t ny = ys.size(), nz = zs.size();
        std::vector<std::int64_t> cnt(ny * nz, 0); // +nb weighting for a, -na for b
        // F_a - F_b has common denominator na*nb: weight a-points nb, b-points -na.
        struct T3 {
            double x;
            std::uint32_t yr, zr;
            std::int64_t w;
        };
        std::vector<T3> order;
        for (std::uint32_t i = 0; i < a.n; ++i)
            order.push_back({a.row(i)[0], static_cast<std::uint32_t>(rank_of(ys, a.row(i)[1])),
                             static_cast<std::uint32_t>(rank_of(zs, a.row(i)[2])),
                             static_cast<std::int64_t>(b.n)});
        for (std::uint32_t i = 0; i < b.n; ++i)
            order.push_back({b.row(i)[0], static_cast<std::uint32_t>(rank_of(ys, b.row(i)[1])),
                             static_cast<std::uint32_t>(rank_of(zs, b.row(i)[2])),
                             -static_cast<std::int64_t>(a.n)});
        std::sort(order.begin(), order.end(),
                  [](const T3& p, const T3& q) { return p.x < q.x; });
        const double denom = na * nb;
        std::vector<std::int64_t> P((ny + 1) * (nz + 1), 0);
        auto at = [&](size_t u, size_t v) -> std::int64_t { return P[u * (nz + 1) + v]; };
        auto scan = [&]() {
            for (size_t u = 0; u <= ny; ++u)
                for (size_t v = 0; v <= nz; ++v) {
                    std::int64_t val = 0;
                    if (u > 0 && v > 0)
                        val = cnt[(u - 1) * nz + (v - 1)] + at(u - 1, v) + at(u, v - 1) -
                              at(u - 1, v - 1);
                    P[u * (nz + 1) + v] = val;
                }
            for (size_t u = 0; u <= ny; ++u)
                for (size_t v = 0; v <= nz; ++v)
                    best = std::max(best, std::fabs(at(u, v) / denom));
        };
        size_t next = 0;
        while (next < order.size()) {
            const double level = order[next].x;
            scan();
            while (next < order.size() && order[next].x == level) {
                cnt[order[next].yr * nz + order[next].zr] += order[next].w;
                ++next;
            }
            scan();
        }
        scan();
        e.value = fmt_check(best);
        e.exact = true;
        return e;
    }
    // Stochastic ray search over seeded pooled-coordinate corners.
    CounterRng rng(mix64(search_seed ^ 0x7A75ULL));
    std::vector<std::vector<double>> coords(d);
    for (std::uint32_t j = 0; j < d; ++j) {
        for (std::uint32_t i = 0; i < a.n; ++i)
            coords[j].push_back(a.row(i)[j]);
        for (std::uint32_t i = 0; i < b.n; ++i)
            coords[j].push_back(b.row(i)[j]);
        std::sort(coords[j].begin(), coords[j].end());
    }
    double best = 0.0;
    std::vector<double> corner(d);
    for (int k = 0; k < 8192; ++k) {
        for (std::uint32_t j = 0; j < d; ++j)
            corner[j] = coords[j][rng() % coords[j].size()];
        std::uint32_t ca = 0, cb = 0;
        for (std::uint32_t i = 0; i < a.n; ++i) {
            bool in = true;
            for (std::uint32_t j = 0; j < d; ++j)
                if (a.row(i)[j] > corner[j]) {
                    in = false;
                    break;
                }
            ca += in;
        }
        for (std::uint32_t i = 0; i < b.n; ++i) {
            bool in = true;
            for (std::uint32_t j = 0; j < d; ++j)
                if (b.row(i)[j] > corner[j]) {
                    in = false;
                    break;
                }
            cb += in;
        }
        best = std::max(best, std::fabs(ca / na - cb / nb));
    }
    e.value = fmt_check(best);
    e.exact = false;
    return e;
}

std::vector<Eigen::VectorXd> default_directions(int d, std::uint64_t seed) {
    if (d < 1)
        throw ConfigError("dimension must be positive");
    std::vector<Eigen::VectorXd> dirs;
    for (int i = 0; i < d; ++i)
        dirs.push_back(Eigen::VectorXd::Unit(d, i));
    if (d >= 2) {
        for (int i = 0; i < d; ++i) {
            const int j = (i + 1) % d;
            Eigen::VectorXd p = (Eigen::VectorXd::Unit(d, i) + Eigen::VectorXd::Unit(d, j)) / M_SQRT2;
            Eigen::VectorXd m = (Eigen::VectorXd::Unit(d, i) - Eigen::VectorXd::Unit(d, j)) / M_SQRT2;
            dirs.push_back(p);
            dirs.push_back(m);
        }
    }
    CounterRng rng(mix64(seed ^ 0xD15Cull));
    std::normal_distribution<double> norm;
    for (int k = 0; k < 64; ++k) {
        Eigen::VectorXd v(d);
        double nrm = 0.0;
        do {
            for (int j = 0; j < d; ++j)
                v[j] = norm(rng);
            nrm = v.norm();
        } while (nrm == 0.0);
        dirs.push_back(v / nrm);
    }
    return dirs;
}

DistanceEstimate halfspace_distance(const SampleBatch& sample,
                                    const Eigen::MatrixXd& cov,
                                    const std::vector<Eigen::VectorXd>& directions) {
    if (sample.n == 0)
        throw EmptySample("empty sample");
    if (directions.empty())
        throw ConfigError("no directions supplied");
    const std::uint32_t d = sample.d;
    double best = 0.0;
    std::vector<double> proj(sample.n);
    for (const auto& w : directions) {
        if (w.size() != d)
            throw ConfigError("direction dimension mismatch");
        if (std::fabs(w.norm() - 1.0) > 1e-8)
            throw DegenerateDirection("directions must be unit vectors");
        const double var = w.dot(cov * w);
        if (!(var > 0.0))
            throw DegenerateDirection("direction has non-positive reference variance");
        const double sd = std::sqrt(var);
        for (std::uint32_t i = 0; i < sample.n; ++i) {
            const double* r = sample.row(i);
            double acc = 0.0;
            for (std::uint32_t j = 0; j < d; ++j)
                acc += w[j] * r[j];
            proj[i] = acc;
        }
        std::sort(proj.begin(), proj.end());
        best = std::max(best, ks_value_1d(proj, [sd](double x) { return normal_cdf(x / sd); }));
    }
    DistanceEstimate e;
    e.cls = DistanceClass::HalfSpaces;
    e.value = fmt_check(best);
    e.ci = 1.36 / std::sqrt(static_cast<double>(sample.n));
    e.exact = false;
    e.n = sample.n;
    e.d = d;
    return e;
}

DistanceEstimate ball_class_distance(const SampleBatch& sample, const Cdf& radial_cdf,
                                     const Eigen::VectorXd& center) {
    if (sample.n == 0)
        throw EmptySample("empty sample");
    if (center.size() != sample.d)
        throw ConfigError("center dimension mismatch");
    std::vector<double> radii(sample.n);
    for (std::uint32_t i = 0; i < sample.n; ++i) {
        double acc = 0.0;
        for (std::uint32_t j = 0; j < sample.d; ++j) {
            const double diff = sample.row(i)[j] - center[j];
            acc += diff * diff;
        }
        radii[i] = std::sqrt(acc);
    }
    std::sort(radii.begin(), radii.end());
    DistanceEstimate e;
    e.cls = DistanceClass::CenteredBalls;
    e.value = fmt_check(ks_value_1d(radii, radial_cdf));
    e.ci = 1.36 / std::sqrt(static_cast<double>(sample.n));
    e.exact = true;
    e.n = sample.n;
    e.d = sample.d;
    return e;
}

DistanceEstimate w1_1d(const std::vector<double>& sorted_sample, const Cdf& cdf,
                       const Cdf& quantile) {
    const std::vector<double> s = sorted_copy_checked(sorted_sample);
    const size_t n = s.size();
    double total = 0.0;
    try {
        // Lower tail: int_{-inf}^{x_0} F.
        total += integrate_to_inf([&cdf, &s](double u) { return cdf(s.front() - u); }, 0.0,
                                  1e-10).value;
        // Upper tail: int_{x_{n-1}}^{inf} (1 - F).
        total += integrate_to_inf([&cdf, &s](double u) { return 1.0 - cdf(s.back() + u); },
                                  0.0, 1e-10).value;
    } catch (const QuadratureFailure&) {
        throw TailDivergence("reference tail integral did not converge");
    }
    for (size_t i = 0; i + 1 < n; ++i) {
        const double a = s[i], b = s[i + 1];
        if (b <= a)
            continue;
        const double c = (i + 1.0) / n;
        double q = quantile(c);
        q = std::min(std::max(q, a), b);
        if (q > a)
            total += integrate([&cdf, c](double x) { return c - cdf(x); }, a, q, 1e-10).value;
        if (b > q)
            total += integrate([&cdf, c](double x) { return cdf(x) - c; }, q, b, 1e-10).value;
    }
    if (!std::isfinite(total))
        throw TailDivergence("non-finite Wasserstein value");
    DistanceEstimate e;
    e.cls = DistanceClass::Wasserstein1;
    e.value = std::max(0.0, total);
    e.ci = 0.0;
    e.exact = true;
    e.n = static_cast<std::uint32_t>(n);
    e.d = 1;
    return e;
}

} // namespace levyclt
