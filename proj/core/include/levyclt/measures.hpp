#pragma once

#include <limits>

namespace levyclt {

enum class MeasureFamily { PowerLog, BoundedShell, Zero };

enum class MomentClass { InfiniteVariance, FiniteVariance, TwoPlusLog };

// Isotropic jump-intensity measure with radial density on [sigma_shell, inf)
// (PowerLog: r^{-2-d} (log r)^{-beta} in |v|, finite activity since
// sigma_shell > 1) or on [sigma_shell, outer_radius] (BoundedShell:
// r^{-2-d}, compact support, all moments finite).
struct RadialLevyMeasure {
    MeasureFamily family = MeasureFamily::Zero;
    int dim = 1;
    double sigma_shell = 0.0; // inner radius, > 1 for PowerLog
    double beta = 0.0;        // log-exponent, > 0 (PowerLog only)
    double outer_radius = 0.0; // BoundedShell only

    static RadialLevyMeasure power_log(double sigma_shell, double beta, int dim);
    static RadialLevyMeasure bounded_shell(double sigma_shell, double outer_radius, int dim);
    static RadialLevyMeasure zero(int dim);
};

inline constexpr double kInfiniteMoment = std::numeric_limits<double>::infinity();

// Surface area of the unit sphere S^{d-1}, by angular quadrature of the
// recursion S_{d-1} = S_{d-2} * int_0^pi sin^{d-2}; never a hardcoded gamma
// formula (tests cross-check against one).
double surface_area(int dim);

// int_{S^{d-1}} theta_1^2 dtheta, by the same angular recursion.
double sphere_second_moment_coeff(int dim);

// nu(complement of the ball of radius max(r, sigma_shell^-)).
double tail_mass(const RadialLevyMeasure& m, double r);

// M_p(r) = int_{|v| < r} |v|^p nu(dv), p in {1,2,3}; zero below the shell.
double truncated_moment(const RadialLevyMeasure& m, int p, double r);

// M_p(inf); +inf when the tail diverges (PowerLog: p=1 finite for all beta,
// p=2 finite iff beta > 1, p=3 always infinite).
double total_moment(const RadialLevyMeasure& m, int p);

MomentClass moment_class(const RadialLevyMeasure& m);

struct SecondMomentCheck {
    double direct = 0.0;   // int |v|^2 nu(dv) by radial quadrature
    double via_tail = 0.0; // int_0^inf nu_bar(sqrt(r)) dr
    bool finite = true;
    bool agree = true; // <= 1e-6 relative when finite
};

SecondMomentCheck total_second_moment(const RadialLevyMeasure& m);

} // namespace levyclt
