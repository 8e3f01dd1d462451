#pragma once

#include <functional>

namespace levyclt {

struct QuadResult {
    double value = 0.0;
    double abs_error = 0.0;
    int panels = 0;
};

// Adaptive Gauss-Kronrod (G7/K15) on a finite interval. Panels are split
// until the embedded error estimate meets rel_tol (with a tiny absolute
// floor); throws QuadratureFailure past max_panels subdivisions.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double rel_tol = 1e-9, int max_panels = 1 << 16);

// Semi-infinite [a, inf), via the rational map u = a + x/(1-x), x in [0,1).
QuadResult integrate_to_inf(const std::function<double(double)>& f, double a,
                            double rel_tol = 1e-9, int max_panels = 1 << 16);

// Non-adaptive single K15 panel (building block for oscillatory sums).
double gk15_panel(const std::function<double(double)>& f, double a, double b,
                  double* err_out = nullptr);

} // namespace levyclt
