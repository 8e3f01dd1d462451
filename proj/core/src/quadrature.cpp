#include "levyclt/quadrature.hpp"
#include "levyclt/errors.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace levyclt {
namespace {

// Kronrod 15-point nodes on [-1,1] (positive half) and weights; the
// embedded Gauss 7-point rule uses the odd-indexed nodes.
constexpr double xk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double wk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double wg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
    double a, b, value, err;
    bool operator<(const Panel& o) const { return err < o.err; }
};

Panel eval_panel(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(c - h * xk[i]);
        fv[14 - i] = f(c + h * xk[i]);
    }
    fv[7] = f(c);
    double resk = wk[7] * fv[7];
    double resg = wg[3] * fv[7];
    for (int i = 0; i < 7; ++i)
        resk += wk[i] * (fv[i] + fv[14 - i]);
    for (int i = 0; i < 3; ++i) {
        const int j = 2 * i + 1;
        resg += wg[i] * (fv[j] + fv[14 - j]);
    }
    Panel p;
    p.a = a;
    p.b = b;
    p.value = resk * h;
    const double diff = std::fabs((resk - resg) * h);
    // Scaled error heuristic as in QUADPACK: the raw G-K difference
    // overestimates once the rule has converged.
    p.err = diff;
    if (diff > 0.0) {
        const double scale = std::pow(200.0 * diff / (std::fabs(resk * h) + 1e-300), 1.5);
        if (scale < 1.0)
            p.err = diff * scale;
    }
    return p;
}

QuadResult adapt(const std::function<double(double)>& f, double a, double b,
                 double rel_tol, int max_panels) {
    std::priority_queue<Panel> heap;
    Panel p0 = eval_panel(f, a, b);
    if (!std::isfinite(p0.value))
        throw QuadratureFailure("non-finite integrand on initial panel");
    double total = p0.value;
    double total_err = p0.err;
    heap.push(p0);
    int n = 1;
    const double abs_floor = 1e-300;
    while (total_err > std::max(rel_tol * std::fabs(total), abs_floor) &&
           total_err > 1e-16 * std::fabs(total) + abs_floor) {
        if (n >= max_panels)
            throw QuadratureFailure("adaptive quadrature did not converge within panel budget");
        Panel worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b)
            throw QuadratureFailure("interval collapsed below machine precision");
        Panel l = eval_panel(f, worst.a, mid);
        Panel r = eval_panel(f, mid, worst.b);
        if (!std::isfinite(l.value) || !std::isfinite(r.value))
            throw QuadratureFailure("non-finite integrand value");
        total += l.value + r.value - worst.value;
        total_err += l.err + r.err - worst.err;
        heap.push(l);
        heap.push(r);
        ++n;
        if (total_err <= rel_tol * std::fabs(total))
            break;
    }
    QuadResult res;
    res.value = total;
    res.abs_error = total_err;
    res.panels = n;
    return res;
}

} // namespace

QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double rel_tol, int max_panels) {
    if (b == a)
        return {0.0, 0.0, 0};
    if (b < a) {
        QuadResult r = integrate(f, b, a, rel_tol, max_panels);
        r.value = -r.value;
        return r;
    }
    return adapt(f, a, b, rel_tol, max_panels);
}

QuadResult integrate_to_inf(const std::function<double(double)>& f, double a,
                            double rel_tol, int max_panels) {
    auto g = [&f, a](double x) {
        const double om = 1.0 - x;
        const double u = a + x / om;
        return f(u) / (om * om);
    };
    return adapt(g, 0.0, 1.0, rel_tol, max_panels);
}

double gk15_panel(const std::function<double(double)>& f, double a, double b,
                  double* err_out) {
    Panel p = eval_panel(f, a, b);
    if (err_out)
        *err_out = p.err;
    return p.value;
}

} // namespace levyclt
