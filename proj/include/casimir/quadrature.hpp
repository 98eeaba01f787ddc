#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

/// Adaptive Gauss-Kronrod quadrature (G7/K15) on finite and semi-infinite
/// intervals. Deterministic: worst-interval-first bisection with a fixed
/// tie-break, then an ordered left-to-right reduction of the panel values.

namespace casimir {

/// Tolerance/budget knobs shared by all integral evaluations.
struct QuadratureSpec {
    double rel_tol = 1e-8;     ///< relative error target per force evaluation
    int max_subdivisions = 4000;  ///< panel budget per 1-D integral
    double xi_scale = 0.0;     ///< characteristic imaginary-frequency scale [rad/s]; 0 = auto
};

namespace quad {

struct Result {
    double value = 0.0;
    double abs_err = 0.0;
    int panels = 0;
    bool converged = false;
};

namespace detail {

// QUADPACK 15-point Kronrod nodes (positive half) and weights, with the
// embedded 7-point Gauss weights on the odd-indexed nodes.
inline constexpr double kronrod_nodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
inline constexpr double kronrod_weights[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
inline constexpr double gauss_weights[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct Panel {
    double a, b;
    double value;
    double err;
};

template <class F>
Panel evaluate_panel(F&& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double k15 = kronrod_weights[7] * f(mid);
    double g7 = gauss_weights[3] * f(mid);
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kronrod_nodes[i];
        const double fsum = f(mid - dx) + f(mid + dx);
        k15 += kronrod_weights[i] * fsum;
        if (i % 2 == 1) g7 += gauss_weights[i / 2] * fsum;
    }
    k15 *= half;
    g7 *= half;
    return Panel{a, b, k15, std::abs(k15 - g7)};
}

}  // namespace detail

/// Adaptive G7/K15 on [a, b]. Stops when the summed panel error drops below
/// max(abs_tol, rel_tol * |integral|) or the panel budget runs out.
template <class F>
Result integrate(F&& f, double a, double b, double rel_tol, double abs_tol, int max_panels) {
    Result res;
    if (a == b) {
        res.converged = true;
        return res;
    }
    std::vector<detail::Panel> panels;
    panels.reserve(64);
    panels.push_back(detail::evaluate_panel(f, a, b));
    res.panels = 1;

    auto worst = [&]() {
        std::size_t w = 0;
        for (std::size_t i = 1; i < panels.size(); ++i) {
            // tie-break on the left endpoint keeps the refinement order fixed
            if (panels[i].err > panels[w].err ||
                (panels[i].err == panels[w].err && panels[i].a < panels[w].a))
                w = i;
        }
        return w;
    };

    auto totals = [&](double& value, double& err) {
        value = 0.0;
        err = 0.0;
        for (const auto& p : panels) {
            value += p.value;
            err += p.err;
        }
    };

    double value, err;
    totals(value, err);
    while (err > std::max(abs_tol, rel_tol * std::abs(value)) && res.panels < max_panels) {
        const std::size_t w = worst();
        const detail::Panel p = panels[w];
        const double mid = 0.5 * (p.a + p.b);
        if (mid <= p.a || mid >= p.b) break;  // interval exhausted at double resolution
        panels[w] = detail::evaluate_panel(f, p.a, mid);
        panels.push_back(detail::evaluate_panel(f, mid, p.b));
        ++res.panels;
        totals(value, err);
    }

    // ordered reduction, left to right
    std::sort(panels.begin(), panels.end(),
              [](const detail::Panel& x, const detail::Panel& y) { return x.a < y.a; });
    res.value = 0.0;
    res.abs_err = 0.0;
    for (const auto& p : panels) {
        res.value += p.value;
        res.abs_err += p.err;
    }
    res.converged = res.abs_err <= std::max(abs_tol, rel_tol * std::abs(res.value));
    return res;
}

/// Adaptive integral over [a, inf) for integrands with (at least) exponential
/// decay. Maps x = a + scale*u/(1-u) onto u in [0,1); all quadrature nodes
/// are interior, so f is never evaluated at infinity.
template <class F>
Result integrate_upper_infinite(F&& f, double a, double scale, double rel_tol, double abs_tol,
                                int max_panels) {
    auto g = [&](double u) {
        const double om = 1.0 - u;
        const double x = a + scale * u / om;
        return f(x) * scale / (om * om);
    };
    return integrate(g, 0.0, 1.0, rel_tol, abs_tol, max_panels);
}

}  // namespace quad
}  // namespace casimir
