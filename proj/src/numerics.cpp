#include "gelliptic/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace gel::num {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// 15-point Kronrod / 7-point Gauss pair on [-1,1] (QUADPACK dqk15).
// Odd-indexed abscissae are the Gauss nodes.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double value;
    double error;
};

// All nodes are interior, so integrands singular at panel boundaries are
// never sampled there; values that still overflow (argument rounded onto
// the singular endpoint) are dropped.
Panel gk15(const Fn& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    auto eval = [&f](double x) {
        const double v = f(x);
        return std::isfinite(v) ? v : 0.0;
    };
    const double fc = eval(c);
    double resg = fc * kWg[3];
    double resk = fc * kWgk[7];
    double fv1[7], fv2[7];
    for (int j = 0; j < 7; ++j) {
        const double dx = h * kXgk[j];
        fv1[j] = eval(c - dx);
        fv2[j] = eval(c + dx);
        resk += kWgk[j] * (fv1[j] + fv2[j]);
        if (j & 1) resg += kWg[j / 2] * (fv1[j] + fv2[j]);
    }
    const double mean = 0.5 * resk;
    double resasc = kWgk[7] * std::abs(fc - mean);
    for (int j = 0; j < 7; ++j)
        resasc += kWgk[j] * (std::abs(fv1[j] - mean) + std::abs(fv2[j] - mean));
    resasc *= std::abs(h);
    double err = std::abs((resk - resg) * h);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    return {resk * h, err};
}

double refine(const Fn& f, double a, double b, double tol, int depth,
              int max_depth, long& panels) {
    const Panel p = gk15(f, a, b);
    if (p.error <= tol) return p.value;
    if (b - a <= 4.0 * kEps * std::max({std::abs(a), std::abs(b), 1.0}))
        return p.value;
    if (depth >= max_depth || ++panels > 1000000)
        throw std::runtime_error("quadrature failure");
    const double m = 0.5 * (a + b);
    return refine(f, a, m, 0.5 * tol, depth + 1, max_depth, panels) +
           refine(f, m, b, 0.5 * tol, depth + 1, max_depth, panels);
}

double adaptive(const Fn& f, double a, double b, const Tolerance& tol) {
    if (a == b) return 0.0;
    const Panel first = gk15(f, a, b);
    const double goal = std::max(tol.abs, tol.rel * std::abs(first.value));
    if (first.error <= 0.25 * goal) return first.value;
    long panels = 0;
    return refine(f, a, b, 0.5 * goal, 0, tol.max_iter, panels);
}

}  // namespace

Tolerance default_tolerance() {
    static const Tolerance cached = [] {
        Tolerance t;
        if (const char* s = std::getenv("GELLIPTIC_TOL")) {
            char* end = nullptr;
            const double v = std::strtod(s, &end);
            if (end == s || *end != '\0' || !(v > 0.0) || !std::isfinite(v))
                throw std::domain_error(
                    "GELLIPTIC_TOL: expected a positive decimal real");
            t.rel = t.abs = v;
        }
        return t;
    }();
    return cached;
}

double one_minus_pow(double x, double e) {
    if (x <= 0.0) return x == 0.0 ? 1.0 : 1.0 - std::pow(x, e);
    if (x < 0.25) return 1.0 - std::pow(x, e);
    return -std::expm1(e * std::log(x));
}

double integrate(const Fn& f, double a, double b, const QuadratureSpec& spec) {
    if (a == b) return 0.0;
    if (!(a < b)) throw std::domain_error("integrate: require a < b");
    if (spec.left_exponent >= 1.0 || spec.right_exponent >= 1.0)
        throw std::domain_error("non-integrable singularity");

    const double al = std::max(spec.left_exponent, 0.0);
    const double ar = std::max(spec.right_exponent, 0.0);
    if (al == 0.0 && ar == 0.0) return adaptive(f, a, b, spec.tol);

    Tolerance piece = spec.tol;
    piece.rel *= 0.5;
    piece.abs *= 0.5;
    const double m = 0.5 * (a + b);
    double total = 0.0;

    if (al > 0.0) {
        const double g = 1.0 / (1.0 - al);
        const double vmax = std::pow(m - a, 1.0 / g);
        total += adaptive(
            [&f, a, g](double v) {
                const double d = std::pow(v, g);
                if (d == 0.0) return 0.0;
                return g * std::pow(v, g - 1.0) * f(a + d);
            },
            0.0, vmax, piece);
    } else {
        total += adaptive(f, a, m, piece);
    }

    if (ar > 0.0) {
        const double g = 1.0 / (1.0 - ar);
        const double vmax = std::pow(b - m, 1.0 / g);
        total += adaptive(
            [&f, b, g](double v) {
                const double d = std::pow(v, g);
                if (d == 0.0) return 0.0;
                return g * std::pow(v, g - 1.0) * f(b - d);
            },
            0.0, vmax, piece);
    } else {
        total += adaptive(f, m, b, piece);
    }
    return total;
}

double invert_monotone(const Fn& F, double target, double lo, double hi,
                       const Tolerance& tol) {
    if (!(lo <= hi)) throw std::domain_error("invert_monotone: require lo <= hi");
    double a = lo, b = hi;
    double fa = F(a) - target;
    double fb = F(b) - target;
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (fa * fb > 0.0) {
        const double fscale =
            std::max({1.0, std::abs(fa + target), std::abs(fb + target)});
        const double ftol = std::max(tol.abs, tol.rel * fscale);
        if (std::abs(fa) <= ftol) return a;
        if (std::abs(fb) <= ftol) return b;
        throw std::domain_error("bracket failure");
    }

    // Regula falsi with the Illinois anti-stagnation weighting; falls back
    // to bisection whenever the secant proposal leaves the bracket.
    int side = 0;
    for (int it = 0; it < tol.max_iter; ++it) {
        const double xtol =
            std::max(tol.abs, tol.rel * std::max(std::abs(a), std::abs(b)));
        if (b - a <= xtol) break;
        double x = (fb * a - fa * b) / (fb - fa);
        if (!(x > a && x < b)) x = 0.5 * (a + b);
        const double fx = F(x) - target;
        if (fx == 0.0) return x;
        if ((fx < 0.0) == (fa < 0.0)) {
            a = x;
            fa = fx;
            if (side == -1) fb *= 0.5;
            side = -1;
        } else {
            b = x;
            fb = fx;
            if (side == +1) fa *= 0.5;
            side = +1;
        }
    }
    return 0.5 * (a + b);
}

Minimum minimize_unimodal(const Fn& F, double lo, double hi,
                          const Tolerance& tol) {
    if (!(lo < hi)) throw std::domain_error("minimize_unimodal: require lo < hi");
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = lo, b = hi;
    double x1 = b - gr * (b - a);
    double x2 = a + gr * (b - a);
    double f1 = F(x1);
    double f2 = F(x2);
    for (int it = 0; it < tol.max_iter; ++it) {
        const double xtol =
            std::max(tol.abs, tol.rel * 0.5 * (std::abs(a) + std::abs(b)));
        if (b - a <= xtol) break;
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = F(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = F(x2);
        }
    }
    const double xm = 0.5 * (a + b);
    return {xm, F(xm)};
}

double fd_derivative(const Fn& f, double t, int order) {
    if (order != 1 && order != 2)
        throw std::domain_error("fd_derivative: order must be 1 or 2");
    const double scale = std::max(1.0, std::abs(t));
    if (order == 1) {
        double h = std::cbrt(kEps) * scale;
        const double th = t + h;
        h = th - t;  // snap to a representable step
        return (f(t + h) - f(t - h)) / (2.0 * h);
    }
    double h = std::pow(kEps, 0.25) * scale;
    const double th = t + h;
    h = th - t;
    return (f(t + h) - 2.0 * f(t) + f(t - h)) / (h * h);
}

}  // namespace gel::num
