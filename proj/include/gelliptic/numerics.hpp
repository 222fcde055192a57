#pragma once

#include <functional>

namespace gel::num {

using Fn = std::function<double(double)>;

/// Convergence control shared by the iterative kernels.
struct Tolerance {
    double rel = 1e-12;
    double abs = 1e-12;
    int max_iter = 200;
};

/// Library default; the GELLIPTIC_TOL environment variable (a positive
/// decimal real) overrides rel and abs.
Tolerance default_tolerance();

/// Declared algebraic endpoint behavior of an integrand:
/// f ~ (s-a)^(-left_exponent) near a, f ~ (b-s)^(-right_exponent) near b.
/// Exponents <= 0 mean the endpoint is regular. Exponents must stay < 1.
struct QuadratureSpec {
    double left_exponent = 0.0;
    double right_exponent = 0.0;
    Tolerance tol = default_tolerance();
};

/// Adaptive quadrature of f over [a,b]. Declared endpoint singularities are
/// removed by the substitution s = b - v^(1/(1-alpha)) (mirrored on the
/// left) before panel refinement.
double integrate(const Fn& f, double a, double b, const QuadratureSpec& spec = {});

/// Solves F(x) = target for strictly monotone F on [lo,hi] by bracketed
/// bisection with secant acceleration. Throws "bracket failure" when the
/// target lies outside [F(lo), F(hi)] beyond tolerance.
double invert_monotone(const Fn& F, double target, double lo, double hi,
                       const Tolerance& tol = default_tolerance());

struct Minimum {
    double x;
    double value;
};

/// Golden-section search for the single interior minimum of F on (lo,hi).
Minimum minimize_unimodal(const Fn& F, double lo, double hi,
                          const Tolerance& tol = default_tolerance());

/// Central finite difference of order 1 or 2 with step
/// eps^(1/3)*max(1,|t|) resp. eps^(1/4)*max(1,|t|).
double fd_derivative(const Fn& f, double t, int order);

/// 1 - x^e without cancellation for x near 1 (x >= 0).
double one_minus_pow(double x, double e);

}  // namespace gel::num
