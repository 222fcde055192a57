#pragma once

#include <cmath>
#include <limits>

#include "gelliptic/numerics.hpp"

namespace gel::trig {

/// p > 1: bounded inverse with finite half period pi_pq.
/// 0 < p <= 1: arcsin_pq diverges at 1, sin_pq is monotone with range (-1,1).
enum class Regime { Super, Sub };

struct PQPair {
    double p;
    double q;
    PQPair(double p_, double q_);
    Regime regime() const { return p > 1.0 ? Regime::Super : Regime::Sub; }
    /// Conjugate exponent p/(p-1); defined only in the Super regime.
    double p_star() const;
};

/// Half period pi_pq = 2 arcsin_pq(1); +infinity in the Sub regime.
struct HalfPeriod {
    double value = std::numeric_limits<double>::infinity();
    bool finite() const { return std::isfinite(value); }
};

/// arcsin_pq(sigma) = integral of (1-s^q)^(-1/p) ds over [0,sigma].
double arcsin_pq(const PQPair& pq, double sigma);

/// (2/q) B(1/q, 1/p*) by quadrature of the beta integral.
HalfPeriod pi_pq(const PQPair& pq);

/// Inverse of arcsin_pq, extended to all of R: odd and 2 pi_pq periodic
/// (Super), or odd and strictly increasing (Sub).
double sin_pq(const PQPair& pq, double t);

/// (1 - sin_pq^q)^(1/p) on the fundamental domain; extended to R with the
/// sign of d/dt sin_pq.
double cos_pq(const PQPair& pq, double t);

}  // namespace gel::trig
