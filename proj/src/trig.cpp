#include "gelliptic/trig.hpp"

#include <map>
#include <shared_mutex>
#include <stdexcept>
#include <utility>

namespace gel::trig {

namespace {

std::shared_mutex g_mutex;
std::map<std::pair<double, double>, double> g_pi;        // beta-integral route
std::map<std::pair<double, double>, double> g_arcsin1;   // direct-integral route

template <typename Compute>
double memo(std::map<std::pair<double, double>, double>& table,
            std::pair<double, double> key, Compute&& compute) {
    {
        std::shared_lock lock(g_mutex);
        auto it = table.find(key);
        if (it != table.end()) return it->second;
    }
    const double v = compute();  // idempotent: duplicate computes agree
    std::unique_lock lock(g_mutex);
    return table.emplace(key, v).first->second;
}

double integrand(const PQPair& pq, double s) {
    return std::pow(num::one_minus_pow(s, pq.q), -1.0 / pq.p);
}

double arcsin_at_one(const PQPair& pq) {
    return memo(g_arcsin1, {pq.p, pq.q}, [&pq] {
        num::QuadratureSpec spec;
        spec.right_exponent = 1.0 / pq.p;
        return num::integrate([&pq](double s) { return integrand(pq, s); },
                              0.0, 1.0, spec);
    });
}

// Inverse of arcsin_pq on [0, pi_pq/2], Super regime.
double invert_super(const PQPair& pq, double target) {
    const double top = arcsin_at_one(pq);
    if (target <= 0.0) return 0.0;
    if (target >= top) return 1.0;
    return num::invert_monotone(
        [&pq](double s) { return arcsin_pq(pq, s); }, target, 0.0, 1.0);
}

// Inverse of arcsin_pq on [0, infinity), Sub regime. Grows the bracket
// toward sigma = 1 until it covers the target; saturates at the largest
// representable sigma below 1.
double invert_sub(const PQPair& pq, double target) {
    if (target <= 0.0) return 0.0;
    double lo = 0.0;
    double hi = 0.5;
    double fhi = arcsin_pq(pq, hi);
    while (fhi < target) {
        const double next = 1.0 - 0.25 * (1.0 - hi);
        if (next >= 1.0 || next <= hi) return hi;
        lo = hi;
        hi = next;
        fhi = arcsin_pq(pq, hi);
    }
    return num::invert_monotone(
        [&pq](double s) { return arcsin_pq(pq, s); }, target, lo, hi);
}

}  // namespace

PQPair::PQPair(double p_, double q_) : p(p_), q(q_) {
    if (!std::isfinite(p) || !std::isfinite(q) || !(p > 0.0) || !(q > 0.0))
        throw std::domain_error("PQPair: require finite p > 0 and q > 0");
}

double PQPair::p_star() const {
    if (regime() != Regime::Super)
        throw std::domain_error("p* = p/(p-1) requires p > 1");
    return p / (p - 1.0);
}

double arcsin_pq(const PQPair& pq, double sigma) {
    if (!(sigma >= 0.0) || sigma > 1.0)
        throw std::domain_error("arcsin_pq: domain is sigma in [0,1]");
    if (sigma == 0.0) return 0.0;
    const bool super = pq.regime() == Regime::Super;
    if (sigma == 1.0) {
        if (!super)
            throw std::domain_error("arcsin_pq: divergent at sigma=1 for p <= 1");
        return arcsin_at_one(pq);
    }
    auto f = [&pq](double s) { return integrand(pq, s); };
    if (super && sigma > 0.9) {
        // steep boundary layer: integrate the singular tail instead
        num::QuadratureSpec spec;
        spec.right_exponent = 1.0 / pq.p;
        return arcsin_at_one(pq) - num::integrate(f, sigma, 1.0, spec);
    }
    return num::integrate(f, 0.0, sigma, {});
}

HalfPeriod pi_pq(const PQPair& pq) {
    if (pq.regime() == Regime::Sub) return HalfPeriod{};
    const double v = memo(g_pi, {pq.p, pq.q}, [&pq] {
        const double a = 1.0 / pq.q;
        const double b = 1.0 / pq.p_star();
        num::QuadratureSpec spec;
        spec.left_exponent = 1.0 - a;
        spec.right_exponent = 1.0 - b;
        const double beta = num::integrate(
            [a, b](double z) {
                return std::pow(z, a - 1.0) * std::pow(1.0 - z, b - 1.0);
            },
            0.0, 1.0, spec);
        return 2.0 * beta / pq.q;
    });
    return HalfPeriod{v};
}

double sin_pq(const PQPair& pq, double t) {
    if (t == 0.0) return 0.0;
    const double sign = t < 0.0 ? -1.0 : 1.0;
    const double ta = std::abs(t);
    if (pq.regime() == Regime::Sub) return sign * invert_sub(pq, ta);

    const double P = pi_pq(pq).value;
    const double tau = std::fmod(ta, 2.0 * P);
    double base;
    double sgn = sign;
    if (tau <= 0.5 * P) {
        base = tau;
    } else if (tau <= P) {
        base = P - tau;
    } else if (tau <= 1.5 * P) {
        base = tau - P;
        sgn = -sgn;
    } else {
        base = 2.0 * P - tau;
        sgn = -sgn;
    }
    return sgn * invert_super(pq, base);
}

double cos_pq(const PQPair& pq, double t) {
    const double s = std::abs(sin_pq(pq, t));
    const double core =
        std::pow(std::max(num::one_minus_pow(s, pq.q), 0.0), 1.0 / pq.p);
    if (pq.regime() == Regime::Sub) return core;  // sin_pq monotone, cos > 0
    const double P = pi_pq(pq).value;
    const double tau = std::fmod(std::abs(t), 2.0 * P);
    const double sgn = (tau < 0.5 * P || tau > 1.5 * P) ? 1.0 : -1.0;
    return sgn * core;
}

}  // namespace gel::trig
