#pragma once

#include "gelliptic/trig.hpp"

namespace gel::ell {

/// Elliptic modulus. k = 1 is representable so the merged-singularity
/// endpoint can be evaluated directly; complete integrals exist there only
/// for p > 2 (endpoint exponent 2/p).
struct Modulus {
    double k;
    explicit Modulus(double k_);
};

/// arcsn_pq(sigma,k) = integral of ((1-s^q)(1-k^q s^q))^(-1/p) over [0,sigma].
double arcsn_pq(const trig::PQPair& pq, Modulus k, double sigma);

/// Quarter period K_pq(k) = arcsn_pq(1,k); strictly increasing in k.
/// Throws "divergent" in the Sub regime and for k=1 with p <= 2, and
/// "near-divergent modulus" when K would exceed 1e8.
double complete_K(const trig::PQPair& pq, Modulus k);

/// Inverse of arcsn_pq extended to R: odd and 4K periodic (Super),
/// odd and strictly increasing (Sub). sn_pq(t,0) = sin_pq(t).
double sn_pq(const trig::PQPair& pq, Modulus k, double t);

/// cn_pq = (1-sn^q)^(1/p) with the sign of d/dt sn_pq.
double cn_pq(const trig::PQPair& pq, Modulus k, double t);

/// dn_pq = (1-k^q sn^q)^(1/p); positive everywhere.
double dn_pq(const trig::PQPair& pq, Modulus k, double t);

/// Amplitude: the angle theta with sn_pq(t,k) = sin_pq(theta), t in [0,K].
double am_pq(const trig::PQPair& pq, Modulus k, double t);

/// Immutable bundle caching the quarter period, so repeated evaluation on
/// one (p,q,k) pays a single quadrature. Shareable across threads.
struct EllipticContext {
    trig::PQPair pq;
    Modulus k;
    double K;  // +infinity in the Sub regime
    EllipticContext(const trig::PQPair& pq_, Modulus k_);
    double sn(double t) const { return sn_pq(pq, k, t); }
    double cn(double t) const { return cn_pq(pq, k, t); }
    double dn(double t) const { return dn_pq(pq, k, t); }
    double am(double t) const { return am_pq(pq, k, t); }
};

}  // namespace gel::ell
