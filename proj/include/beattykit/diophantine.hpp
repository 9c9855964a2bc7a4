#pragma once

#include <gmpxx.h>

#include <vector>

#include "beattykit/real.hpp"

namespace beattykit::dio {

struct RationalApprox {
    mpz_class a;
    mpz_class q;     // q > 0, gcd(a, q) = 1
    double err = 0;  // |target - a/q|
};

struct TypeEstimate {
    double tau_hat = 1.0;
    int depth = 0;
    bool exact = false;  // true when bounded partial quotients are certain
};

// Partial quotients [a0; a1, ...], at most k of them.  Rationals stop at the
// exact finite expansion; quadratic irrationals run the exact periodic
// algorithm; decimal literals throw precision_exhausted once the interval
// can no longer certify a quotient.
std::vector<mpz_class> continued_fraction(const Real& x, int k);

// First k convergents a_i/q_i in lowest terms.
std::vector<RationalApprox> convergents(const Real& x, int k);

// distance to the nearest integer, in [0, 1/2]
double dist_nearest_integer(double x);
double dist_nearest_integer(const Real& x);

// Largest-denominator convergent of alpha*w with q <= K.  Satisfies
// gcd(a,q) = 1 and |alpha*w - a/q| <= 1/(qK).
RationalApprox dirichlet_approx(const Real& alpha, unsigned long w, const mpz_class& K);

// Same for the target alpha*w/d.
RationalApprox dirichlet_approx_mod(const Real& alpha, unsigned long w, unsigned long d,
                                    const mpz_class& K);

// Irrationality-type estimate.  Quadratic irrationals are exactly type 1;
// anything else gets the lower estimate 1 + max log a_{k+1} / log q_k.
TypeEstimate estimate_type(const Real& alpha, int depth);

// exact inequality check |target - a/q| <= 1/(qK), used by tests
bool approx_within(const Real& target, const RationalApprox& ap, const mpz_class& K);

}  // namespace beattykit::dio
