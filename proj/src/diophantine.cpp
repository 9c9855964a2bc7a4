#include "beattykit/diophantine.hpp"

#include <cmath>
#include <stdexcept>

#include "beattykit/errors.hpp"

namespace beattykit::dio {

std::vector<mpz_class> continued_fraction(const Real& x, int k) {
    if (x.cmp_q(0) <= 0) throw std::domain_error("continued_fraction: x must be positive");
    if (k < 1) throw std::invalid_argument("continued_fraction: k must be >= 1");
    std::vector<mpz_class> quotients;
    Real cur = x;
    for (int i = 0; i < k; ++i) {
        mpz_class a = cur.floor();
        quotients.push_back(a);
        Real rem = cur.sub_q(mpq_class(a));
        if (rem.is_zero()) break;  // exact rational expansion ends
        if (rem.is_rational() && rem.as_rational() == 0) break;
        cur = rem.reciprocal();
    }
    return quotients;
}

std::vector<RationalApprox> convergents(const Real& x, int k) {
    auto quotients = continued_fraction(x, k);
    std::vector<RationalApprox> out;
    mpz_class p_prev = 1, p_prev2 = 0;  // p_{-1} = 1, p_{-2} = 0
    mpz_class q_prev = 0, q_prev2 = 1;
    for (const mpz_class& a : quotients) {
        mpz_class p = a * p_prev + p_prev2;
        mpz_class q = a * q_prev + q_prev2;
        p_prev2 = p_prev;
        p_prev = p;
        q_prev2 = q_prev;
        q_prev = q;
        RationalApprox ap;
        ap.a = p;
        ap.q = q;
        mpq_class v(p, q);
        v.canonicalize();
        Real diff = x.sub_q(v);
        double e = diff.to_double();
        ap.err = std::abs(e);
        out.push_back(std::move(ap));
    }
    return out;
}

double dist_nearest_integer(double x) {
    double f = x - std::floor(x);
    return std::min(f, 1.0 - f);
}

double dist_nearest_integer(const Real& x) {
    mpz_class n = x.floor();
    Real frac = x.sub_q(mpq_class(n));
    double f = frac.to_double();
    return std::min(f, 1.0 - f);
}

namespace {

RationalApprox best_convergent_below(const Real& target, const mpz_class& K) {
    if (K < 1) throw std::invalid_argument("dirichlet_approx: K must be >= 1");
    // walk convergents until the denominator passes K
    constexpr int kMaxDepth = 20000;
    auto quotients = continued_fraction(target, kMaxDepth);
    mpz_class p_prev = 1, p_prev2 = 0;
    mpz_class q_prev = 0, q_prev2 = 1;
    mpz_class best_a, best_q = 0;
    for (const mpz_class& a : quotients) {
        mpz_class p = a * p_prev + p_prev2;
        mpz_class q = a * q_prev + q_prev2;
        if (q > K) break;
        best_a = p;
        best_q = q;
        p_prev2 = p_prev;
        p_prev = p;
        q_prev2 = q_prev;
        q_prev = q;
    }
    if (best_q == 0) throw std::logic_error("dirichlet_approx: no convergent with q <= K");
    RationalApprox ap;
    ap.a = best_a;
    ap.q = best_q;
    mpq_class v(best_a, best_q);
    v.canonicalize();
    ap.err = std::abs(target.sub_q(v).to_double());
    return ap;
}

}  // namespace

RationalApprox dirichlet_approx(const Real& alpha, unsigned long w, const mpz_class& K) {
    if (alpha.is_rational()) throw std::domain_error("dirichlet_approx: alpha must be irrational");
    if (w < 1) throw std::invalid_argument("dirichlet_approx: w must be >= 1");
    return best_convergent_below(alpha.mul_q(mpq_class(w)), K);
}

RationalApprox dirichlet_approx_mod(const Real& alpha, unsigned long w, unsigned long d,
                                    const mpz_class& K) {
    if (alpha.is_rational()) throw std::domain_error("dirichlet_approx: alpha must be irrational");
    if (w < 1 || d < 1) throw std::invalid_argument("dirichlet_approx_mod: need w, d >= 1");
    mpq_class scale(w, d);
    scale.canonicalize();
    return best_convergent_below(alpha.mul_q(scale), K);
}

TypeEstimate estimate_type(const Real& alpha, int depth) {
    if (alpha.is_rational()) throw std::domain_error("estimate_type: alpha must be irrational");
    if (alpha.kind() == Real::Kind::Quadratic) {
        // periodic continued fraction, bounded partial quotients
        return {1.0, 0, true};
    }
    auto quotients = continued_fraction(alpha, depth + 1);
    mpz_class q_prev = 0, q_prev2 = 1;
    double tau = 1.0;
    int used = 0;
    for (size_t i = 0; i + 1 < quotients.size(); ++i) {
        mpz_class q = quotients[i] * q_prev + q_prev2;
        q_prev2 = q_prev;
        q_prev = q;
        ++used;
        if (q <= 1) continue;
        double la = std::log(mpz_get_d(quotients[i + 1].get_mpz_t()));
        double lq = std::log(mpz_get_d(q.get_mpz_t()));
        if (la > 0) tau = std::max(tau, 1.0 + la / lq);
    }
    return {tau, used, false};
}

bool approx_within(const Real& target, const RationalApprox& ap, const mpz_class& K) {
    // |target - a/q| <= 1/(qK), decided exactly
    mpq_class center(ap.a, ap.q);
    center.canonicalize();
    mpq_class radius(1, ap.q * K);
    radius.canonicalize();
    return target.cmp_q(center - radius) >= 0 && target.cmp_q(center + radius) <= 0;
}

}  // namespace beattykit::dio
