#include "beattykit/beatty.hpp"

#include <cmath>
#include <stdexcept>

#include "beattykit/kahan.hpp"

namespace beattykit::beatty {

BeattyParams BeattyParams::make(const Real& alpha, const Real& beta) {
    if (alpha.is_rational())
        throw std::domain_error("BeattyParams: alpha must be irrational");
    if (alpha.cmp_q(1) <= 0) throw std::domain_error("BeattyParams: alpha must exceed 1");
    Real gamma = alpha.reciprocal();
    Real delta = gamma.mul(beta.neg().add_q(1));
    return {alpha, beta, gamma, delta};
}

std::int64_t beatty_term(const BeattyParams& params, std::uint64_t n) {
    if (n < 1) throw std::invalid_argument("beatty_term: n must be >= 1");
    Real t = params.alpha.mul_q(mpq_class(static_cast<unsigned long>(n))).add(params.beta);
    return static_cast<std::int64_t>(t.floor().get_si());
}

bool is_member(const BeattyParams& params, std::uint64_t m) {
    if (m < 1) throw std::invalid_argument("is_member: m must be >= 1");
    // u = gamma*(m - beta + 1); criterion 0 < {u} <= gamma
    Real arg = params.beta.neg().add_q(mpq_class(static_cast<unsigned long>(m)) + 1);
    Real u = params.gamma.mul(arg);
    mpz_class fl = u.floor();
    Real frac = u.sub_q(mpq_class(fl));
    if (frac.cmp_q(0) <= 0) return false;
    if (frac.cmp(params.gamma) > 0) return false;
    // the unique preimage is n = floor(u); the sequence starts at n = 1
    return fl >= 1;
}

int hit_count(const BeattyParams& params, std::uint64_t m) {
    if (m < 1) throw std::invalid_argument("hit_count: m must be >= 1");
    if (!params.beta.is_integer())
        throw std::domain_error("hit_count: identity requires integer beta");
    mpq_class b(params.beta.floor());  // exact, beta is an integer
    mpq_class mm(static_cast<unsigned long>(m));
    mpz_class upper = params.gamma.mul_q(mm - b + 1).floor();
    mpz_class lower = params.gamma.mul_q(mm - b).floor();
    mpz_class diff = upper - lower;
    return static_cast<int>(diff.get_si());
}

double beatty_lambda_sum(const arith::MangoldtTable& table, const BeattyParams& params,
                         std::uint64_t N, std::uint64_t c, std::uint64_t d,
                         SumMethod method) {
    if (d == 0) throw std::invalid_argument("beatty_lambda_sum: d must be positive");
    if (c >= d) throw std::invalid_argument("beatty_lambda_sum: need 0 <= c < d");
    if (N > table.limit())
        throw std::out_of_range("beatty_lambda_sum: N exceeds table limit");
    if (method == SumMethod::Identity && !params.beta.is_integer())
        throw std::domain_error("beatty_lambda_sum: identity method requires integer beta");

    KahanSum acc;
    std::uint64_t m = (c == 0) ? d : c;
    for (; m <= N; m += d) {
        std::uint32_t p;
        if (!table.prime_power(m, p)) continue;  // Lambda(m) = 0
        double lam = std::log(static_cast<double>(p));
        if (method == SumMethod::Enumeration) {
            if (is_member(params, m)) acc.add(lam);
        } else {
            int h = hit_count(params, m);
            if (h != 0) acc.add(lam * h);
        }
    }
    return acc.value();
}

}  // namespace beattykit::beatty
