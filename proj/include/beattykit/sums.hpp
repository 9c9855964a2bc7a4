#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "beattykit/dd.hpp"
#include "beattykit/mangoldt.hpp"
#include "beattykit/real.hpp"

namespace beattykit::sums {

struct ExpSumResult {
    std::complex<double> value{0.0, 0.0};
    std::uint64_t terms = 0;  // nonzero Lambda contributions
    std::uint64_t x = 0;
    double theta = 0.0;
    std::uint64_t c = 0, d = 1;

    double abs() const { return std::hypot(value.real(), value.imag()); }
};

// sum of Lambda(n) e(theta*n) over n <= x, n == c (mod d).  theta is a
// double-double so the fractional part of theta*n survives at n ~ 1e8.
ExpSumResult twisted_sum(const arith::MangoldtTable& table, std::uint64_t x, dd theta,
                         std::uint64_t c, std::uint64_t d);

// (x/sqrt(q) + sqrt(q*x) + x^{4/5}) * (log x)^3
double lemma23_bound(double x, std::uint64_t q);

// sum of Lambda(d*m + c) e(gamma*k*m) over m <= M
ExpSumResult progression_twisted_sum(const arith::MangoldtTable& table, std::uint64_t M,
                                     std::uint64_t d, std::uint64_t c, dd gamma, long k);

struct DiscrepancyResult {
    std::uint64_t M = 0;
    double value = 0.0;
    double witness_lo = 0.0, witness_hi = 0.0;  // interval approaching the sup
};

// Extreme discrepancy by the sorted-points closed form
// D = 1/M + max_i(i/M - x_(i)) - min_i(i/M - x_(i)).
DiscrepancyResult discrepancy_exact(std::vector<double> points);

// Quadratic-cost oracle over intervals with endpoints at sample points
// (and their one-sided limits).  M <= 2000.
double discrepancy_bruteforce(const std::vector<double>& points);

// discrepancy of the fractional parts {alpha*m + beta}, m = 1..M
DiscrepancyResult beatty_discrepancy(const Real& alpha, const Real& beta, std::uint64_t M);

// the fractional parts themselves (double-double reduction)
std::vector<double> beatty_fractional_parts(const Real& alpha, const Real& beta,
                                            std::uint64_t M);

}  // namespace beattykit::sums
