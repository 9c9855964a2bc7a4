#pragma once

#include <cstdint>

#include "beattykit/mangoldt.hpp"
#include "beattykit/real.hpp"

namespace beattykit::beatty {

// (alpha, beta) with cached gamma = 1/alpha and delta = (1 - beta)/alpha.
// alpha must be irrational and > 1, checked exactly at construction.
struct BeattyParams {
    Real alpha, beta, gamma, delta;

    static BeattyParams make(const Real& alpha, const Real& beta);
};

// floor(alpha*n + beta), exact
std::int64_t beatty_term(const BeattyParams& params, std::uint64_t n);

// Membership criterion 0 < {gamma*(m - beta + 1)} <= gamma, evaluated
// exactly, with the recovered index required to satisfy n >= 1.
bool is_member(const BeattyParams& params, std::uint64_t m);

// floor(gamma*(m - beta + 1)) - floor(gamma*(m - beta)); the number of
// n with floor(alpha*n + beta) = m.  Requires integer beta.
int hit_count(const BeattyParams& params, std::uint64_t m);

enum class SumMethod { Enumeration, Identity };

// sum of Lambda(m) over m <= N, m == c (mod d), m in the Beatty sequence.
// Both methods walk m in the same ascending order, so they agree
// bit-for-bit when beta is an integer.
double beatty_lambda_sum(const arith::MangoldtTable& table, const BeattyParams& params,
                         std::uint64_t N, std::uint64_t c, std::uint64_t d,
                         SumMethod method);

}  // namespace beattykit::beatty
