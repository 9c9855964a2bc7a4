#include "beattykit/sums.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "beattykit/kahan.hpp"

namespace beattykit::sums {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline std::complex<double> unit_phase(dd theta, std::uint64_t n) {
    dd t = dd_mul_d(theta, static_cast<double>(n));
    double f = dd_frac(t);
    return std::polar(1.0, kTwoPi * f);
}
}  // namespace

ExpSumResult twisted_sum(const arith::MangoldtTable& table, std::uint64_t x, dd theta,
                         std::uint64_t c, std::uint64_t d) {
    if (d == 0) throw std::invalid_argument("twisted_sum: d must be positive");
    if (c >= d) throw std::invalid_argument("twisted_sum: need 0 <= c < d");
    if (x > table.limit()) throw std::out_of_range("twisted_sum: x exceeds table limit");
    ExpSumResult res;
    res.x = x;
    res.theta = theta.value();
    res.c = c;
    res.d = d;
    KahanComplexSum acc;
    std::uint64_t n = (c == 0) ? d : c;
    for (; n <= x; n += d) {
        std::uint32_t p;
        if (!table.prime_power(n, p)) continue;
        double lam = std::log(static_cast<double>(p));
        acc.add(lam * unit_phase(theta, n));
        ++res.terms;
    }
    res.value = acc.value();
    return res;
}

double lemma23_bound(double x, std::uint64_t q) {
    if (!(x > 1.0)) throw std::domain_error("lemma23_bound: x must exceed 1");
    if (q < 1) throw std::invalid_argument("lemma23_bound: q must be >= 1");
    double qq = static_cast<double>(q);
    double lx = std::log(x);
    return (x / std::sqrt(qq) + std::sqrt(qq * x) + std::pow(x, 0.8)) * lx * lx * lx;
}

ExpSumResult progression_twisted_sum(const arith::MangoldtTable& table, std::uint64_t M,
                                     std::uint64_t d, std::uint64_t c, dd gamma, long k) {
    if (d == 0) throw std::invalid_argument("progression_twisted_sum: d must be positive");
    if (c >= d) throw std::invalid_argument("progression_twisted_sum: need 0 <= c < d");
    if (d * M + c > table.limit())
        throw std::out_of_range("progression_twisted_sum: d*M + c exceeds table limit");
    dd theta = dd_mul_d(gamma, static_cast<double>(k));
    ExpSumResult res;
    res.x = M;
    res.theta = theta.value();
    res.c = c;
    res.d = d;
    KahanComplexSum acc;
    for (std::uint64_t m = 1; m <= M; ++m) {
        std::uint64_t n = d * m + c;
        std::uint32_t p;
        if (!table.prime_power(n, p)) continue;
        double lam = std::log(static_cast<double>(p));
        acc.add(lam * unit_phase(theta, m));
        ++res.terms;
    }
    res.value = acc.value();
    return res;
}

DiscrepancyResult discrepancy_exact(std::vector<double> points) {
    const std::uint64_t M = points.size();
    if (M == 0) throw std::invalid_argument("discrepancy_exact: empty point set");
    for (double p : points)
        if (!(p >= 0.0 && p < 1.0))
            throw std::domain_error("discrepancy_exact: points must lie in [0,1)");
    std::sort(points.begin(), points.end());
    double best_hi = -2.0, best_lo = 2.0;
    std::size_t arg_hi = 0, arg_lo = 0;
    for (std::size_t i = 0; i < M; ++i) {
        double v = static_cast<double>(i + 1) / M - points[i];
        if (v > best_hi) {
            best_hi = v;
            arg_hi = i;
        }
        if (v < best_lo) {
            best_lo = v;
            arg_lo = i;
        }
    }
    DiscrepancyResult res;
    res.M = M;
    res.value = 1.0 / M + best_hi - best_lo;
    res.value = std::clamp(res.value, 1.0 / M, 1.0);
    res.witness_lo = points[arg_lo];
    res.witness_hi = points[arg_hi];
    return res;
}

double discrepancy_bruteforce(const std::vector<double>& points) {
    const std::size_t M = points.size();
    if (M == 0) throw std::invalid_argument("discrepancy_bruteforce: empty point set");
    if (M > 2000) throw std::invalid_argument("discrepancy_bruteforce: M must be <= 2000");
    for (double p : points)
        if (!(p >= 0.0 && p < 1.0))
            throw std::domain_error("discrepancy_bruteforce: points must lie in [0,1)");
    std::vector<double> pts(points);
    std::sort(pts.begin(), pts.end());
    // candidate endpoints: 0, the points, 1
    std::vector<double> ends;
    ends.push_back(0.0);
    ends.insert(ends.end(), pts.begin(), pts.end());
    ends.push_back(1.0);
    ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
    auto count_closed = [&](double a, double b) {
        return std::upper_bound(pts.begin(), pts.end(), b) -
               std::lower_bound(pts.begin(), pts.end(), a);
    };
    auto count_open = [&](double a, double b) {
        auto lo = std::upper_bound(pts.begin(), pts.end(), a);
        auto hi = std::lower_bound(pts.begin(), pts.end(), b);
        return hi > lo ? hi - lo : 0;
    };
    double best = 0.0;
    for (std::size_t i = 0; i < ends.size(); ++i) {
        for (std::size_t j = i; j < ends.size(); ++j) {
            double len = ends[j] - ends[i];
            double over = static_cast<double>(count_closed(ends[i], ends[j])) / M - len;
            double under = len - static_cast<double>(count_open(ends[i], ends[j])) / M;
            best = std::max({best, over, under});
        }
    }
    return best;
}

std::vector<double> beatty_fractional_parts(const Real& alpha, const Real& beta,
                                            std::uint64_t M) {
    if (M < 1) throw std::invalid_argument("beatty_fractional_parts: M must be >= 1");
    dd a = alpha.to_dd();
    dd b = beta.to_dd();
    std::vector<double> pts;
    pts.reserve(M);
    for (std::uint64_t m = 1; m <= M; ++m) {
        dd t = dd_add(dd_mul_d(a, static_cast<double>(m)), b);
        pts.push_back(dd_frac(t));
    }
    return pts;
}

DiscrepancyResult beatty_discrepancy(const Real& alpha, const Real& beta, std::uint64_t M) {
    return discrepancy_exact(beatty_fractional_parts(alpha, beta, M));
}

}  // namespace beattykit::sums
