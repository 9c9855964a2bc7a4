// Acceptance gate: one pass/fail line per criterion, nonzero exit if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <numbers>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "beattykit/beatty.hpp"
#include "beattykit/diophantine.hpp"
#include "beattykit/experiments.hpp"
#include "beattykit/mangoldt.hpp"
#include "beattykit/real.hpp"
#include "beattykit/sums.hpp"
#include "beattykit/trigapprox.hpp"

using namespace beattykit;
using beatty::BeattyParams;
using beatty::SumMethod;
namespace exps = beattykit::experiments;

namespace {

int g_failures = 0;

void report(int idx, const char* name, bool ok, const std::string& detail = "") {
    std::printf("[%s] criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", idx, name,
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<BeattyParams> family() {
    std::vector<BeattyParams> out;
    for (auto alpha : {Real::sqrt_of(2), Real::golden_ratio()})
        for (long beta : {0L, 1L, -2L}) out.push_back(BeattyParams::make(alpha, Real::integer(beta)));
    return out;
}

const std::vector<std::pair<std::uint64_t, std::uint64_t>> kCd = {
    {0, 1}, {1, 2}, {1, 3}, {2, 5}};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

// ---------------------------------------------------------------- criterion 1
void criterion1(const arith::MangoldtTable& table) {
    auto t0 = std::chrono::steady_clock::now();
    int mismatches = 0;
    for (const auto& p : family())
        for (auto [c, d] : kCd) {
            double e = beatty::beatty_lambda_sum(table, p, 100000, c, d, SumMethod::Enumeration);
            double i = beatty::beatty_lambda_sum(table, p, 100000, c, d, SumMethod::Identity);
            if (e != i) ++mismatches;  // order-matched: demanded defect is exactly 0
        }
    double dt = seconds_since(t0);
    report(1, "lambda-sum identity, 24 configs, N=1e5, defect 0", mismatches == 0 && dt < 10.0,
           "mismatches=" + std::to_string(mismatches) + " time=" + fmt(dt) + "s");
}

// ---------------------------------------------------------------- criterion 2
void criterion2(const arith::MangoldtTable& table) {
    double worst4 = 0.0, worst6 = 0.0;
    for (const auto& p : family())
        for (auto [c, d] : kCd) {
            worst4 = std::max(worst4, exps::decomposition_check(table, p, c, d, 10000));
            worst6 = std::max(worst6, exps::decomposition_check(table, p, c, d, 1000000));
        }
    report(2, "sawtooth decomposition defect", worst4 <= 1e-8 && worst6 <= 1e-6,
           "max@1e4=" + fmt(worst4) + " max@1e6=" + fmt(worst6));
}

// ---------------------------------------------------------------- criterion 3
void criterion3() {
    int disagreements = 0;
    for (const auto& p : family()) {
        std::set<std::int64_t> terms;
        for (std::uint64_t n = 1;; ++n) {
            std::int64_t t = beatty::beatty_term(p, n);
            if (t > 10000) break;
            terms.insert(t);
        }
        for (std::uint64_t m = 1; m <= 10000; ++m)
            if (beatty::is_member(p, m) != (terms.count(static_cast<std::int64_t>(m)) > 0))
                ++disagreements;
    }
    report(3, "membership criterion vs enumeration, m<=1e4", disagreements == 0,
           "disagreements=" + std::to_string(disagreements));
}

// ---------------------------------------------------------------- criterion 4
void criterion4() {
    bool ok = true;
    double worst_c = 0.0;
    std::string detail;
    for (int H : {10, 100, 1000}) {
        trig::TrigPoly poly = trig::vaaler_poly(H);
        double C = trig::vaaler_coeff_constant(poly);
        worst_c = std::max(worst_c, C);
        int bad = 0;
        for (int i = 0; i < 10000; ++i) {
            double x = (i + 0.5) / 10000.0;
            double diff = std::abs(poly.eval(x) - trig::sawtooth(x));
            if (diff > trig::fejer_envelope(x, H) + 1e-9) ++bad;
        }
        if (bad > 0) {
            ok = false;
            detail += "H=" + std::to_string(H) + ":bad=" + std::to_string(bad) + " ";
        }
    }
    ok = ok && worst_c <= 2.0;
    report(4, "sawtooth sandwich, H in {10,100,1000}, 1e4 grid", ok,
           detail + "C=" + fmt(worst_c));
}

// ---------------------------------------------------------------- criterion 5
void criterion5() {
    bool ok = true;
    std::string detail;
    const double gammas[] = {1.0 / std::sqrt(2.0), 1.0 / ((1.0 + std::sqrt(5.0)) / 2.0), 0.3};
    const double deltas[] = {0.01, 0.05};
    for (double gamma : gammas)
        for (double delta : deltas) {
            trig::SmoothedIndicator psi(gamma, delta,
                                        trig::SmoothedIndicator::default_truncation(delta));
            // range [0, 1 + 1e-9] on a fine sweep
            for (int i = 0; i <= 20000; ++i) {
                double v = psi.value(i / 20000.0);
                if (!(v >= 0.0 && v <= 1.0 + 1e-9)) ok = false;
            }
            // exact match with the sharp indicator on the two stated ranges
            for (int i = 0; i < 1000; ++i) {
                double x1 = delta + (gamma - 2 * delta) * (i + 0.5) / 1000.0;  // [delta, gamma-delta]
                double x0 = gamma + delta + (1.0 - gamma - 2 * delta) * (i + 0.5) / 1000.0;
                if (psi.value(x1) != 1.0) ok = false;
                if (psi.value(x0) != 0.0) ok = false;
            }
            // coefficient bound with C = 1 for all |j| <= 1e4
            for (long j = 1; j <= 10000; ++j) {
                double bound = std::min(1.0 / j, 1.0 / (static_cast<double>(j) * j * delta));
                if (std::abs(psi.coefficient(j)) > bound) {
                    ok = false;
                    detail = "coeff j=" + std::to_string(j);
                }
            }
        }
    report(5, "smoothed indicator contract, C=1 coefficient decay", ok, detail);
}

// ---------------------------------------------------------------- criterion 6
void criterion6() {
    std::mt19937_64 rng(0x5eed2024u);
    std::uniform_int_distribution<unsigned long> wd(1, 1000);
    std::uniform_int_distribution<long> Kd(2, 1000000);
    std::uniform_int_distribution<unsigned long> dd_(1, 50);
    std::uniform_int_distribution<int> coin(0, 1);
    const Real alphas[2] = {Real::sqrt_of(2), Real::golden_ratio()};
    int bad_basic = 0, bad_lower = 0, lower_checked = 0;
    for (int it = 0; it < 1000; ++it) {
        unsigned long w = wd(rng);
        mpz_class K(Kd(rng));
        unsigned long d = dd_(rng);
        const Real& alpha = alphas[coin(rng)];
        dio::RationalApprox ap = dio::dirichlet_approx_mod(alpha, w, d, K);
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), ap.a.get_mpz_t(), ap.q.get_mpz_t());
        Real target = alpha.mul_q(mpq_class(w, d));
        if (!(g == 1 && ap.q >= 1 && ap.q <= K && dio::approx_within(target, ap, K)))
            ++bad_basic;
        // lower-range inequality q > (K/d)^{1/tau - eps} / w, tau = 1, eps = 0.1
        if (K >= 100) {
            ++lower_checked;
            double lower = std::pow(K.get_d() / static_cast<double>(d), 0.9) /
                           static_cast<double>(w);
            if (ap.q.get_d() < lower) ++bad_lower;
        }
    }
    report(6, "dirichlet approximation, 1000 random cases", bad_basic == 0 && bad_lower == 0,
           "basic_bad=" + std::to_string(bad_basic) + " lower_bad=" + std::to_string(bad_lower) +
               "/" + std::to_string(lower_checked));
}

// ---------------------------------------------------------------- criterion 7
void criterion7() {
    std::mt19937_64 rng(0xd15c0u);
    std::uniform_real_distribution<double> ud(0.0, 1.0);
    std::uniform_int_distribution<int> md(1, 500);
    int bad = 0;
    for (int it = 0; it < 200; ++it) {
        int M = md(rng);
        std::vector<double> pts(M);
        for (auto& p : pts) p = ud(rng);
        auto fast = sums::discrepancy_exact(pts);
        if (std::abs(fast.value - sums::discrepancy_bruteforce(pts)) > 1e-12) ++bad;
    }
    auto rep = exps::discrepancy_decay_scan(Real::golden_ratio(), Real::integer(0),
                                            {100, 1000, 10000, 100000, 1000000});
    bool decay_ok = rep.has_fit && rep.fitted_exponent <= -0.85;
    report(7, "discrepancy oracle + golden-ratio decay", bad == 0 && decay_ok,
           "oracle_bad=" + std::to_string(bad) + " fit=" + fmt(rep.fitted_exponent));
}

// ---------------------------------------------------------------- criterion 8
void criterion8(const arith::MangoldtTable& table) {
    auto t0 = std::chrono::steady_clock::now();
    const std::uint64_t x = 1000000;
    double cheb = arith::chebyshev_sum(table, x, 0, 1);
    double cap = std::pow(static_cast<double>(x), 0.95);
    dd gamma = Real::sqrt_of(2).reciprocal().to_dd();
    bool ok = true;
    double worst = 0.0;
    for (long k = 1; k <= 15; ++k) {
        auto s = sums::twisted_sum(table, x, dd_mul_d(gamma, static_cast<double>(k)), 0, 1);
        worst = std::max(worst, s.abs());
        if (s.abs() > cap) ok = false;
        if (s.abs() > cheb) ok = false;  // triangle inequality, exact
    }
    double dt = seconds_since(t0);
    report(8, "twisted-sum cancellation, alpha=sqrt2, x=1e6, k<=15", ok && dt < 60.0,
           "max|S|=" + fmt(worst) + " cap=" + fmt(cap) + " time=" + fmt(dt) + "s");
}

// ---------------------------------------------------------------- criterion 9
std::string criterion9(const arith::MangoldtTable& table) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<std::uint64_t> grid;
    for (int k = 10; k <= 23; ++k) grid.push_back(std::uint64_t(1) << k);
    auto p = BeattyParams::make(Real::sqrt_of(2), Real::integer(0));
    auto rep = exps::verify_th1(table, p, 1, 3, grid);
    bool ok = rep.has_fit && rep.fitted_exponent <= 0.85;
    double worst_ratio = 0.0;
    for (const auto& row : rep.rows) {
        if (row.key < 4096.0) continue;
        double cap = std::pow(row.key, 0.85);
        worst_ratio = std::max(worst_ratio, std::abs(row.error) / cap);
        if (std::abs(row.error) > cap) ok = false;
    }
    double dt = seconds_since(t0);
    report(9, "theorem-1 trend, alpha=sqrt2, (c,d)=(1,3), 2^10..2^23",
           ok && dt < 300.0,
           "fit=" + fmt(rep.fitted_exponent) + " max|E|/N^.85=" + fmt(worst_ratio) +
               " time=" + fmt(dt) + "s");
    return rep.to_json(false);
}

// --------------------------------------------------------------- criterion 10
std::string criterion10(const arith::MangoldtTable& table) {
    // sqrt(10)-spaced grid; decade medians of 3 consecutive relative errors
    std::vector<std::uint64_t> grid;
    for (int j = 0; j <= 9; ++j)
        grid.push_back(static_cast<std::uint64_t>(std::llround(1000.0 * std::pow(10.0, j / 3.0))));
    auto p = BeattyParams::make(Real::sqrt_of(2), Real::rational(mpq_class(3, 10)));
    bool ok = true;
    std::string detail;
    std::string json;
    for (auto [c, d] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{0, 1}, {1, 2}}) {
        auto rep = exps::verify_th2(table, p, c, d, grid);
        std::vector<double> rel;
        for (const auto& row : rep.rows) rel.push_back(row.extra.value_or(0.0));
        if (rel.back() > 0.02) ok = false;
        // median of the three sqrt(10)-spaced samples per decade; the final
        // decade is anchored at its endpoint (median of the last 3 samples)
        auto med3 = [](double a, double b, double c) {
            return std::max(std::min(a, b), std::min(std::max(a, b), c));
        };
        std::vector<double> med;
        for (int g = 0; g < 3; ++g) med.push_back(med3(rel[3 * g], rel[3 * g + 1], rel[3 * g + 2]));
        med.push_back(med3(rel[7], rel[8], rel[9]));
        for (std::size_t i = 1; i < med.size(); ++i)
            if (med[i] > med[i - 1] + 1e-12) ok = false;
        detail += "d=" + std::to_string(d) + ":rel@1e6=" + fmt(rel.back()) + " med=[" +
                  fmt(med[0]) + "," + fmt(med[1]) + "," + fmt(med[2]) + "," + fmt(med[3]) + "] ";
        json += rep.to_json(false);
    }
    report(10, "theorem-2 trend, alpha=sqrt2, beta=3/10", ok, detail);
    return json;
}

// --------------------------------------------------------------- criterion 11
void criterion11(const arith::MangoldtTable& table) {
    std::mt19937_64 rng(0xfeedbeefu);
    std::uniform_int_distribution<std::uint64_t> dd_(1, 20);
    std::uniform_int_distribution<long> kd(1, 10);
    std::uniform_int_distribution<int> coin(0, 1);
    const std::uint64_t M = 10000;
    const Real gammas[2] = {Real::sqrt_of(2).reciprocal(), Real::golden_ratio().reciprocal()};
    double worst = 0.0;
    for (int it = 0; it < 100; ++it) {
        std::uint64_t d = dd_(rng);
        std::uint64_t c = std::uniform_int_distribution<std::uint64_t>(0, d - 1)(rng);
        long k = kd(rng);
        const Real& gamma_real = gammas[coin(rng)];
        dd gamma = gamma_real.to_dd();
        dd theta = gamma_real.mul_q(mpq_class(k, static_cast<long>(d))).to_dd();
        auto lhs = sums::progression_twisted_sum(table, M, d, c, gamma, k);
        auto full = sums::twisted_sum(table, d * M + c, theta, c, d);
        double f = dd_frac(dd_mul_d(theta, static_cast<double>(c)));
        std::complex<double> phase = std::polar(1.0, -2.0 * std::numbers::pi * f);
        // the full sum starts at n = c (its m = 0 term); remove it:
        // e(-theta*c) * Lambda(c) * e(theta*c) = Lambda(c)
        double m0 = (c >= 2) ? table.lambda(c) : 0.0;
        worst = std::max(worst, std::abs(lhs.value - (phase * full.value - m0)));
    }
    report(11, "progression reindexing identity, 100 random cases", worst <= 1e-9,
           "max defect=" + fmt(worst));
}

// --------------------------------------------------------------- criterion 12
void criterion12(const arith::MangoldtTable& table, const std::string& json9,
                 const std::string& json10) {
    // criterion-1 style report: single-N run, serialized
    auto p = BeattyParams::make(Real::sqrt_of(2), Real::integer(0));
    auto r1a = exps::verify_th1(table, p, 0, 1, {100000});
    auto r1b = exps::verify_th1(table, p, 0, 1, {100000});
    bool ok = r1a.to_json(false) == r1b.to_json(false) && r1a.to_csv() == r1b.to_csv();

    std::vector<std::uint64_t> grid9;
    for (int k = 10; k <= 23; ++k) grid9.push_back(std::uint64_t(1) << k);
    auto r9 = exps::verify_th1(table, p, 1, 3, grid9);
    if (r9.to_json(false) != json9) ok = false;

    std::vector<std::uint64_t> grid10;
    for (int j = 0; j <= 9; ++j)
        grid10.push_back(static_cast<std::uint64_t>(std::llround(1000.0 * std::pow(10.0, j / 3.0))));
    auto p10 = BeattyParams::make(Real::sqrt_of(2), Real::rational(mpq_class(3, 10)));
    std::string json10_again;
    for (auto [c, d] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{0, 1}, {1, 2}})
        json10_again += exps::verify_th2(table, p10, c, d, grid10).to_json(false);
    if (json10_again != json10) ok = false;

    report(12, "byte-identical reports on repeated runs", ok);
}

}  // namespace

int main() {
    std::printf("building prime-power table to 2^23 ...\n");
    std::fflush(stdout);
    arith::MangoldtTable table(std::uint64_t(1) << 23);

    criterion1(table);
    criterion2(table);
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8(table);
    std::string json9 = criterion9(table);
    std::string json10 = criterion10(table);
    criterion11(table);
    criterion12(table, json9, json10);

    if (g_failures == 0) {
        std::printf("acceptance: all 12 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criteria FAILED\n", g_failures);
    return 1;
}
