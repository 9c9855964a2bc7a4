#include "beattykit/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

#include "beattykit/diophantine.hpp"
#include "beattykit/kahan.hpp"
#include "beattykit/trigapprox.hpp"

namespace beattykit::experiments {

namespace {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string iso_now() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

double tau_of(const Real& alpha, bool* exact = nullptr) {
    dio::TypeEstimate est = dio::estimate_type(alpha, 60);
    if (exact) *exact = est.exact;
    return est.tau_hat;
}

// beta as an exact integer (preconditioned by the caller paths that need it)
long beta_int(const beatty::BeattyParams& params) {
    if (!params.beta.is_integer())
        throw std::domain_error("this experiment requires integer beta");
    return static_cast<long>(params.beta.floor().get_si());
}

}  // namespace

FitResult fit_exponent(const std::vector<std::pair<double, double>>& rows) {
    std::vector<std::pair<double, double>> usable;
    int dropped = 0;
    for (const auto& [n, e] : rows) {
        if (e > 0.0 && n > 0.0)
            usable.emplace_back(std::log(n), std::log(e));
        else
            ++dropped;
    }
    if (usable.size() < 3)
        throw std::domain_error("fit_exponent: fewer than 3 usable rows");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [x, y] : usable) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    double n = static_cast<double>(usable.size());
    double denom = n * sxx - sx * sx;
    FitResult fit;
    fit.slope = (n * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / n;
    double ss = 0;
    for (const auto& [x, y] : usable) {
        double r = y - (fit.intercept + fit.slope * x);
        ss += r * r;
    }
    fit.residual_norm = std::sqrt(ss);
    fit.dropped = dropped;
    return fit;
}

std::string ExperimentReport::to_json(bool with_timestamp) const {
    nlohmann::ordered_json j;
    j["schema_version"] = kReportSchemaVersion;
    j["experiment"] = id;
    j["version"] = version;
    if (with_timestamp) j["timestamp"] = timestamp;
    nlohmann::ordered_json cfg;
    for (const auto& [k, v] : params) cfg[k] = v;
    j["config"] = cfg;
    nlohmann::ordered_json jrows = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
        nlohmann::ordered_json r;
        r["N"] = row.key;
        r["lhs"] = row.lhs;
        r["main_term"] = row.main_term;
        r["error"] = row.error;
        r["ref_bound"] = row.ref_bound;
        if (row.extra) r["extra"] = *row.extra;
        jrows.push_back(r);
    }
    j["rows"] = jrows;
    if (has_fit) {
        j["fitted_exponent"] = fitted_exponent;
        j["theorem_exponent"] = theorem_exponent;
    }
    return j.dump(2);
}

std::string ExperimentReport::to_csv() const {
    std::string out = "N,lhs,main_term,error,ref_bound\n";
    for (const auto& row : rows) {
        out += fmt_double(row.key) + "," + fmt_double(row.lhs) + "," +
               fmt_double(row.main_term) + "," + fmt_double(row.error) + "," +
               fmt_double(row.ref_bound) + "\n";
    }
    return out;
}

ExperimentReport verify_th1(const arith::MangoldtTable& table,
                            const beatty::BeattyParams& params, std::uint64_t c,
                            std::uint64_t d, const std::vector<std::uint64_t>& N_grid,
                            double eps) {
    if (N_grid.empty()) throw std::invalid_argument("verify_th1: empty grid");
    beta_int(params);  // theorem requires integer beta
    bool tau_exact = false;
    double tau = tau_of(params.alpha, &tau_exact);

    ExperimentReport rep;
    rep.id = "verify-th1";
    rep.timestamp = iso_now();
    rep.theorem_exponent = 1.0 - 1.0 / (3.0 * tau + 2.0);
    rep.params["alpha"] = params.alpha.str();
    rep.params["beta"] = params.beta.str();
    rep.params["c"] = std::to_string(c);
    rep.params["d"] = std::to_string(d);
    rep.params["tau"] = fmt_double(tau);
    rep.params["tau_exact"] = tau_exact ? "true" : "false";
    rep.params["epsilon"] = fmt_double(eps);
    rep.params["comparison_exponent_4tau2"] = fmt_double(1.0 - 1.0 / (4.0 * tau + 2.0));

    double gamma = params.gamma.to_double();
    std::vector<std::uint64_t> grid(N_grid);
    std::sort(grid.begin(), grid.end());
    std::vector<std::pair<double, double>> fit_rows;
    for (std::uint64_t N : grid) {
        double lhs =
            beatty::beatty_lambda_sum(table, params, N, c, d, beatty::SumMethod::Identity);
        double main = gamma * arith::chebyshev_sum(table, N, c, d);
        double err = lhs - main;
        double nn = static_cast<double>(N);
        rep.rows.push_back({nn, lhs, main, err,
                            std::pow(nn, rep.theorem_exponent + eps), std::nullopt});
        fit_rows.emplace_back(nn, std::abs(err));
    }
    try {
        FitResult fit = fit_exponent(fit_rows);
        rep.fitted_exponent = fit.slope;
        rep.has_fit = true;
        rep.params["fit_dropped_rows"] = std::to_string(fit.dropped);
        rep.params["fit_residual_norm"] = fmt_double(fit.residual_norm);
    } catch (const std::domain_error&) {
        rep.has_fit = false;
    }
    return rep;
}

double decomposition_check(const arith::MangoldtTable& table,
                           const beatty::BeattyParams& params, std::uint64_t c,
                           std::uint64_t d, std::uint64_t N) {
    long b = beta_int(params);
    if (d == 0 || c >= d) throw std::invalid_argument("decomposition_check: bad (c,d)");
    if (N > table.limit())
        throw std::out_of_range("decomposition_check: N exceeds table limit");
    double lhs =
        beatty::beatty_lambda_sum(table, params, N, c, d, beatty::SumMethod::Identity);

    dd gamma = params.gamma.to_dd();
    KahanSum cheb, saw;
    std::uint64_t m = (c == 0) ? d : c;
    for (; m <= N; m += d) {
        std::uint32_t p;
        if (!table.prime_power(m, p)) continue;
        double lam = std::log(static_cast<double>(p));
        cheb.add(lam);
        double a = static_cast<double>(static_cast<std::int64_t>(m) - b);
        double psi_a = dd_frac(dd_mul_d(gamma, a)) - 0.5;
        double psi_b = dd_frac(dd_mul_d(gamma, a + 1.0)) - 0.5;
        saw.add(lam * (psi_a - psi_b));
    }
    double rhs = params.gamma.to_double() * cheb.value() + saw.value();
    return std::abs(lhs - rhs);
}

double sd_sum(const arith::MangoldtTable& table, const beatty::BeattyParams& params,
              std::uint64_t c, std::uint64_t d, std::uint64_t N, int D) {
    if (D != 0 && D != 1) throw std::invalid_argument("sd_sum: D must be 0 or 1");
    long b = beta_int(params);
    if (d == 0 || c >= d) throw std::invalid_argument("sd_sum: bad (c,d)");
    if (N > table.limit()) throw std::out_of_range("sd_sum: N exceeds table limit");
    dd gamma = params.gamma.to_dd();
    KahanSum acc;
    std::uint64_t m = (c == 0) ? d : c;
    for (; m <= N; m += d) {
        std::uint32_t p;
        if (!table.prime_power(m, p)) continue;
        double lam = std::log(static_cast<double>(p));
        double a = static_cast<double>(static_cast<std::int64_t>(m) - b + D);
        acc.add(lam * (dd_frac(dd_mul_d(gamma, a)) - 0.5));
    }
    return acc.value();
}

ExperimentReport verify_th2(const arith::MangoldtTable& table,
                            const beatty::BeattyParams& params, std::uint64_t c,
                            std::uint64_t d, const std::vector<std::uint64_t>& N_grid,
                            double eps) {
    if (N_grid.empty()) throw std::invalid_argument("verify_th2: empty grid");
    if (d == 0 || c >= d) throw std::invalid_argument("verify_th2: bad (c,d)");
    bool tau_exact = false;
    double tau = tau_of(params.alpha, &tau_exact);

    std::vector<std::uint64_t> grid(N_grid);
    std::sort(grid.begin(), grid.end());
    std::uint64_t N_max = grid.back();
    std::int64_t M_max = beatty::beatty_term(params, N_max);
    if (M_max < 0 || d * static_cast<std::uint64_t>(M_max) + c > table.limit())
        throw std::out_of_range("verify_th2: table limit below d*[alpha N + beta] + c");

    ExperimentReport rep;
    rep.id = "verify-th2";
    rep.timestamp = iso_now();
    rep.theorem_exponent = 1.0 - eps;
    rep.params["alpha"] = params.alpha.str();
    rep.params["beta"] = params.beta.str();
    rep.params["c"] = std::to_string(c);
    rep.params["d"] = std::to_string(d);
    rep.params["tau"] = fmt_double(tau);
    rep.params["tau_exact"] = tau_exact ? "true" : "false";
    rep.params["epsilon"] = fmt_double(eps);
    // the theorem's stated range for d: sufficient, not enforced
    double d_cap = std::pow(static_cast<double>(N_max), 1.0 / (2.0 * tau + 2.0) - eps);
    rep.params["d_range_ok"] = (static_cast<double>(d) <= d_cap) ? "true" : "false";
    rep.params["d_range_cap"] = fmt_double(d_cap);

    double gamma = params.gamma.to_double();
    KahanSum lhs_acc, main_acc;
    std::uint64_t n = 1;       // index into the Beatty sequence
    std::uint64_t m_done = 0;  // main-term summation progress
    std::vector<std::pair<double, double>> fit_rows;
    for (std::uint64_t N : grid) {
        for (; n <= N; ++n) {
            std::int64_t t = beatty::beatty_term(params, n);
            if (t < 1) continue;
            std::uint64_t arg = d * static_cast<std::uint64_t>(t) + c;
            std::uint32_t p;
            if (arg >= 2 && arg <= table.limit() && table.prime_power(arg, p))
                lhs_acc.add(std::log(static_cast<double>(p)));
        }
        std::int64_t M_N = beatty::beatty_term(params, N);
        for (; m_done < static_cast<std::uint64_t>(std::max<std::int64_t>(M_N, 0));) {
            ++m_done;
            std::uint64_t arg = d * m_done + c;
            std::uint32_t p;
            if (arg >= 2 && table.prime_power(arg, p))
                main_acc.add(std::log(static_cast<double>(p)));
        }
        double lhs = lhs_acc.value();
        double main = gamma * main_acc.value();
        double err = lhs - main;
        double nn = static_cast<double>(N);
        double rel = std::abs(err) / std::max(std::abs(main), 1.0);
        rep.rows.push_back(
            {nn, lhs, main, err, std::pow(nn, 1.0 - eps), rel});
        fit_rows.emplace_back(nn, std::abs(err));
    }
    try {
        FitResult fit = fit_exponent(fit_rows);
        rep.fitted_exponent = fit.slope;
        rep.has_fit = true;
        rep.params["fit_dropped_rows"] = std::to_string(fit.dropped);
        rep.params["fit_residual_norm"] = fmt_double(fit.residual_norm);
    } catch (const std::domain_error&) {
        rep.has_fit = false;
    }
    return rep;
}

ExperimentReport lemma24_scan(const arith::MangoldtTable& table,
                              const beatty::BeattyParams& params, std::uint64_t c,
                              std::uint64_t d, std::uint64_t x, long k_max, double eps) {
    if (k_max < 1) throw std::invalid_argument("lemma24_scan: k_max must be >= 1");
    bool tau_exact = false;
    double tau = tau_of(params.alpha, &tau_exact);
    double exponent = 1.0 - 1.0 / (3.0 * tau + 2.0);
    double xx = static_cast<double>(x);
    double k_cap = std::pow(xx, 1.0 / (3.0 * tau + 2.0));

    ExperimentReport rep;
    rep.id = "lemma24-scan";
    rep.timestamp = iso_now();
    rep.theorem_exponent = exponent;
    rep.params["alpha"] = params.alpha.str();
    rep.params["c"] = std::to_string(c);
    rep.params["d"] = std::to_string(d);
    rep.params["x"] = std::to_string(x);
    rep.params["tau"] = fmt_double(tau);
    rep.params["epsilon"] = fmt_double(eps);
    rep.params["k_cap"] = fmt_double(k_cap);
    rep.params["k_range_ok"] = (static_cast<double>(k_max) <= k_cap) ? "true" : "false";

    dd gamma = params.gamma.to_dd();
    double ref = std::pow(xx, exponent);
    for (long k = 1; k <= k_max; ++k) {
        dd theta = dd_mul_d(gamma, static_cast<double>(k));
        sums::ExpSumResult s = sums::twisted_sum(table, x, theta, c, d);
        // K-selection diagnostic: K = x^{delta(tau, k, x)}
        double delta_exp =
            (1.0 + std::log(static_cast<double>(k)) / std::log(xx)) / (1.0 + 1.0 / tau);
        rep.rows.push_back({static_cast<double>(k), s.abs(), 0.0, s.abs(), ref, delta_exp});
    }
    return rep;
}

ExperimentReport discrepancy_decay_scan(const Real& alpha, const Real& beta,
                                        const std::vector<std::uint64_t>& M_grid) {
    if (M_grid.empty()) throw std::invalid_argument("discrepancy_decay_scan: empty grid");
    bool tau_exact = false;
    double tau = tau_of(alpha, &tau_exact);

    ExperimentReport rep;
    rep.id = "decay-scan";
    rep.timestamp = iso_now();
    rep.theorem_exponent = -1.0 / tau;
    rep.params["alpha"] = alpha.str();
    rep.params["beta"] = beta.str();
    rep.params["tau"] = fmt_double(tau);
    rep.params["tau_exact"] = tau_exact ? "true" : "false";

    std::vector<std::uint64_t> grid(M_grid);
    std::sort(grid.begin(), grid.end());
    std::vector<std::pair<double, double>> fit_rows;
    for (std::uint64_t M : grid) {
        sums::DiscrepancyResult dres = sums::beatty_discrepancy(alpha, beta, M);
        double mm = static_cast<double>(M);
        double ref = std::pow(mm, -1.0 / tau);
        rep.rows.push_back({mm, dres.value, 0.0, dres.value, ref, std::nullopt});
        fit_rows.emplace_back(mm, dres.value);
    }
    try {
        FitResult fit = fit_exponent(fit_rows);
        rep.fitted_exponent = fit.slope;
        rep.has_fit = true;
        rep.params["fit_dropped_rows"] = std::to_string(fit.dropped);
        rep.params["fit_residual_norm"] = fmt_double(fit.residual_norm);
    } catch (const std::domain_error&) {
        rep.has_fit = false;
    }
    return rep;
}

PipelineReport vinogradov_pipeline_check(const arith::MangoldtTable& table,
                                         const beatty::BeattyParams& params,
                                         std::uint64_t c, std::uint64_t d, std::uint64_t N,
                                         double delta) {
    if (d == 0 || c >= d) throw std::invalid_argument("pipeline_check: bad (c,d)");
    double gamma = params.gamma.to_double();
    trig::SmoothedIndicator psi(gamma, delta, trig::SmoothedIndicator::default_truncation(delta));

    std::int64_t M_signed = beatty::beatty_term(params, N);
    if (M_signed < 1) throw std::domain_error("pipeline_check: [alpha N + beta] < 1");
    std::uint64_t M = static_cast<std::uint64_t>(M_signed);
    if (d * M + c > table.limit())
        throw std::out_of_range("pipeline_check: table limit below d*M + c");

    dd gamma_dd = params.gamma.to_dd();
    dd delta_dd = params.delta.to_dd();

    PipelineReport rep;
    rep.M = M;
    rep.delta = delta;
    rep.lambda_cap = std::log(static_cast<double>(d * M + c));

    KahanSum sharp, smoothed;
    std::vector<double> fracs;
    fracs.reserve(M);
    for (std::uint64_t m = 1; m <= M; ++m) {
        double f = dd_frac(dd_add(dd_mul_d(gamma_dd, static_cast<double>(m)), delta_dd));
        fracs.push_back(f);
        bool exceptional = (f < delta) || (f > gamma - delta && f < gamma + delta) ||
                           (f > 1.0 - delta);
        if (exceptional) ++rep.exceptional_count;
        std::uint64_t arg = d * m + c;
        std::uint32_t p;
        if (arg < 2 || !table.prime_power(arg, p)) continue;
        double lam = std::log(static_cast<double>(p));
        if (f > 0.0 && f <= gamma) sharp.add(lam);
        smoothed.add(lam * psi.value(f));
    }
    rep.sharp_sum = sharp.value();
    rep.smoothed_sum = smoothed.value();
    rep.discrepancy = sums::discrepancy_exact(fracs).value;
    rep.count_bound_ok = std::abs(rep.sharp_sum - rep.smoothed_sum) <=
                         rep.lambda_cap * static_cast<double>(rep.exceptional_count) + 1e-9;
    rep.discrepancy_bound_ok =
        static_cast<double>(rep.exceptional_count) / static_cast<double>(M) <=
        4.0 * delta + rep.discrepancy + 1e-12;
    return rep;
}

}  // namespace beattykit::experiments
