#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "beattykit/beatty.hpp"
#include "beattykit/mangoldt.hpp"
#include "beattykit/real.hpp"
#include "beattykit/sums.hpp"

namespace beattykit::experiments {

inline constexpr const char* kToolkitVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;

struct FitResult {
    double slope = 0.0;
    double intercept = 0.0;
    double residual_norm = 0.0;
    int dropped = 0;  // rows with E <= 0 excluded from the fit
};

// OLS slope of log E against log N; rows with E <= 0 are dropped and
// counted.  Needs at least 3 usable rows.
FitResult fit_exponent(const std::vector<std::pair<double, double>>& rows);

struct ReportRow {
    double key = 0.0;  // N, k or M depending on the experiment
    double lhs = 0.0;
    double main_term = 0.0;
    double error = 0.0;
    double ref_bound = 0.0;
    std::optional<double> extra;  // experiment-specific diagnostic
};

struct ExperimentReport {
    std::string id;
    std::map<std::string, std::string> params;  // ordered, deterministic
    std::vector<ReportRow> rows;
    double fitted_exponent = 0.0;
    double theorem_exponent = 0.0;
    bool has_fit = false;
    std::string timestamp;  // excluded from determinism comparisons
    std::string version = kToolkitVersion;

    std::string to_json(bool with_timestamp = true) const;
    std::string to_csv() const;
};

// Theorem-1 style experiment: lhs = Beatty-restricted Chebyshev sum
// (identity method), main term = gamma * chebyshev_sum, error fitted
// against the reference exponent 1 - 1/(3*tau + 2) + eps.
ExperimentReport verify_th1(const arith::MangoldtTable& table,
                            const beatty::BeattyParams& params, std::uint64_t c,
                            std::uint64_t d, const std::vector<std::uint64_t>& N_grid,
                            double eps = 0.05);

// Both sides of the floor-difference / sawtooth decomposition; returns
// the absolute defect (zero in exact arithmetic).
double decomposition_check(const arith::MangoldtTable& table,
                           const beatty::BeattyParams& params, std::uint64_t c,
                           std::uint64_t d, std::uint64_t N);

// S_D = sum Lambda(m) psi((m - beta + D)/alpha) over m <= N, m == c (mod d)
double sd_sum(const arith::MangoldtTable& table, const beatty::BeattyParams& params,
              std::uint64_t c, std::uint64_t d, std::uint64_t N, int D);

// Theorem-2 style experiment: lhs = sum Lambda(d*[alpha n + beta] + c),
// main term = gamma * sum_{m <= [alpha N + beta]} Lambda(d m + c).
ExperimentReport verify_th2(const arith::MangoldtTable& table,
                            const beatty::BeattyParams& params, std::uint64_t c,
                            std::uint64_t d, const std::vector<std::uint64_t>& N_grid,
                            double eps = 0.05);

// |twisted_sum| at theta = k*gamma for 1 <= k <= k_max, with the
// K-selection diagnostic delta(tau,w,x) = (1 + log w/log x)/(1 + 1/tau).
ExperimentReport lemma24_scan(const arith::MangoldtTable& table,
                              const beatty::BeattyParams& params, std::uint64_t c,
                              std::uint64_t d, std::uint64_t x, long k_max,
                              double eps = 0.05);

// discrepancy of {alpha m + beta} against the reference decay M^{-1/tau}
ExperimentReport discrepancy_decay_scan(const Real& alpha, const Real& beta,
                                        const std::vector<std::uint64_t>& M_grid);

struct PipelineReport {
    std::uint64_t M = 0;
    std::uint64_t exceptional_count = 0;  // V(I, M)
    double sharp_sum = 0.0;
    double smoothed_sum = 0.0;
    double lambda_cap = 0.0;     // log(d*M + c)
    double delta = 0.0;
    double discrepancy = 0.0;    // D of {gamma m + delta}, m <= M
    bool count_bound_ok = false;       // |sharp - smoothed| <= lambda_cap * V
    bool discrepancy_bound_ok = false; // V/M <= 4*delta + D(M)
};

// Exact accounting for the smoothed-indicator pipeline: exceptional-set
// count, sharp vs smoothed Lambda sums, and the two inequalities that tie
// them together.
PipelineReport vinogradov_pipeline_check(const arith::MangoldtTable& table,
                                         const beatty::BeattyParams& params,
                                         std::uint64_t c, std::uint64_t d, std::uint64_t N,
                                         double delta);

}  // namespace beattykit::experiments
