// beattykit command-line frontend: parse -> validate -> execute, with
// machine-readable JSON/CSV reports.  Exit codes: 0 success, 2 invalid
// arguments, 1 computation failure.
#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "beattykit/beatty.hpp"
#include "beattykit/diophantine.hpp"
#include "beattykit/errors.hpp"
#include "beattykit/experiments.hpp"
#include "beattykit/mangoldt.hpp"
#include "beattykit/real.hpp"
#include "beattykit/sums.hpp"
#include "beattykit/trigapprox.hpp"

using namespace beattykit;
using nlohmann::ordered_json;

namespace {

struct CommonOpts {
    std::string alpha = "sqrt:2";
    std::string beta = "0";
    std::uint64_t c = 0;
    std::uint64_t d = 1;
    std::string grid;  // start:stop:ratio
    std::uint64_t N = 100000;
    double epsilon = 0.05;
    double delta = 0.01;
    int H = 100;
    unsigned prec_bits = 256;
    std::string out;
    std::string format = "json";
    unsigned threads = std::thread::hardware_concurrency();
    std::uint64_t seed = 1;
};

std::string iso_now() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::vector<std::uint64_t> parse_grid(const std::string& spec) {
    // start:stop:ratio, ratio > 1 (real); points rounded to integers
    std::size_t p1 = spec.find(':');
    std::size_t p2 = (p1 == std::string::npos) ? std::string::npos : spec.find(':', p1 + 1);
    if (p1 == std::string::npos || p2 == std::string::npos)
        throw std::invalid_argument("grid spec must be start:stop:ratio");
    std::uint64_t start = std::stoull(spec.substr(0, p1));
    std::uint64_t stop = std::stoull(spec.substr(p1 + 1, p2 - p1 - 1));
    double ratio = std::stod(spec.substr(p2 + 1));
    if (start < 1 || stop < start || !(ratio > 1.0))
        throw std::invalid_argument("grid spec needs 1 <= start <= stop and ratio > 1");
    std::vector<std::uint64_t> grid;
    double x = static_cast<double>(start);
    std::uint64_t last = 0;
    while (true) {
        std::uint64_t n = static_cast<std::uint64_t>(std::llround(x));
        if (n > stop) break;
        if (n != last) grid.push_back(n);
        last = n;
        x *= ratio;
    }
    if (grid.empty()) throw std::invalid_argument("grid spec produced no points");
    return grid;
}

void stamp_config(experiments::ExperimentReport& rep, const CommonOpts& opt) {
    rep.params["threads"] = std::to_string(opt.threads);
    rep.params["seed"] = std::to_string(opt.seed);
    rep.params["format"] = opt.format;
    rep.params["prec_bits"] = std::to_string(opt.prec_bits);
}

void emit(const std::string& text, const CommonOpts& opt) {
    if (opt.out.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream f(opt.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + opt.out);
    f << text;
    if (text.empty() || text.back() != '\n') f << "\n";
}

void emit_report(const experiments::ExperimentReport& rep, const CommonOpts& opt) {
    emit(opt.format == "csv" ? rep.to_csv() : rep.to_json(true), opt);
}

// ad-hoc JSON envelope for the primitive subcommands
ordered_json envelope(const std::string& id, const CommonOpts& opt) {
    ordered_json j;
    j["schema_version"] = experiments::kReportSchemaVersion;
    j["experiment"] = id;
    j["version"] = experiments::kToolkitVersion;
    j["timestamp"] = iso_now();
    ordered_json cfg;
    cfg["alpha"] = opt.alpha;
    cfg["beta"] = opt.beta;
    cfg["c"] = opt.c;
    cfg["d"] = opt.d;
    cfg["threads"] = opt.threads;
    cfg["seed"] = opt.seed;
    cfg["prec_bits"] = opt.prec_bits;
    j["config"] = cfg;
    return j;
}

beatty::BeattyParams make_params(const CommonOpts& opt) {
    return beatty::BeattyParams::make(Real::parse(opt.alpha), Real::parse(opt.beta));
}

void add_common(CLI::App* cmd, CommonOpts& opt, bool with_ab = true) {
    if (with_ab) {
        cmd->add_option("--alpha", opt.alpha,
                        "slope as a RealSpec: rat:p/q, quad:p,r,D,q, sqrt:D, dec:<digits>, phi");
        cmd->add_option("--beta", opt.beta, "offset as a RealSpec");
    }
    cmd->add_option("--out", opt.out, "output path (default: stdout)");
    cmd->add_option("--format", opt.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--threads", opt.threads, "worker cap, recorded in reports");
    cmd->add_option("--seed", opt.seed, "seed for randomized property suites");
    cmd->add_option("--prec", opt.prec_bits, "working precision bits for decimal literals");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "beattykit: experiments on primes in Beatty sequences [alpha*n + beta] --\n"
        "exact Beatty/continued-fraction arithmetic, von Mangoldt sums, sawtooth\n"
        "and smoothed-indicator approximations, discrepancy, and trend reports."};
    app.require_subcommand(1);
    CommonOpts opt;

    // ------------------------------------------------------------ sieve-stats
    auto* c_sieve = app.add_subcommand(
        "sieve-stats", "Prime-power table statistics and the Chebyshev sum over n <= N");
    c_sieve->add_option("--N", opt.N, "table limit")->required();
    c_sieve->add_option("--c", opt.c, "residue class");
    c_sieve->add_option("--d", opt.d, "modulus");
    add_common(c_sieve, opt, false);

    // ----------------------------------------------------------------- beatty
    std::uint64_t n_count = 20;
    auto* c_beatty = app.add_subcommand(
        "beatty", "Emit the Beatty terms [alpha*n + beta] for n = 1..count");
    c_beatty->add_option("--count", n_count, "number of terms");
    add_common(c_beatty, opt);

    // ----------------------------------------------------------------- member
    std::uint64_t m_query = 1;
    auto* c_member = app.add_subcommand(
        "member",
        "Exact membership test: is m a Beatty term?  Prints true/false "
        "(criterion 0 < {gamma(m - beta + 1)} <= gamma, gamma = 1/alpha)");
    c_member->add_option("--m", m_query, "candidate integer")->required();
    add_common(c_member, opt);

    // ----------------------------------------------------------------- expsum
    std::uint64_t x_limit = 100000;
    std::string theta_spec = "rat:0/1";
    long k_twist = 1;
    auto* c_expsum = app.add_subcommand(
        "expsum",
        "Twisted sum S = sum Lambda(n) e(theta*n) over n <= x, n == c (mod d); "
        "reports |S| against the (x/sqrt(q) + sqrt(qx) + x^0.8) log^3 x envelope");
    c_expsum->add_option("--x", x_limit, "summation limit")->required();
    c_expsum->add_option("--theta", theta_spec, "phase as a RealSpec; default 0");
    c_expsum->add_option("--k", k_twist, "multiply the phase by k");
    c_expsum->add_option("--c", opt.c, "residue class");
    c_expsum->add_option("--d", opt.d, "modulus");
    add_common(c_expsum, opt, false);

    // ------------------------------------------------------------ discrepancy
    std::uint64_t M_points = 1000;
    bool with_oracle = false;
    auto* c_disc = app.add_subcommand(
        "discrepancy",
        "Extreme discrepancy of the points {alpha*m + beta}, m <= M (sorted "
        "closed form; --oracle cross-checks the quadratic brute force)");
    c_disc->add_option("--M", M_points, "number of points")->required();
    c_disc->add_flag("--oracle", with_oracle, "also run the O(M^2) oracle (M <= 2000)");
    add_common(c_disc, opt);

    // ------------------------------------------------------------ vaaler-check
    std::uint64_t grid_points = 10000;
    auto* c_vaaler = app.add_subcommand(
        "vaaler-check",
        "Sandwich check for the degree-H sawtooth approximation: "
        "|psi*(x) - psi(x)| <= Fejer envelope on a grid, plus coefficient decay");
    c_vaaler->add_option("--H", opt.H, "polynomial degree")->required();
    c_vaaler->add_option("--grid-points", grid_points, "grid resolution");
    add_common(c_vaaler, opt, false);

    // -------------------------------------------------------- psi-delta-check
    std::string gamma_spec = "quad:0,1,2,2";  // 1/sqrt(2) = sqrt(2)/2
    long j_max = 10000;
    auto* c_psidelta = app.add_subcommand(
        "psi-delta-check",
        "Contract check for the trapezoidal smoothed indicator of (0, gamma]: "
        "range [0,1], exact plateaus, coefficient bound min(1/j, 1/(j^2 delta))");
    c_psidelta->add_option("--gamma", gamma_spec, "jump location as a RealSpec");
    c_psidelta->add_option("--delta", opt.delta, "ramp half-width, 0 < delta < 1/8");
    c_psidelta->add_option("--jmax", j_max, "check coefficients up to |j| = jmax");
    add_common(c_psidelta, opt, false);

    // -------------------------------------------------------------- dirichlet
    unsigned long w_mult = 1;
    std::uint64_t K_cap = 1000;
    auto* c_dirichlet = app.add_subcommand(
        "dirichlet",
        "Best rational approximation a/q to alpha*w/d with q <= K and "
        "|alpha*w/d - a/q| <= 1/(qK), via continued-fraction convergents");
    c_dirichlet->add_option("--w", w_mult, "integer multiplier");
    c_dirichlet->add_option("--K", K_cap, "denominator cap")->required();
    c_dirichlet->add_option("--d", opt.d, "divisor");
    add_common(c_dirichlet, opt);

    // ------------------------------------------------------------------- type
    int depth = 40;
    auto* c_type = app.add_subcommand(
        "type",
        "Irrationality-type estimate from partial quotients (exact 1 for "
        "quadratic irrationals; lower estimate otherwise)");
    c_type->add_option("--depth", depth, "partial quotients examined");
    add_common(c_type, opt);

    // -------------------------------------------------------------- verify-th1
    auto* c_th1 = app.add_subcommand(
        "verify-th1",
        "Beatty-restricted Chebyshev sum vs main term gamma * psi(N; c, d) over "
        "an N grid; error fitted against N^(1 - 1/(3 tau + 2) + eps)");
    c_th1->add_option("--c", opt.c, "residue class");
    c_th1->add_option("--d", opt.d, "modulus");
    c_th1->add_option("--grid", opt.grid, "N grid start:stop:ratio")->required();
    c_th1->add_option("--epsilon", opt.epsilon, "exponent slack");
    add_common(c_th1, opt);

    // -------------------------------------------------------------- verify-th2
    auto* c_th2 = app.add_subcommand(
        "verify-th2",
        "sum Lambda(d*[alpha n + beta] + c) vs gamma * sum_{m <= [alpha N + beta]} "
        "Lambda(dm + c) over an N grid (beta may be any real)");
    c_th2->add_option("--c", opt.c, "residue class");
    c_th2->add_option("--d", opt.d, "modulus");
    c_th2->add_option("--grid", opt.grid, "N grid start:stop:ratio")->required();
    c_th2->add_option("--epsilon", opt.epsilon, "exponent slack");
    add_common(c_th2, opt);

    // ------------------------------------------------------------ lemma24-scan
    long k_max = 10;
    auto* c_l24 = app.add_subcommand(
        "lemma24-scan",
        "|sum Lambda(n) e(k*gamma*n)| for k = 1..kmax against the x^(1-1/(3tau+2)) "
        "reference (cancellation that drives the main error term)");
    c_l24->add_option("--x", x_limit, "summation limit")->required();
    c_l24->add_option("--kmax", k_max, "largest phase multiple");
    c_l24->add_option("--c", opt.c, "residue class");
    c_l24->add_option("--d", opt.d, "modulus");
    c_l24->add_option("--epsilon", opt.epsilon, "exponent slack");
    add_common(c_l24, opt);

    // -------------------------------------------------------------- decay-scan
    auto* c_decay = app.add_subcommand(
        "decay-scan",
        "Discrepancy of {alpha m + beta} over an M grid against the M^(-1/tau) "
        "equidistribution reference");
    c_decay->add_option("--grid", opt.grid, "M grid start:stop:ratio")->required();
    add_common(c_decay, opt);

    // ------------------------------------------------------ decomposition-check
    auto* c_decomp = app.add_subcommand(
        "decomposition-check",
        "Defect of the exact floor-difference/sawtooth decomposition of the "
        "Beatty-restricted Chebyshev sum (zero in exact arithmetic)");
    c_decomp->add_option("--N", opt.N, "summation limit")->required();
    c_decomp->add_option("--c", opt.c, "residue class");
    c_decomp->add_option("--d", opt.d, "modulus");
    add_common(c_decomp, opt);

    // ---------------------------------------------------------- pipeline-check
    auto* c_pipe = app.add_subcommand(
        "pipeline-check",
        "Smoothed-indicator pipeline accounting: exceptional-set count V, sharp "
        "vs smoothed Lambda sums, |sharp - smoothed| <= log(dM+c) * V and "
        "V/M <= 4*delta + D(M)");
    c_pipe->add_option("--N", opt.N, "summation limit")->required();
    c_pipe->add_option("--c", opt.c, "residue class");
    c_pipe->add_option("--d", opt.d, "modulus");
    c_pipe->add_option("--delta", opt.delta, "ramp half-width");
    add_common(c_pipe, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;  // --help exits 0; bad flags exit 2
    }

    try {
        if (*c_sieve) {
            arith::MangoldtTable table(opt.N);
            ordered_json j = envelope("sieve-stats", opt);
            j["config"]["N"] = opt.N;
            std::uint64_t prime_powers = 0, primes = 0;
            for (std::uint64_t n = 2; n <= opt.N; ++n) {
                std::uint32_t p;
                if (table.prime_power(n, p)) {
                    ++prime_powers;
                    if (p == n) ++primes;
                }
            }
            j["primes"] = primes;
            j["prime_powers"] = prime_powers;
            j["chebyshev_sum"] = arith::chebyshev_sum(table, opt.N, opt.c, opt.d);
            emit(j.dump(2), opt);
        } else if (*c_beatty) {
            auto params = make_params(opt);
            if (opt.format == "csv") {
                std::string csv = "n,term\n";
                for (std::uint64_t n = 1; n <= n_count; ++n)
                    csv += std::to_string(n) + "," +
                           std::to_string(beatty::beatty_term(params, n)) + "\n";
                emit(csv, opt);
            } else {
                ordered_json j = envelope("beatty", opt);
                j["config"]["count"] = n_count;
                ordered_json terms = ordered_json::array();
                for (std::uint64_t n = 1; n <= n_count; ++n)
                    terms.push_back(beatty::beatty_term(params, n));
                j["terms"] = terms;
                emit(j.dump(2), opt);
            }
        } else if (*c_member) {
            auto params = make_params(opt);
            std::cout << (beatty::is_member(params, m_query) ? "true" : "false") << "\n";
        } else if (*c_expsum) {
            arith::MangoldtTable table(x_limit);
            Real theta = Real::parse(theta_spec).mul_q(mpq_class(k_twist));
            auto s = sums::twisted_sum(table, x_limit, theta.to_dd(), opt.c, opt.d);
            ordered_json j = envelope("expsum", opt);
            j["config"]["x"] = x_limit;
            j["config"]["theta"] = theta_spec;
            j["config"]["k"] = k_twist;
            j["value_re"] = s.value.real();
            j["value_im"] = s.value.imag();
            j["abs"] = s.abs();
            j["terms"] = s.terms;
            emit(j.dump(2), opt);
        } else if (*c_disc) {
            auto res = sums::beatty_discrepancy(Real::parse(opt.alpha),
                                                Real::parse(opt.beta), M_points);
            ordered_json j = envelope("discrepancy", opt);
            j["config"]["M"] = M_points;
            j["value"] = res.value;
            j["witness_lo"] = res.witness_lo;
            j["witness_hi"] = res.witness_hi;
            if (with_oracle) {
                auto pts = sums::beatty_fractional_parts(Real::parse(opt.alpha),
                                                         Real::parse(opt.beta), M_points);
                double oracle = sums::discrepancy_bruteforce(pts);
                j["oracle"] = oracle;
                j["oracle_agrees"] = std::abs(oracle - res.value) <= 1e-12;
            }
            emit(j.dump(2), opt);
        } else if (*c_vaaler) {
            trig::TrigPoly poly = trig::vaaler_poly(opt.H);
            double worst_excess = -1.0;
            for (std::uint64_t i = 0; i < grid_points; ++i) {
                double x = (static_cast<double>(i) + 0.5) / static_cast<double>(grid_points);
                double diff = std::abs(poly.eval(x) - trig::sawtooth(x));
                worst_excess = std::max(worst_excess, diff - trig::fejer_envelope(x, opt.H));
            }
            ordered_json j = envelope("vaaler-check", opt);
            j["config"]["H"] = opt.H;
            j["config"]["grid_points"] = grid_points;
            j["max_excess_over_envelope"] = worst_excess;
            j["coefficient_constant"] = trig::vaaler_coeff_constant(poly);
            j["sandwich_ok"] = worst_excess <= 1e-9;
            emit(j.dump(2), opt);
        } else if (*c_psidelta) {
            double gamma = Real::parse(gamma_spec).to_double();
            trig::SmoothedIndicator psi(gamma, opt.delta,
                                        trig::SmoothedIndicator::default_truncation(opt.delta));
            bool range_ok = true, plateau_ok = true, coeff_ok = true;
            for (int i = 0; i <= 20000; ++i) {
                double v = psi.value(i / 20000.0);
                if (!(v >= 0.0 && v <= 1.0 + 1e-9)) range_ok = false;
            }
            for (int i = 0; i < 1000; ++i) {
                double x1 = opt.delta + (gamma - 2 * opt.delta) * (i + 0.5) / 1000.0;
                double x0 =
                    gamma + opt.delta + (1.0 - gamma - 2 * opt.delta) * (i + 0.5) / 1000.0;
                if (psi.value(x1) != 1.0 || psi.value(x0) != 0.0) plateau_ok = false;
            }
            for (long j2 = 1; j2 <= j_max; ++j2) {
                double bound =
                    std::min(1.0 / j2, 1.0 / (static_cast<double>(j2) * j2 * opt.delta));
                if (std::abs(psi.coefficient(j2)) > bound) coeff_ok = false;
            }
            ordered_json j = envelope("psi-delta-check", opt);
            j["config"]["gamma"] = gamma_spec;
            j["config"]["delta"] = opt.delta;
            j["config"]["jmax"] = j_max;
            j["range_ok"] = range_ok;
            j["plateau_ok"] = plateau_ok;
            j["coefficient_bound_ok"] = coeff_ok;
            j["ok"] = range_ok && plateau_ok && coeff_ok;
            emit(j.dump(2), opt);
            if (!(range_ok && plateau_ok && coeff_ok)) return 1;
        } else if (*c_dirichlet) {
            Real alpha = Real::parse(opt.alpha);
            mpz_class K(static_cast<unsigned long>(K_cap));
            auto ap = dio::dirichlet_approx_mod(
                alpha, w_mult, static_cast<unsigned long>(opt.d), K);
            Real target = alpha.mul_q(mpq_class(w_mult, static_cast<unsigned long>(opt.d)));
            ordered_json j = envelope("dirichlet", opt);
            j["config"]["w"] = w_mult;
            j["config"]["K"] = K_cap;
            j["a"] = ap.a.get_str();
            j["q"] = ap.q.get_str();
            j["err"] = ap.err;
            j["within_1_over_qK"] = dio::approx_within(target, ap, K);
            emit(j.dump(2), opt);
        } else if (*c_type) {
            auto est = dio::estimate_type(Real::parse(opt.alpha), depth);
            ordered_json j = envelope("type", opt);
            j["config"]["depth"] = depth;
            j["tau_hat"] = est.tau_hat;
            j["depth_used"] = est.depth;
            j["exact"] = est.exact;
            emit(j.dump(2), opt);
        } else if (*c_th1) {
            auto grid = parse_grid(opt.grid);
            auto params = make_params(opt);
            arith::MangoldtTable table(grid.back());
            auto rep = experiments::verify_th1(table, params, opt.c, opt.d, grid, opt.epsilon);
            rep.params["grid"] = opt.grid;
            stamp_config(rep, opt);
            emit_report(rep, opt);
        } else if (*c_th2) {
            auto grid = parse_grid(opt.grid);
            auto params = make_params(opt);
            std::int64_t top = beatty::beatty_term(params, grid.back());
            if (top < 1) throw std::domain_error("grid too small: [alpha N + beta] < 1");
            arith::MangoldtTable table(opt.d * static_cast<std::uint64_t>(top) + opt.c + 1);
            auto rep = experiments::verify_th2(table, params, opt.c, opt.d, grid, opt.epsilon);
            rep.params["grid"] = opt.grid;
            stamp_config(rep, opt);
            emit_report(rep, opt);
        } else if (*c_l24) {
            auto params = make_params(opt);
            arith::MangoldtTable table(x_limit);
            auto rep =
                experiments::lemma24_scan(table, params, opt.c, opt.d, x_limit, k_max, opt.epsilon);
            stamp_config(rep, opt);
            emit_report(rep, opt);
        } else if (*c_decay) {
            auto grid = parse_grid(opt.grid);
            auto rep = experiments::discrepancy_decay_scan(Real::parse(opt.alpha),
                                                           Real::parse(opt.beta), grid);
            rep.params["grid"] = opt.grid;
            stamp_config(rep, opt);
            emit_report(rep, opt);
        } else if (*c_decomp) {
            auto params = make_params(opt);
            arith::MangoldtTable table(opt.N);
            double defect = experiments::decomposition_check(table, params, opt.c, opt.d, opt.N);
            ordered_json j = envelope("decomposition-check", opt);
            j["config"]["N"] = opt.N;
            j["defect"] = defect;
            emit(j.dump(2), opt);
        } else if (*c_pipe) {
            auto params = make_params(opt);
            std::int64_t top = beatty::beatty_term(params, opt.N);
            if (top < 1) throw std::domain_error("pipeline-check: [alpha N + beta] < 1");
            arith::MangoldtTable table(opt.d * static_cast<std::uint64_t>(top) + opt.c + 1);
            auto rep = experiments::vinogradov_pipeline_check(table, params, opt.c, opt.d,
                                                              opt.N, opt.delta);
            ordered_json j = envelope("pipeline-check", opt);
            j["config"]["N"] = opt.N;
            j["config"]["delta"] = opt.delta;
            j["M"] = rep.M;
            j["exceptional_count"] = rep.exceptional_count;
            j["sharp_sum"] = rep.sharp_sum;
            j["smoothed_sum"] = rep.smoothed_sum;
            j["lambda_cap"] = rep.lambda_cap;
            j["discrepancy"] = rep.discrepancy;
            j["count_bound_ok"] = rep.count_bound_ok;
            j["discrepancy_bound_ok"] = rep.discrepancy_bound_ok;
            emit(j.dump(2), opt);
            if (!(rep.count_bound_ok && rep.discrepancy_bound_ok)) return 1;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
