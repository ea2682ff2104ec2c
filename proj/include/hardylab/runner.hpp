#pragma once

/*
 * runner.hpp - experiment driver behind the command-line tool.
 *
 * Each subcommand maps onto one library operation or property suite and
 * produces a Report: the full effective config, one record per checked
 * item, and a summary.  Reports are deterministic given (config, seed);
 * the timestamp is the only field excluded from byte-for-byte comparisons.
 *
 * Exit code convention: 0 when every record passes, 1 when any fails,
 * 2 on usage errors (surfaced as UsageError).
 */

#include <cmath>
#include <cstdint>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hardylab/core.hpp"
#include "hardylab/errors.hpp"
#include "hardylab/multipliers.hpp"
#include "hardylab/norms.hpp"
#include "hardylab/random.hpp"
#include "hardylab/toeplitz.hpp"
#include "hardylab/version.hpp"

namespace hardylab {

using ordered_json = nlohmann::ordered_json;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class OutputFormat { Json, Csv };

// ---------------------------------------------------------------------------
// Complex literal parsing: "a+bi" with either part optional ("1.5", "-2i",
// "0.3-0.1i", "i", "-i", "1e-3+2.5e-2i").
// ---------------------------------------------------------------------------
inline double parse_real_token(const std::string& s) {
    std::size_t used = 0;
    double v;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw UsageError("invalid numeric literal: '" + s + "'");
    }
    if (used != s.size())
        throw UsageError("invalid numeric literal: '" + s + "'");
    return v;
}

inline Complex parse_complex(std::string token) {
    std::erase_if(token, [](unsigned char c) { return std::isspace(c); });
    if (token.empty()) throw UsageError("empty complex literal");

    auto parse_imag = [](std::string t) {
        t.pop_back();  // trailing 'i'
        if (t.empty() || t == "+") return 1.0;
        if (t == "-") return -1.0;
        return parse_real_token(t);
    };

    // Split at the last top-level sign (not an exponent sign, not leading).
    std::size_t split = std::string::npos;
    for (std::size_t p = 1; p < token.size(); ++p) {
        char c = token[p];
        if ((c == '+' || c == '-') && token[p - 1] != 'e' && token[p - 1] != 'E')
            split = p;
    }
    bool has_i = token.back() == 'i' || token.back() == 'I';
    if (split == std::string::npos) {
        if (has_i) return Complex{0.0, parse_imag(token)};
        return Complex{parse_real_token(token), 0.0};
    }
    if (!has_i)
        throw UsageError("complex literal '" + token +
                         "' has two parts but no trailing 'i'");
    return Complex{parse_real_token(token.substr(0, split)),
                   parse_imag(token.substr(split))};
}

inline std::vector<Complex> parse_complex_list(const std::string& text) {
    std::vector<Complex> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_complex(item));
    if (out.empty()) throw UsageError("empty coefficient list");
    return out;
}

inline std::string format_complex(Complex z) {
    std::ostringstream os;
    os.precision(17);
    os << z.real();
    if (z.imag() >= 0.0 || std::isnan(z.imag())) os << "+";
    os << z.imag() << "i";
    return os.str();
}

// ---------------------------------------------------------------------------
// RunConfig - every knob of every subcommand, with documented defaults.
// ---------------------------------------------------------------------------
struct RunConfig {
    std::string subcommand;

    // core numeric knobs
    std::size_t degree = 0;       // informational; dim default derives from it
    std::size_t grid_size = 0;    // 0 = auto: max(4096, 32*(degree+1))
    int oversample = 16;
    double epsilon = 1.0;
    Family family = Family::Power;
    std::size_t trials = 200;
    std::uint64_t seed = 0;
    bool seed_set = false;
    OutputFormat output_format = OutputFormat::Json;
    std::string output_path = "-";

    // subcommand extras
    std::vector<Complex> coeffs;    // lambda, norms, toeplitz-certify
    std::vector<Complex> g_coeffs;  // theorem4
    std::vector<double> a_seq;      // theorem4
    std::vector<double> epsilons{0.25, 0.5, 1.0, 2.0};  // theorem3
    std::vector<double> qs{1.0, 2.0, 4.0};              // smirnov-check
    std::size_t max_degree = 64;
    std::size_t n_max = 1000000;
    std::size_t dim = 0;          // 0 = 4*(degree+1)
    std::size_t alpha_len = 10001;
    std::size_t terms_pad = 16;
    std::string space = "both";   // h1 | hinf | both
    double tol = std::numeric_limits<double>::quiet_NaN();  // per-command default
    bool drop_constant = false;
};

inline Family parse_family(const std::string& s) {
    if (s == "power") return Family::Power;
    if (s == "log") return Family::Log;
    if (s == "loglog") return Family::LogLog;
    throw UsageError("unknown family '" + s + "' (power|log|loglog)");
}

// Default tolerance per subcommand, used when --tol is not given.
inline double default_tol(const std::string& subcommand) {
    if (subcommand == "abel-check") return 1e-12;
    if (subcommand == "smirnov-check") return 1e-8;
    if (subcommand == "toeplitz-certify") return 1e-6;
    if (subcommand == "theorem4") return 1e-9;
    return 0.0;  // lemma1, theorem2, sum-log: no slack
}

inline std::size_t resolve_lambda_size(const RunConfig& cfg,
                                       std::size_t degree) {
    if (cfg.grid_size == 0) return default_lambda_size(degree);
    return std::max(cfg.grid_size, 2 * (degree + 1));
}

inline NormParams norm_params_for(const RunConfig& cfg, std::size_t degree) {
    std::size_t m = resolve_lambda_size(cfg, degree);
    return NormParams{LambdaGrids{m, m, 0.0, 0.5}, cfg.oversample};
}

// ---------------------------------------------------------------------------
// Report.
// ---------------------------------------------------------------------------
struct Report {
    ordered_json config;
    std::vector<ordered_json> records;
    ordered_json summary;
    std::string version = kVersion;
    std::string timestamp;  // excluded from determinism comparisons

    std::string to_json_string(bool with_timestamp = true) const {
        ordered_json root;
        root["version"] = version;
        root["config"] = config;
        root["records"] = records;
        root["summary"] = summary;
        if (with_timestamp) root["timestamp"] = timestamp;
        return root.dump(2) + "\n";
    }

    // One row per record with the canonical columns; the config rides along
    // in leading comment lines so a run is reconstructible from its output.
    std::string to_csv_string() const {
        std::string out;
        out += "# version: " + version + "\n";
        out += "# config: " + config.dump() + "\n";
        out += "trial,seed,degree,lhs,rhs,margin,pass\n";
        auto num = [](const ordered_json& v) { return v.dump(); };
        for (const auto& r : records) {
            out += num(r.at("trial")) + "," + num(r.at("seed")) + "," +
                   num(r.at("degree")) + "," + num(r.at("lhs")) + "," +
                   num(r.at("rhs")) + "," + num(r.at("margin")) + "," +
                   (r.at("pass").get<bool>() ? "1" : "0") + "\n";
        }
        return out;
    }
};

struct RunResult {
    int exit_code = 0;
    Report report;
};

inline std::string iso8601_utc_now() {
    std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

namespace detail {

inline ordered_json make_record(std::size_t trial, std::uint64_t seed,
                                std::size_t degree, double lhs, double rhs,
                                double margin, bool pass) {
    ordered_json r;
    r["trial"] = trial;
    r["seed"] = seed;
    r["degree"] = degree;
    r["lhs"] = lhs;
    r["rhs"] = rhs;
    r["margin"] = margin;
    r["pass"] = pass;
    return r;
}

inline ordered_json echo_config(const RunConfig& c, double resolved_tol) {
    ordered_json j;
    j["subcommand"] = c.subcommand;
    ordered_json coeffs = ordered_json::array();
    for (auto z : c.coeffs) coeffs.push_back(format_complex(z));
    j["coeffs"] = coeffs;
    ordered_json gcoeffs = ordered_json::array();
    for (auto z : c.g_coeffs) gcoeffs.push_back(format_complex(z));
    j["g_coeffs"] = gcoeffs;
    j["a_seq"] = c.a_seq;
    j["degree"] = c.degree;
    j["grid_size"] = c.grid_size;
    j["oversample"] = c.oversample;
    j["family"] = family_name(c.family);
    j["epsilon"] = c.epsilon;
    j["epsilons"] = c.epsilons;
    j["qs"] = c.qs;
    j["trials"] = c.trials;
    j["seed"] = c.seed;
    j["max_degree"] = c.max_degree;
    j["n_max"] = c.n_max;
    j["dim"] = c.dim;
    j["alpha_len"] = c.alpha_len;
    j["terms_pad"] = c.terms_pad;
    j["space"] = c.space;
    j["tol"] = resolved_tol;
    j["drop_constant"] = c.drop_constant;
    j["output_format"] =
        c.output_format == OutputFormat::Json ? "json" : "csv";
    j["output_path"] = c.output_path;
    return j;
}

inline void require_seed(const RunConfig& cfg) {
    if (!cfg.seed_set)
        throw UsageError("subcommand '" + cfg.subcommand +
                         "' is randomized; --seed is required");
}

inline AnalyticPoly poly_from(const std::vector<Complex>& coeffs,
                              const char* what) {
    if (coeffs.empty())
        throw UsageError(std::string("--") + what + " is required");
    return AnalyticPoly{coeffs};
}

// --- subcommands -----------------------------------------------------------

inline void run_lambda(const RunConfig& cfg, double /*tol*/,
                       std::vector<ordered_json>& records) {
    AnalyticPoly f = poly_from(cfg.coeffs, "coeffs");
    NormParams np = norm_params_for(cfg, f.degree());
    auto lam = lambda_functional(f, np.grids);
    auto hinf = hinf_norm(f, np.oversample);
    double frakn = lam.value + hinf.value;
    auto r = make_record(0, cfg.seed, f.degree(), lam.value, frakn, 0.0, true);
    r["lambda"] = lam.value;
    r["hinf"] = hinf.value;
    r["frakn"] = frakn;
    r["lambda_grid"] = lam.grid_size;
    records.push_back(std::move(r));
}

inline void run_norms(const RunConfig& cfg, double /*tol*/,
                      std::vector<ordered_json>& records) {
    AnalyticPoly f = poly_from(cfg.coeffs, "coeffs");
    NormParams np = norm_params_for(cfg, f.degree());
    BoundaryGrid grid(np.grids.m_zeta, 0.0);
    auto h1 = hp_norm(f, 1.0, grid);
    auto h2 = hp_norm(f, 2.0, grid);
    auto hinf = hinf_norm(f, np.oversample);
    auto lam = lambda_functional(f, np.grids);
    double frakn = hinf.value + lam.value;
    auto r = make_record(0, cfg.seed, f.degree(), h1.value, frakn, 0.0, true);
    r["h1"] = h1.value;
    r["h2"] = h2.value;
    r["hinf"] = hinf.value;
    r["lambda"] = lam.value;
    r["frakn"] = frakn;
    r["grid"] = grid.size();
    records.push_back(std::move(r));
}

inline void run_lemma1(const RunConfig& cfg, double tol,
                       std::vector<ordered_json>& records) {
    require_seed(cfg);
    if (cfg.max_degree == 0) throw UsageError("--max-degree must be >= 1");
    for (std::size_t i = 0; i < cfg.trials; ++i) {
        std::uint64_t s = derive_seed(cfg.seed, i);
        SplitMix64 rng(s);
        std::size_t deg = 1 + static_cast<std::size_t>(rng.below(cfg.max_degree));
        AnalyticPoly f = random_poly_normalized(deg, rng, cfg.oversample);
        NormParams np = norm_params_for(cfg, deg);
        auto rep = lemma1_check(f, np, tol);
        auto r = make_record(i, s, deg, rep.lhs, rep.rhs, rep.margin, rep.pass);
        r["hinf"] = rep.hinf_value;
        r["lambda"] = rep.lambda_value;
        r["grid"] = np.grids.m_zeta;
        records.push_back(std::move(r));
    }
}

inline void run_theorem2(const RunConfig& cfg, double tol,
                         std::vector<ordered_json>& records) {
    require_seed(cfg);
    if (cfg.max_degree == 0) throw UsageError("--max-degree must be >= 1");
    MultiplierSeq alpha = build_family(cfg.family, cfg.epsilon, cfg.alpha_len);
    for (std::size_t i = 0; i < cfg.trials; ++i) {
        std::uint64_t s = derive_seed(cfg.seed, i);
        SplitMix64 rng(s);
        std::size_t deg = 1 + static_cast<std::size_t>(rng.below(cfg.max_degree));
        AnalyticPoly f = random_poly_normalized(deg, rng, cfg.oversample);
        NormParams np = norm_params_for(cfg, deg);
        auto rep = theorem2_check(f, alpha, np, tol);
        auto r = make_record(i, s, deg, rep.lhs, rep.rhs, rep.margin, rep.pass);
        r["family"] = family_name(cfg.family);
        r["epsilon"] = cfg.epsilon;
        r["alpha_norm"] = rep.alpha_norm_value;
        r["four_alpha"] = rep.chain.four_alpha;
        r["weights_log_partial"] = rep.chain.weights_log_partial;
        r["grid"] = np.grids.m_zeta;
        records.push_back(std::move(r));
    }
}

inline void run_theorem3(const RunConfig& cfg, double /*tol*/,
                         std::vector<ordered_json>& records) {
    std::size_t trial = 0;
    for (Family fam : {Family::Power, Family::Log, Family::LogLog}) {
        for (double eps : cfg.epsilons) {
            MultiplierSeq alpha = build_family(fam, eps, cfg.alpha_len);
            bool dec = is_decreasing(alpha);
            bool conc = is_concave_paper(alpha);
            double norm = alpha_norm(alpha);
            double min_d1 = std::numeric_limits<double>::infinity();
            double min_d2 = std::numeric_limits<double>::infinity();
            for (std::size_t n = 0; n + 1 < alpha.length(); ++n)
                min_d1 = std::min(min_d1, alpha.values[n] - alpha.values[n + 1]);
            for (std::size_t n = 0; n + 2 < alpha.length(); ++n)
                min_d2 = std::min(min_d2, alpha.values[n] -
                                              2.0 * alpha.values[n + 1] +
                                              alpha.values[n + 2]);
            bool pass = dec && conc && std::isfinite(norm);
            double margin = std::min(min_d1, min_d2);
            auto r = make_record(trial, 0, alpha.length() - 1, margin, 0.0,
                                 margin, pass);
            r["family"] = family_name(fam);
            r["epsilon"] = eps;
            r["decreasing"] = dec;
            r["concave"] = conc;
            r["alpha_norm"] = norm;
            r["tail_bound"] = alpha.tail_bound;
            records.push_back(std::move(r));
            ++trial;
        }
    }
}

inline void run_theorem4(const RunConfig& cfg, double tol,
                         std::vector<ordered_json>& records) {
    MultiplierSeq alpha = build_family(cfg.family, cfg.epsilon, cfg.alpha_len);
    auto one = [&](std::size_t trial, std::uint64_t s, const AnalyticPoly& g,
                   const std::vector<double>& a) {
        NormParams np = norm_params_for(cfg, g.degree());
        ordered_json r;
        try {
            auto rep = theorem4_propagate(g, a, alpha, np, tol);
            r = make_record(trial, s, g.degree(), rep.frakn_f, rep.bound,
                            rep.margin, rep.pass);
            r["min_domination_margin"] = rep.min_domination_margin;
            r["min_coeff_ratio"] = rep.min_coeff_ratio;
            r["coeff_ok"] = rep.coeff_ok;
            r["domination"] = "ok";
        } catch (const DominationFailed& e) {
            r = make_record(trial, s, g.degree(), 0.0, 0.0, -1.0, false);
            r["domination"] = e.what();
        }
        r["family"] = family_name(cfg.family);
        r["epsilon"] = cfg.epsilon;
        records.push_back(std::move(r));
    };

    if (!cfg.g_coeffs.empty()) {
        one(0, cfg.seed, AnalyticPoly{cfg.g_coeffs}, cfg.a_seq);
        return;
    }
    require_seed(cfg);
    if (cfg.max_degree == 0) throw UsageError("--max-degree must be >= 1");
    for (std::size_t i = 0; i < cfg.trials; ++i) {
        std::uint64_t s = derive_seed(cfg.seed, i);
        SplitMix64 rng(s);
        std::size_t deg = 1 + static_cast<std::size_t>(rng.below(cfg.max_degree));
        AnalyticPoly g = random_poly_normalized(deg, rng, cfg.oversample);
        // dominated sequence: a_n = |g_hat(n)| * u_n with u_n in [0, 1]
        std::vector<double> a(g.coeffs.size());
        for (std::size_t n = 0; n < a.size(); ++n)
            a[n] = std::abs(g.coeffs[n]) * rng.uniform();
        one(i, s, g, a);
    }
}

inline void run_abel_check(const RunConfig& cfg, double tol,
                           std::vector<ordered_json>& records) {
    require_seed(cfg);
    if (cfg.max_degree == 0) throw UsageError("--max-degree must be >= 1");
    static constexpr Family kFams[] = {Family::Power, Family::Log,
                                       Family::LogLog};
    static constexpr double kEps[] = {0.5, 1.0};
    for (std::size_t i = 0; i < cfg.trials; ++i) {
        std::uint64_t s = derive_seed(cfg.seed, i);
        SplitMix64 rng(s);
        std::size_t deg = 1 + static_cast<std::size_t>(rng.below(cfg.max_degree));
        Family fam = kFams[rng.below(3)];
        double eps = kEps[rng.below(2)];
        std::size_t terms = deg + static_cast<std::size_t>(
                                      rng.below(cfg.terms_pad + 1));
        AnalyticPoly f = random_poly(deg, rng);
        MultiplierSeq alpha = build_family(fam, eps, terms + 3);
        auto dec = abel_decompose(f, alpha, terms);
        double res = dec.reconstruction_residual;
        auto r = make_record(i, s, deg, res, tol, tol - res, res <= tol);
        r["family"] = family_name(fam);
        r["epsilon"] = eps;
        r["terms"] = terms;
        records.push_back(std::move(r));
    }
}

inline void run_sum_log(const RunConfig& cfg, double /*tol*/,
                        std::vector<ordered_json>& records) {
    auto rep = sum_log_check(cfg.n_max);
    auto r = make_record(0, 0, cfg.n_max, rep.min_slack, 0.0, rep.min_slack,
                         rep.pass);
    r["argmin"] = rep.argmin;
    r["min_half_slack"] = rep.min_half_slack;
    r["argmin_half"] = rep.argmin_half;
    records.push_back(std::move(r));
}

inline void run_toeplitz_certify(const RunConfig& cfg, double tol,
                                 std::vector<ordered_json>& records) {
    require_seed(cfg);
    std::vector<OperatorSpace> spaces;
    if (cfg.space == "h1")
        spaces = {OperatorSpace::H1};
    else if (cfg.space == "hinf")
        spaces = {OperatorSpace::Hinf};
    else if (cfg.space == "both")
        spaces = {OperatorSpace::H1, OperatorSpace::Hinf};
    else
        throw UsageError("--space must be h1, hinf or both");

    auto one = [&](std::size_t trial, std::uint64_t s, const AnalyticPoly& f) {
        for (OperatorSpace sp : spaces) {
            CertifyParams params;
            params.dim = cfg.dim;
            params.trials = 8;
            params.seed = s;
            params.norms = norm_params_for(cfg, f.degree());
            params.tol = tol;
            ordered_json r;
            try {
                auto cert = certify(f, sp, params);
                r = make_record(trial, s, f.degree(), cert.lower, cert.upper,
                                cert.upper - cert.lower, true);
                r["witness"] = cert.lower_witness;
                r["method"] = cert.upper_method == UpperMethod::FrakN
                                  ? "frakn"
                                  : "theorem2-chain";
            } catch (const CertificateViolation& e) {
                r = make_record(trial, s, f.degree(), 0.0, 0.0, -1.0, false);
                r["violation"] = e.what();
            }
            r["space"] = space_name(sp);
            r["dim"] = cfg.dim ? cfg.dim : 4 * (f.degree() + 1);
            records.push_back(std::move(r));
        }
    };

    if (!cfg.coeffs.empty()) {
        one(0, cfg.seed, AnalyticPoly{cfg.coeffs});
        return;
    }
    if (cfg.max_degree == 0) throw UsageError("--max-degree must be >= 1");
    for (std::size_t i = 0; i < cfg.trials; ++i) {
        std::uint64_t s = derive_seed(cfg.seed, i);
        SplitMix64 rng(s);
        std::size_t deg = 1 + static_cast<std::size_t>(rng.below(cfg.max_degree));
        one(i, s, random_poly_normalized(deg, rng, cfg.oversample));
    }
}

inline void run_smirnov(const RunConfig& cfg, double tol,
                        std::vector<ordered_json>& records) {
    require_seed(cfg);
    if (cfg.max_degree == 0) throw UsageError("--max-degree must be >= 1");
    // 48 interior probes: radii {0.3, 0.6, 0.9} x 16 angles.
    std::vector<DiskPoint> points;
    for (double rad : {0.3, 0.6, 0.9})
        for (int a = 0; a < 16; ++a)
            points.emplace_back(std::polar(rad, kTwoPi * a / 16.0));

    for (std::size_t i = 0; i < cfg.trials; ++i) {
        std::uint64_t s = derive_seed(cfg.seed, i);
        SplitMix64 rng(s);
        std::size_t deg = 1 + static_cast<std::size_t>(rng.below(cfg.max_degree));
        AnalyticPoly f = random_poly_normalized(deg, rng, cfg.oversample);
        for (double q : cfg.qs) {
            std::size_t m = std::max(
                cfg.grid_size ? cfg.grid_size : std::size_t{4096},
                2 * (static_cast<std::size_t>(std::ceil(q)) * deg + 1));
            BoundaryGrid grid(m, 0.0);
            auto rep = smirnov_check(f, q, grid, points, tol);
            auto r = make_record(i, s, deg, rep.max_violation, tol,
                                 tol - rep.max_violation, rep.pass);
            r["q"] = q;
            r["grid"] = m;
            r["worst_point"] = format_complex(rep.worst_point);
            records.push_back(std::move(r));
        }
    }
}

} // namespace detail

// ---------------------------------------------------------------------------
// Dispatch.
// ---------------------------------------------------------------------------
inline RunResult run(const RunConfig& cfg) {
    double tol = std::isnan(cfg.tol) ? default_tol(cfg.subcommand) : cfg.tol;

    Report report;
    report.config = detail::echo_config(cfg, tol);
    report.timestamp = iso8601_utc_now();

    if (cfg.subcommand == "lambda")
        detail::run_lambda(cfg, tol, report.records);
    else if (cfg.subcommand == "norms")
        detail::run_norms(cfg, tol, report.records);
    else if (cfg.subcommand == "lemma1")
        detail::run_lemma1(cfg, tol, report.records);
    else if (cfg.subcommand == "theorem2")
        detail::run_theorem2(cfg, tol, report.records);
    else if (cfg.subcommand == "theorem3")
        detail::run_theorem3(cfg, tol, report.records);
    else if (cfg.subcommand == "theorem4")
        detail::run_theorem4(cfg, tol, report.records);
    else if (cfg.subcommand == "abel-check")
        detail::run_abel_check(cfg, tol, report.records);
    else if (cfg.subcommand == "sum-log")
        detail::run_sum_log(cfg, tol, report.records);
    else if (cfg.subcommand == "toeplitz-certify")
        detail::run_toeplitz_certify(cfg, tol, report.records);
    else if (cfg.subcommand == "smirnov-check")
        detail::run_smirnov(cfg, tol, report.records);
    else
        throw UsageError("unknown subcommand '" + cfg.subcommand + "'");

    std::size_t pass_count = 0;
    double min_margin = std::numeric_limits<double>::infinity();
    for (const auto& r : report.records) {
        if (r.at("pass").get<bool>()) ++pass_count;
        min_margin = std::min(min_margin, r.at("margin").get<double>());
    }
    std::size_t fail_count = report.records.size() - pass_count;
    report.summary["records"] = report.records.size();
    report.summary["pass_count"] = pass_count;
    report.summary["fail_count"] = fail_count;
    report.summary["min_margin"] = min_margin;
    report.summary["all_pass"] = fail_count == 0;

    return RunResult{fail_count == 0 ? 0 : 1, std::move(report)};
}

// Reports go to output_path, or standard output for "-".
inline void write_report(const Report& report, const RunConfig& cfg) {
    std::string body = cfg.output_format == OutputFormat::Json
                           ? report.to_json_string()
                           : report.to_csv_string();
    if (cfg.output_path == "-") {
        std::cout << body;
        return;
    }
    std::ofstream out(cfg.output_path, std::ios::binary);
    if (!out)
        throw UsageError("cannot open output file '" + cfg.output_path + "'");
    out << body;
}

} // namespace hardylab
