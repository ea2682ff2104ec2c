// hardylab command-line tool: drives the experiment suites and writes
// machine-readable reports (JSON or CSV).  Exit codes: 0 all checks pass,
// 1 any check fails, 2 usage error.

#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hardylab/runner.hpp"

namespace {

using hardylab::RunConfig;

void add_common(CLI::App* sub, RunConfig& cfg, std::string& family,
                std::string& format) {
    sub->add_option("--grid", cfg.grid_size,
                    "quadrature grid size (0 = auto: max(4096, 32*(deg+1)))");
    sub->add_option("--oversample", cfg.oversample,
                    "sup-norm oversampling factor")
        ->check(CLI::Range(2, 1 << 20));
    sub->add_option("--family", family, "multiplier family: power|log|loglog");
    sub->add_option("--epsilon", cfg.epsilon, "family exponent (> 0)");
    sub->add_option("--alpha-len", cfg.alpha_len,
                    "stored multiplier length K+1");
    sub->add_option("--trials", cfg.trials, "number of random trials");
    sub->add_option("--seed", cfg.seed, "base seed for randomized suites")
        ->each([&cfg](const std::string&) { cfg.seed_set = true; });
    sub->add_option("--max-degree", cfg.max_degree,
                    "random polynomial degrees are drawn from [1, max]");
    sub->add_option("--tol", cfg.tol, "pass tolerance (default per command)");
    sub->add_option("--format", format, "output format: json|csv");
    sub->add_option("--output,-o", cfg.output_path,
                    "report path ('-' = stdout)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hardylab: numerical experiments with Toeplitz operators, "
                 "the Lambda functional and coefficient multipliers on the "
                 "unit circle"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string family = "power";
    std::string format = "json";
    std::string coeffs_text, g_coeffs_text;

    auto* lambda = app.add_subcommand(
        "lambda", "Lambda functional and frakN norm of a polynomial");
    lambda->add_option("--coeffs", coeffs_text,
                       "comma-separated complex coefficients a+bi")
        ->required();

    auto* norms = app.add_subcommand(
        "norms", "H1, H2, Hinf, Lambda and frakN norms of a polynomial");
    norms->add_option("--coeffs", coeffs_text)->required();

    auto* lemma1 = app.add_subcommand(
        "lemma1", "property suite: ||p||_N <= 3 ||p||_inf log(n+2)");

    auto* theorem2 = app.add_subcommand(
        "theorem2",
        "property suite: ||f*alpha||_N <= 12 ||f||_inf ||alpha||");

    auto* theorem3 = app.add_subcommand(
        "theorem3", "family sanity: positive, decreasing, concave, "
                    "finite ||alpha||");
    theorem3->add_option("--epsilons", cfg.epsilons,
                         "epsilon values to test")
        ->delimiter(',');

    auto* theorem4 = app.add_subcommand(
        "theorem4", "domination propagation through a multiplier");
    theorem4->add_option("--g-coeffs", g_coeffs_text,
                         "explicit g (otherwise random trials)");
    theorem4->add_option("--a", cfg.a_seq, "dominated sequence a_n")
        ->delimiter(',');

    auto* abel = app.add_subcommand(
        "abel-check", "exact reconstruction of the double Abel summation");
    abel->add_option("--terms-pad", cfg.terms_pad,
                     "random extra terms beyond the degree");

    auto* sumlog = app.add_subcommand(
        "sum-log", "sum_{k<=n} log(k+2) >= (n+1) log(n+2)/4 up to n-max");
    sumlog->add_option("--n-max", cfg.n_max, "scan bound");

    auto* certify = app.add_subcommand(
        "toeplitz-certify", "two-sided operator norm certificates");
    certify->add_option("--coeffs", coeffs_text,
                        "explicit symbol (otherwise random trials)");
    certify->add_option("--dim", cfg.dim,
                        "truncation dimension (0 = 4*(degree+1))");
    certify->add_option("--space", cfg.space, "h1|hinf|both");

    auto* smirnov = app.add_subcommand(
        "smirnov-check", "interior bound |f(z)|^q <= Poisson average");
    smirnov->add_option("--q", cfg.qs, "exponents to test")->delimiter(',');

    for (auto* sub : {lambda, norms, lemma1, theorem2, theorem3, theorem4,
                      abel, sumlog, certify, smirnov})
        add_common(sub, cfg, family, format);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        cfg.subcommand = app.get_subcommands().front()->get_name();
        cfg.family = hardylab::parse_family(family);
        if (format == "json")
            cfg.output_format = hardylab::OutputFormat::Json;
        else if (format == "csv")
            cfg.output_format = hardylab::OutputFormat::Csv;
        else
            throw hardylab::UsageError("--format must be json or csv");
        if (!coeffs_text.empty())
            cfg.coeffs = hardylab::parse_complex_list(coeffs_text);
        if (!g_coeffs_text.empty())
            cfg.g_coeffs = hardylab::parse_complex_list(g_coeffs_text);

        auto result = hardylab::run(cfg);
        hardylab::write_report(result.report, cfg);
        return result.exit_code;
    } catch (const hardylab::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
