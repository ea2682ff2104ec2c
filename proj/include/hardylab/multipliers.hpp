#pragma once

/*
 * multipliers.hpp - coefficient multiplier sequences and the summation
 * machinery behind the bound ||f*alpha||_N <= 12 ||f||_inf ||alpha||.
 *
 * A multiplier sequence alpha acts on f by the Hadamard product
 *   (f*alpha)(z) = sum_n f_hat(n) alpha_n z^n        (n = 0 included;
 *                                                     a flag drops it)
 * and carries the norm  ||alpha|| = sum_n alpha_n/(n+1), reported as an
 * upper bound: stored partial sum plus an integral-test tail bound.
 *
 * Built-in families (eps > 0):
 *   Power   1/(n+1)^eps
 *   Log     1/log^(1+eps)(n+2)
 *   LogLog  1/(log(n+2) * log^(1+eps)(log(n+3)))
 *
 * Abel summation by parts, applied twice with explicit finite boundary
 * terms, rewrites f*alpha as a positive combination of Cesaro means:
 *   f*alpha = sum_{n<=T} (alpha_n - 2 alpha_{n+1} + alpha_{n+2})(n+1)
 *             sigma_n(f)
 *           + (T+2)(alpha_{T+1} - alpha_{T+2}) sigma_{T+1}(f)
 *           + alpha_{T+2} f,
 * an identity that holds to machine precision at any truncation T >= deg f.
 */

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "hardylab/core.hpp"
#include "hardylab/errors.hpp"
#include "hardylab/norms.hpp"

namespace hardylab {

enum class Family { Power, Log, LogLog, Custom };

inline const char* family_name(Family f) {
    switch (f) {
        case Family::Power: return "power";
        case Family::Log: return "log";
        case Family::LogLog: return "loglog";
        default: return "custom";
    }
}

inline double family_value(Family family, double eps, std::size_t n) {
    double x = static_cast<double>(n);
    switch (family) {
        case Family::Power:
            return std::pow(x + 1.0, -eps);
        case Family::Log:
            return std::pow(std::log(x + 2.0), -(1.0 + eps));
        case Family::LogLog:
            return 1.0 / (std::log(x + 2.0) *
                          std::pow(std::log(std::log(x + 3.0)), 1.0 + eps));
        default:
            throw DomainError("family_value: custom sequences have no formula");
    }
}

// Integral-test bound on the tail sum_{n>K} alpha_n/(n+1).
inline double family_tail_bound(Family family, double eps, std::size_t k) {
    double kk = static_cast<double>(k);
    switch (family) {
        case Family::Power:
            return std::pow(kk, -eps) / eps;
        case Family::Log:
            return std::pow(std::log(kk + 1.0), -eps) / eps;
        case Family::LogLog:
            return std::pow(std::log(std::log(kk + 1.0)), -eps) / eps;
        default:
            return 0.0;
    }
}

// ---------------------------------------------------------------------------
// MultiplierSeq - stored values alpha_0..alpha_K plus family metadata.
// ---------------------------------------------------------------------------
struct MultiplierSeq {
    std::vector<double> values;
    Family family = Family::Custom;
    double epsilon = 0.0;
    // Upper bound on sum_{n>K} alpha_n/(n+1); zero only for Custom
    // sequences with declared finite support.
    double tail_bound = 0.0;

    std::size_t length() const { return values.size(); }

    // alpha_n, extending by the family formula beyond the stored range.
    double at(std::size_t n) const {
        if (n < values.size()) return values[n];
        if (family == Family::Custom)
            throw LengthMismatch(
                "MultiplierSeq: custom sequence has no value at index " +
                std::to_string(n));
        return family_value(family, epsilon, n);
    }
};

inline MultiplierSeq build_family(Family family, double eps,
                                  std::size_t length) {
    if (family == Family::Custom)
        throw DomainError("build_family: use MultiplierSeq::custom");
    if (!(eps > 0.0))
        throw DomainError("build_family: epsilon must be > 0");
    if (length < 3)
        throw DomainError("build_family: need at least 3 values (K >= 2)");
    MultiplierSeq seq;
    seq.family = family;
    seq.epsilon = eps;
    seq.values.resize(length);
    for (std::size_t n = 0; n < length; ++n)
        seq.values[n] = family_value(family, eps, n);
    seq.tail_bound = family_tail_bound(family, eps, length - 1);
    return seq;
}

inline MultiplierSeq custom_sequence(std::vector<double> values,
                                     double tail_bound = 0.0) {
    for (double v : values)
        if (!(v > 0.0))
            throw DomainError("custom_sequence: values must be strictly positive");
    if (tail_bound < 0.0)
        throw DomainError("custom_sequence: tail_bound must be >= 0");
    MultiplierSeq seq;
    seq.values = std::move(values);
    seq.family = Family::Custom;
    seq.tail_bound = tail_bound;
    return seq;
}

inline bool is_decreasing(const MultiplierSeq& alpha) {
    for (std::size_t n = 0; n + 1 < alpha.values.size(); ++n)
        if (alpha.values[n] < alpha.values[n + 1]) return false;
    return true;
}

// Second difference alpha_n - 2 alpha_{n+1} + alpha_{n+2} >= 0 at every
// stored index (the source convention; it coincides with conventional
// convexity of the sequence).
inline bool is_concave_paper(const MultiplierSeq& alpha) {
    if (alpha.values.size() < 3)
        throw TooShort("is_concave_paper: need at least 3 values");
    for (std::size_t n = 0; n + 2 < alpha.values.size(); ++n)
        if (alpha.values[n] - 2.0 * alpha.values[n + 1] + alpha.values[n + 2] <
            0.0)
            return false;
    return true;
}

// Upper bound on ||alpha|| = sum alpha_n/(n+1): stored partial sum plus the
// declared tail bound.
inline double alpha_norm(const MultiplierSeq& alpha) {
    double sum = 0.0;
    for (std::size_t n = 0; n < alpha.values.size(); ++n)
        sum += alpha.values[n] / (static_cast<double>(n) + 1.0);
    return sum + alpha.tail_bound;
}

// ---------------------------------------------------------------------------
// Hadamard product and Cesaro machinery.
// ---------------------------------------------------------------------------

// Coefficientwise product f_hat(n) * alpha_n.  Families extend beyond their
// stored range via the formula; a too-short Custom sequence is an error.
// drop_constant selects the convention that starts the sum at n = 1.
inline AnalyticPoly hadamard(const AnalyticPoly& f, const MultiplierSeq& alpha,
                             bool drop_constant = false) {
    std::vector<Complex> out(f.coeffs.size());
    for (std::size_t n = 0; n < f.coeffs.size(); ++n)
        out[n] = f.coeffs[n] * alpha.at(n);
    if (drop_constant) out[0] = Complex{0.0, 0.0};
    return AnalyticPoly{std::move(out)};
}

// S_n(f): truncation to degree min(n, deg f).
inline AnalyticPoly partial_sum(const AnalyticPoly& f, std::size_t n) {
    std::size_t keep = std::min(n, f.degree()) + 1;
    return AnalyticPoly{
        std::vector<Complex>(f.coeffs.begin(), f.coeffs.begin() + keep)};
}

// sigma_n(f) = (1/(n+1)) sum_{k<=n} S_k(f); coefficient k picks up the
// Fejer weight (n+1-k)/(n+1).
inline AnalyticPoly cesaro_mean(const AnalyticPoly& f, std::size_t n) {
    std::size_t keep = std::min(n, f.degree()) + 1;
    std::vector<Complex> out(keep);
    double np1 = static_cast<double>(n) + 1.0;
    for (std::size_t k = 0; k < keep; ++k)
        out[k] = f.coeffs[k] * ((np1 - static_cast<double>(k)) / np1);
    return AnalyticPoly{std::move(out)};
}

// ---------------------------------------------------------------------------
// Double Abel summation with exact finite boundary terms.
// ---------------------------------------------------------------------------
struct AbelDecomposition {
    // w_n = (alpha_n - 2 alpha_{n+1} + alpha_{n+2})(n+1), n = 0..terms
    std::vector<double> weights;
    // sigma_n(f) for n = 0..terms
    std::vector<AnalyticPoly> cesaro_terms;
    // exact corrections: (T+2)(alpha_{T+1}-alpha_{T+2}) sigma_{T+1}(f)
    // and alpha_{T+2} f
    std::vector<AnalyticPoly> boundary_terms;
    // max-coefficient residual of the reconstruction, relative to f*alpha
    double reconstruction_residual = 0.0;
};

inline AbelDecomposition abel_decompose(const AnalyticPoly& f,
                                        const MultiplierSeq& alpha,
                                        std::size_t terms) {
    if (terms < f.degree())
        throw LengthMismatch("abel_decompose: terms must be >= degree(f)");
    if (alpha.family == Family::Custom && alpha.length() < terms + 3)
        throw LengthMismatch(
            "abel_decompose: custom sequence too short for terms+2 indices");

    const std::size_t t = terms;
    AbelDecomposition dec;
    dec.weights.resize(t + 1);
    dec.cesaro_terms.reserve(t + 1);
    for (std::size_t n = 0; n <= t; ++n) {
        dec.weights[n] =
            (alpha.at(n) - 2.0 * alpha.at(n + 1) + alpha.at(n + 2)) *
            (static_cast<double>(n) + 1.0);
        dec.cesaro_terms.push_back(cesaro_mean(f, n));
    }
    double edge = (static_cast<double>(t) + 2.0) *
                  (alpha.at(t + 1) - alpha.at(t + 2));
    dec.boundary_terms.push_back(Complex{edge, 0.0} * cesaro_mean(f, t + 1));
    dec.boundary_terms.push_back(Complex{alpha.at(t + 2), 0.0} * f);

    // Residual against the direct Hadamard product.
    AnalyticPoly target = hadamard(f, alpha);
    std::vector<Complex> recon(f.coeffs.size(), Complex{0.0, 0.0});
    auto add = [&](const AnalyticPoly& p, double w) {
        for (std::size_t k = 0; k < p.coeffs.size(); ++k)
            recon[k] += w * p.coeffs[k];
    };
    for (std::size_t n = 0; n <= t; ++n) add(dec.cesaro_terms[n], dec.weights[n]);
    for (const auto& b : dec.boundary_terms) add(b, 1.0);

    double scale = 0.0, err = 0.0;
    for (std::size_t k = 0; k < recon.size(); ++k) {
        scale = std::max(scale, std::abs(target.coeffs[k]));
        err = std::max(err, std::abs(recon[k] - target.coeffs[k]));
    }
    dec.reconstruction_residual = scale > 0.0 ? err / scale : err;
    return dec;
}

// ---------------------------------------------------------------------------
// sum of logs inequality: sum_{k<=n} log(k+2) >= (n+1) log(n+2) / 4.
// ---------------------------------------------------------------------------
struct SumLogReport {
    double min_slack = 0.0;       // full inequality
    std::size_t argmin = 0;
    double min_half_slack = 0.0;  // intermediate floor(n/2) step
    std::size_t argmin_half = 0;
    bool pass = false;
};

// Exhaustive scan over n <= n_max of
//   slack(n)      = sum_{k=0}^{n} log(k+2) - (n+1) log(n+2)/4
//   half_slack(n) = sum_{k=floor(n/2)}^{n} log(k+2)
//                   - (n/2 + 1) log(floor(n/2)+2)
// Both must be nonnegative everywhere (the second attains 0 at n = 0).
inline SumLogReport sum_log_check(std::size_t n_max) {
    std::vector<double> prefix(n_max + 1);
    double acc = 0.0;
    for (std::size_t n = 0; n <= n_max; ++n) {
        acc += std::log(static_cast<double>(n) + 2.0);
        prefix[n] = acc;
    }
    SumLogReport report;
    report.min_slack = std::numeric_limits<double>::infinity();
    report.min_half_slack = std::numeric_limits<double>::infinity();
    for (std::size_t n = 0; n <= n_max; ++n) {
        double nn = static_cast<double>(n);
        double slack = prefix[n] - 0.25 * (nn + 1.0) * std::log(nn + 2.0);
        if (slack < report.min_slack) {
            report.min_slack = slack;
            report.argmin = n;
        }
        std::size_t h = n / 2;
        double tail = prefix[n] - (h > 0 ? prefix[h - 1] : 0.0);
        double half_slack =
            tail - (nn / 2.0 + 1.0) * std::log(static_cast<double>(h) + 2.0);
        if (half_slack < report.min_half_slack) {
            report.min_half_slack = half_slack;
            report.argmin_half = n;
        }
    }
    report.pass = report.min_slack >= 0.0 && report.min_half_slack >= 0.0;
    return report;
}

// ---------------------------------------------------------------------------
// Theorem checks.
// ---------------------------------------------------------------------------

// ||p||_N <= 3 ||p||_inf log(n+2) for a polynomial of degree n.  Both sides
// use the same grid estimates; the sup underestimate appears on both sides
// and the right-hand side carries the larger factor, so quadrature noise
// cannot flip a true inequality.
struct Lemma1Report {
    double lhs = 0.0;     // frakN estimate
    double rhs = 0.0;     // 3 * hinf * log(degree+2)
    double margin = 0.0;  // rhs - lhs
    double hinf_value = 0.0;
    double lambda_value = 0.0;
    std::size_t degree = 0;
    bool pass = false;
};

inline Lemma1Report lemma1_check(const AnalyticPoly& p,
                                 const NormParams& params = {},
                                 double tol = 0.0) {
    Lemma1Report r;
    r.degree = p.degree();
    r.hinf_value = hinf_norm(p, params.oversample).value;
    r.lambda_value = lambda_functional(p, params.grids).value;
    r.lhs = r.hinf_value + r.lambda_value;
    r.rhs = 3.0 * r.hinf_value * std::log(static_cast<double>(r.degree) + 2.0);
    r.margin = r.rhs - r.lhs;
    r.pass = r.lhs <= r.rhs + tol;
    return r;
}

struct Theorem2Chain {
    bool computed = false;
    // scalar chain, always filled: 4||alpha|| and the stored partial sum of
    // (alpha_n - 2 alpha_{n+1} + alpha_{n+2})(n+1) log(n+2)
    double four_alpha = 0.0;
    double weights_log_partial = 0.0;
    // Cesaro chain (optional; one frakN estimate per term):
    //   ||f*alpha||_N <= sum w_n ||sigma_n||_N + ||edge terms||_N
    //                 <= 3 sum w_n ||sigma_n||_inf log(n+2) + edges
    double sum_w_sigma_frakn = 0.0;
    double lemma_sigma_bound = 0.0;
};

struct Theorem2Report {
    double lhs = 0.0;            // ||(f/gridmax)*alpha||_N estimate
    double rhs = 0.0;            // 12 * hinf(f/gridmax) * alpha_norm
    double margin = 0.0;
    double hinf_raw = 0.0;       // grid max of the unnormalized input
    double alpha_norm_value = 0.0;
    bool pass = false;
    Theorem2Chain chain;
};

// Verifies ||f*alpha||_N <= 12 ||f||_inf ||alpha|| after normalizing f by
// its grid maximum (the sup estimate is a lower bound, so normalizing makes
// the tested inequality conservative).  Requires alpha monotone decreasing
// with nonnegative second differences.
inline Theorem2Report theorem2_check(const AnalyticPoly& f,
                                     const MultiplierSeq& alpha,
                                     const NormParams& params = {},
                                     double tol = 0.0,
                                     bool with_sigma_chain = false,
                                     std::size_t chain_terms = 0) {
    if (!is_decreasing(alpha))
        throw PreconditionFailed("theorem2_check: alpha is not decreasing");
    if (!is_concave_paper(alpha))
        throw PreconditionFailed(
            "theorem2_check: alpha has a negative second difference");

    Theorem2Report r;
    r.hinf_raw = hinf_norm(f, params.oversample).value;
    AnalyticPoly g = r.hinf_raw > 0.0
                         ? Complex{1.0 / r.hinf_raw, 0.0} * f
                         : f;
    AnalyticPoly fa = hadamard(g, alpha);
    r.lhs = frakn_norm(fa, params).value;
    r.alpha_norm_value = alpha_norm(alpha);
    double hinf_g = hinf_norm(g, params.oversample).value;
    r.rhs = 12.0 * hinf_g * r.alpha_norm_value;
    r.margin = r.rhs - r.lhs;
    r.pass = r.lhs <= r.rhs + tol;

    r.chain.four_alpha = 4.0 * r.alpha_norm_value;
    for (std::size_t n = 0; n + 2 < alpha.length(); ++n) {
        double d2 = alpha.values[n] - 2.0 * alpha.values[n + 1] +
                    alpha.values[n + 2];
        r.chain.weights_log_partial +=
            d2 * (static_cast<double>(n) + 1.0) *
            std::log(static_cast<double>(n) + 2.0);
    }

    if (with_sigma_chain) {
        std::size_t t = chain_terms ? chain_terms : g.degree() + 8;
        AbelDecomposition dec = abel_decompose(g, alpha, t);
        double sum_frakn = 0.0, sum_lemma = 0.0;
        for (std::size_t n = 0; n <= t; ++n) {
            if (dec.weights[n] == 0.0) continue;
            double logn = std::log(static_cast<double>(n) + 2.0);
            sum_frakn +=
                dec.weights[n] * frakn_norm(dec.cesaro_terms[n], params).value;
            sum_lemma += dec.weights[n] *
                         hinf_norm(dec.cesaro_terms[n], params.oversample).value *
                         logn;
        }
        const AnalyticPoly& edge_sigma = dec.boundary_terms[0];
        const AnalyticPoly& edge_f = dec.boundary_terms[1];
        sum_frakn += frakn_norm(edge_sigma, params).value;
        sum_frakn += frakn_norm(edge_f, params).value;
        sum_lemma += hinf_norm(edge_sigma, params.oversample).value *
                     std::log(static_cast<double>(t) + 3.0);
        sum_lemma += hinf_norm(edge_f, params.oversample).value *
                     std::log(static_cast<double>(g.degree()) + 2.0);
        r.chain.sum_w_sigma_frakn = sum_frakn;
        r.chain.lemma_sigma_bound = 3.0 * sum_lemma;
        r.chain.computed = true;
    }
    return r;
}

// Propagates a coefficient-domination witness through the multiplier:
// given |g_hat(n)| >= |a_n|, the product f = g*alpha satisfies
// |f_hat(n)| >= alpha_n |a_n| and ||f||_N <= 12 ||alpha|| ||g||_inf.
struct Theorem4Report {
    double min_domination_margin = 0.0;  // min |g_hat(n)| - |a_n|
    double min_coeff_ratio = 0.0;        // min |f_hat(n)| / (alpha_n |a_n|)
    bool coeff_ok = false;
    double frakn_f = 0.0;
    double bound = 0.0;  // 12 * alpha_norm * hinf(g)
    double margin = 0.0;
    bool pass = false;
};

inline Theorem4Report theorem4_propagate(const AnalyticPoly& g,
                                         std::span<const double> a,
                                         const MultiplierSeq& alpha,
                                         const NormParams& params = {},
                                         double tol = 1e-9) {
    Theorem4Report r;
    r.min_domination_margin = std::numeric_limits<double>::infinity();
    std::size_t len = std::max(g.coeffs.size(), a.size());
    for (std::size_t n = 0; n < len; ++n) {
        double gn = n < g.coeffs.size() ? std::abs(g.coeffs[n]) : 0.0;
        double an = n < a.size() ? std::abs(a[n]) : 0.0;
        if (gn < an)
            throw DominationFailed("theorem4_propagate: |g_hat(" +
                                   std::to_string(n) + ")| = " +
                                   std::to_string(gn) + " < |a_n| = " +
                                   std::to_string(an));
        r.min_domination_margin = std::min(r.min_domination_margin, gn - an);
    }

    AnalyticPoly f = hadamard(g, alpha);
    r.min_coeff_ratio = std::numeric_limits<double>::infinity();
    r.coeff_ok = true;
    for (std::size_t n = 0; n < f.coeffs.size(); ++n) {
        double an = n < a.size() ? std::abs(a[n]) : 0.0;
        double target = alpha.at(n) * an;
        if (target <= 0.0) continue;
        double ratio = std::abs(f.coeffs[n]) / target;
        r.min_coeff_ratio = std::min(r.min_coeff_ratio, ratio);
        if (ratio < 1.0 - 1e-12) r.coeff_ok = false;
    }

    r.frakn_f = frakn_norm(f, params).value;
    r.bound = 12.0 * alpha_norm(alpha) * hinf_norm(g, params.oversample).value;
    r.margin = r.bound - r.frakn_f;
    r.pass = r.coeff_ok && r.frakn_f <= r.bound + tol;
    return r;
}

} // namespace hardylab
