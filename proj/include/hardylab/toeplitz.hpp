#pragma once

/*
 * toeplitz.hpp - truncated Toeplitz operators on span{1, z, ..., z^(N-1)}.
 *
 * The operator acts with the conjugated symbol under the Cauchy integral,
 *   (T_f h)(z) = int conj(f)(zeta) h(zeta) / (1 - conj(zeta) z) dm(zeta),
 * so on the monomial basis the matrix is upper-triangular Toeplitz with
 *
 *   A[m][k] = conj(f_hat(k - m))   for m <= k,   0 below the diagonal.
 *
 * Everything here is conjugate-linear in the symbol:
 * build_truncation(a*f) has entries conj(a) * build_truncation(f).
 *
 * quadrature_apply evaluates the defining integral directly on a boundary
 * grid and cross-validates the matrix path.  h2_spectral_norm runs power
 * iteration on T*T from a deterministic start vector; its Rayleigh quotient
 * approaches the top singular value from below.  lower_bound_norm probes
 * truncated reproducing kernels k_w(z) = sum_{m<N} (conj(w) z)^m (near
 * eigenvectors with eigenvalue conj(f(w))) plus random polynomials, giving
 * an empirical lower bound; certificates pair it with the frakN upper bound.
 */

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hardylab/core.hpp"
#include "hardylab/errors.hpp"
#include "hardylab/multipliers.hpp"
#include "hardylab/norms.hpp"
#include "hardylab/random.hpp"

namespace hardylab {

// ---------------------------------------------------------------------------
// ToeplitzTruncation - N x N compression of T_f.
// ---------------------------------------------------------------------------
struct ToeplitzTruncation {
    std::size_t dim = 0;
    AnalyticPoly symbol;
    std::vector<Complex> entries;  // row-major, dim x dim

    Complex entry(std::size_t m, std::size_t k) const {
        return entries[m * dim + k];
    }
};

inline ToeplitzTruncation build_truncation(const AnalyticPoly& f,
                                           std::size_t dim) {
    if (dim == 0)
        throw DomainError("build_truncation: dim must be >= 1");
    ToeplitzTruncation t;
    t.dim = dim;
    t.symbol = f;
    t.entries.assign(dim * dim, Complex{0.0, 0.0});
    for (std::size_t m = 0; m < dim; ++m) {
        std::size_t kmax = std::min(dim - 1, m + f.degree());
        for (std::size_t k = m; k <= kmax; ++k)
            t.entries[m * dim + k] = std::conj(f.coeffs[k - m]);
    }
    return t;
}

// Matrix-vector product on h's coefficient vector; trailing exact zeros of
// the image are trimmed.
inline AnalyticPoly apply(const ToeplitzTruncation& t, const AnalyticPoly& h) {
    if (h.degree() >= t.dim)
        throw DimensionMismatch("apply: degree(h) = " +
                                std::to_string(h.degree()) +
                                " must be < dim = " + std::to_string(t.dim));
    std::vector<Complex> out(t.dim, Complex{0.0, 0.0});
    const auto& c = t.symbol.coeffs;
    for (std::size_t d = 0; d < c.size(); ++d) {
        Complex cd = std::conj(c[d]);
        for (std::size_t m = 0; m + d < h.coeffs.size(); ++m)
            out[m] += cd * h.coeffs[m + d];
    }
    std::size_t len = out.size();
    while (len > 1 && out[len - 1] == Complex{0.0, 0.0}) --len;
    out.resize(len);
    return AnalyticPoly{std::move(out)};
}

// Direct quadrature of the defining integral at a single point.
inline Complex quadrature_apply(const AnalyticPoly& f, const AnalyticPoly& h,
                                const BoundaryGrid& grid, const DiskPoint& z) {
    std::size_t needed = 2 * (f.degree() + h.degree() + 1);
    if (grid.size() < needed)
        throw AliasingError("quadrature_apply: grid size " +
                            std::to_string(grid.size()) + " < " +
                            std::to_string(needed) +
                            " required for the product symbol*h");
    auto fs = boundary_samples(f, grid, /*allow_aliasing=*/true);
    auto hs = boundary_samples(h, grid, /*allow_aliasing=*/true);
    Complex sum{0.0, 0.0};
    for (std::size_t j = 0; j < grid.size(); ++j)
        sum += std::conj(fs[j]) * hs[j] /
               (1.0 - std::conj(grid.node(j)) * z.value);
    return sum * grid.weight();
}

// ---------------------------------------------------------------------------
// Largest singular value by power iteration on T*T.
// ---------------------------------------------------------------------------
struct SpectralNormResult {
    double value = 0.0;
    bool converged = false;
    std::size_t iterations = 0;
};

inline SpectralNormResult h2_spectral_norm(const ToeplitzTruncation& t,
                                           double tol = 1e-10,
                                           std::size_t max_iters = 1000) {
    if (!(tol > 0.0))
        throw DomainError("h2_spectral_norm: tol must be > 0");
    const std::size_t n = t.dim;
    const auto& c = t.symbol.coeffs;

    auto forward = [&](const std::vector<Complex>& x, std::vector<Complex>& y) {
        // y = A x, A[m][k] = conj(c_{k-m})
        std::fill(y.begin(), y.end(), Complex{0.0, 0.0});
        for (std::size_t d = 0; d < c.size(); ++d) {
            Complex cd = std::conj(c[d]);
            for (std::size_t m = 0; m + d < n; ++m) y[m] += cd * x[m + d];
        }
    };
    auto adjoint = [&](const std::vector<Complex>& y, std::vector<Complex>& w) {
        // w = A* y, (A*)[k][m] = c_{k-m}
        std::fill(w.begin(), w.end(), Complex{0.0, 0.0});
        for (std::size_t d = 0; d < c.size(); ++d) {
            Complex cd = c[d];
            for (std::size_t m = 0; m + d < n; ++m) w[m + d] += cd * y[m];
        }
    };
    auto l2 = [](const std::vector<Complex>& v) {
        double s = 0.0;
        for (const auto& x : v) s += std::norm(x);
        return std::sqrt(s);
    };

    // Deterministic start: normalized all-ones vector.
    std::vector<Complex> x(n, Complex{1.0 / std::sqrt(double(n)), 0.0});
    std::vector<Complex> y(n), w(n);
    SpectralNormResult result;
    double prev = -1.0;
    for (std::size_t it = 1; it <= max_iters; ++it) {
        forward(x, y);
        double sigma = l2(y);  // = sqrt(x* (A*A) x), lower bound on sigma_max
        result.value = sigma;
        result.iterations = it;
        if (sigma == 0.0) {
            result.converged = true;
            return result;
        }
        if (prev >= 0.0 && std::abs(sigma - prev) <= tol * std::max(1.0, sigma)) {
            result.converged = true;
            return result;
        }
        prev = sigma;
        adjoint(y, w);
        double wn = l2(w);
        if (wn == 0.0) {
            result.converged = true;
            return result;
        }
        for (auto& v : w) v /= wn;
        x.swap(w);
    }
    result.converged = false;  // last iterate is still reported
    return result;
}

// ---------------------------------------------------------------------------
// Empirical lower bound and two-sided certificates.
// ---------------------------------------------------------------------------
enum class OperatorSpace { H1, Hinf };

inline const char* space_name(OperatorSpace s) {
    return s == OperatorSpace::H1 ? "H1" : "Hinf";
}

struct LowerBoundResult {
    double value = 0.0;
    std::string witness;
};

// Max of ||T_f h||_p / ||h||_p over truncated reproducing kernels at radii
// {0.5, 0.9, 0.99} x 16 angles plus `trials` random polynomials.  Never the
// norm itself, only an empirical lower bound for it.  Ties break toward the
// earliest test function.
inline LowerBoundResult lower_bound_norm(const AnalyticPoly& f,
                                         OperatorSpace space, std::size_t dim,
                                         std::size_t trials,
                                         std::uint64_t seed) {
    if (dim < f.degree() + 2)
        throw DomainError("lower_bound_norm: dim must be >= degree(f) + 2");
    ToeplitzTruncation t = build_truncation(f, dim);
    BoundaryGrid grid(std::max<std::size_t>(512, 4 * dim), 0.0);

    auto norm_of = [&](const AnalyticPoly& p) {
        return space == OperatorSpace::H1 ? hp_norm(p, 1.0, grid).value
                                          : hinf_norm(p).value;
    };

    LowerBoundResult best;
    auto consider = [&](const AnalyticPoly& h, std::string label) {
        double denom = norm_of(h);
        if (denom == 0.0) return;
        double ratio = norm_of(apply(t, h)) / denom;
        if (ratio > best.value) {
            best.value = ratio;
            best.witness = std::move(label);
        }
    };

    static constexpr double kRadii[] = {0.5, 0.9, 0.99};
    for (double r : kRadii) {
        for (int a = 0; a < 16; ++a) {
            Complex w = std::polar(r, kTwoPi * a / 16.0);
            std::vector<Complex> kc(dim);
            Complex wbar = std::conj(w), pw{1.0, 0.0};
            for (std::size_t m = 0; m < dim; ++m) {
                kc[m] = pw;
                pw *= wbar;
            }
            consider(AnalyticPoly{std::move(kc)},
                     "kernel r=" + std::to_string(r) + " angle=" +
                         std::to_string(a) + "/16");
        }
    }
    for (std::size_t i = 0; i < trials; ++i) {
        SplitMix64 rng(derive_seed(seed, i));
        consider(random_poly(dim - 1, rng),
                 "random trial " + std::to_string(i));
    }
    return best;
}

enum class UpperMethod { FrakN, Theorem2Chain };

struct NormCertificate {
    double lower = 0.0;   // empirical
    double upper = 0.0;   // frakN bound (possibly improved by a chain bound)
    OperatorSpace space = OperatorSpace::H1;
    std::string lower_witness;
    UpperMethod upper_method = UpperMethod::FrakN;
};

struct CertifyParams {
    std::size_t dim = 0;  // 0 = 4 * (degree + 1)
    std::size_t trials = 16;
    std::uint64_t seed = 0;
    NormParams norms{};
    double tol = 1e-6;
    // When f is declared as g*alpha the chain bound 12 ||g||_inf ||alpha||
    // competes with the frakN bound for the upper side.
    std::optional<std::pair<AnalyticPoly, MultiplierSeq>> factorization;
};

inline NormCertificate certify(const AnalyticPoly& f, OperatorSpace space,
                               const CertifyParams& params) {
    std::size_t dim = params.dim ? params.dim : 4 * (f.degree() + 1);
    LowerBoundResult lower =
        lower_bound_norm(f, space, dim, params.trials, params.seed);

    NormCertificate cert;
    cert.space = space;
    cert.lower = lower.value;
    cert.lower_witness = lower.witness;
    cert.upper = frakn_norm(f, params.norms).value;
    cert.upper_method = UpperMethod::FrakN;

    if (params.factorization) {
        const auto& [g, alpha] = *params.factorization;
        AnalyticPoly expected = hadamard(g, alpha);
        if (expected.coeffs.size() != f.coeffs.size())
            throw PreconditionFailed(
                "certify: declared factorization has the wrong degree");
        double scale = 0.0;
        for (const auto& c : f.coeffs) scale = std::max(scale, std::abs(c));
        for (std::size_t n = 0; n < f.coeffs.size(); ++n)
            if (std::abs(expected.coeffs[n] - f.coeffs[n]) > 1e-12 * scale)
                throw PreconditionFailed(
                    "certify: declared factorization does not reproduce f");
        double chain = 12.0 * hinf_norm(g, params.norms.oversample).value *
                       alpha_norm(alpha);
        if (chain < cert.upper) {
            cert.upper = chain;
            cert.upper_method = UpperMethod::Theorem2Chain;
        }
    }

    if (cert.lower > cert.upper + params.tol * std::max(1.0, cert.upper))
        throw CertificateViolation(
            "certify: empirical lower bound " + std::to_string(cert.lower) +
            " exceeds upper bound " + std::to_string(cert.upper) +
            " in " + space_name(space));
    return cert;
}

} // namespace hardylab
