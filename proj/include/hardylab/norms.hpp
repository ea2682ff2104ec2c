#pragma once

/*
 * norms.hpp - boundary norms and the Lambda functional.
 *
 *   hp_norm      ((1/M) sum_j |f(zeta_j)|^p)^(1/p), evaluated at r = 1
 *   hinf_norm    grid maximum of |f| over oversample*(N+1) nodes; a lower
 *                estimate of the true sup, tight as oversample grows
 *   lambda       Lambda(f) = max over eta-nodes of
 *                    (1/Mz) sum_zeta |f(zeta) - f(eta)| / |zeta - eta|
 *   frakn_norm   hinf_norm + lambda
 *
 * For polynomials the Lambda integrand is continuous in eta, so the
 * essential supremum equals the plain maximum in the grid limit.  The two
 * grids are staggered by default (zeta offset 0, eta offset 1/2): the
 * diagonal zeta = eta is a removable singularity of the quotient but is
 * numerically ill-conditioned, so node coincidence is rejected outright.
 *
 * difference_quotient returns F_eta(z) = (f(eta) - f(z))/(eta - z) by
 * synthetic division; on the circle |F_eta(zeta)| equals the Lambda
 * integrand, which ties the per-eta inner sums to L1 norms of F_eta.
 */

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "hardylab/core.hpp"
#include "hardylab/errors.hpp"
#include "hardylab/parallel.hpp"

namespace hardylab {

enum class NormKind { Hp, Hinf, Lambda, FrakN };

// All values are quadrature estimates, never rigorous enclosures;
// grid_size is recorded so a run can be reproduced.
struct NormEstimate {
    double value = 0.0;
    std::size_t grid_size = 0;
    NormKind kind = NormKind::Hp;
    bool is_rigorous = false;
};

// Grid sizes for the Lambda double quadrature; 0 means the default
// max(4096, 32*(degree+1)).
struct LambdaGrids {
    std::size_t m_zeta = 0;
    std::size_t m_eta = 0;
    double zeta_offset = 0.0;
    double eta_offset = 0.5;
};

struct NormParams {
    LambdaGrids grids{};
    int oversample = 16;
};

inline std::size_t default_lambda_size(std::size_t degree) {
    return std::max<std::size_t>(4096, 32 * (degree + 1));
}

// ---------------------------------------------------------------------------
// H^p and H^infinity.
// ---------------------------------------------------------------------------

inline NormEstimate hp_norm(const AnalyticPoly& f, double p,
                            const BoundaryGrid& grid) {
    if (!(p >= 1.0))
        throw DomainError("hp_norm: p must be >= 1");
    auto samples = boundary_samples(f, grid);
    double sum = 0.0;
    if (p == 1.0) {
        for (const auto& s : samples) sum += std::abs(s);
    } else if (p == 2.0) {
        for (const auto& s : samples) sum += std::norm(s);
    } else {
        for (const auto& s : samples) sum += std::pow(std::abs(s), p);
    }
    double value = std::pow(sum * grid.weight(), 1.0 / p);
    return NormEstimate{value, grid.size(), NormKind::Hp, false};
}

// Grid maximum of |f| over oversample*(degree+1) offset-0 nodes.  Always a
// lower estimate of sup_D |f|; checks that need an upper bound normalize by
// this value instead, which only strengthens the tested inequalities.
inline NormEstimate hinf_norm(const AnalyticPoly& f, int oversample = 16) {
    if (oversample < 2)
        throw DomainError("hinf_norm: oversample must be >= 2");
    std::size_t m = static_cast<std::size_t>(oversample) * (f.degree() + 1);
    BoundaryGrid grid(m, 0.0);
    double best = 0.0;
    for (std::size_t j = 0; j < m; ++j)
        best = std::max(best, std::abs(f(grid.node(j))));
    return NormEstimate{best, m, NormKind::Hinf, false};
}

// ---------------------------------------------------------------------------
// Difference quotient F_zeta(z) = (f(zeta) - f(z)) / (zeta - z).
// ---------------------------------------------------------------------------

// Synthetic division, exact in exact arithmetic:
//   F_zeta has coefficients b_k = sum_{n>k} c_n zeta^(n-1-k),
//   computed by b_{N-1} = c_N, b_k = c_{k+1} + zeta*b_{k+1}.
// A constant f yields the zero polynomial (degree-zero case, flagged by
// AnalyticPoly::is_zero on the result).
inline AnalyticPoly difference_quotient(const AnalyticPoly& f, Complex zeta) {
    std::size_t n = f.degree();
    if (n == 0) return AnalyticPoly::zero();
    std::vector<Complex> b(n);
    b[n - 1] = f.coeffs[n];
    for (std::size_t k = n - 1; k-- > 0;)
        b[k] = f.coeffs[k + 1] + zeta * b[k + 1];
    return AnalyticPoly{std::move(b)};
}

// ---------------------------------------------------------------------------
// Lambda functional.
// ---------------------------------------------------------------------------

// Per-eta inner sums (1/Mz) sum_zeta |f(zeta)-f(eta)|/|zeta-eta|, one entry
// per eta-node.  The eta loop runs in parallel; each entry is accumulated in
// fixed zeta order so results do not depend on the thread count.
inline std::vector<double> lambda_profile(const AnalyticPoly& f,
                                          const BoundaryGrid& grid_zeta,
                                          const BoundaryGrid& grid_eta) {
    if (grid_min_chord(grid_zeta, grid_eta) < 1e-14)
        throw GridCoincidence(
            "lambda_profile: zeta and eta grids share a node; stagger the "
            "offsets or change the sizes");

    auto sz = boundary_samples(f, grid_zeta);
    auto se = boundary_samples(f, grid_eta);
    const std::size_t mz = grid_zeta.size();
    const std::size_t me = grid_eta.size();

    std::vector<double> zr(mz), zi(mz);
    for (std::size_t j = 0; j < mz; ++j) {
        zr[j] = sz[j].real();
        zi[j] = sz[j].imag();
    }

    std::vector<double> profile(me, 0.0);

    if (mz == me) {
        // Equal sizes: |zeta_j - eta_i| depends only on (j - i) mod M.
        const double shift = grid_zeta.offset() - grid_eta.offset();
        std::vector<double> inv_dist(mz);
        for (std::size_t k = 0; k < mz; ++k) {
            double half = std::numbers::pi *
                          (static_cast<double>(k) + shift) /
                          static_cast<double>(mz);
            inv_dist[k] = 1.0 / (2.0 * std::abs(std::sin(half)));
        }
        parallel_for(me, [&](std::size_t i) {
            const double er = se[i].real();
            const double ei = se[i].imag();
            double sum = 0.0;
            const double* d = inv_dist.data() + (mz - i);
            for (std::size_t j = 0; j < i; ++j) {
                double dx = zr[j] - er, dy = zi[j] - ei;
                sum += std::sqrt(dx * dx + dy * dy) * d[j];
            }
            d = inv_dist.data() - i;
            for (std::size_t j = i; j < mz; ++j) {
                double dx = zr[j] - er, dy = zi[j] - ei;
                sum += std::sqrt(dx * dx + dy * dy) * d[j];
            }
            profile[i] = sum * grid_zeta.weight();
        });
    } else {
        std::vector<double> nr(mz), ni(mz);
        for (std::size_t j = 0; j < mz; ++j) {
            nr[j] = grid_zeta.node(j).real();
            ni[j] = grid_zeta.node(j).imag();
        }
        parallel_for(me, [&](std::size_t i) {
            const Complex eta = grid_eta.node(i);
            const double er = se[i].real();
            const double ei = se[i].imag();
            double sum = 0.0;
            for (std::size_t j = 0; j < mz; ++j) {
                double dx = zr[j] - er, dy = zi[j] - ei;
                double nx = nr[j] - eta.real(), ny = ni[j] - eta.imag();
                sum += std::sqrt((dx * dx + dy * dy) / (nx * nx + ny * ny));
            }
            profile[i] = sum * grid_zeta.weight();
        });
    }
    return profile;
}

inline NormEstimate lambda_functional(const AnalyticPoly& f,
                                      const BoundaryGrid& grid_zeta,
                                      const BoundaryGrid& grid_eta) {
    auto profile = lambda_profile(f, grid_zeta, grid_eta);
    double best = 0.0;
    for (double v : profile) best = std::max(best, v);
    return NormEstimate{best, grid_zeta.size(), NormKind::Lambda, false};
}

inline NormEstimate lambda_functional(const AnalyticPoly& f,
                                      const LambdaGrids& grids = {}) {
    std::size_t mz = grids.m_zeta ? grids.m_zeta : default_lambda_size(f.degree());
    std::size_t me = grids.m_eta ? grids.m_eta : mz;
    BoundaryGrid gz(mz, grids.zeta_offset);
    BoundaryGrid ge(me, grids.eta_offset);
    return lambda_functional(f, gz, ge);
}

// ---------------------------------------------------------------------------
// frakN norm: sup norm plus Lambda.
// ---------------------------------------------------------------------------
inline NormEstimate frakn_norm(const AnalyticPoly& f,
                               const NormParams& params = {}) {
    NormEstimate hinf = hinf_norm(f, params.oversample);
    NormEstimate lam = lambda_functional(f, params.grids);
    return NormEstimate{hinf.value + lam.value, lam.grid_size, NormKind::FrakN,
                        false};
}

} // namespace hardylab
