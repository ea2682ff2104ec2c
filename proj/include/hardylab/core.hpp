#pragma once

/*
 * core.hpp - truncated analytic functions and circle quadrature.
 *
 * Function model: a finite Taylor polynomial f(z) = sum_{n<=N} c_n z^n,
 * evaluated anywhere on the closed unit disk.  Boundary integrals use the
 * uniform trapezoid rule on M equispaced nodes
 *
 *     zeta_j = exp(2*pi*i*(j + offset)/M),   weight 1/M per node,
 *
 * which integrates trigonometric polynomials exactly below the Nyquist
 * degree.  The anti-aliasing rule M >= 2*(N+1) is enforced wherever samples
 * feed a quadrature; callers may override it explicitly.
 *
 * Kernels:
 *   Poisson   P_z(zeta) = (1 - |z|^2) / |zeta - z|^2
 *   Cauchy    K_phi(z)  = int phi(zeta) / (1 - conj(zeta) z) dm(zeta)
 *
 * smirnov_check probes the subharmonicity inequality
 *   |f(z)|^q <= int |f(zeta)|^q P_z(zeta) dm(zeta)
 * on a set of interior test points and reports the worst violation.
 */

#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "hardylab/errors.hpp"

namespace hardylab {

using Complex = std::complex<double>;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// ---------------------------------------------------------------------------
// AnalyticPoly - coefficients c_0..c_N of a truncated analytic function.
// ---------------------------------------------------------------------------
struct AnalyticPoly {
    std::vector<Complex> coeffs;

    AnalyticPoly() : coeffs{Complex{0.0, 0.0}} {}

    explicit AnalyticPoly(std::vector<Complex> c) : coeffs(std::move(c)) {
        if (coeffs.empty())
            throw DomainError("AnalyticPoly: coefficient vector must be non-empty");
    }

    static AnalyticPoly zero() { return AnalyticPoly{}; }

    std::size_t degree() const { return coeffs.size() - 1; }

    // Horner evaluation; exact at z = 0 (returns c_0).
    Complex operator()(Complex z) const {
        Complex acc = coeffs.back();
        for (std::size_t i = coeffs.size() - 1; i-- > 0;)
            acc = acc * z + coeffs[i];
        return acc;
    }

    bool is_zero() const {
        for (const auto& c : coeffs)
            if (c != Complex{0.0, 0.0}) return false;
        return true;
    }
};

inline Complex eval_poly(const AnalyticPoly& f, Complex z) { return f(z); }

inline AnalyticPoly operator+(const AnalyticPoly& a, const AnalyticPoly& b) {
    std::vector<Complex> out(std::max(a.coeffs.size(), b.coeffs.size()),
                             Complex{0.0, 0.0});
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) out[i] += a.coeffs[i];
    for (std::size_t i = 0; i < b.coeffs.size(); ++i) out[i] += b.coeffs[i];
    return AnalyticPoly{std::move(out)};
}

inline AnalyticPoly operator-(const AnalyticPoly& a, const AnalyticPoly& b) {
    std::vector<Complex> out(std::max(a.coeffs.size(), b.coeffs.size()),
                             Complex{0.0, 0.0});
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) out[i] += a.coeffs[i];
    for (std::size_t i = 0; i < b.coeffs.size(); ++i) out[i] -= b.coeffs[i];
    return AnalyticPoly{std::move(out)};
}

inline AnalyticPoly operator*(Complex s, const AnalyticPoly& f) {
    std::vector<Complex> out(f.coeffs);
    for (auto& c : out) c *= s;
    return AnalyticPoly{std::move(out)};
}

// ---------------------------------------------------------------------------
// DiskPoint - a point strictly inside the unit disk.
// ---------------------------------------------------------------------------
struct DiskPoint {
    Complex value;

    explicit DiskPoint(Complex z) : value(z) {
        if (!(std::abs(z) < 1.0))
            throw DomainError("DiskPoint: |z| must be strictly less than 1");
    }
};

// ---------------------------------------------------------------------------
// BoundaryGrid - M equispaced unit-modulus nodes carrying weight 1/M each,
// i.e. normalized Lebesgue measure on the circle.  The offset shifts every
// node by offset/M of a turn so that two grids can be staggered.
// ---------------------------------------------------------------------------
class BoundaryGrid {
public:
    explicit BoundaryGrid(std::size_t size, double offset = 0.0)
        : size_(size), offset_(offset) {
        if (size_ == 0)
            throw DomainError("BoundaryGrid: size must be >= 1");
        if (!(offset_ >= 0.0 && offset_ < 1.0))
            throw DomainError("BoundaryGrid: offset must lie in [0, 1)");
        nodes_.reserve(size_);
        for (std::size_t j = 0; j < size_; ++j) {
            double a = angle(j);
            nodes_.emplace_back(std::cos(a), std::sin(a));
        }
    }

    std::size_t size() const { return size_; }
    double offset() const { return offset_; }
    double weight() const { return 1.0 / static_cast<double>(size_); }
    double angle(std::size_t j) const {
        return kTwoPi * (static_cast<double>(j) + offset_) /
               static_cast<double>(size_);
    }
    const std::vector<Complex>& nodes() const { return nodes_; }
    Complex node(std::size_t j) const { return nodes_[j]; }

private:
    std::size_t size_;
    double offset_;
    std::vector<Complex> nodes_;
};

// Smallest chord distance |zeta_j - eta_i| between nodes of two grids,
// computed from the lattice structure of the angle differences (no pair
// enumeration).  With g = gcd(Mz, Me) the possible angle numerators are
// c + g*Z where c = Me*offz - Mz*offe, so the minimum is dist(c, g*Z).
inline double grid_min_chord(const BoundaryGrid& zeta, const BoundaryGrid& eta) {
    double mz = static_cast<double>(zeta.size());
    double me = static_cast<double>(eta.size());
    double g = static_cast<double>(std::gcd(zeta.size(), eta.size()));
    double c = me * zeta.offset() - mz * eta.offset();
    double r = std::fmod(c, g);
    if (r < 0.0) r += g;
    double d = std::min(r, g - r);
    double half_angle = std::numbers::pi * d / (mz * me);
    return 2.0 * std::abs(std::sin(half_angle));
}

// ---------------------------------------------------------------------------
// Sampling and quadrature.
// ---------------------------------------------------------------------------

// f at every grid node, in node order.  Enforces the anti-aliasing rule
// M >= 2*(degree+1) unless explicitly overridden (interpolation at exactly
// degree+1 nodes is a legitimate override use).
inline std::vector<Complex> boundary_samples(const AnalyticPoly& f,
                                             const BoundaryGrid& grid,
                                             bool allow_aliasing = false) {
    if (!allow_aliasing && grid.size() < 2 * (f.degree() + 1))
        throw AliasingError("boundary_samples: grid size " +
                            std::to_string(grid.size()) +
                            " < 2*(degree+1) = " +
                            std::to_string(2 * (f.degree() + 1)));
    std::vector<Complex> out;
    out.reserve(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j)
        out.push_back(f(grid.node(j)));
    return out;
}

// P_z(zeta) = (1 - |z|^2)/|zeta - z|^2 for |zeta| = 1, |z| < 1.
inline double poisson_kernel(const DiskPoint& z, Complex zeta) {
    return (1.0 - std::norm(z.value)) / std::norm(zeta - z.value);
}

// (1/M) sum_j samples[j] * P_z(zeta_j); the discrete harmonic extension.
inline double poisson_extension(std::span<const double> samples,
                                const BoundaryGrid& grid, const DiskPoint& z) {
    if (samples.size() != grid.size())
        throw LengthMismatch("poisson_extension: samples length " +
                             std::to_string(samples.size()) +
                             " != grid size " + std::to_string(grid.size()));
    double sum = 0.0;
    for (std::size_t j = 0; j < grid.size(); ++j)
        sum += samples[j] * poisson_kernel(z, grid.node(j));
    return sum * grid.weight();
}

// (1/M) sum_j density[j] / (1 - conj(zeta_j) z); the discrete Cauchy
// transform of the density phi against normalized Lebesgue measure.
inline Complex cauchy_transform(std::span<const Complex> density,
                                const BoundaryGrid& grid, const DiskPoint& z) {
    if (density.size() != grid.size())
        throw LengthMismatch("cauchy_transform: density length " +
                             std::to_string(density.size()) +
                             " != grid size " + std::to_string(grid.size()));
    Complex sum{0.0, 0.0};
    for (std::size_t j = 0; j < grid.size(); ++j)
        sum += density[j] / (1.0 - std::conj(grid.node(j)) * z.value);
    return sum * grid.weight();
}

// ---------------------------------------------------------------------------
// Smirnov / Poisson inequality check.
// ---------------------------------------------------------------------------
struct SmirnovReport {
    double max_violation;     // max over test points of |f(z)|^q - extension
    Complex worst_point;      // argmax point
    std::size_t worst_index;  // its position in the input list
    double tol;
    bool pass;                // max_violation <= tol
};

// For each test point z computes |f(z)|^q - (1/M) sum |f(zeta_j)|^q P_z(zeta_j).
// Subharmonicity of |f|^q makes the true difference <= 0; anything positive
// beyond quadrature tolerance indicates a bug.  Requires the grid to resolve
// |f|^q: M >= 2*(ceil(q)*degree + 1).
inline SmirnovReport smirnov_check(const AnalyticPoly& f, double q,
                                   const BoundaryGrid& grid,
                                   std::span<const DiskPoint> test_points,
                                   double tol) {
    if (!(q >= 1.0))
        throw DomainError("smirnov_check: exponent q must be >= 1");
    if (test_points.empty())
        throw DomainError("smirnov_check: no test points supplied");
    std::size_t needed =
        2 * (static_cast<std::size_t>(std::ceil(q)) * f.degree() + 1);
    if (grid.size() < needed)
        throw AliasingError("smirnov_check: grid size " +
                            std::to_string(grid.size()) + " < " +
                            std::to_string(needed) + " required for |f|^q");

    auto samples = boundary_samples(f, grid, /*allow_aliasing=*/true);
    std::vector<double> powed(samples.size());
    for (std::size_t j = 0; j < samples.size(); ++j)
        powed[j] = std::pow(std::abs(samples[j]), q);

    SmirnovReport report{-std::numeric_limits<double>::infinity(),
                         Complex{0.0, 0.0}, 0, tol, false};
    for (std::size_t i = 0; i < test_points.size(); ++i) {
        const DiskPoint& z = test_points[i];
        double lhs = std::pow(std::abs(f(z.value)), q);
        double v = lhs - poisson_extension(powed, grid, z);
        if (v > report.max_violation) {
            report.max_violation = v;
            report.worst_point = z.value;
            report.worst_index = i;
        }
    }
    report.pass = report.max_violation <= tol;
    return report;
}

} // namespace hardylab
