#pragma once

#include <functional>

#include "ddeform/special_functions.hpp"

namespace ddeform {

using RealFunction = std::function<double(double)>;

struct QuadratureResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    bool converged = false;
    int intervals = 0;
};

/// Globally adaptive 7/15-point Gauss-Kronrod quadrature of g on [a, b].
///
/// The interval with the largest |K15 - G7| is bisected until the summed
/// estimate drops below max(abs_tol, rel_tol * |I|) or max_intervals is hit.
/// Throws std::domain_error if g returns a non-finite value.
QuadratureResult gauss_kronrod(const RealFunction& g, double a, double b, double abs_tol,
                               double rel_tol, int max_intervals = 4000);

/// Weighted integral sigma(D)/2 * int_lo^hi f(xi) |xi|^{D-1} dxi.
struct WeightedIntegral {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    double d = 1.0;
    double lo = 0.0;
    double hi = 0.0;
    bool converged = false;
};

/// Radius at which integrate_whole_line checks that f has decayed.
inline constexpr double kDecayProbeRadius = 40.0;

/// Integrates f against the fractional-dimensional weight on [lo, hi].
///
/// The interval is split at the origin. On each side the substitution
/// u = |xi|^D / D absorbs the weight, which removes the integrable singularity
/// at xi = 0 when D < 1. Infinite endpoints are allowed and handled as in
/// integrate_whole_line. tol bounds the error absolutely for |I| <= 1 and
/// relatively above that. A result that misses tol is returned with
/// converged = false.
WeightedIntegral integrate_weighted(const RealFunction& f, Dimension d, double lo, double hi,
                                    double tol = 1e-12);

/// Integrates f against the weight over the whole real line.
///
/// Each half line is mapped to u = |xi|^D / D in (0, inf) and then to
/// t = u / (1 + u) in (0, 1). f must decay at least like a Gaussian; the
/// contract is checked by requiring |f(+-R)| R^{D+1} <= 1e-10 at
/// R = kDecayProbeRadius, and a violation throws std::domain_error. Past R,
/// non-finite samples (inf * 0 from a polynomial times a Gaussian) count as 0.
WeightedIntegral integrate_whole_line(const RealFunction& f, Dimension d, double tol = 1e-12);

} // namespace ddeform
