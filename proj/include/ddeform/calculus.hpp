#pragma once

#include <functional>
#include <vector>

#include "ddeform/polynomial.hpp"
#include "ddeform/quadrature.hpp"

namespace ddeform {

// D-deformed derivative d_D/d_D xi = d/dxi + (D-1)/(2 xi) (1 - R),
// with R the reflection xi -> -xi.

/// Exact deformed derivative of a polynomial: xi^n -> [n]_D xi^{n-1}.
DeformedPolynomial deformed_derivative(const DeformedPolynomial& p);

/// Ordinary derivative of a polynomial.
DeformedPolynomial ordinary_derivative(const DeformedPolynomial& p);

/// Deformed antiderivative with zero constant: xi^n -> xi^{n+1} / [n+1]_D.
DeformedPolynomial deformed_integral(const DeformedPolynomial& p);

struct SeriesIntegral {
    DeformedPolynomial value;
    /// Bound on |closed form - partial sum| coefficients, from the geometric tail.
    double tail_bound;
};

/// Partial sum of the operator-inverse expansion
///   int F d_D xi = sum_m (-1)^m I_m,  I_{m+1} = int (D-1)/(2 xi) (1-R) I_m dxi,
///   I_0 = int F dxi,
/// truncated after `terms` terms. Each even power xi^n contributes a geometric
/// series with ratio -(D-1)/(n+1), so |D-1| < n+1 is required for every even
/// power present; violations throw std::domain_error naming the powers.
SeriesIntegral deformed_integral_series(const DeformedPolynomial& p, int terms);

/// A real function stored as its even and odd parts.
struct ParityFunction {
    std::function<double(double)> even;
    std::function<double(double)> odd;
    Dimension d;

    double operator()(double xi) const { return even(xi) + odd(xi); }
    /// (R f)(xi) = f(-xi) = even(xi) - odd(xi)
    double reflected(double xi) const { return even(xi) - odd(xi); }

    /// Splits a general f into (f(x) + f(-x))/2 and (f(x) - f(-x))/2.
    static ParityFunction split(std::function<double(double)> f, Dimension d);
};

struct DerivativeEstimate {
    double value;
    double error;
};

/// Ridders' extrapolated central difference of f at x, starting from step h.
DerivativeEstimate ridders_derivative(const std::function<double(double)>& f, double x, double h);

/// Deformed derivative of a parity-split function at xi:
///   f'(xi) + (D-1) odd(xi) / xi,
/// with the xi -> 0 limit (D-1) odd'(0) at the origin. Derivatives come from
/// Ridders' extrapolation with initial step 0.1 * max(1, |xi|).
double deformed_derivative(const ParityFunction& f, double xi);

/// Definite deformed integral int_0^x F d_D xi of the zero-constant antiderivative.
///
/// The antiderivative has even part int_0^|x| F_odd and odd part
/// sign(x) |x|^{1-D} int_0^|x| t^{D-1} F_even(t) dt, both evaluated with the
/// weighted quadrature.
double deformed_integral(const ParityFunction& f, double x, double tol = 1e-12);

} // namespace ddeform
