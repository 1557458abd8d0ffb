#pragma once

#include <complex>

#include <Eigen/Core>

#include "ddeform/grid_density.hpp"
#include "ddeform/polynomial.hpp"

namespace ddeform {

/// Highest degree hermite_d builds. Coefficients of H_60^D stay below ~1e70.
inline constexpr int kHermiteMaxDegree = 60;

/// D-deformed Hermite polynomial
///   H_n^D(xi) = n!/[n]_D! (-1)^n e^{xi^2} (d_D/d_D xi)^n e^{-xi^2}.
struct DeformedHermite {
    int n;
    Dimension d;
    DeformedPolynomial poly;

    double operator()(double xi) const { return poly(xi); }
};

/// One application of the raising operator (xi - d_D/d_D xi) on P(xi) e^{-xi^2/2},
/// written on the polynomial factor: P -> 2 xi P - d_D P.
DeformedPolynomial raise_on_gaussian(const DeformedPolynomial& p);

/// One deformed derivative of P(xi) e^{-xi^2/2} on the polynomial factor:
/// P -> d_D P - xi P.
DeformedPolynomial derivative_on_gaussian(const DeformedPolynomial& p);

/// Builds H_n^D by n exact raising steps from the constant 1, rescaled by n!/[n]_D!.
DeformedHermite hermite_d(int n, Dimension d);

/// Value of H_n^D(xi) from the three-term recurrence
///   H_{n+1} = (n+1)/[n+1]_D (2 xi H_n - 2 n H_{n-1}).
double hermite_d_value(int n, Dimension d, double xi);

/// chi_n(xi) = norm_const * H_n^D(xi) * exp(-xi^2/2).
struct OscillatorState {
    int n;
    Dimension d;
    DeformedHermite hermite;
    double norm_const;

    double operator()(double xi) const { return norm_const * hermite(xi) * std::exp(-0.5 * xi * xi); }
};

/// [n]_D! / (n! sqrt(pi^{D/2} 2^n [n]_D!)); pi^{-D/4} for n = 0.
double oscillator_norm_const(int n, Dimension d);

OscillatorState oscillator_state(int n, Dimension d);

/// Coordinate-space coherent state
///   Phi_alpha(xi) = e^{-xi^2/2} pi^{-D/4} / sqrt(E_D(|alpha|^2)) sum_n alpha^n H_n^D(xi) / (sqrt(2^n) n!).
/// Summation stops once the coherent-weight tail bound drops below tol^2 and
/// the latest term is below tol. Throws SeriesNotConverged past 10000 terms.
std::complex<double> coherent_wavefunction(std::complex<double> alpha, Dimension d, double xi, double tol = 1e-14);

/// rho_n(xi) = sigma(D)/2 |xi|^{D-1} chi_n(xi)^2 on the grid, with its whole-line integral.
GridDensity oscillator_density(int n, Dimension d, const Eigen::ArrayXd& grid);

} // namespace ddeform
