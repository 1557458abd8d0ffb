#include "ddeform/oscillator.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "ddeform/calculus.hpp"
#include "ddeform/quadrature.hpp"

namespace ddeform {

namespace {

void check_degree(int n)
{
    if (n < 0 || n > kHermiteMaxDegree) {
        throw std::domain_error("hermite degree must be in [0, " + std::to_string(kHermiteMaxDegree) + "]");
    }
}

} // namespace

// d_D (P g) = g (d_D P - xi P) for the even Gaussian g = e^{-xi^2/2}.
DeformedPolynomial derivative_on_gaussian(const DeformedPolynomial& p)
{
    return deformed_derivative(p) - p.times_xi();
}

DeformedPolynomial raise_on_gaussian(const DeformedPolynomial& p)
{
    return 2.0 * p.times_xi() - deformed_derivative(p);
}

DeformedHermite hermite_d(int n, Dimension d)
{
    check_degree(n);
    DeformedPolynomial q = DeformedPolynomial::monomial(0, 1.0, d);
    double scale = 1.0; // n! / [n]_D!
    for (int k = 1; k <= n; ++k) {
        q = raise_on_gaussian(q);
        scale *= k / d_factor(k, d);
    }
    q *= scale;
    if (!q.coeffs().allFinite()) {
        throw std::overflow_error("hermite_d: coefficient overflow");
    }
    return {n, d, std::move(q)};
}

double hermite_d_value(int n, Dimension d, double xi)
{
    if (n < 0) {
        throw std::domain_error("hermite_d_value: n must be >= 0");
    }
    double prev = 0.0;
    double cur = 1.0;
    for (int k = 0; k < n; ++k) {
        const double next = (k + 1.0) / d_factor(k + 1, d) * (2.0 * xi * cur - 2.0 * k * prev);
        prev = cur;
        cur = next;
    }
    return cur;
}

double oscillator_norm_const(int n, Dimension d)
{
    if (n < 0) {
        throw std::domain_error("oscillator_norm_const: n must be >= 0");
    }
    // [n]_D!/(n! sqrt(pi^{D/2} 2^n [n]_D!)) = sqrt([n]_D! / (pi^{D/2} 2^n)) / n!
    const double log_c = 0.5 * (log_d_factorial(n, d) - 0.5 * d.value() * std::log(std::numbers::pi)
                                - n * std::numbers::ln2)
                       - std::lgamma(n + 1.0);
    return std::exp(log_c);
}

OscillatorState oscillator_state(int n, Dimension d)
{
    return {n, d, hermite_d(n, d), oscillator_norm_const(n, d)};
}

std::complex<double> coherent_wavefunction(std::complex<double> alpha, Dimension d, double xi, double tol)
{
    if (!(tol > 0.0)) {
        throw std::invalid_argument("coherent_wavefunction: tol must be > 0");
    }
    const double alpha_sq = std::norm(alpha);
    const double e_d = deformed_exp(alpha_sq, d);
    const double prefactor = std::exp(-0.5 * xi * xi) * std::pow(std::numbers::pi, -0.25 * d.value()) / std::sqrt(e_d);

    // s_n = H_n^D(xi) / (sqrt(2^n) n!) obeys s_{n+1} = (sqrt(2) xi s_n - s_{n-1}) / [n+1]_D.
    const double root2_xi = std::numbers::sqrt2 * xi;
    double s_prev = 0.0;
    double s = 1.0;
    std::complex<double> alpha_pow = 1.0;
    double weight = 1.0 / e_d; // |c_n|^2
    detail::CompensatedSum<std::complex<double>> sum;
    sum.add(1.0);
    for (int n = 1; n < kSeriesIterationCap; ++n) {
        const double s_next = (root2_xi * s - s_prev) / d_factor(n, d);
        s_prev = s;
        s = s_next;
        alpha_pow *= alpha;
        weight *= alpha_sq / d_factor(n, d);
        const std::complex<double> term = alpha_pow * s;
        sum.add(term);

        const double smallest = std::min(d_factor(n + 1, d), d_factor(n + 2, d));
        const double q = alpha_sq / smallest;
        if (q < 1.0 && weight / (1.0 - q) < tol * tol && std::abs(term) * prefactor < tol) {
            return prefactor * sum.value();
        }
    }
    throw SeriesNotConverged("coherent_wavefunction: no convergence within the iteration cap");
}

GridDensity oscillator_density(int n, Dimension d, const Eigen::ArrayXd& grid)
{
    if (!grid.allFinite()) {
        throw std::domain_error("oscillator_density: grid must be finite");
    }
    const OscillatorState state = oscillator_state(n, d);
    const double half_sigma = sigma(d) / 2.0;
    const double dm1 = d.value() - 1.0;
    Eigen::ArrayXd rho(grid.size());
    for (Eigen::Index i = 0; i < grid.size(); ++i) {
        const double chi = state(grid[i]);
        // a node at the origin wins over a singular weight
        rho[i] = chi == 0.0 ? 0.0 : half_sigma * std::pow(std::abs(grid[i]), dm1) * chi * chi;
    }
    const double integral = integrate_whole_line([&state](double x) {
        const double chi = state(x);
        return chi * chi;
    }, d).value;
    return {d, n, grid, std::move(rho), integral};
}

} // namespace ddeform
