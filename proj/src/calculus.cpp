#include "ddeform/calculus.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ddeform {

DeformedPolynomial deformed_derivative(const DeformedPolynomial& p)
{
    const Eigen::VectorXd& c = p.coeffs();
    if (c.size() <= 1) {
        return DeformedPolynomial::zero(p.dimension());
    }
    Eigen::VectorXd out(c.size() - 1);
    for (Eigen::Index n = 1; n < c.size(); ++n) {
        out[n - 1] = d_factor(static_cast<int>(n), p.dimension()) * c[n];
    }
    return DeformedPolynomial(std::move(out), p.dimension());
}

DeformedPolynomial ordinary_derivative(const DeformedPolynomial& p)
{
    const Eigen::VectorXd& c = p.coeffs();
    if (c.size() <= 1) {
        return DeformedPolynomial::zero(p.dimension());
    }
    Eigen::VectorXd out(c.size() - 1);
    for (Eigen::Index n = 1; n < c.size(); ++n) {
        out[n - 1] = static_cast<double>(n) * c[n];
    }
    return DeformedPolynomial(std::move(out), p.dimension());
}

DeformedPolynomial deformed_integral(const DeformedPolynomial& p)
{
    const Eigen::VectorXd& c = p.coeffs();
    Eigen::VectorXd out = Eigen::VectorXd::Zero(c.size() + 1);
    for (Eigen::Index n = 0; n < c.size(); ++n) {
        out[n + 1] = c[n] / d_factor(static_cast<int>(n + 1), p.dimension());
    }
    return DeformedPolynomial(std::move(out), p.dimension());
}

namespace {

DeformedPolynomial ordinary_integral(const DeformedPolynomial& p)
{
    const Eigen::VectorXd& c = p.coeffs();
    Eigen::VectorXd out = Eigen::VectorXd::Zero(c.size() + 1);
    for (Eigen::Index n = 0; n < c.size(); ++n) {
        out[n + 1] = c[n] / static_cast<double>(n + 1);
    }
    return DeformedPolynomial(std::move(out), p.dimension());
}

// int (D-1)/(2 xi) (1 - R) q dxi; (1 - R) q = 2 odd(q), and odd(q)/xi is a polynomial.
DeformedPolynomial recursion_step(const DeformedPolynomial& q)
{
    const Eigen::VectorXd& c = q.coeffs();
    const double dm1 = q.dimension().value() - 1.0;
    Eigen::VectorXd reduced = Eigen::VectorXd::Zero(std::max<Eigen::Index>(c.size() - 1, 1));
    for (Eigen::Index k = 1; k < c.size(); k += 2) {
        reduced[k - 1] = dm1 * c[k];
    }
    return ordinary_integral(DeformedPolynomial(std::move(reduced), q.dimension()));
}

} // namespace

SeriesIntegral deformed_integral_series(const DeformedPolynomial& p, int terms)
{
    if (terms < 1) {
        throw std::domain_error("deformed_integral_series: terms must be >= 1");
    }
    const double dm1 = p.dimension().value() - 1.0;
    const Eigen::VectorXd& c = p.coeffs();

    std::string offending;
    double tail = 0.0;
    for (Eigen::Index n = 0; n < c.size(); n += 2) {
        if (c[n] == 0.0) continue;
        const double ratio = dm1 / static_cast<double>(n + 1);
        if (std::abs(ratio) >= 1.0) {
            offending += (offending.empty() ? "" : ", ") + std::string("xi^") + std::to_string(n);
            continue;
        }
        // sum_{m >= terms} (-ratio)^m = (-ratio)^terms / (1 + ratio)
        const double t = std::abs(c[n]) / (n + 1.0) * std::pow(std::abs(ratio), terms) / (1.0 + ratio);
        tail = std::max(tail, t);
    }
    if (!offending.empty()) {
        throw std::domain_error("deformed_integral_series: |D-1| >= n+1 for " + offending);
    }

    DeformedPolynomial term = ordinary_integral(p);
    DeformedPolynomial sum = term;
    for (int m = 1; m < terms; ++m) {
        term = recursion_step(term);
        if (m % 2 == 1) {
            sum -= term;
        } else {
            sum += term;
        }
    }
    return {std::move(sum), tail};
}

ParityFunction ParityFunction::split(std::function<double(double)> f, Dimension d)
{
    auto even = [f](double x) { return 0.5 * (f(x) + f(-x)); };
    auto odd = [f](double x) { return 0.5 * (f(x) - f(-x)); };
    return {even, odd, d};
}

DerivativeEstimate ridders_derivative(const std::function<double(double)>& f, double x, double h)
{
    if (!(h > 0.0)) {
        throw std::invalid_argument("ridders_derivative: step must be > 0");
    }
    constexpr int ntab = 10;
    constexpr double con = 1.4;
    constexpr double con2 = con * con;
    constexpr double safe = 2.0;

    std::array<std::array<double, ntab>, ntab> a{};
    double hh = h;
    a[0][0] = (f(x + hh) - f(x - hh)) / (2.0 * hh);
    double err = std::numeric_limits<double>::max();
    double ans = a[0][0];
    for (int i = 1; i < ntab; ++i) {
        hh /= con;
        a[0][i] = (f(x + hh) - f(x - hh)) / (2.0 * hh);
        double fac = con2;
        for (int j = 1; j <= i; ++j) {
            a[j][i] = (a[j - 1][i] * fac - a[j - 1][i - 1]) / (fac - 1.0);
            fac *= con2;
            const double errt = std::max(std::abs(a[j][i] - a[j - 1][i]), std::abs(a[j][i] - a[j - 1][i - 1]));
            if (errt <= err) {
                err = errt;
                ans = a[j][i];
            }
        }
        if (std::abs(a[i][i] - a[i - 1][i - 1]) >= safe * err) {
            break;
        }
    }
    return {ans, err};
}

double deformed_derivative(const ParityFunction& f, double xi)
{
    const double h = 0.1 * std::max(1.0, std::abs(xi));
    const double dm1 = f.d.value() - 1.0;
    const std::function<double(double)> whole = [&f](double x) { return f(x); };
    const double slope = ridders_derivative(whole, xi, h).value;
    if (xi == 0.0) {
        return slope + dm1 * ridders_derivative(f.odd, 0.0, h).value;
    }
    return slope + dm1 * f.odd(xi) / xi;
}

double deformed_integral(const ParityFunction& f, double x, double tol)
{
    if (x == 0.0) {
        return 0.0;
    }
    const double ax = std::abs(x);
    const double dv = f.d.value();
    const double even_part = integrate_weighted(f.odd, Dimension(1.0), 0.0, ax, tol).value;
    const double weighted = integrate_weighted(f.even, f.d, 0.0, ax, tol).value / (sigma(f.d) / 2.0);
    const double odd_part = std::pow(ax, 1.0 - dv) * weighted;
    return even_part + (x > 0.0 ? odd_part : -odd_part);
}

} // namespace ddeform
