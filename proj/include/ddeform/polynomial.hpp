#pragma once

#include <Eigen/Core>

#include "ddeform/special_functions.hpp"

namespace ddeform {

/// Polynomial in the monomial basis, sum_k coeffs[k] xi^k, tagged with the
/// dimension D that the deformed calculus acting on it uses.
///
/// The coefficient vector always has at least one entry; trailing zeros are
/// allowed and ignored by degree().
class DeformedPolynomial {
public:
    DeformedPolynomial(Eigen::VectorXd coeffs, Dimension d);

    static DeformedPolynomial zero(Dimension d);
    static DeformedPolynomial monomial(int power, double coeff, Dimension d);

    const Eigen::VectorXd& coeffs() const noexcept { return coeffs_; }
    Dimension dimension() const noexcept { return d_; }

    /// Coefficient of xi^k; zero past the stored length.
    double coeff(int k) const;

    /// Highest index with a nonzero coefficient, -1 for the zero polynomial.
    int degree() const;

    double operator()(double xi) const;

    DeformedPolynomial even_part() const;
    DeformedPolynomial odd_part() const;
    /// Reflection (R p)(xi) = p(-xi).
    DeformedPolynomial reflected() const;
    /// xi * p(xi)
    DeformedPolynomial times_xi() const;

    DeformedPolynomial& operator+=(const DeformedPolynomial& other);
    DeformedPolynomial& operator-=(const DeformedPolynomial& other);
    DeformedPolynomial& operator*=(double s);

private:
    Eigen::VectorXd coeffs_;
    Dimension d_;
};

DeformedPolynomial operator+(DeformedPolynomial a, const DeformedPolynomial& b);
DeformedPolynomial operator-(DeformedPolynomial a, const DeformedPolynomial& b);
DeformedPolynomial operator*(DeformedPolynomial a, double s);
DeformedPolynomial operator*(double s, DeformedPolynomial a);
DeformedPolynomial operator*(const DeformedPolynomial& a, const DeformedPolynomial& b);

/// Largest absolute coefficient difference, treating missing entries as zero.
double max_coeff_diff(const DeformedPolynomial& a, const DeformedPolynomial& b);

} // namespace ddeform
