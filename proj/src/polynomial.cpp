#include "ddeform/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace ddeform {

namespace {

void require_same_dimension(const DeformedPolynomial& a, const DeformedPolynomial& b)
{
    if (!(a.dimension() == b.dimension())) {
        throw std::invalid_argument("polynomials carry different dimensions");
    }
}

Eigen::VectorXd padded(const Eigen::VectorXd& v, Eigen::Index n)
{
    Eigen::VectorXd out = Eigen::VectorXd::Zero(std::max(n, v.size()));
    out.head(v.size()) = v;
    return out;
}

} // namespace

DeformedPolynomial::DeformedPolynomial(Eigen::VectorXd coeffs, Dimension d)
    : coeffs_(std::move(coeffs)), d_(d)
{
    if (coeffs_.size() == 0) {
        coeffs_ = Eigen::VectorXd::Zero(1);
    }
    if (!coeffs_.allFinite()) {
        throw std::domain_error("polynomial coefficients must be finite");
    }
}

DeformedPolynomial DeformedPolynomial::zero(Dimension d)
{
    return DeformedPolynomial(Eigen::VectorXd::Zero(1), d);
}

DeformedPolynomial DeformedPolynomial::monomial(int power, double coeff, Dimension d)
{
    if (power < 0) {
        throw std::domain_error("monomial power must be >= 0");
    }
    Eigen::VectorXd c = Eigen::VectorXd::Zero(power + 1);
    c[power] = coeff;
    return DeformedPolynomial(std::move(c), d);
}

double DeformedPolynomial::coeff(int k) const
{
    return (k >= 0 && k < coeffs_.size()) ? coeffs_[k] : 0.0;
}

int DeformedPolynomial::degree() const
{
    for (Eigen::Index k = coeffs_.size() - 1; k >= 0; --k) {
        if (coeffs_[k] != 0.0) {
            return static_cast<int>(k);
        }
    }
    return -1;
}

double DeformedPolynomial::operator()(double xi) const
{
    double acc = 0.0;
    for (Eigen::Index k = coeffs_.size() - 1; k >= 0; --k) {
        acc = acc * xi + coeffs_[k];
    }
    return acc;
}

DeformedPolynomial DeformedPolynomial::even_part() const
{
    Eigen::VectorXd c = coeffs_;
    for (Eigen::Index k = 1; k < c.size(); k += 2) c[k] = 0.0;
    return DeformedPolynomial(std::move(c), d_);
}

DeformedPolynomial DeformedPolynomial::odd_part() const
{
    Eigen::VectorXd c = coeffs_;
    for (Eigen::Index k = 0; k < c.size(); k += 2) c[k] = 0.0;
    return DeformedPolynomial(std::move(c), d_);
}

DeformedPolynomial DeformedPolynomial::reflected() const
{
    Eigen::VectorXd c = coeffs_;
    for (Eigen::Index k = 1; k < c.size(); k += 2) c[k] = -c[k];
    return DeformedPolynomial(std::move(c), d_);
}

DeformedPolynomial DeformedPolynomial::times_xi() const
{
    Eigen::VectorXd c = Eigen::VectorXd::Zero(coeffs_.size() + 1);
    c.tail(coeffs_.size()) = coeffs_;
    return DeformedPolynomial(std::move(c), d_);
}

DeformedPolynomial& DeformedPolynomial::operator+=(const DeformedPolynomial& other)
{
    require_same_dimension(*this, other);
    coeffs_ = padded(coeffs_, other.coeffs_.size());
    coeffs_.head(other.coeffs_.size()) += other.coeffs_;
    return *this;
}

DeformedPolynomial& DeformedPolynomial::operator-=(const DeformedPolynomial& other)
{
    require_same_dimension(*this, other);
    coeffs_ = padded(coeffs_, other.coeffs_.size());
    coeffs_.head(other.coeffs_.size()) -= other.coeffs_;
    return *this;
}

DeformedPolynomial& DeformedPolynomial::operator*=(double s)
{
    coeffs_ *= s;
    return *this;
}

DeformedPolynomial operator+(DeformedPolynomial a, const DeformedPolynomial& b) { return a += b; }
DeformedPolynomial operator-(DeformedPolynomial a, const DeformedPolynomial& b) { return a -= b; }
DeformedPolynomial operator*(DeformedPolynomial a, double s) { return a *= s; }
DeformedPolynomial operator*(double s, DeformedPolynomial a) { return a *= s; }

DeformedPolynomial operator*(const DeformedPolynomial& a, const DeformedPolynomial& b)
{
    require_same_dimension(a, b);
    const Eigen::VectorXd& ca = a.coeffs();
    const Eigen::VectorXd& cb = b.coeffs();
    Eigen::VectorXd c = Eigen::VectorXd::Zero(ca.size() + cb.size() - 1);
    for (Eigen::Index i = 0; i < ca.size(); ++i) {
        if (ca[i] == 0.0) continue;
        c.segment(i, cb.size()) += ca[i] * cb;
    }
    return DeformedPolynomial(std::move(c), a.dimension());
}

double max_coeff_diff(const DeformedPolynomial& a, const DeformedPolynomial& b)
{
    const Eigen::Index n = std::max(a.coeffs().size(), b.coeffs().size());
    return (padded(a.coeffs(), n) - padded(b.coeffs(), n)).cwiseAbs().maxCoeff();
}

} // namespace ddeform
