#include "ddeform/fock.hpp"

#include <cmath>
#include <stdexcept>

namespace ddeform {

namespace {

// Ratio bound q >= |c_{n+1}|^2 / |c_n|^2 for every n >= last, given
// |c_{n+1}|^2 / |c_n|^2 = alpha_sq / [n+1]_D. [k]_D grows along each parity,
// so the smallest factor past `last` is min([last+1], [last+2]).
double ratio_bound(double alpha_sq, int last, Dimension d)
{
    const double smallest = std::min(d_factor(last + 1, d), d_factor(last + 2, d));
    return alpha_sq / smallest;
}

} // namespace

LadderRep build_ladder(int size, Dimension d)
{
    if (size < 2) {
        throw std::domain_error("build_ladder: truncation must be >= 2");
    }
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(size, size);
    Eigen::MatrixXd reflection = Eigen::MatrixXd::Zero(size, size);
    for (int n = 0; n < size; ++n) {
        reflection(n, n) = (n % 2 == 0) ? 1.0 : -1.0;
        if (n >= 1) {
            a(n - 1, n) = std::sqrt(d_factor(n, d));
        }
    }
    Eigen::MatrixXd a_dagger = a.transpose();
    return {size, d, std::move(a), std::move(a_dagger), std::move(reflection)};
}

Eigen::MatrixXd number_operator(const LadderRep& rep)
{
    return 0.5 * (rep.a_dagger * rep.a + rep.a * rep.a_dagger)
         - 0.5 * rep.d.value() * Eigen::MatrixXd::Identity(rep.size, rep.size);
}

Eigen::MatrixXd commutator(const LadderRep& rep)
{
    return rep.a * rep.a_dagger - rep.a_dagger * rep.a;
}

FockVector basis_state(int n, int size, Dimension d)
{
    if (n < 0 || n >= size) {
        throw std::domain_error("basis_state: index outside truncation");
    }
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(size);
    c[n] = 1.0;
    return {std::move(c), d};
}

FockVector apply(const Eigen::MatrixXd& op, const FockVector& v)
{
    if (op.cols() != v.coeffs.size()) {
        throw std::invalid_argument("apply: operator and vector sizes differ");
    }
    return {op.cast<std::complex<double>>() * v.coeffs, v.d};
}

CoherentState coherent_state(std::complex<double> alpha, Dimension d, double tol, int max_size)
{
    if (!(tol > 0.0)) {
        throw std::invalid_argument("coherent_state: tol must be > 0");
    }
    const double alpha_sq = std::norm(alpha);
    std::vector<std::complex<double>> c;
    c.push_back(1.0 / std::sqrt(deformed_exp(alpha_sq, d)));
    for (int last = 0;; ++last) {
        if (last >= 1) {
            const double w = std::norm(c[last]);
            const double q = ratio_bound(alpha_sq, last, d);
            if (q < 1.0) {
                const double residual = w / (1.0 - q);
                if (residual < tol) {
                    Eigen::VectorXcd coeffs = Eigen::Map<const Eigen::VectorXcd>(c.data(), static_cast<Eigen::Index>(c.size()));
                    return {alpha, FockVector{std::move(coeffs), d}, residual};
                }
            }
        }
        if (static_cast<int>(c.size()) >= max_size) {
            throw SeriesNotConverged("coherent_state: tolerance not reached within truncation cap");
        }
        c.push_back(c[last] * alpha / std::sqrt(d_factor(last + 1, d)));
    }
}

double deformed_poisson(int n, double alpha_sq, Dimension d)
{
    if (n < 0) {
        throw std::domain_error("deformed_poisson: n must be >= 0");
    }
    if (!(alpha_sq >= 0.0) || !std::isfinite(alpha_sq)) {
        throw std::domain_error("deformed_poisson: alpha_sq must be finite and >= 0");
    }
    if (alpha_sq == 0.0) {
        return n == 0 ? 1.0 : 0.0;
    }
    const double log_p = n * std::log(alpha_sq) - log_d_factorial(n, d) - std::log(deformed_exp(alpha_sq, d));
    return std::exp(log_p);
}

PoissonTable deformed_poisson_distribution(double alpha_sq, Dimension d, double tol, int max_n)
{
    if (!(tol > 0.0)) {
        throw std::invalid_argument("deformed_poisson_distribution: tol must be > 0");
    }
    if (!(alpha_sq >= 0.0) || !std::isfinite(alpha_sq)) {
        throw std::domain_error("deformed_poisson_distribution: alpha_sq must be finite and >= 0");
    }
    std::vector<double> p;
    p.push_back(alpha_sq == 0.0 ? 1.0 : 1.0 / deformed_exp(alpha_sq, d));
    for (int last = 0;; ++last) {
        const double q = ratio_bound(alpha_sq, last, d);
        if (q < 1.0) {
            const double tail = p[last] * q / (1.0 - q);
            if (tail < tol) {
                return {std::move(p), tail};
            }
        }
        if (last >= max_n) {
            throw SeriesNotConverged("deformed_poisson_distribution: tolerance not reached");
        }
        p.push_back(p[last] * alpha_sq / d_factor(last + 1, d));
    }
}

} // namespace ddeform
