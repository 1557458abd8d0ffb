#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "ddeform/calculus.hpp"
#include "ddeform/polynomial.hpp"
#include "tolerance.hpp"

using namespace ddeform;
using oracle::close_rel;

namespace {

DeformedPolynomial poly(std::initializer_list<double> c, double d)
{
    Eigen::VectorXd v(static_cast<Eigen::Index>(c.size()));
    Eigen::Index i = 0;
    for (double x : c) v[i++] = x;
    return {v, Dimension(d)};
}

DeformedPolynomial random_poly(std::mt19937_64& rng, int max_degree, double d)
{
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    Eigen::VectorXd c(deg(rng) + 1);
    for (Eigen::Index i = 0; i < c.size(); ++i) c[i] = coef(rng);
    return {c, Dimension(d)};
}

ParityFunction as_function(const DeformedPolynomial& p)
{
    const DeformedPolynomial e = p.even_part();
    const DeformedPolynomial o = p.odd_part();
    return {[e](double x) { return e(x); }, [o](double x) { return o(x); }, p.dimension()};
}

} // namespace

TEST_CASE("polynomial basics")
{
    const DeformedPolynomial p = poly({1, 2, 0, 3, 0, 0}, 2.0);
    CHECK(p.degree() == 3);
    CHECK(DeformedPolynomial::zero(Dimension(2)).degree() == -1);
    CHECK(p(2.0) == 1 + 4 + 24);
    CHECK(p.reflected()(2.0) == p(-2.0));
    CHECK(max_coeff_diff(p.even_part() + p.odd_part(), p) == 0.0);
    CHECK(p.times_xi().coeff(4) == 3.0);
    CHECK(p.coeff(17) == 0.0);
    CHECK(max_coeff_diff(p * p, poly({1, 4, 4, 6, 12, 0, 9}, 2.0)) == 0.0);
    CHECK_THROWS_AS(p + poly({1}, 3.0), std::invalid_argument);
    CHECK(DeformedPolynomial(Eigen::VectorXd(0), Dimension(1)).degree() == -1);
    CHECK_THROWS_AS(poly({1, std::nan("")}, 1.0), std::domain_error);
}

TEST_CASE("deformed derivative examples")
{
    for (double d : {0.5, 1.0, 2.5}) {
        CHECK(max_coeff_diff(deformed_derivative(poly({0, 0, 1}, d)), poly({0, 2}, d)) == 0.0);
    }
    CHECK(max_coeff_diff(deformed_derivative(poly({0, 1}, 2.5)), poly({2.5}, 2.5)) == 0.0);
    CHECK(max_coeff_diff(deformed_derivative(poly({0, 0, 0, 1}, 2.0)), poly({0, 0, 4}, 2.0)) == 0.0);
    CHECK(deformed_derivative(poly({7}, 1.3)).degree() == -1);
}

TEST_CASE("numeric deformed derivative examples")
{
    const ParityFunction gauss{[](double x) { return std::exp(-x * x); }, [](double) { return 0.0; }, Dimension(1.7)};
    CHECK(std::abs(deformed_derivative(gauss, 1.0) + 2.0 * std::exp(-1.0)) <= 1e-10);

    const ParityFunction line{[](double) { return 0.0; }, [](double x) { return x; }, Dimension(3)};
    CHECK(std::abs(deformed_derivative(line, 0.0) - 3.0) <= 1e-10);

    const ParityFunction sine{[](double) { return 0.0; }, [](double x) { return std::sin(x); }, Dimension(2)};
    CHECK(std::abs(deformed_derivative(sine, std::numbers::pi) + 1.0) <= 1e-10);
}

TEST_CASE("numeric deformed derivative reaches 1e-8 on random polynomials")
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> xs(-2.0, 2.0);
    for (double d : {0.5, 1.5, 2.7}) {
        for (int i = 0; i < 40; ++i) {
            const DeformedPolynomial p = random_poly(rng, 8, d);
            const double x = xs(rng);
            const double exact = deformed_derivative(p)(x);
            INFO("D = " << d << ", x = " << x);
            CHECK(std::abs(deformed_derivative(as_function(p), x) - exact) <= 1e-8 * std::max(1.0, std::abs(exact)));
            CHECK(std::abs(deformed_derivative(as_function(p), 0.0) - deformed_derivative(p)(0.0)) <= 1e-8);
        }
    }
}

TEST_CASE("ParityFunction::split")
{
    const ParityFunction f = ParityFunction::split([](double x) { return std::exp(x); }, Dimension(2));
    CHECK(close_rel(f.even(0.7), std::cosh(0.7), 1e-15));
    CHECK(close_rel(f.odd(0.7), std::sinh(0.7), 1e-15));
    CHECK(close_rel(f.reflected(0.7), std::exp(-0.7), 1e-15));
}

TEST_CASE("deformed integral examples")
{
    CHECK(max_coeff_diff(deformed_integral(poly({1}, 3.0)), poly({0, 1.0 / 3.0}, 3.0)) <= 1e-16);
    for (double d : {0.4, 1.0, 2.2}) {
        CHECK(max_coeff_diff(deformed_integral(poly({0, 1}, d)), poly({0, 0, 0.5}, d)) == 0.0);
    }
    CHECK(max_coeff_diff(deformed_integral(poly({0, 0, 1}, 2.0)), poly({0, 0, 0, 0.25}, 2.0)) == 0.0);
}

TEST_CASE("series integral examples")
{
    for (double d : {0.5, 1.7, 2.9}) {
        const SeriesIntegral s = deformed_integral_series(poly({0, 1}, d), 2);
        CHECK(max_coeff_diff(s.value, poly({0, 0, 0.5}, d)) == 0.0);
        CHECK(s.tail_bound == 0.0);
    }
    CHECK(max_coeff_diff(deformed_integral_series(poly({1}, 1.0), 1).value, poly({0, 1}, 1.0)) == 0.0);
    const SeriesIntegral s = deformed_integral_series(poly({1}, 1.5), 20);
    CHECK(std::abs(s.value.coeff(1) - 1 / 1.5) <= 1e-6);
    CHECK(std::abs(s.value.coeff(1) - 1 / 1.5) <= s.tail_bound * (1 + 1e-9));
}

TEST_CASE("series integral precondition")
{
    CHECK_THROWS_AS(deformed_integral_series(poly({1}, 2.5), 5), std::domain_error);
    CHECK_THROWS_AS(deformed_integral_series(poly({1}, 1.2), 0), std::domain_error);
    // |D-1| = 2 is below n+1 = 3 for xi^2 but not for the constant
    CHECK_NOTHROW(deformed_integral_series(poly({0, 0, 1}, 3.0), 5));
    try {
        deformed_integral_series(poly({1, 0, 1}, 3.0), 5);
        FAIL("expected domain_error");
    } catch (const std::domain_error& e) {
        CHECK(std::string(e.what()).find("xi^0") != std::string::npos);
    }
}

TEST_CASE("series integral converges at the geometric rate (D-1)/(n+1)")
{
    const double d = 1.5;
    for (int n : {0, 2}) {
        const double rate = (d - 1) / (n + 1);
        const double exact = 1.0 / d_factor(n + 1, Dimension(d));
        double prev_err = 0.0;
        for (int terms = 1; terms <= 12; ++terms) {
            const SeriesIntegral s = deformed_integral_series(DeformedPolynomial::monomial(n, 1.0, Dimension(d)), terms);
            const double err = std::abs(s.value.coeff(n + 1) - exact);
            INFO("n = " << n << ", terms = " << terms);
            // double rounding of the coefficients sits near 1e-16
            CHECK(std::abs(err - s.tail_bound) <= 1e-9 * s.tail_bound + 1e-15);
            if (terms > 1 && err > 1e-9) CHECK(close_rel(err / prev_err, rate, 1e-6));
            prev_err = err;
        }
    }
}

TEST_CASE("fundamental theorem on 200 random polynomials")
{
    std::mt19937_64 rng(42);
    const double dims[] = {0.5, 1.5, 2.7};
    for (int i = 0; i < 200; ++i) {
        const double d = dims[i % 3];
        const DeformedPolynomial p = random_poly(rng, 8, d);
        INFO("case " << i << ", D = " << d);
        CHECK(max_coeff_diff(deformed_derivative(deformed_integral(p)), p) <= 1e-12);
        // the reverse order loses only the constant term
        const DeformedPolynomial back = deformed_integral(deformed_derivative(p));
        CHECK(max_coeff_diff(back + DeformedPolynomial::monomial(0, p.coeff(0), p.dimension()), p) <= 1e-12);
    }
}

TEST_CASE("deformed Leibniz rule for an even factor")
{
    std::mt19937_64 rng(3);
    for (double d : {0.5, 1.5, 2.7}) {
        for (int i = 0; i < 30; ++i) {
            const DeformedPolynomial f = random_poly(rng, 6, d).even_part();
            const DeformedPolynomial g = random_poly(rng, 7, d);
            const DeformedPolynomial lhs = deformed_derivative(f * g);
            const DeformedPolynomial rhs = g * deformed_derivative(f) + deformed_derivative(g) * f;
            CHECK(max_coeff_diff(lhs, rhs) <= 1e-12);
        }
    }
}

TEST_CASE("integration by parts by quadrature")
{
    std::mt19937_64 rng(11);
    for (double d : {0.5, 1.5, 2.7}) {
        for (double a : {0.5, 1.0, 2.0}) {
            const DeformedPolynomial f = random_poly(rng, 6, d).even_part();
            const DeformedPolynomial g = random_poly(rng, 5, d);
            const double lhs = deformed_integral(as_function(g * deformed_derivative(f)), a);
            const double rhs = f(a) * g(a) - f(0) * g(0) - deformed_integral(as_function(deformed_derivative(g) * f), a);
            INFO("D = " << d << ", a = " << a);
            CHECK(std::abs(lhs - rhs) <= 1e-8);
            // the quadrature antiderivative agrees with the exact one
            const DeformedPolynomial h = g * f;
            CHECK(std::abs(deformed_integral(as_function(h), a) - deformed_integral(h)(a)) <= 1e-10);
            CHECK(std::abs(deformed_integral(as_function(h), -a) - deformed_integral(h)(-a)) <= 1e-10);
        }
    }
}

TEST_CASE("D = 1 reduces to ordinary calculus exactly")
{
    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) {
        const DeformedPolynomial p = random_poly(rng, 8, 1.0);
        CHECK(max_coeff_diff(deformed_derivative(p), ordinary_derivative(p)) == 0.0);
        const DeformedPolynomial integral = deformed_integral(p);
        for (int k = 0; k <= p.degree(); ++k) CHECK(integral.coeff(k + 1) == p.coeff(k) / (k + 1));
        CHECK(integral.coeff(0) == 0.0);
    }
}
