#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "ddeform/fock.hpp"
#include "oracles.hpp"
#include "tolerance.hpp"

using namespace ddeform;
using oracle::close_rel;
using cd = std::complex<double>;

TEST_CASE("ladder examples")
{
    CHECK(build_ladder(2, Dimension(1)).a(0, 1) == 1.0);
    const LadderRep r = build_ladder(3, Dimension(2));
    CHECK(close_rel(r.a(0, 1), std::sqrt(2.0), 1e-15));
    CHECK(close_rel(r.a(1, 2), std::sqrt(2.0), 1e-15));
    CHECK((r.a_dagger - r.a.transpose()).norm() == 0.0);
    CHECK(r.reflection(1, 1) == -1.0);
    CHECK_THROWS_AS(build_ladder(1, Dimension(1)), std::domain_error);
}

TEST_CASE("number operator examples")
{
    const Eigen::MatrixXd n1 = number_operator(build_ladder(4, Dimension(1)));
    for (int n = 0; n < 3; ++n) CHECK(std::abs(n1(n, n) - n) <= 1e-15);
    const Eigen::MatrixXd n25 = number_operator(build_ladder(5, Dimension(2.5)));
    CHECK(std::abs(n25(3, 3) - 3.0) <= 1e-14);
    for (double d : {0.3, 1.0, 2.7}) CHECK(std::abs(number_operator(build_ladder(3, Dimension(d)))(0, 0)) <= 1e-15);
}

TEST_CASE("R-deformed commutator and number operator below the truncation edge")
{
    const int size = 64;
    for (double d : {0.5, 1.0, 2.5}) {
        const LadderRep rep = build_ladder(size, Dimension(d));
        const Eigen::MatrixXd expected =
            Eigen::MatrixXd::Identity(size, size) + (d - 1.0) * rep.reflection;
        const Eigen::MatrixXd c = commutator(rep);
        const Eigen::MatrixXd nd = number_operator(rep);
        const int rows = size - 1;
        CHECK((c.topRows(rows) - expected.topRows(rows)).cwiseAbs().maxCoeff() <= 1e-12);
        Eigen::MatrixXd diag = Eigen::MatrixXd::Zero(size, size);
        for (int n = 0; n < size; ++n) diag(n, n) = n;
        CHECK((nd.topRows(rows) - diag.topRows(rows)).cwiseAbs().maxCoeff() <= 1e-12);
        CHECK(((rep.reflection * rep.reflection) - Eigen::MatrixXd::Identity(size, size)).norm() == 0.0);
        // a anticommutes with R
        CHECK((rep.a * rep.reflection + rep.reflection * rep.a).norm() == 0.0);
    }
}

TEST_CASE("number states from the vacuum")
{
    const int size = 30;
    for (double d : {0.5, 1.0, 2.5}) {
        const LadderRep rep = build_ladder(size, Dimension(d));
        FockVector v = basis_state(0, size, Dimension(d));
        for (int n = 1; n < size - 1; ++n) {
            v = apply(rep.a_dagger, v);
            FockVector scaled{v.coeffs / std::sqrt(d_factorial(n, Dimension(d))), v.d};
            INFO("D = " << d << ", n = " << n);
            CHECK((scaled.coeffs - basis_state(n, size, Dimension(d)).coeffs).cwiseAbs().maxCoeff() <= 1e-12);
        }
    }
    CHECK_THROWS_AS(basis_state(5, 5, Dimension(1)), std::domain_error);
    CHECK_THROWS_AS(apply(Eigen::MatrixXd::Identity(3, 3), basis_state(0, 4, Dimension(1))), std::invalid_argument);
}

TEST_CASE("coherent state examples")
{
    const CoherentState vac = coherent_state(0.0, Dimension(1.7), 1e-14);
    CHECK(vac.fock.coeffs[0] == cd(1.0));
    CHECK(vac.fock.coeffs.tail(vac.fock.size() - 1).norm() == 0.0);

    const CoherentState c = coherent_state(1.0, Dimension(1), 1e-14);
    for (int n = 0; n < c.fock.size(); ++n) {
        const double expected = std::exp(-0.5) / std::sqrt(std::tgamma(n + 1.0));
        CHECK(std::abs(c.fock.coeffs[n] - expected) <= 1e-13 * std::max(expected, 1e-3));
    }
    CHECK_THROWS_AS(coherent_state(1.0, Dimension(1), 0.0), std::invalid_argument);
    CHECK_THROWS_AS(coherent_state(30.0, Dimension(1), 1e-14, 20), SeriesNotConverged);
}

TEST_CASE("coherent eigenvector residual stays below the truncation bound")
{
    for (cd alpha : {cd(0.5), cd(1.0), cd(0.0, 2.0)}) {
        for (double d : {1.0, 2.0, 2.7}) {
            const CoherentState s = coherent_state(alpha, Dimension(d), 1e-12);
            const LadderRep rep = build_ladder(s.fock.size(), Dimension(d));
            const Eigen::VectorXcd residual = rep.a.cast<cd>() * s.fock.coeffs - alpha * s.fock.coeffs;
            const double bound = std::sqrt(s.truncation_residual) * std::abs(alpha);
            INFO("alpha = " << alpha << ", D = " << d);
            CHECK(residual.norm() <= bound * (1 + 1e-12));
            CHECK(residual.norm() <= std::sqrt(s.truncation_residual) * (1 + std::abs(alpha)));
            CHECK(s.truncation_residual <= 1e-12);
            CHECK(std::abs(s.fock.norm_squared() - 1.0) <= s.truncation_residual + 1e-14);
        }
    }
}

TEST_CASE("deformed Poisson examples")
{
    CHECK(deformed_poisson(0, 0.0, Dimension(2.2)) == 1.0);
    CHECK(deformed_poisson(3, 0.0, Dimension(2.2)) == 0.0);
    CHECK(close_rel(deformed_poisson(1, 2.0, Dimension(1)), 2.0 * std::exp(-2.0), 1e-14));
    CHECK_THROWS_AS(deformed_poisson(-1, 1.0, Dimension(1)), std::domain_error);
    CHECK_THROWS_AS(deformed_poisson(1, -1.0, Dimension(1)), std::domain_error);
}

TEST_CASE("deformed Poisson matches the product oracle and sums to 1")
{
    for (double d : {0.3, 0.5, 1.0, 1.5, 2.0, 2.7, 3.0}) {
        for (double a2 : {0.0, 0.25, 1.0, 3.0, 10.0, 40.0}) {
            const PoissonTable t = deformed_poisson_distribution(a2, Dimension(d), 1e-12);
            double sum = 0.0;
            for (double p : t.probabilities) sum += p;
            INFO("D = " << d << ", alpha^2 = " << a2);
            CHECK(std::abs(sum - 1.0) <= 1e-10);
            CHECK(t.tail_bound <= 1e-12);
            const double e = oracle::deformed_exp(a2, d);
            for (int n : {0, 1, 2, 7}) {
                const double expected = static_cast<double>(boost::multiprecision::pow(oracle::mp(a2), n)
                                                            / oracle::d_factorial_product(n, d)) / e;
                CHECK(close_rel(deformed_poisson(n, a2, Dimension(d)), expected, 1e-12, 1e-300));
            }
        }
    }
}
