#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <numbers>

#include "ddeform/calculus.hpp"
#include "ddeform/free_particle.hpp"
#include "tolerance.hpp"

using namespace ddeform;
using oracle::close_rel;
using std::numbers::pi;

TEST_CASE("plane-wave amplitude examples")
{
    for (double p : {0.1, 1.0, 7.5}) CHECK(close_rel(plane_wave_amplitude(p, Dimension(1)), 1 / std::sqrt(2 * pi), 1e-15));
    // 1/(2^{1/2} sqrt(pi)/2) * sqrt(1/(8 pi)) = 1/(2 pi)
    CHECK(close_rel(plane_wave_amplitude(1.0, Dimension(3)), 1 / (2 * pi), 1e-15));
    // p^{(D-1)/2} scaling
    CHECK(close_rel(plane_wave_amplitude(4.0, Dimension(2.2)) / plane_wave_amplitude(1.0, Dimension(2.2)),
                    std::pow(4.0, 0.6), 1e-14));
    CHECK_THROWS_AS(plane_wave_amplitude(0.0, Dimension(1)), std::domain_error);
    CHECK_THROWS_AS(plane_wave_amplitude(-1.0, Dimension(1)), std::domain_error);
}

TEST_CASE("plane wave reduces to e^{ip xi}/sqrt(2 pi) at D = 1")
{
    for (double p : {0.5, 2.0}) {
        for (double x = -5.0; x <= 5.0; x += 0.31) {
            const std::complex<double> expected = std::exp(std::complex<double>(0.0, p * x)) / std::sqrt(2 * pi);
            CHECK(std::abs(plane_wave_eval(p, Dimension(1), x) - expected) <= 1e-12 * std::abs(expected));
        }
    }
}

TEST_CASE("plane wave at the origin is the real amplitude")
{
    for (double d : {0.4, 1.0, 2.6}) {
        const std::complex<double> v = plane_wave_eval(1.3, Dimension(d), 0.0);
        CHECK(v.imag() == 0.0);
        CHECK(v.real() == plane_wave_amplitude(1.3, Dimension(d)));
        const PlaneWave w = plane_wave(1.3, Dimension(d));
        CHECK(w(0.7) == plane_wave_eval(1.3, Dimension(d), 0.7));
    }
}

TEST_CASE("momentum eigenfunction: -i d_D Psi_p = p Psi_p")
{
    for (double d : {0.5, 1.0, 1.5, 2.7}) {
        for (double p : {0.5, 1.0, 3.0}) {
            const Dimension dim(d);
            const PlaneWave w = plane_wave(p, dim);
            const ParityFunction re{[w](double x) { return w(x).real(); }, [](double) { return 0.0; }, dim};
            const ParityFunction im{[](double) { return 0.0; }, [w](double x) { return w(x).imag(); }, dim};
            for (double x : {-2.0, -0.6, 0.0, 0.25, 1.1, 3.0}) {
                const std::complex<double> d_psi(deformed_derivative(re, x), deformed_derivative(im, x));
                const std::complex<double> lhs = std::complex<double>(0.0, -1.0) * d_psi;
                const std::complex<double> rhs = p * w(x);
                INFO("D = " << d << ", p = " << p << ", xi = " << x);
                CHECK(std::abs(lhs - rhs) <= 1e-8 * std::max(1.0, p) * w.amplitude);
            }
        }
    }
}
