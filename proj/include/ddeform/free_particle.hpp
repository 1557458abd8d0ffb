#pragma once

#include <complex>

#include "ddeform/special_functions.hpp"

namespace ddeform {

/// Deformed plane wave Psi_p(xi) = A_p E_D(i p xi), the eigenfunction of the
/// momentum operator -i d_D/d_D xi with eigenvalue p (hbar = 1).
struct PlaneWave {
    double p;
    Dimension d;
    double amplitude;

    std::complex<double> operator()(double xi) const;
};

/// A_p = 1 / (2^{D/2-1} Gamma(D/2)) sqrt(p^{D-1} / (2 sigma(D))), p > 0.
double plane_wave_amplitude(double p, Dimension d);

PlaneWave plane_wave(double p, Dimension d);

/// A_p (COS_D(p xi) + i SIN_D(p xi)).
std::complex<double> plane_wave_eval(double p, Dimension d, double xi);

} // namespace ddeform
