#include "ddeform/free_particle.hpp"

#include <cmath>
#include <stdexcept>

namespace ddeform {

double plane_wave_amplitude(double p, Dimension d)
{
    if (!std::isfinite(p) || !(p > 0.0)) {
        throw std::domain_error("plane_wave_amplitude: momentum must be > 0");
    }
    const double dv = d.value();
    return std::sqrt(std::pow(p, dv - 1.0) / (2.0 * sigma(d)))
         / (std::pow(2.0, dv / 2.0 - 1.0) * std::tgamma(dv / 2.0));
}

PlaneWave plane_wave(double p, Dimension d)
{
    return {p, d, plane_wave_amplitude(p, d)};
}

std::complex<double> PlaneWave::operator()(double xi) const
{
    const double x = p * xi;
    return amplitude * std::complex<double>(deformed_cos(x, d), deformed_sin(x, d));
}

std::complex<double> plane_wave_eval(double p, Dimension d, double xi)
{
    return plane_wave(p, d)(xi);
}

} // namespace ddeform
