#pragma once

#include <cmath>

#include <Eigen/Core>

#include "ddeform/special_functions.hpp"

namespace ddeform {

/// Probability density rho(xi) = sigma(D)/2 |xi|^{D-1} |psi(xi)|^2 sampled on a grid,
/// together with the quadrature value of its integral.
struct GridDensity {
    Dimension d;
    int n;
    Eigen::ArrayXd xi;
    Eigen::ArrayXd rho;
    double integral;

    double normalization_residual() const { return std::abs(integral - 1.0); }
};

} // namespace ddeform
