#pragma once

#include <numbers>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

#include "ddeform/grid_density.hpp"
#include "ddeform/special_functions.hpp"

namespace ddeform {

// Infinite well of unit width, |xi| < 1/2, with hbar = m = 1. Level n = 0 is
// the ground state. A width L rescales k by 1/L and energies by 1/L^2.

enum class Parity { even, odd };

struct WellLevel {
    int n;
    Parity parity;
    double k;
    double energy;
};

struct EnergySpectrum {
    Dimension d;
    std::vector<WellLevel> levels;
};

class BracketNotFound : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bracketing step on x = k/2; below the spacing of consecutive zeros of J_nu.
inline constexpr double kWellScanStep = std::numbers::pi / 8.0;

/// Lowest n_levels solutions of COS_D(k/2) = 0 (even) and SIN_D(k/2) = 0 (odd).
///
/// Roots are bracketed by sign changes of the Bessel closed forms on a grid of
/// step kWellScanStep in x = k/2 and bisected until the bracket in k is at most
/// tol wide. The scan stops at x = kBesselMaxArgument (about 60 levels) and
/// throws BracketNotFound past it.
EnergySpectrum well_spectrum(Dimension d, int n_levels, double tol = 1e-12);

/// Normalized eigenfunction A_n COS_D(k_n xi) or A_n SIN_D(k_n xi), zero outside the well.
struct WellState {
    Dimension d;
    WellLevel level;
    double amplitude;

    double operator()(double xi) const;
};

/// Normalizes level n by weighted quadrature over the well.
WellState well_state(const EnergySpectrum& spectrum, int n);

double well_wavefunction(const EnergySpectrum& spectrum, int n, double xi);

/// rho_n(xi) = sigma(D)/2 |xi|^{D-1} Psi_n(xi)^2 on a grid inside [-1/2, 1/2],
/// plus the quadrature integral of rho_n over the well. rho is +inf at xi = 0
/// for even levels when D < 1 and 0 for odd ones.
GridDensity well_density(const EnergySpectrum& spectrum, int n, const Eigen::ArrayXd& grid);

struct DimensionEnergy {
    double d;
    double energy;
};

/// E_n(D) over a grid of dimensions.
std::vector<DimensionEnergy> energy_vs_dimension(const std::vector<double>& d_grid, int n, double tol = 1e-12);

} // namespace ddeform
