#include "ddeform/quantum_well.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "ddeform/quadrature.hpp"

namespace ddeform {

namespace {

// Series for moderate arguments, Bessel closed form past the series' accurate range.
constexpr double kSeriesLimit = 16.0;

double well_cos(double x, Dimension d)
{
    return std::abs(x) <= kSeriesLimit ? deformed_cos(x, d) : deformed_cos_bessel(x, d);
}

double well_sin(double x, Dimension d)
{
    return std::abs(x) <= kSeriesLimit ? deformed_sin(x, d) : deformed_sin_bessel(x, d);
}

// First `count` positive zeros of f, scanning from `start` where f(start) != 0.
std::vector<double> bracketed_zeros(const std::function<double(double)>& f, double start, int count, double tol_x)
{
    std::vector<double> zeros;
    double a = start;
    double fa = f(a);
    while (static_cast<int>(zeros.size()) < count) {
        const double b = std::min(a + kWellScanStep, kBesselMaxArgument);
        if (!(b > a)) {
            throw BracketNotFound("well_spectrum: scan reached x = " + std::to_string(kBesselMaxArgument)
                                  + " before finding all requested levels");
        }
        const double fb = f(b);
        if (fb == 0.0) {
            zeros.push_back(b);
            a = b + 0.5 * kWellScanStep;
            fa = f(a);
            continue;
        }
        if ((fa < 0.0) != (fb < 0.0)) {
            double lo = a;
            double hi = b;
            double flo = fa;
            while (hi - lo > tol_x) {
                const double mid = 0.5 * (lo + hi);
                if (!(mid > lo && mid < hi)) break;
                const double fm = f(mid);
                if (fm == 0.0) {
                    lo = hi = mid;
                    break;
                }
                if ((fm < 0.0) == (flo < 0.0)) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            zeros.push_back(0.5 * (lo + hi));
        }
        a = b;
        fa = fb;
    }
    return zeros;
}

} // namespace

EnergySpectrum well_spectrum(Dimension d, int n_levels, double tol)
{
    if (n_levels < 1) {
        throw std::domain_error("well_spectrum: n_levels must be >= 1");
    }
    if (!(tol > 0.0)) {
        throw std::domain_error("well_spectrum: tol must be > 0");
    }
    const int n_even = (n_levels + 1) / 2;
    const int n_odd = n_levels / 2;
    // |delta k| <= tol means |delta x| <= tol/2 on x = k/2
    const std::vector<double> even = bracketed_zeros(
        [d](double x) { return deformed_cos_bessel(x, d); }, 0.0, n_even, 0.5 * tol);
    const std::vector<double> odd = n_odd > 0
        ? bracketed_zeros([d](double x) { return deformed_sin_bessel(x, d); }, kWellScanStep, n_odd, 0.5 * tol)
        : std::vector<double>{};

    std::vector<WellLevel> levels;
    for (double x : even) levels.push_back({0, Parity::even, 2.0 * x, 0.0});
    for (double x : odd) levels.push_back({0, Parity::odd, 2.0 * x, 0.0});
    std::sort(levels.begin(), levels.end(), [](const WellLevel& a, const WellLevel& b) { return a.k < b.k; });
    for (std::size_t i = 0; i < levels.size(); ++i) {
        levels[i].n = static_cast<int>(i);
        levels[i].energy = 0.5 * levels[i].k * levels[i].k;
        const Parity expected = (i % 2 == 0) ? Parity::even : Parity::odd;
        if (levels[i].parity != expected) {
            throw std::logic_error("well_spectrum: even and odd roots failed to interlace at level "
                                   + std::to_string(i));
        }
    }
    return {d, std::move(levels)};
}

double WellState::operator()(double xi) const
{
    if (std::abs(xi) > 0.5) {
        return 0.0;
    }
    const double x = level.k * xi;
    return amplitude * (level.parity == Parity::even ? well_cos(x, d) : well_sin(x, d));
}

WellState well_state(const EnergySpectrum& spectrum, int n)
{
    if (n < 0 || n >= static_cast<int>(spectrum.levels.size())) {
        throw std::out_of_range("well_state: level index outside spectrum");
    }
    WellState raw{spectrum.d, spectrum.levels[n], 1.0};
    const WeightedIntegral norm = integrate_weighted([&raw](double xi) {
        const double v = raw(xi);
        return v * v;
    }, spectrum.d, -0.5, 0.5, 1e-14);
    raw.amplitude = 1.0 / std::sqrt(norm.value);
    return raw;
}

double well_wavefunction(const EnergySpectrum& spectrum, int n, double xi)
{
    return well_state(spectrum, n)(xi);
}

GridDensity well_density(const EnergySpectrum& spectrum, int n, const Eigen::ArrayXd& grid)
{
    if (!grid.allFinite() || (grid.size() > 0 && grid.abs().maxCoeff() > 0.5)) {
        throw std::domain_error("well_density: grid must lie inside [-1/2, 1/2]");
    }
    const WellState state = well_state(spectrum, n);
    const Dimension d = spectrum.d;
    const double half_sigma = sigma(d) / 2.0;
    const double dm1 = d.value() - 1.0;
    Eigen::ArrayXd rho(grid.size());
    for (Eigen::Index i = 0; i < grid.size(); ++i) {
        const double psi = state(grid[i]);
        // a node at the origin wins over a singular weight
        rho[i] = psi == 0.0 ? 0.0 : half_sigma * std::pow(std::abs(grid[i]), dm1) * psi * psi;
    }
    const double integral = integrate_weighted([&state](double xi) {
        const double v = state(xi);
        return v * v;
    }, d, -0.5, 0.5, 1e-13).value;
    return {d, n, grid, std::move(rho), integral};
}

std::vector<DimensionEnergy> energy_vs_dimension(const std::vector<double>& d_grid, int n, double tol)
{
    if (n < 0) {
        throw std::domain_error("energy_vs_dimension: n must be >= 0");
    }
    std::vector<DimensionEnergy> out;
    out.reserve(d_grid.size());
    for (double dv : d_grid) {
        const EnergySpectrum s = well_spectrum(Dimension(dv), n + 1, tol);
        out.push_back({dv, s.levels[n].energy});
    }
    return out;
}

} // namespace ddeform
