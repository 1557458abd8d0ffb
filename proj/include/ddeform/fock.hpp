#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "ddeform/special_functions.hpp"

namespace ddeform {

/// Truncated matrix representation of the deformed ladder algebra on the
/// number basis |0>, ..., |N-1>.
///
///   a |n> = sqrt([n]_D) |n-1>,  a^dagger |n> = sqrt([n+1]_D) |n+1>,
///   R |n> = (-1)^n |n>.
///
/// Identities that involve a a^dagger are only valid below the truncation
/// edge (rows n < N-1).
struct LadderRep {
    int size;
    Dimension d;
    Eigen::MatrixXd a;
    Eigen::MatrixXd a_dagger;
    Eigen::MatrixXd reflection;
};

LadderRep build_ladder(int size, Dimension d);

/// N_D = (a^dagger a + a a^dagger)/2 - D/2.
Eigen::MatrixXd number_operator(const LadderRep& rep);

/// [a, a^dagger] = a a^dagger - a^dagger a.
Eigen::MatrixXd commutator(const LadderRep& rep);

struct FockVector {
    Eigen::VectorXcd coeffs;
    Dimension d;

    int size() const { return static_cast<int>(coeffs.size()); }
    double norm_squared() const { return coeffs.squaredNorm(); }
};

/// Number state |n> in an N-dimensional truncation.
FockVector basis_state(int n, int size, Dimension d);

/// Applies a real operator matrix to a Fock vector.
FockVector apply(const Eigen::MatrixXd& op, const FockVector& v);

/// Coherent state truncated to |0> ... |N-1>.
///
/// truncation_residual bounds sum_{n >= N-1} |c_n|^2, i.e. the dropped tail
/// together with the last kept coefficient. The eigenvalue residual then obeys
///   || a|alpha> - alpha|alpha> || = |alpha| |c_{N-1}| <= |alpha| sqrt(truncation_residual),
/// which is the bound C sqrt(r)(1 + |alpha|) with C = 1.
struct CoherentState {
    std::complex<double> alpha;
    FockVector fock;
    double truncation_residual;
};

/// c_n = alpha^n / sqrt([n]_D! E_D(|alpha|^2)), grown until the ratio-test
/// bound on the tail is below tol. Throws SeriesNotConverged past max_size.
CoherentState coherent_state(std::complex<double> alpha, Dimension d, double tol, int max_size = 10000);

/// |<n|alpha>|^2 = (|alpha|^2)^n / ([n]_D! E_D(|alpha|^2)).
double deformed_poisson(int n, double alpha_sq, Dimension d);

struct PoissonTable {
    std::vector<double> probabilities;
    /// Bound on the probability mass past the last entry.
    double tail_bound;
};

/// Deformed Poisson probabilities for n = 0, 1, ... until the tail bound < tol.
PoissonTable deformed_poisson_distribution(double alpha_sq, Dimension d, double tol, int max_n = 10000);

} // namespace ddeform
