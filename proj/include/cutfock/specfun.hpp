// ---------------------------------------------------------------------------
// cutfock -- spectra of the free Laplacian in a rotation-invariant cut basis
// SPDX-License-Identifier: Apache-2.0
// ---------------------------------------------------------------------------

#ifndef CUTFOCK_SPECFUN_HPP
#define CUTFOCK_SPECFUN_HPP

#include <vector>

namespace cutfock::specfun {

/// Generalized Laguerre polynomial L_n^alpha. The orthogonality weight
/// x^alpha e^{-x} requires alpha > -1; every use in this project has
/// alpha = d/2 - 1 for an integer dimension d >= 1.
struct LaguerreParams {
    int degree = 0;      // n >= 0
    double alpha = 0.0;  // > -1
};

/// Order of a Bessel function of the first kind, nu >= -1/2.
struct BesselOrder {
    double nu = 0.0;
};

/// ln Gamma(x) for x > 0, accurate to >= 12 significant digits.
/// Throws std::domain_error for x <= 0.
double log_gamma(double x);

/// Value of L_n^alpha(x) by the three-term recurrence
///   (k+1) L_{k+1} = (2k+1+alpha-x) L_k - (k+alpha) L_{k-1}.
/// Degrees above 300 run a compensated (double-double) variant of the same
/// recurrence to limit cancellation during Newton polishing.
double laguerre_eval(const LaguerreParams& p, double x);

/// d/dx L_n^alpha(x).
double laguerre_deriv(const LaguerreParams& p, double x);

/// All n zeros of L_n^alpha, strictly increasing, each > 0. Computed as the
/// eigenvalues of the associated Jacobi matrix (the same tridiagonal matrix
/// as the cut Hamiltonian) and Newton-polished on the recurrence.
/// Residual at each zero stays below 1e-11 times the recurrence magnitude.
std::vector<double> laguerre_zeros(const LaguerreParams& p);

/// J_nu(x) for nu >= -1/2, x >= 0, to >= 10 significant digits on [0, 200].
/// Power series for small x; backward (Miller-type) recurrences otherwise,
/// with spherical closed-form normalization on the half-integer ladder.
/// Throws std::domain_error for x < 0 or nu < -1/2.
double bessel_j(const BesselOrder& o, double x);

/// n-th positive zero j_{nu,n} (n >= 1), by sign-change scan plus Newton.
double bessel_zero(const BesselOrder& o, int n);

/// First `count` positive zeros in one scan (ascending).
std::vector<double> bessel_zeros(const BesselOrder& o, int count);

/// Magnitude i1 of the first (smallest in |.|) zero of the Airy function Ai,
/// i.e. Ai(-i1) = 0, i1 ~ 2.3381074105. Solved once from the Maclaurin
/// series of Ai on the bracket (2,3), not copied from tables.
double airy_smallest_zero();

}  // namespace cutfock::specfun

#endif
