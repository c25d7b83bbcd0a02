// ---------------------------------------------------------------------------
// cutfock -- spectra of the free Laplacian in a rotation-invariant cut basis
// SPDX-License-Identifier: Apache-2.0
// ---------------------------------------------------------------------------

#ifndef CUTFOCK_WAVES_HPP
#define CUTFOCK_WAVES_HPP

#include "cutfock/fockbasis.hpp"

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace cutfock::waves {

enum class Summation { Partial, Cesaro };

/// A radial profile sampled on a grid, with enough metadata to replot it.
struct RadialWave {
    std::vector<double> r;
    std::vector<double> value;
    int d = 3;
    std::string label;
    int n_terms = 0;
    Summation mode = Summation::Partial;
};

/// Radial oscillator eigenfunction phi_n(r) = c2 e^{-r^2/2} L_n^{d/2-1}(r^2)
/// with c2 = sqrt(n! Gamma(d/2) / (pi^{d/2} Gamma(n+d/2))), normalized so
/// that the full d-dimensional integral of phi_n^2 is 1.
double oscillator_wavefunction(int n, int d, double r);

/// psi_n(kappa): same functional form (the oscillator is x <-> p symmetric).
double momentum_overlap(int n, int d, double kappa);

/// Bilinear Laguerre sum
///   sum_n (-1)^n n!/Gamma(n+d/2) L_n(r^2) L_n(kappa^2) e^{-(kappa^2+r^2)/2}
/// truncated at n_terms. The series converges only conditionally; Cesaro
/// mode returns the mean of the partial sums, whose limit is half the
/// Bessel radial wave.
double plane_wave_reconstruction(int d, double kappa, double r, int n_terms,
                                 Summation mode);

/// (kappa r)^{1-d/2} J_{d/2-1}(kappa r): the regular zero-angular-momentum
/// solution of the free equation at energy kappa^2.
double bessel_radial_exact(int d, double kappa, double r);

/// Position wavefunction of the eigen_index-th (1-based, ascending) cut
/// eigenstate on the grid, with L2-normalized coefficients. The basis state
/// built from (a+.a+)^n carries the sign (-1)^n relative to the positive-c2
/// Laguerre form, which the sum includes. Singlet sector only.
RadialWave cutoff_eigenstate_wavefunction(const SectorSpec& spec, int eigen_index,
                                          std::span<const double> r_grid);

/// Two whitespace-separated columns (r, value), plotting-tool friendly.
void write_dat(const RadialWave& w, std::ostream& os);

}  // namespace cutfock::waves

#endif
