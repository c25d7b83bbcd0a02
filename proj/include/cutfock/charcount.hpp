// ---------------------------------------------------------------------------
// cutfock -- spectra of the free Laplacian in a rotation-invariant cut basis
// SPDX-License-Identifier: Apache-2.0
// ---------------------------------------------------------------------------

#ifndef CUTFOCK_CHARCOUNT_HPP
#define CUTFOCK_CHARCOUNT_HPP

#include "cutfock/fockbasis.hpp"

#include <iosfwd>
#include <span>
#include <vector>

namespace cutfock::charcount {

enum class Parity { Even, Odd };

/// SO(d) torus data: d = 2*rank (even) or 2*rank+1 (odd), rank >= 1.
struct GroupSpec {
    int d = 3;
    int rank = 1;
    Parity parity = Parity::Odd;

    static GroupSpec for_dimension(int d);
};

/// Unnormalized Haar density on the torus angles (each in [0, 2pi)):
/// prod_{j<k} (cos a_k - cos a_j)^2, times prod_m sin^2(a_m/2) for odd d.
/// The printed prefactors are dropped; counting always divides by the
/// quadrature of 1 (self-normalization).
double haar_weight(std::span<const double> angles, const GroupSpec& g);

/// Character of the defining d-dimensional representation:
/// 2 sum cos(a_m), plus 1 for odd d.
double character_defining(std::span<const double> angles, const GroupSpec& g);

/// Character chi_N of the N-th symmetric tensor power of the defining
/// representation, by the Newton-identity recurrence
///   h_N = (1/N) sum_{k=1..N} p_k h_{N-k},  p_k = chi(k * angles),  h_0 = 1.
double sym_character(int nb, std::span<const double> angles, const GroupSpec& g);

/// Multiplicity from a character integral, with the raw quadrature value
/// and the distance to the nearest integer kept for inspection.
struct CountResult {
    long multiplicity = 0;
    double raw = 0.0;
    double residual = 0.0;
};

/// Number of `target` representations inside Sym^N(defining), via tensor-
/// product trapezoid quadrature with nb + 2*rank + 3 nodes per angle (exact
/// for the trigonometric-polynomial integrand). Throws std::runtime_error
/// if the rounding residual reaches 1e-6.
CountResult count_representation(int nb, const GroupSpec& g, Sector target);

/// Counts for every level 0..nb in one quadrature pass (shared grid).
std::vector<CountResult> count_representation_table(int nb, const GroupSpec& g,
                                                    Sector target);

/// Sum of per-level multiplicities for levels 0..nb.
long cumulative_basis_count(int nb, const GroupSpec& g, Sector target);

/// CSV (nb, multiplicity) rows for levels 0..nb.
void write_csv(const std::vector<CountResult>& table, std::ostream& os);

}  // namespace cutfock::charcount

#endif
