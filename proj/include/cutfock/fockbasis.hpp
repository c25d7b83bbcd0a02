// ---------------------------------------------------------------------------
// cutfock -- spectra of the free Laplacian in a rotation-invariant cut basis
// SPDX-License-Identifier: Apache-2.0
// ---------------------------------------------------------------------------

#ifndef CUTFOCK_FOCKBASIS_HPP
#define CUTFOCK_FOCKBASIS_HPP

#include <iosfwd>
#include <vector>

namespace cutfock {

enum class Sector { Singlet, Vector };

/// How the vector-sector cutoff maps to a basis size. `Paper` reproduces the
/// closed-form spectrum statement (size ceil(NB/2)+1, valid for NB >= 0);
/// `Strict` counts states with 2n+1 <= NB quanta (size floor((NB-1)/2)+1,
/// needs NB >= 1).
enum class VectorConvention { Paper, Strict };

/// One rotation-invariant block of the cut Hilbert space.
struct SectorSpec {
    int d = 3;
    Sector sector = Sector::Singlet;
    int cutoff_nb = 0;
    VectorConvention convention = VectorConvention::Paper;
};

/// Real symmetric tridiagonal matrix: diag has m entries, offdiag m-1.
struct TridiagonalMatrix {
    std::vector<double> diag;
    std::vector<double> offdiag;

    int size() const { return static_cast<int>(diag.size()); }
};

/// Throws std::invalid_argument when a SectorSpec violates its invariants.
void validate(const SectorSpec& spec);

/// Number of basis states below the cutoff.
/// Singlet: floor(NB/2)+1. Vector: set by the convention field.
int basis_size(const SectorSpec& spec);

/// Laguerre order attached to the sector: d/2-1 (singlet) or d/2 (vector).
double laguerre_order(const SectorSpec& spec);

/// Squared normalization of the n-th singlet state,
/// (N_n^0)^2 = 4^n n! Gamma(d/2+n)/Gamma(d/2), via log-gamma differences.
double norm_singlet_sq(int n, int d);
/// ln (N_n^0)^2, for n large enough that the plain value overflows.
double norm_singlet_log(int n, int d);

/// Vector-sector analogs with Gamma(d/2+n+1)/Gamma(d/2+1).
double norm_vector_sq(int n, int d);
double norm_vector_log(int n, int d);

/// Cut matrix of the Hamiltonian (the Laplace operator in this basis).
/// Singlet: diag 2n+d/2, offdiag -sqrt((n+1)(d/2+n)).
/// Vector:  diag d/2+2n+1, offdiag -sqrt((n+1)(d/2+n+1)); the d-fold
/// degeneracy is metadata, a single block is returned.
TridiagonalMatrix hamiltonian_matrix(const SectorSpec& spec);

/// Cut matrix of X^2 = x^m x^m: same diagonal, positive off-diagonal.
TridiagonalMatrix squared_radius_matrix(const SectorSpec& spec);

/// Cut matrix of P^2 = p^m p^m = 2 H.
TridiagonalMatrix squared_momentum_matrix(const SectorSpec& spec);

/// Three-column CSV (index, diag, offdiag); last offdiag cell left empty.
void write_csv(const TridiagonalMatrix& m, std::ostream& os);

}  // namespace cutfock

#endif
