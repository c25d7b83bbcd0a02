// ---------------------------------------------------------------------------
// cutfock -- spectra of the free Laplacian in a rotation-invariant cut basis
// SPDX-License-Identifier: Apache-2.0
// ---------------------------------------------------------------------------

#ifndef CUTFOCK_EIGENSOLVE_HPP
#define CUTFOCK_EIGENSOLVE_HPP

#include "cutfock/fockbasis.hpp"

#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace cutfock {

enum class EigenMethod { SturmBisection, LaguerreZeros, DenseJacobi };

/// Sorted eigenvalues of one cut block, tagged with the route that
/// produced them. `spec` is absent when the input was a bare matrix.
struct Spectrum {
    std::vector<double> values;
    EigenMethod method = EigenMethod::SturmBisection;
    std::optional<SectorSpec> spec;
};

enum class CoeffNormalization { A0EqualsOne, UnitL2 };

/// Expansion coefficients a_n(E) of a cut eigenstate over the orthonormal
/// basis states.
struct CoefficientVector {
    double energy = 0.0;
    std::vector<double> coeffs;
    CoeffNormalization normalization = CoeffNormalization::UnitL2;
};

/// All eigenvalues of a symmetric tridiagonal matrix by Sturm-count
/// bisection (interval width 1e-12 * ||T||) plus one Newton polish on the
/// characteristic recursion. Sorted ascending.
std::vector<double> tridiagonal_eigenvalues(std::span<const double> diag,
                                            std::span<const double> offdiag);

Spectrum eigenvalues_sturm(const TridiagonalMatrix& t);
Spectrum eigenvalues_sturm(const SectorSpec& spec);

/// Closed-form route: zeros of L_m^{d/2-1} (singlet) or L_m^{d/2} (vector)
/// with m = basis_size(spec).
Spectrum eigenvalues_analytic(const SectorSpec& spec);

/// Characteristic polynomial I_m(lambda) of the leading m x m principal
/// minor of the cut Hamiltonian, evaluated through the matrix entries with
/// the factorial normalization applied on the fly, so that I_m equals
/// L_m^{d/2-1}(lambda) (singlet) or L_m^{d/2}(lambda) (vector).
double char_poly_eval(const SectorSpec& spec, int m, double lambda);

/// Closed-form eigenvector coefficients over the orthonormal basis:
///   a_n(E) = a_0 sqrt(n! Gamma(b) / Gamma(n+b)) L_n^{b-1}(E),
/// b = d/2 (singlet) or d/2+1 (vector). E must satisfy the quantization
/// condition |I_m(E)| < tol or a std::invalid_argument is thrown.
CoefficientVector eigenvector_coeffs(const SectorSpec& spec, double energy,
                                     CoeffNormalization norm = CoeffNormalization::UnitL2);

/// Solution of the plain three-term recursion (the 2^-n rescaled form),
/// a_0 = 1: a_n(E) = Gamma(b) L_n^{b-1}(E) / Gamma(n+b). Same b as above.
std::vector<double> eigenvector_coeffs_raw(const SectorSpec& spec, double energy);

/// Small dense symmetric matrix in row-major storage.
struct DenseMatrix {
    int n = 0;
    std::vector<double> a;

    explicit DenseMatrix(int size) : n(size), a(static_cast<size_t>(size) * size, 0.0) {}
    double& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    double at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
};

DenseMatrix densify(const TridiagonalMatrix& t);

/// Classical cyclic Jacobi rotations, off-diagonal norm driven below
/// 1e-12 * ||A||_F. Independent of the tridiagonal routes; kept as the
/// cross-check oracle. Throws std::runtime_error if 60 sweeps do not
/// converge; n is capped at 2000.
Spectrum dense_jacobi_eigen(DenseMatrix a);

/// Residual ||(T - E) v|| / ||v|| using the tridiagonal structure.
double eigenpair_residual(const TridiagonalMatrix& t, double energy,
                          std::span<const double> v);

void write_csv(const Spectrum& s, std::ostream& os);
void write_json(const Spectrum& s, std::ostream& os);

}  // namespace cutfock

#endif
