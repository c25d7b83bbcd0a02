// ---------------------------------------------------------------------------
// cutfock -- spectra of the free Laplacian in a rotation-invariant cut basis
// SPDX-License-Identifier: Apache-2.0
// ---------------------------------------------------------------------------

#include "cutfock/fockbasis.hpp"
#include "cutfock/specfun.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace cutfock {

void validate(const SectorSpec& spec)
{
    if (spec.d < 1)
        throw std::invalid_argument("SectorSpec: dimension must be >= 1");
    if (spec.cutoff_nb < 0)
        throw std::invalid_argument("SectorSpec: cutoff must be >= 0");
    if (spec.sector == Sector::Vector && spec.convention == VectorConvention::Strict
        && spec.cutoff_nb < 1)
        throw std::invalid_argument("SectorSpec: strict vector sector needs cutoff >= 1");
}

int basis_size(const SectorSpec& spec)
{
    validate(spec);
    const int nb = spec.cutoff_nb;
    if (spec.sector == Sector::Singlet) return nb / 2 + 1;
    if (spec.convention == VectorConvention::Paper) return (nb + 1) / 2 + 1;
    return (nb - 1) / 2 + 1;
}

double laguerre_order(const SectorSpec& spec)
{
    return spec.sector == Sector::Singlet ? 0.5 * spec.d - 1.0 : 0.5 * spec.d;
}

namespace {

double gamma_ratio_sq(int n, double base)
{
    // 4^n n! Gamma(base+n)/Gamma(base), in log space.
    using specfun::log_gamma;
    return n * std::log(4.0) + log_gamma(n + 1.0) + log_gamma(base + n) - log_gamma(base);
}

}  // namespace

double norm_singlet_log(int n, int d)
{
    if (n < 0 || d < 1) throw std::invalid_argument("norm_singlet: bad arguments");
    return gamma_ratio_sq(n, 0.5 * d);
}

double norm_singlet_sq(int n, int d)
{
    return std::exp(norm_singlet_log(n, d));
}

double norm_vector_log(int n, int d)
{
    if (n < 0 || d < 1) throw std::invalid_argument("norm_vector: bad arguments");
    return gamma_ratio_sq(n, 0.5 * d + 1.0);
}

double norm_vector_sq(int n, int d)
{
    return std::exp(norm_vector_log(n, d));
}

namespace {

TridiagonalMatrix build_tridiagonal(const SectorSpec& spec, double offdiag_sign)
{
    const int m = basis_size(spec);
    const double half_d = 0.5 * spec.d;
    TridiagonalMatrix t;
    t.diag.resize(m);
    t.offdiag.resize(m > 1 ? m - 1 : 0);
    const double shift = spec.sector == Sector::Singlet ? 0.0 : 1.0;
    for (int n = 0; n < m; ++n) t.diag[n] = 2.0 * n + half_d + shift;
    for (int n = 0; n + 1 < m; ++n)
        t.offdiag[n] = offdiag_sign * std::sqrt((n + 1.0) * (half_d + n + shift));
    return t;
}

}  // namespace

TridiagonalMatrix hamiltonian_matrix(const SectorSpec& spec)
{
    return build_tridiagonal(spec, -1.0);
}

TridiagonalMatrix squared_radius_matrix(const SectorSpec& spec)
{
    return build_tridiagonal(spec, +1.0);
}

TridiagonalMatrix squared_momentum_matrix(const SectorSpec& spec)
{
    TridiagonalMatrix t = hamiltonian_matrix(spec);
    for (double& v : t.diag) v *= 2.0;
    for (double& v : t.offdiag) v *= 2.0;
    return t;
}

void write_csv(const TridiagonalMatrix& m, std::ostream& os)
{
    os << "index,diag,offdiag\n";
    os.precision(17);
    for (int i = 0; i < m.size(); ++i) {
        os << i << ',' << m.diag[i] << ',';
        if (i + 1 < m.size()) os << m.offdiag[i];
        os << '\n';
    }
}

}  // namespace cutfock
