// ---------------------------------------------------------------------------
// cutfock -- spectra of the free Laplacian in a rotation-invariant cut basis
// SPDX-License-Identifier: Apache-2.0
// ---------------------------------------------------------------------------

#include "cutfock/waves.hpp"
#include "cutfock/eigensolve.hpp"
#include "cutfock/specfun.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace cutfock::waves {

namespace {

constexpr double kPi = 3.14159265358979323846;

double normalization_c2(int n, int d)
{
    using specfun::log_gamma;
    double lg = 0.5 * (log_gamma(n + 1.0) + log_gamma(0.5 * d) - log_gamma(n + 0.5 * d))
                - 0.25 * d * std::log(kPi);
    return std::exp(lg);
}

}  // namespace

double oscillator_wavefunction(int n, int d, double r)
{
    if (n < 0 || d < 1 || r < 0.0)
        throw std::invalid_argument("oscillator_wavefunction: bad arguments");
    double x = r * r;
    return normalization_c2(n, d) * std::exp(-0.5 * x)
           * specfun::laguerre_eval({n, 0.5 * d - 1.0}, x);
}

double momentum_overlap(int n, int d, double kappa)
{
    return oscillator_wavefunction(n, d, kappa);
}

double plane_wave_reconstruction(int d, double kappa, double r, int n_terms,
                                 Summation mode)
{
    if (n_terms < 1)
        throw std::invalid_argument("plane_wave_reconstruction: need at least one term");
    if (!(kappa > 0.0) || !(r > 0.0))
        throw std::invalid_argument("plane_wave_reconstruction: kappa and r must be > 0");
    const double alpha = 0.5 * d - 1.0;
    const double x = r * r, y = kappa * kappa;
    const double pref = std::exp(-0.5 * (x + y));

    // Running Laguerre recurrences for both arguments, and the coefficient
    // ratio c_n = n!/Gamma(n+d/2) updated multiplicatively.
    double lxm1 = 0.0, lx = 1.0;
    double lym1 = 0.0, ly = 1.0;
    double c = std::exp(-specfun::log_gamma(0.5 * d));
    double partial = c * lx * ly;
    double cesaro_acc = partial;
    double sign = 1.0;
    for (int n = 1; n < n_terms; ++n) {
        double lxn = ((2.0 * (n - 1) + 1.0 + alpha - x) * lx - (n - 1.0 + alpha) * lxm1) / n;
        double lyn = ((2.0 * (n - 1) + 1.0 + alpha - y) * ly - (n - 1.0 + alpha) * lym1) / n;
        lxm1 = lx;
        lx = lxn;
        lym1 = ly;
        ly = lyn;
        c *= n / (n + 0.5 * d - 1.0);
        sign = -sign;
        partial += sign * c * lx * ly;
        cesaro_acc += partial;
    }
    double sum = mode == Summation::Partial ? partial : cesaro_acc / n_terms;
    return pref * sum;
}

double bessel_radial_exact(int d, double kappa, double r)
{
    if (!(kappa > 0.0) || !(r > 0.0))
        throw std::invalid_argument("bessel_radial_exact: kappa and r must be > 0");
    double z = kappa * r;
    double nu = 0.5 * d - 1.0;
    return std::pow(z, 1.0 - 0.5 * d) * specfun::bessel_j({nu}, z);
}

RadialWave cutoff_eigenstate_wavefunction(const SectorSpec& spec, int eigen_index,
                                          std::span<const double> r_grid)
{
    if (spec.sector != Sector::Singlet)
        throw std::invalid_argument(
            "cutoff_eigenstate_wavefunction: only the zero-angular-momentum (singlet) "
            "channel has a radial profile here");
    Spectrum s = eigenvalues_analytic(spec);
    const int m = static_cast<int>(s.values.size());
    if (eigen_index < 1 || eigen_index > m)
        throw std::out_of_range("cutoff_eigenstate_wavefunction: eigenstate index out of range");
    const double energy = s.values[eigen_index - 1];
    CoefficientVector cv = eigenvector_coeffs(spec, energy, CoeffNormalization::UnitL2);

    RadialWave w;
    w.d = spec.d;
    w.label = "eigenstate-" + std::to_string(eigen_index);
    w.n_terms = m;
    w.mode = Summation::Partial;
    w.r.assign(r_grid.begin(), r_grid.end());
    w.value.resize(r_grid.size(), 0.0);
    for (size_t j = 0; j < r_grid.size(); ++j) {
        double acc = 0.0;
        double sign = 1.0;
        for (int n = 0; n < m; ++n) {
            acc += sign * cv.coeffs[n] * oscillator_wavefunction(n, spec.d, r_grid[j]);
            sign = -sign;
        }
        w.value[j] = acc;
    }
    return w;
}

void write_dat(const RadialWave& w, std::ostream& os)
{
    os.precision(17);
    for (size_t i = 0; i < w.r.size(); ++i) os << w.r[i] << ' ' << w.value[i] << '\n';
}

}  // namespace cutfock::waves
