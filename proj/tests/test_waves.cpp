// ---------------------------------------------------------------------------
// cutfock -- spectra of the free Laplacian in a rotation-invariant cut basis
// SPDX-License-Identifier: Apache-2.0
// ---------------------------------------------------------------------------

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cutfock/eigensolve.hpp"
#include "cutfock/specfun.hpp"
#include "cutfock/waves.hpp"
#include "support/oracles.hpp"

#include <cmath>
#include <sstream>
#include <vector>

using namespace cutfock;
using namespace cutfock::waves;

namespace {
constexpr double kPi = 3.14159265358979323846;

std::vector<double> linspace(double lo, double hi, int n)
{
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i) g[i] = lo + (hi - lo) * i / (n - 1);
    return g;
}
}  // namespace

TEST_CASE("oscillator wavefunction values")
{
    for (int d = 1; d <= 6; ++d)
        CHECK(oscillator_wavefunction(0, d, 0.0)
              == doctest::Approx(std::pow(kPi, -0.25 * d)).epsilon(1e-13));
    // first excited state vanishes where L_1^{1/2}(r^2) does: r^2 = 1+alpha = 1.5
    CHECK(std::abs(oscillator_wavefunction(1, 3, std::sqrt(1.5))) < 1e-14);
    CHECK_THROWS_AS(oscillator_wavefunction(0, 3, -1.0), std::invalid_argument);
}

TEST_CASE("radial orthonormality under the d-dimensional measure")
{
    // S_{d-1} Int phi_n phi_m r^{d-1} dr = delta_{nm}; the substitution
    // t = r^2 turns this into Gauss-Laguerre quadrature with weight
    // t^{d/2-1} e^{-t}.
    using cutfock::testing::gauss_laguerre;
    using specfun::log_gamma;
    for (int d : {2, 3, 5, 9}) {
        auto quad = gauss_laguerre(30, 0.5 * d - 1.0);
        double sphere = 2.0 * std::pow(kPi, 0.5 * d) / std::exp(log_gamma(0.5 * d));
        for (int n = 0; n <= 12; n += 3)
            for (int m = n; m <= 12; m += 4) {
                double acc = 0.0;
                for (size_t i = 0; i < quad.nodes.size(); ++i) {
                    double r = std::sqrt(quad.nodes[i]);
                    double fn = oscillator_wavefunction(n, d, r) * std::exp(0.5 * quad.nodes[i]);
                    double fm = oscillator_wavefunction(m, d, r) * std::exp(0.5 * quad.nodes[i]);
                    acc += quad.weights[i] * fn * fm;
                }
                acc *= 0.5 * sphere;
                CHECK(acc == doctest::Approx(n == m ? 1.0 : 0.0).epsilon(1e-8));
            }
    }
}

TEST_CASE("momentum overlap is the same function")
{
    for (int n : {0, 2, 7})
        for (double k : {0.0, 0.4, 1.9})
            CHECK(momentum_overlap(n, 3, k) == oscillator_wavefunction(n, 3, k));
}

TEST_CASE("momentum overlaps are proportional to the eigenvector coefficients")
{
    SectorSpec spec{3, Sector::Singlet, 12};
    auto spectrum = eigenvalues_analytic(spec);
    for (double energy : spectrum.values) {
        auto cv = eigenvector_coeffs(spec, energy, CoeffNormalization::A0EqualsOne);
        double kappa = std::sqrt(energy);
        double psi0 = momentum_overlap(0, 3, kappa);
        for (size_t n = 0; n < cv.coeffs.size(); ++n)
            CHECK(momentum_overlap(static_cast<int>(n), 3, kappa) / psi0
                  == doctest::Approx(cv.coeffs[n]).epsilon(1e-10));
    }
}

TEST_CASE("single-term reconstruction is phi_0 psi_0 up to one constant")
{
    using specfun::log_gamma;
    for (int d : {2, 3, 5}) {
        double expect = std::pow(kPi, 0.5 * d) / std::exp(log_gamma(0.5 * d));
        for (double kappa : {0.5, 1.0})
            for (double r : {0.4, 1.3}) {
                double lhs = plane_wave_reconstruction(d, kappa, r, 1, Summation::Partial);
                double rhs = oscillator_wavefunction(0, d, r) * momentum_overlap(0, d, kappa);
                CHECK(lhs / rhs == doctest::Approx(expect).epsilon(1e-12));
            }
    }
}

TEST_CASE("Cesaro sum settles on half the Bessel radial wave")
{
    // quick version of the acceptance study: 1000 terms, d=3, kappa=1
    auto rs = linspace(0.5, 2.0, 11);
    std::vector<double> ratio(rs.size());
    for (size_t i = 0; i < rs.size(); ++i)
        ratio[i] = plane_wave_reconstruction(3, 1.0, rs[i], 1000, Summation::Cesaro)
                   / bessel_radial_exact(3, 1.0, rs[i]);
    double mean = 0.0;
    for (double v : ratio) mean += v;
    mean /= ratio.size();
    CHECK(mean == doctest::Approx(0.5).epsilon(2e-3));
    for (double v : ratio) CHECK(std::abs(v / mean - 1.0) < 3e-3);
}

TEST_CASE("ratio variance shrinks as Cesaro terms grow")
{
    auto rs = linspace(0.5, 2.0, 11);
    double prev = 1e9;
    for (int terms : {500, 1000, 2000}) {
        std::vector<double> ratio(rs.size());
        for (size_t i = 0; i < rs.size(); ++i)
            ratio[i] = plane_wave_reconstruction(3, 1.0, rs[i], terms, Summation::Cesaro)
                       / bessel_radial_exact(3, 1.0, rs[i]);
        double mean = 0.0, var = 0.0;
        for (double v : ratio) mean += v;
        mean /= ratio.size();
        for (double v : ratio) var += (v - mean) * (v - mean);
        CHECK(var < prev);
        prev = var;
    }
}

TEST_CASE("partial sums bracket the Cesaro limit at small kappa r")
{
    const double kappa = 0.5, r = 0.5;
    double limit = 0.5 * bessel_radial_exact(3, kappa, r);
    double prev = plane_wave_reconstruction(3, kappa, r, 3000, Summation::Partial) - limit;
    for (int n = 3001; n <= 3008; ++n) {
        double cur = plane_wave_reconstruction(3, kappa, r, n, Summation::Partial) - limit;
        CHECK(prev * cur < 0.0);
        prev = cur;
    }
}

TEST_CASE("bessel radial closed forms")
{
    for (double kappa : {0.7, 1.0})
        for (double r : {0.3, 1.0, 2.6}) {
            double z = kappa * r;
            CHECK(bessel_radial_exact(3, kappa, r)
                  == doctest::Approx(std::sqrt(2.0 / kPi) * std::sin(z) / z).epsilon(1e-12));
            CHECK(bessel_radial_exact(1, kappa, r)
                  == doctest::Approx(std::sqrt(2.0 / kPi) * std::cos(z)).epsilon(1e-12));
            CHECK(bessel_radial_exact(2, kappa, r)
                  == doctest::Approx(specfun::bessel_j({0.0}, z)).epsilon(1e-12));
        }
    // regular limit as r -> 0+
    for (int d : {2, 3, 5}) {
        double limit = std::exp((1.0 - 0.5 * d) * std::log(2.0) - specfun::log_gamma(0.5 * d));
        CHECK(bessel_radial_exact(d, 1.0, 1e-7) == doctest::Approx(limit).epsilon(1e-6));
    }
}

TEST_CASE("cutoff eigenstate: NB=0 is the Gaussian ground state")
{
    auto grid = linspace(0.0, 3.0, 31);
    auto w = cutoff_eigenstate_wavefunction({3, Sector::Singlet, 0}, 1, grid);
    for (size_t i = 0; i < grid.size(); ++i)
        CHECK(w.value[i] == doctest::Approx(oscillator_wavefunction(0, 3, grid[i])).epsilon(1e-12));
}

TEST_CASE("cutoff eigenstate converges to the Bessel wave")
{
    auto grid = linspace(1e-6, 2.0, 101);
    SectorSpec spec{3, Sector::Singlet, 40};
    auto w = cutoff_eigenstate_wavefunction(spec, 1, grid);
    double kappa = std::sqrt(eigenvalues_analytic(spec).values[0]);
    std::vector<double> target(grid.size());
    for (size_t i = 0; i < grid.size(); ++i) target[i] = bessel_radial_exact(3, kappa, grid[i]);
    CHECK(cutfock::testing::cosine_similarity(w.value, target) >= 0.999);
}

TEST_CASE("bulk deviation from the Bessel wave shrinks with the cutoff")
{
    double previous = 1e9;
    for (int nb : {20, 40, 80, 160}) {
        SectorSpec spec{3, Sector::Singlet, nb};
        auto grid = linspace(1e-6, 0.5 * std::sqrt(static_cast<double>(nb)), 200);
        auto w = cutoff_eigenstate_wavefunction(spec, 1, grid);
        double kappa = std::sqrt(eigenvalues_analytic(spec).values[0]);
        double st = 0.0, tt = 0.0;
        std::vector<double> target(grid.size());
        for (size_t i = 0; i < grid.size(); ++i) {
            target[i] = bessel_radial_exact(3, kappa, grid[i]);
            st += w.value[i] * target[i];
            tt += target[i] * target[i];
        }
        double scale = st / tt, num = 0.0, den = 0.0;
        for (size_t i = 0; i < grid.size(); ++i) {
            num += (w.value[i] - scale * target[i]) * (w.value[i] - scale * target[i]);
            den += w.value[i] * w.value[i];
        }
        double deviation = std::sqrt(num / den);
        CHECK(deviation < previous);
        previous = deviation;
    }
}

TEST_CASE("node counts inside the discretization interval")
{
    SectorSpec spec{3, Sector::Singlet, 40};
    double hi = std::sqrt(4.0 * ((spec.cutoff_nb + 1) / 2) + 3.0);
    auto grid = linspace(1e-4, hi, 4000);
    for (int index = 1; index <= 6; ++index) {
        auto w = cutoff_eigenstate_wavefunction(spec, index, grid);
        int nodes = 0;
        for (size_t i = 1; i < w.value.size(); ++i)
            if (w.value[i - 1] * w.value[i] < 0.0) ++nodes;
        CHECK(nodes == index - 1);
    }
}

TEST_CASE("cutoff eigenstate argument validation")
{
    auto grid = linspace(0.0, 1.0, 5);
    CHECK_THROWS_AS(cutoff_eigenstate_wavefunction({3, Sector::Vector, 4}, 1, grid),
                    std::invalid_argument);
    CHECK_THROWS_AS(cutoff_eigenstate_wavefunction({3, Sector::Singlet, 4}, 9, grid),
                    std::out_of_range);
    CHECK_THROWS_AS(cutoff_eigenstate_wavefunction({3, Sector::Singlet, 4}, 0, grid),
                    std::out_of_range);
}

TEST_CASE("dat export")
{
    RadialWave w;
    w.r = {0.5, 1.0};
    w.value = {2.0, 3.0};
    std::ostringstream os;
    write_dat(w, os);
    CHECK(os.str() == "0.5 2\n1 3\n");
}
