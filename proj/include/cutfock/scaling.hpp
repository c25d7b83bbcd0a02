// ---------------------------------------------------------------------------
// cutfock -- spectra of the free Laplacian in a rotation-invariant cut basis
// SPDX-License-Identifier: Apache-2.0
// ---------------------------------------------------------------------------

#ifndef CUTFOCK_SCALING_HPP
#define CUTFOCK_SCALING_HPP

#include "cutfock/fockbasis.hpp"

#include <iosfwd>
#include <utility>

namespace cutfock::scaling {

/// Least-squares line j_{d/2-1,n} ~ gamma1 * n + gamma2 over an index range.
struct FitResult {
    double gamma1 = 0.0;
    double gamma2 = 0.0;
    double stderr1 = 0.0;
    double stderr2 = 0.0;
    int n_min = 1;
    int n_max = 1;
};

/// Interval containing every position/momentum eigenvalue at this cutoff:
/// (-sqrt(4 ceil(NB/2) + 3), +sqrt(4 ceil(NB/2) + 3)).
std::pair<double, double> discretization_interval(int nb, int d);

/// Upper bound on the largest zero of L_n^alpha:
///   (sqrt(4n+2a+2) - gamma (4n+2a+2)^{-1/6})^2, gamma = 6^{-1/3} i1.
/// Valid for |alpha| >= 1/4, alpha > -1; throws std::domain_error outside.
double szego_bound(int n, double alpha);

/// Large-cutoff estimate of the n-th eigenvalue:
///   singlet: j_{d/2-1,n}^2 / (4 floor(NB/2) + d)
///   vector:  j_{d/2,n}^2   / (4 ceil(NB/2) + d + 2)
double scaling_estimate(int n, int nb, int d, Sector sector = Sector::Singlet);

/// OLS fit of the Bessel zeros j_{d/2-1,n} against n over [n_min, n_max]
/// (at least 10 points), with standard errors from the residual variance.
FitResult fit_gamma(int d, int n_min = 1, int n_max = 50);

/// One-dimensional reference estimate, dispatched on the parities of n and
/// NB exactly as tabulated:
///   n odd : (pi^2/2) (n-1/2)^2 / (2 NB + c), c = 3 (NB odd) / 5 (NB even)
///   n even: (pi^2/2) n^2       / (2 NB + c), c = 5 (NB odd) / 3 (NB even)
double d1_scaling_table(int n, int nb);

void write_json(const FitResult& f, std::ostream& os);

}  // namespace cutfock::scaling

#endif
