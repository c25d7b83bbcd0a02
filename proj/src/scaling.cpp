// ---------------------------------------------------------------------------
// cutfock -- spectra of the free Laplacian in a rotation-invariant cut basis
// SPDX-License-Identifier: Apache-2.0
// ---------------------------------------------------------------------------

#include "cutfock/scaling.hpp"
#include "cutfock/specfun.hpp"

#include <json.hpp>

#include <cmath>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace cutfock::scaling {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

std::pair<double, double> discretization_interval(int nb, int d)
{
    if (nb < 0 || d < 1)
        throw std::invalid_argument("discretization_interval: bad arguments");
    double half = std::sqrt(4.0 * ((nb + 1) / 2) + 3.0);
    return {-half, half};
}

double szego_bound(int n, double alpha)
{
    if (n < 1)
        throw std::domain_error("szego_bound: degree must be >= 1");
    if (std::abs(alpha) < 0.25 || !(alpha > -1.0))
        throw std::domain_error("szego_bound: valid only for |alpha| >= 1/4, alpha > -1");
    double s = 4.0 * n + 2.0 * alpha + 2.0;
    double gamma = std::pow(6.0, -1.0 / 3.0) * specfun::airy_smallest_zero();
    double root = std::sqrt(s) - gamma * std::pow(s, -1.0 / 6.0);
    return root * root;
}

double scaling_estimate(int n, int nb, int d, Sector sector)
{
    if (n < 1 || nb < 0 || d < 1)
        throw std::invalid_argument("scaling_estimate: bad arguments");
    if (sector == Sector::Singlet) {
        double j = specfun::bessel_zero({0.5 * d - 1.0}, n);
        return j * j / (4.0 * (nb / 2) + d);
    }
    double j = specfun::bessel_zero({0.5 * d}, n);
    return j * j / (4.0 * ((nb + 1) / 2) + d + 2.0);
}

FitResult fit_gamma(int d, int n_min, int n_max)
{
    if (d < 1)
        throw std::invalid_argument("fit_gamma: dimension must be >= 1");
    if (n_min < 1 || n_max - n_min + 1 < 10)
        throw std::invalid_argument("fit_gamma: range must span at least 10 zeros");

    std::vector<double> zeros = specfun::bessel_zeros({0.5 * d - 1.0}, n_max);
    const int m = n_max - n_min + 1;
    double sx = 0.0, sy = 0.0;
    for (int n = n_min; n <= n_max; ++n) {
        sx += n;
        sy += zeros[n - 1];
    }
    double xbar = sx / m, ybar = sy / m;
    double sxx = 0.0, sxy = 0.0;
    for (int n = n_min; n <= n_max; ++n) {
        sxx += (n - xbar) * (n - xbar);
        sxy += (n - xbar) * (zeros[n - 1] - ybar);
    }
    FitResult f;
    f.n_min = n_min;
    f.n_max = n_max;
    f.gamma1 = sxy / sxx;
    f.gamma2 = ybar - f.gamma1 * xbar;
    double rss = 0.0;
    for (int n = n_min; n <= n_max; ++n) {
        double r = zeros[n - 1] - (f.gamma1 * n + f.gamma2);
        rss += r * r;
    }
    double s2 = rss / (m - 2);
    f.stderr1 = std::sqrt(s2 / sxx);
    f.stderr2 = std::sqrt(s2 * (1.0 / m + xbar * xbar / sxx));
    return f;
}

double d1_scaling_table(int n, int nb)
{
    if (n < 1 || nb < 0)
        throw std::invalid_argument("d1_scaling_table: bad arguments");
    const bool n_odd = n % 2 == 1;
    const bool nb_odd = nb % 2 == 1;
    double num = n_odd ? (n - 0.5) * (n - 0.5) : static_cast<double>(n) * n;
    int c = n_odd == nb_odd ? 3 : 5;
    return 0.5 * kPi * kPi * num / (2.0 * nb + c);
}

void write_json(const FitResult& f, std::ostream& os)
{
    nlohmann::json j;
    j["gamma1"] = f.gamma1;
    j["gamma2"] = f.gamma2;
    j["stderr1"] = f.stderr1;
    j["stderr2"] = f.stderr2;
    j["n_min"] = f.n_min;
    j["n_max"] = f.n_max;
    os << j.dump(2) << '\n';
}

}  // namespace cutfock::scaling
