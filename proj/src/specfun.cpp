// ---------------------------------------------------------------------------
// cutfock -- spectra of the free Laplacian in a rotation-invariant cut basis
// SPDX-License-Identifier: Apache-2.0
// ---------------------------------------------------------------------------

#include "cutfock/specfun.hpp"
#include "cutfock/eigensolve.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace cutfock::specfun {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_laguerre(const LaguerreParams& p)
{
    if (p.degree < 0)
        throw std::invalid_argument("laguerre: degree must be >= 0");
    if (!(p.alpha > -1.0))
        throw std::invalid_argument("laguerre: alpha must be > -1");
}

// --- double-double helpers (round-off compensated recurrence) -------------

struct dd {
    double hi = 0.0, lo = 0.0;
};

inline dd two_sum(double a, double b)
{
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline dd dd_add(dd a, dd b)
{
    dd s = two_sum(a.hi, b.hi);
    s.lo += a.lo + b.lo;
    dd r = two_sum(s.hi, s.lo);
    return r;
}

inline dd dd_mul_d(dd a, double b)
{
    double p = a.hi * b;
    double err = std::fma(a.hi, b, -p);
    dd r = two_sum(p, err + a.lo * b);
    return r;
}

double laguerre_compensated(int n, double alpha, double x)
{
    dd lkm1{1.0, 0.0};
    dd lk{1.0 + alpha - x, 0.0};
    if (n == 0) return 1.0;
    for (int k = 1; k < n; ++k) {
        dd a = dd_mul_d(lk, (2.0 * k + 1.0 + alpha - x) / (k + 1.0));
        dd b = dd_mul_d(lkm1, -(k + alpha) / (k + 1.0));
        dd next = dd_add(a, b);
        lkm1 = lk;
        lk = next;
    }
    return lk.hi + lk.lo;
}

}  // namespace

double log_gamma(double x)
{
    if (!(x > 0.0))
        throw std::domain_error("log_gamma: argument must be positive");
    // Lanczos, g = 7, 9 coefficients (~15 significant digits).
    static const double c[9] = {
        0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
        771.32342877765313,      -176.61502916214059,   12.507343278686905,
        -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
    if (x < 0.5) {
        // Reflection keeps the small-argument range accurate.
        return std::log(kPi / std::sin(kPi * x)) - log_gamma(1.0 - x);
    }
    double z = x - 1.0;
    double a = c[0];
    for (int i = 1; i < 9; ++i) a += c[i] / (z + i);
    double t = z + 7.5;
    return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(a);
}

double laguerre_eval(const LaguerreParams& p, double x)
{
    check_laguerre(p);
    const int n = p.degree;
    const double alpha = p.alpha;
    if (n == 0) return 1.0;
    if (n > 300) return laguerre_compensated(n, alpha, x);
    double lkm1 = 1.0;
    double lk = 1.0 + alpha - x;
    for (int k = 1; k < n; ++k) {
        double next = ((2.0 * k + 1.0 + alpha - x) * lk - (k + alpha) * lkm1) / (k + 1.0);
        lkm1 = lk;
        lk = next;
    }
    return lk;
}

double laguerre_deriv(const LaguerreParams& p, double x)
{
    check_laguerre(p);
    const int n = p.degree;
    if (n == 0) return 0.0;
    if (x != 0.0) {
        // x L' = n L_n - (n+alpha) L_{n-1}
        double ln = laguerre_eval(p, x);
        double lnm1 = laguerre_eval({n - 1, p.alpha}, x);
        return (n * ln - (n + p.alpha) * lnm1) / x;
    }
    return -laguerre_eval({n - 1, p.alpha + 1.0}, 0.0);
}

std::vector<double> laguerre_zeros(const LaguerreParams& p)
{
    check_laguerre(p);
    const int n = p.degree;
    if (n == 0) return {};
    // Jacobi matrix of the recurrence; identical in shape to the cut
    // Hamiltonian, with diag 2k+alpha+1 and offdiag -sqrt((k+1)(k+alpha+1)).
    std::vector<double> diag(n), off(n > 1 ? n - 1 : 0);
    for (int k = 0; k < n; ++k) diag[k] = 2.0 * k + p.alpha + 1.0;
    for (int k = 0; k + 1 < n; ++k) off[k] = -std::sqrt((k + 1.0) * (k + 1.0 + p.alpha));
    std::vector<double> zeros = tridiagonal_eigenvalues(diag, off);
    // Newton polish on the polynomial recurrence itself.
    for (double& z : zeros) {
        for (int it = 0; it < 3; ++it) {
            double f = laguerre_eval(p, z);
            double df = laguerre_deriv(p, z);
            if (df == 0.0) break;
            double step = f / df;
            z -= step;
            if (std::abs(step) < 1e-15 * std::abs(z)) break;
        }
    }
    return zeros;
}

// --- Bessel J --------------------------------------------------------------

namespace {

void check_order(const BesselOrder& o)
{
    if (!(o.nu >= -0.5))
        throw std::domain_error("bessel_j: order must be >= -1/2");
}

// Unit-leading-term ascending series, sum_k (-x^2/4)^k / (k! (nu+1)_k).
// Alternating with monotone terms once (x^2/4)/(nu+1) <= 1/2, so no
// cancellation at the orders it is used for.
double bessel_series_sum(double nu, double x)
{
    const double q = -0.25 * x * x;
    double term = 1.0, sum = 1.0;
    for (int k = 0; k < 400; ++k) {
        term *= q / ((k + 1.0) * (nu + k + 1.0));
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

// J_nu(x) for any nu >= -1/2: seed two high orders mu, mu+1 in the series-
// safe region (mu ~ x^2/2, where the alternating series cannot cancel) and
// recur downward. J dominates the downward direction, so the seed accuracy
// is carried to order nu; the running log scale absorbs the growth.
double bessel_downward(double nu, double x)
{
    const int steps = static_cast<int>(std::max(0.0, std::ceil(0.5 * x * x - nu))) + 4;
    const double mu = nu + steps;
    double logscale = mu * std::log(0.5 * x) - log_gamma(mu + 1.0);
    double f = bessel_series_sum(mu, x);
    double fp1 = bessel_series_sum(mu + 1.0, x) * (0.5 * x) / (mu + 1.0);
    for (int j = 0; j < steps; ++j) {
        double k = mu - j;  // produces J_{k-1} from J_k, J_{k+1}
        double fm1 = (2.0 * k / x) * f - fp1;
        fp1 = f;
        f = fm1;
        if (std::abs(f) > 1e250) {
            f *= 1e-250;
            fp1 *= 1e-250;
            logscale += 250.0 * std::log(10.0);
        }
    }
    if (f == 0.0) return 0.0;
    return std::copysign(std::exp(logscale + std::log(std::abs(f))), f);
}

// Half-integer ladder: J_{l+1/2}(x) = sqrt(2x/pi) j_l(x), with the spherical
// j_l obtained from backward recurrence normalized against j_0 or j_1.
double bessel_half_integer(int l, double x)
{
    const double s = std::sin(x), c = std::cos(x);
    const double envelope = std::sqrt(2.0 / (kPi * x));
    if (l == -1) return envelope * c;
    if (l == 0) return envelope * s;
    if (l == 1) return envelope * (s / x - c);
    const double j0 = s / x;
    const double j1 = s / (x * x) - c / x;
    int top = std::max(l, static_cast<int>(x)) + 30
              + static_cast<int>(3.0 * std::cbrt(std::max<double>(l, x) + 1.0));
    double fp1 = 0.0, f = 1e-30, target = 0.0;
    for (int k = top; k >= 0; --k) {
        double fm1 = (2.0 * k + 3.0) / x * f - fp1;
        fp1 = f;
        f = fm1;
        if (k == l) target = f;
        if (std::abs(f) > 1e250) {
            f *= 1e-250;
            fp1 *= 1e-250;
            target *= 1e-250;
        }
    }
    // f now holds the unnormalized j_0, fp1 the unnormalized j_1.
    double scale = std::abs(f) > std::abs(fp1) ? j0 / f : j1 / fp1;
    return envelope * x * target * scale;  // j_l -> J_{l+1/2}
}

double bessel_value(double nu, double x)
{
    if (x == 0.0) {
        if (nu == 0.0) return 1.0;
        if (nu > 0.0) return 0.0;
        return std::numeric_limits<double>::infinity();  // nu in [-1/2, 0)
    }
    double half = nu - std::floor(nu);
    // sin/cos ladder for half-integers, except near 0 where the spherical
    // closed forms cancel; the series-seeded route covers that corner.
    if (std::abs(half - 0.5) < 1e-12 && x >= 1.0) {
        int l = static_cast<int>(std::floor(nu));
        return bessel_half_integer(l, x);
    }
    return bessel_downward(nu, x);
}

}  // namespace

double bessel_j(const BesselOrder& o, double x)
{
    check_order(o);
    if (x < 0.0)
        throw std::domain_error("bessel_j: argument must be >= 0");
    return bessel_value(o.nu, x);
}

std::vector<double> bessel_zeros(const BesselOrder& o, int count)
{
    check_order(o);
    if (count < 0) throw std::domain_error("bessel_zeros: count must be >= 0");
    std::vector<double> zeros;
    zeros.reserve(count);
    const double nu = o.nu;
    // J_nu > 0 on (0, j_{nu,1}); consecutive zero gaps stay above ~2.9 for
    // nu >= -1/2, so a unit scan step cannot skip a sign change.
    double x = std::max(nu, 0.0) + 0.5;
    double fx = bessel_value(nu, x);
    while (static_cast<int>(zeros.size()) < count) {
        double y = x + 1.0;
        double fy = bessel_value(nu, y);
        if ((fx < 0.0) != (fy < 0.0)) {
            double a = x, b = y, fa = fx;
            for (int it = 0; it < 8; ++it) {
                double mvalue = bessel_value(nu, 0.5 * (a + b));
                if ((fa < 0.0) != (mvalue < 0.0))
                    b = 0.5 * (a + b);
                else {
                    a = 0.5 * (a + b);
                    fa = mvalue;
                }
            }
            double z = 0.5 * (a + b);
            for (int it = 0; it < 4; ++it) {
                double f = bessel_value(nu, z);
                double df = (nu / z) * f - bessel_value(nu + 1.0, z);
                if (df == 0.0) break;
                double step = f / df;
                z -= step;
                if (std::abs(step) < 1e-14 * z) break;
            }
            zeros.push_back(z);
        }
        x = y;
        fx = fy;
    }
    return zeros;
}

double bessel_zero(const BesselOrder& o, int n)
{
    if (n < 1)
        throw std::domain_error("bessel_zero: index must be >= 1");
    return bessel_zeros(o, n).back();
}

// --- Airy ------------------------------------------------------------------

namespace {

// Ai and Ai' from the Maclaurin series Ai(z) = c1 f(z) - c2 g(z).
void airy_series(double z, double& ai, double& dai)
{
    static const double c1 = std::pow(3.0, -2.0 / 3.0) / std::exp(log_gamma(2.0 / 3.0));
    static const double c2 = std::pow(3.0, -1.0 / 3.0) / std::exp(log_gamma(1.0 / 3.0));
    const double z3 = z * z * z;
    double tf = 1.0, tg = z;
    double f = tf, g = tg, df = 0.0, dg = 1.0;
    for (int k = 0; k < 60; ++k) {
        tf *= z3 / ((3.0 * k + 2.0) * (3.0 * k + 3.0));
        tg *= z3 / ((3.0 * k + 3.0) * (3.0 * k + 4.0));
        f += tf;
        g += tg;
        df += tf * (3.0 * k + 3.0) / z;
        dg += tg * (3.0 * k + 4.0) / z;
        if (std::abs(tf) < 1e-20 * std::abs(f) && std::abs(tg) < 1e-20 * std::abs(g)) break;
    }
    ai = c1 * f - c2 * g;
    dai = c1 * df - c2 * dg;
}

double solve_airy_zero()
{
    double lo = 2.0, hi = 3.0;  // Ai(-2) > 0 > Ai(-3)
    double ai, dai;
    for (int it = 0; it < 40; ++it) {
        double mid = 0.5 * (lo + hi);
        airy_series(-mid, ai, dai);
        (ai > 0.0 ? lo : hi) = mid;
    }
    double z = 0.5 * (lo + hi);
    for (int it = 0; it < 3; ++it) {
        airy_series(-z, ai, dai);
        z += ai / dai;  // Newton on z -> Ai(-z)
    }
    return z;
}

}  // namespace

double airy_smallest_zero()
{
    static const double i1 = solve_airy_zero();
    return i1;
}

}  // namespace cutfock::specfun
