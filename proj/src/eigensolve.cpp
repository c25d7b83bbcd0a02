// ---------------------------------------------------------------------------
// cutfock -- spectra of the free Laplacian in a rotation-invariant cut basis
// SPDX-License-Identifier: Apache-2.0
// ---------------------------------------------------------------------------

#include "cutfock/eigensolve.hpp"
#include "cutfock/specfun.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace cutfock {

namespace {

// Number of eigenvalues of T strictly below x, by the Sturm sign count of
// the LDL^T pivots.
int sturm_count(std::span<const double> diag, std::span<const double> off, double x,
                double pivmin)
{
    int count = 0;
    double q = diag[0] - x;
    if (q < 0.0) ++count;
    for (size_t i = 1; i < diag.size(); ++i) {
        double denom = q;
        if (std::abs(denom) < pivmin) denom = denom < 0.0 ? -pivmin : pivmin;
        q = diag[i] - x - off[i - 1] * off[i - 1] / denom;
        if (q < 0.0) ++count;
    }
    return count;
}

// Characteristic polynomial and derivative at x, rescaled in flight so the
// values stay representable; only the Newton ratio p/p' is meaningful.
void char_poly_scaled(std::span<const double> diag, std::span<const double> off, double x,
                      double& p, double& dp)
{
    double pm1 = 1.0, dpm1 = 0.0;
    p = diag[0] - x;
    dp = -1.0;
    for (size_t i = 1; i < diag.size(); ++i) {
        double e2 = off[i - 1] * off[i - 1];
        double pn = (diag[i] - x) * p - e2 * pm1;
        double dpn = -p + (diag[i] - x) * dp - e2 * dpm1;
        pm1 = p;
        dpm1 = dp;
        p = pn;
        dp = dpn;
        double mag = std::max(std::abs(p), std::abs(dp));
        if (mag > 1e120 || (mag != 0.0 && mag < 1e-120)) {
            double s = 1.0 / mag;
            p *= s;
            dp *= s;
            pm1 *= s;
            dpm1 *= s;
        }
    }
}

}  // namespace

std::vector<double> tridiagonal_eigenvalues(std::span<const double> diag,
                                            std::span<const double> offdiag)
{
    const int n = static_cast<int>(diag.size());
    if (n == 0) return {};
    if (offdiag.size() + 1 != diag.size())
        throw std::invalid_argument("tridiagonal_eigenvalues: offdiag must have n-1 entries");
    if (n == 1) return {diag[0]};

    // Gershgorin bounds.
    double lo = diag[0], hi = diag[0], norm = 0.0;
    for (int i = 0; i < n; ++i) {
        double r = 0.0;
        if (i > 0) r += std::abs(offdiag[i - 1]);
        if (i < n - 1) r += std::abs(offdiag[i]);
        lo = std::min(lo, diag[i] - r);
        hi = std::max(hi, diag[i] + r);
        norm = std::max(norm, std::abs(diag[i]) + r);
    }
    const double pivmin = 1e-300;
    const double width = 1e-12 * std::max(norm, 1.0);

    std::vector<double> values(n);
    for (int k = 0; k < n; ++k) {
        // eigenvalues come out in index order, so the previous one is a
        // valid lower bracket for the next
        double a = k > 0 ? std::max(lo, values[k - 1] - width) : lo;
        double b = hi;
        while (b - a > width) {
            double mid = 0.5 * (a + b);
            if (sturm_count(diag, offdiag, mid, pivmin) > k)
                b = mid;
            else
                a = mid;
        }
        double x = 0.5 * (a + b);
        double p, dp;
        char_poly_scaled(diag, offdiag, x, p, dp);
        if (dp != 0.0) {
            double step = p / dp;
            if (std::abs(step) < 4.0 * width) x -= step;
        }
        values[k] = x;
    }
    std::sort(values.begin(), values.end());
    return values;
}

Spectrum eigenvalues_sturm(const TridiagonalMatrix& t)
{
    return {tridiagonal_eigenvalues(t.diag, t.offdiag), EigenMethod::SturmBisection, {}};
}

Spectrum eigenvalues_sturm(const SectorSpec& spec)
{
    TridiagonalMatrix t = hamiltonian_matrix(spec);
    Spectrum s = eigenvalues_sturm(t);
    s.spec = spec;
    return s;
}

Spectrum eigenvalues_analytic(const SectorSpec& spec)
{
    const int m = basis_size(spec);
    auto zeros = specfun::laguerre_zeros({m, laguerre_order(spec)});
    return {std::move(zeros), EigenMethod::LaguerreZeros, spec};
}

double char_poly_eval(const SectorSpec& spec, int m, double lambda)
{
    const int size = basis_size(spec);
    if (m < 1 || m > size)
        throw std::invalid_argument("char_poly_eval: minor order out of range");
    TridiagonalMatrix t = hamiltonian_matrix(spec);
    // I_k = (diag_{k-1} - lambda) I_{k-1} - off_{k-2}^2 I_{k-2}, divided by k
    // as we go (the n! substitution), which lands on the Laguerre scale.
    double im1 = 1.0;
    double i0 = t.diag[0] - lambda;
    for (int k = 2; k <= m; ++k) {
        double e2 = t.offdiag[k - 2] * t.offdiag[k - 2];
        double next = ((t.diag[k - 1] - lambda) * i0 - e2 * im1 / (k - 1.0)) / k;
        im1 = i0;
        i0 = next;
    }
    return i0;
}

namespace {

double coeff_base(const SectorSpec& spec)
{
    // b in a_n = sqrt(n! Gamma(b)/Gamma(n+b)) L_n^{b-1}(E)
    return spec.sector == Sector::Singlet ? 0.5 * spec.d : 0.5 * spec.d + 1.0;
}

}  // namespace

std::vector<double> eigenvector_coeffs_raw(const SectorSpec& spec, double energy)
{
    using specfun::log_gamma;
    const int m = basis_size(spec);
    const double b = coeff_base(spec);
    std::vector<double> a(m);
    for (int n = 0; n < m; ++n) {
        double lg = log_gamma(b) - log_gamma(n + b);
        a[n] = std::exp(lg) * specfun::laguerre_eval({n, b - 1.0}, energy);
    }
    return a;
}

CoefficientVector eigenvector_coeffs(const SectorSpec& spec, double energy,
                                     CoeffNormalization norm)
{
    using specfun::log_gamma;
    const int m = basis_size(spec);
    // Quantization condition: E must be a zero of the full characteristic
    // polynomial. Tolerance scales with the polynomial's slope at E.
    double full = char_poly_eval(spec, m, energy);
    double slope = specfun::laguerre_deriv({m, laguerre_order(spec)}, energy);
    double tol = 1e-8 * std::max(1.0, std::abs(slope));
    if (std::abs(full) > tol)
        throw std::invalid_argument("eigenvector_coeffs: energy violates the quantization condition");

    const double b = coeff_base(spec);
    CoefficientVector cv;
    cv.energy = energy;
    cv.normalization = norm;
    cv.coeffs.resize(m);
    for (int n = 0; n < m; ++n) {
        double lg = 0.5 * (log_gamma(n + 1.0) + log_gamma(b) - log_gamma(n + b));
        cv.coeffs[n] = std::exp(lg) * specfun::laguerre_eval({n, b - 1.0}, energy);
    }
    if (norm == CoeffNormalization::UnitL2) {
        double s2 = 0.0;
        for (double c : cv.coeffs) s2 += c * c;
        double inv = 1.0 / std::sqrt(s2);
        for (double& c : cv.coeffs) c *= inv;
    }
    return cv;
}

DenseMatrix densify(const TridiagonalMatrix& t)
{
    DenseMatrix a(t.size());
    for (int i = 0; i < t.size(); ++i) {
        a.at(i, i) = t.diag[i];
        if (i + 1 < t.size()) {
            a.at(i, i + 1) = t.offdiag[i];
            a.at(i + 1, i) = t.offdiag[i];
        }
    }
    return a;
}

Spectrum dense_jacobi_eigen(DenseMatrix m)
{
    const int n = m.n;
    if (n > 2000)
        throw std::invalid_argument("dense_jacobi_eigen: size capped at 2000");
    if (n == 0) return {{}, EigenMethod::DenseJacobi, {}};

    double fro2 = 0.0;
    for (double v : m.a) fro2 += v * v;
    const double tol = 1e-12 * std::sqrt(fro2);

    auto offnorm = [&] {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) s += m.at(i, j) * m.at(i, j);
        return std::sqrt(2.0 * s);
    };

    bool converged = false;
    for (int sweep = 0; sweep < 60 && !converged; ++sweep) {
        if (offnorm() <= tol) {
            converged = true;
            break;
        }
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = m.at(p, q);
                if (apq == 0.0) continue;
                double theta = (m.at(q, q) - m.at(p, p)) / (2.0 * apq);
                double t = (theta >= 0.0 ? 1.0 : -1.0)
                           / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (int k = 0; k < n; ++k) {
                    double akp = m.at(k, p), akq = m.at(k, q);
                    m.at(k, p) = c * akp - s * akq;
                    m.at(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = m.at(p, k), aqk = m.at(q, k);
                    m.at(p, k) = c * apk - s * aqk;
                    m.at(q, k) = s * apk + c * aqk;
                }
            }
        }
    }
    if (!converged && offnorm() > tol)
        throw std::runtime_error("dense_jacobi_eigen: no convergence after 60 sweeps");

    std::vector<double> values(n);
    for (int i = 0; i < n; ++i) values[i] = m.at(i, i);
    std::sort(values.begin(), values.end());
    return {std::move(values), EigenMethod::DenseJacobi, {}};
}

double eigenpair_residual(const TridiagonalMatrix& t, double energy,
                          std::span<const double> v)
{
    const int n = t.size();
    if (static_cast<int>(v.size()) != n)
        throw std::invalid_argument("eigenpair_residual: size mismatch");
    double r2 = 0.0, v2 = 0.0;
    for (int i = 0; i < n; ++i) {
        double r = (t.diag[i] - energy) * v[i];
        if (i > 0) r += t.offdiag[i - 1] * v[i - 1];
        if (i + 1 < n) r += t.offdiag[i] * v[i + 1];
        r2 += r * r;
        v2 += v[i] * v[i];
    }
    return std::sqrt(r2 / v2);
}

namespace {

const char* method_name(EigenMethod m)
{
    switch (m) {
        case EigenMethod::SturmBisection: return "sturm-bisection";
        case EigenMethod::LaguerreZeros: return "laguerre-zeros";
        case EigenMethod::DenseJacobi: return "dense-jacobi";
    }
    return "?";
}

}  // namespace

void write_csv(const Spectrum& s, std::ostream& os)
{
    os << "index,eigenvalue\n";
    os.precision(17);
    for (size_t i = 0; i < s.values.size(); ++i) os << i + 1 << ',' << s.values[i] << '\n';
}

void write_json(const Spectrum& s, std::ostream& os)
{
    nlohmann::json j;
    j["method"] = method_name(s.method);
    j["values"] = s.values;
    if (s.spec) {
        j["d"] = s.spec->d;
        j["sector"] = s.spec->sector == Sector::Singlet ? "singlet" : "vector";
        j["cutoff_nb"] = s.spec->cutoff_nb;
    }
    os << j.dump(2) << '\n';
}

}  // namespace cutfock
