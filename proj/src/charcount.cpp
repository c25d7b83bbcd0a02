// ---------------------------------------------------------------------------
// cutfock -- spectra of the free Laplacian in a rotation-invariant cut basis
// SPDX-License-Identifier: Apache-2.0
// ---------------------------------------------------------------------------

#include "cutfock/charcount.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace cutfock::charcount {

namespace {
constexpr double kTwoPi = 6.28318530717958647692;
}

GroupSpec GroupSpec::for_dimension(int d)
{
    if (d < 2)
        throw std::invalid_argument("GroupSpec: dimension must be >= 2");
    GroupSpec g;
    g.d = d;
    g.rank = d / 2;
    g.parity = d % 2 == 0 ? Parity::Even : Parity::Odd;
    return g;
}

double haar_weight(std::span<const double> angles, const GroupSpec& g)
{
    if (static_cast<int>(angles.size()) != g.rank)
        throw std::invalid_argument("haar_weight: expected one angle per rank");
    double w = 1.0;
    for (int j = 0; j < g.rank; ++j)
        for (int k = j + 1; k < g.rank; ++k) {
            double diff = std::cos(angles[k]) - std::cos(angles[j]);
            w *= diff * diff;
        }
    if (g.parity == Parity::Odd)
        for (int m = 0; m < g.rank; ++m) {
            double s = std::sin(0.5 * angles[m]);
            w *= s * s;
        }
    return w;
}

double character_defining(std::span<const double> angles, const GroupSpec& g)
{
    if (static_cast<int>(angles.size()) != g.rank)
        throw std::invalid_argument("character_defining: expected one angle per rank");
    double chi = g.parity == Parity::Odd ? 1.0 : 0.0;
    for (double a : angles) chi += 2.0 * std::cos(a);
    return chi;
}

namespace {

// h_0..h_N from the power sums p_k = chi(k * angles).
std::vector<double> sym_character_ladder(int nb, std::span<const double> angles,
                                         const GroupSpec& g)
{
    std::vector<double> p(nb + 1, 0.0);
    for (int k = 1; k <= nb; ++k) {
        double chi = g.parity == Parity::Odd ? 1.0 : 0.0;
        for (double a : angles) chi += 2.0 * std::cos(k * a);
        p[k] = chi;
    }
    std::vector<double> h(nb + 1, 0.0);
    h[0] = 1.0;
    for (int n = 1; n <= nb; ++n) {
        double acc = 0.0;
        for (int k = 1; k <= n; ++k) acc += p[k] * h[n - k];
        h[n] = acc / n;
    }
    return h;
}

}  // namespace

double sym_character(int nb, std::span<const double> angles, const GroupSpec& g)
{
    if (nb < 0)
        throw std::invalid_argument("sym_character: level must be >= 0");
    return sym_character_ladder(nb, angles, g).back();
}

std::vector<CountResult> count_representation_table(int nb, const GroupSpec& g,
                                                    Sector target)
{
    if (nb < 0)
        throw std::invalid_argument("count_representation: level must be >= 0");
    const int rank = g.rank;
    const int nodes = nb + 2 * rank + 3;

    // Per-angle tables: cos(k * theta_i) for k = 1..nb and the one-angle
    // weight pieces, on the uniform grid theta_i = 2 pi i / nodes.
    std::vector<double> cosk(static_cast<size_t>(nodes) * (nb + 1));
    std::vector<double> theta(nodes);
    for (int i = 0; i < nodes; ++i) {
        theta[i] = kTwoPi * i / nodes;
        for (int k = 0; k <= nb; ++k)
            cosk[static_cast<size_t>(i) * (nb + 1) + k] = std::cos(k * theta[i]);
    }

    std::vector<double> acc(nb + 1, 0.0);
    double denom = 0.0;

    std::vector<int> idx(rank, 0);
    std::vector<double> angles(rank, 0.0);
    std::vector<double> p(nb + 1, 0.0), h(nb + 1, 0.0);
    const bool odd = g.parity == Parity::Odd;

    while (true) {
        for (int m = 0; m < rank; ++m) angles[m] = theta[idx[m]];
        double w = haar_weight(angles, g);
        if (w != 0.0) {
            for (int k = 1; k <= nb; ++k) {
                double chi = odd ? 1.0 : 0.0;
                for (int m = 0; m < rank; ++m)
                    chi += 2.0 * cosk[static_cast<size_t>(idx[m]) * (nb + 1) + k];
                p[k] = chi;
            }
            h[0] = 1.0;
            for (int n = 1; n <= nb; ++n) {
                double a = 0.0;
                for (int k = 1; k <= n; ++k) a += p[k] * h[n - k];
                h[n] = a / n;
            }
            double chi_t = target == Sector::Singlet ? 1.0 : character_defining(angles, g);
            double wt = w * chi_t;
            for (int n = 0; n <= nb; ++n) acc[n] += wt * h[n];
            denom += w;
        }
        int m = rank - 1;
        while (m >= 0 && ++idx[m] == nodes) idx[m--] = 0;
        if (m < 0) break;
    }

    std::vector<CountResult> out(nb + 1);
    for (int n = 0; n <= nb; ++n) {
        double raw = acc[n] / denom;
        long mult = std::lround(raw);
        double res = std::abs(raw - static_cast<double>(mult));
        if (res >= 1e-6)
            throw std::runtime_error("count_representation: quadrature residual too large");
        out[n] = {mult, raw, res};
    }
    return out;
}

CountResult count_representation(int nb, const GroupSpec& g, Sector target)
{
    return count_representation_table(nb, g, target).back();
}

long cumulative_basis_count(int nb, const GroupSpec& g, Sector target)
{
    auto table = count_representation_table(nb, g, target);
    long total = 0;
    for (const auto& c : table) total += c.multiplicity;
    return total;
}

void write_csv(const std::vector<CountResult>& table, std::ostream& os)
{
    os << "nb,multiplicity,raw,residual\n";
    os.precision(17);
    for (size_t n = 0; n < table.size(); ++n)
        os << n << ',' << table[n].multiplicity << ',' << table[n].raw << ','
           << table[n].residual << '\n';
}

}  // namespace cutfock::charcount
