// ---------------------------------------------------------------------------
// cutfock -- spectra of the free Laplacian in a rotation-invariant cut basis
// SPDX-License-Identifier: Apache-2.0
// ---------------------------------------------------------------------------
//
// Command-line surface. Every subcommand writes a deterministic data file
// (csv with a header row, gnuplot-style .dat, or json with metadata) and
// exits 0 on success; failures print one "error: ..." line and exit 1.

#include "cutfock/charcount.hpp"
#include "cutfock/eigensolve.hpp"
#include "cutfock/fockbasis.hpp"
#include "cutfock/scaling.hpp"
#include "cutfock/specfun.hpp"
#include "cutfock/waves.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace cutfock;
using nlohmann::json;

struct CommonOpts {
    int d = 3;
    std::string sector = "singlet";
    int nb = 0;
    std::vector<int> nb_range;
    std::string format = "csv";
    std::string out;
    std::string vector_convention = "paper";
};

Sector parse_sector(const std::string& s)
{
    if (s == "singlet") return Sector::Singlet;
    if (s == "vector") return Sector::Vector;
    throw CLI::ValidationError("--sector", "expected 'singlet' or 'vector'");
}

VectorConvention parse_convention(const std::string& s)
{
    if (s == "paper") return VectorConvention::Paper;
    if (s == "strict") return VectorConvention::Strict;
    throw CLI::ValidationError("--vector-cutoff-convention", "expected 'paper' or 'strict'");
}

SectorSpec make_spec(const CommonOpts& o, int nb)
{
    return {o.d, parse_sector(o.sector), nb, parse_convention(o.vector_convention)};
}

void add_common(CLI::App* cmd, CommonOpts& o, bool with_range)
{
    cmd->add_option("--d", o.d, "space dimension")->check(CLI::PositiveNumber);
    cmd->add_option("--sector", o.sector, "singlet|vector");
    cmd->add_option("--nb", o.nb, "cutoff N_B")->check(CLI::NonNegativeNumber);
    if (with_range)
        cmd->add_option("--nb-range", o.nb_range, "cutoff range: lo hi [step]")
            ->expected(2, 3);
    cmd->add_option("--format", o.format, "csv|dat|json");
    cmd->add_option("--out", o.out, "output path (default: stdout)");
    cmd->add_option("--vector-cutoff-convention", o.vector_convention, "paper|strict");
}

// A small table abstraction so csv/dat/json stay byte-stable across runs.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
    json meta;
};

void emit(const Table& t, const std::string& format, const std::string& out)
{
    std::ostringstream body;
    body.precision(15);
    if (format == "csv" || format == "dat") {
        const char sep = format == "csv" ? ',' : ' ';
        if (format == "csv") {
            for (size_t i = 0; i < t.header.size(); ++i)
                body << (i ? std::string(1, sep) : "") << t.header[i];
            body << '\n';
        } else {
            body << "# ";
            for (size_t i = 0; i < t.header.size(); ++i) body << (i ? " " : "") << t.header[i];
            body << '\n';
        }
        for (const auto& row : t.rows) {
            for (size_t i = 0; i < row.size(); ++i) body << (i ? std::string(1, sep) : "") << row[i];
            body << '\n';
        }
    } else if (format == "json") {
        json j;
        j["columns"] = t.header;
        j["rows"] = t.rows;
        j["meta"] = t.meta;
        body << j.dump(2) << '\n';
    } else {
        throw CLI::ValidationError("--format", "expected csv, dat or json");
    }
    if (out.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream f(out);
        if (!f) throw std::runtime_error("cannot open output file: " + out);
        f << body.str();
    }
}

std::vector<int> cutoff_list(const CommonOpts& o)
{
    if (o.nb_range.empty()) return {o.nb};
    int lo = o.nb_range[0], hi = o.nb_range[1];
    int step = o.nb_range.size() > 2 ? o.nb_range[2] : 1;
    if (step < 1 || hi < lo) throw std::runtime_error("invalid --nb-range");
    std::vector<int> nbs;
    for (int nb = lo; nb <= hi; nb += step) nbs.push_back(nb);
    return nbs;
}

// ---- spectrum ----------------------------------------------------------

int run_spectrum(const CommonOpts& o, const std::string& preset, int levels)
{
    CommonOpts opts = o;
    if (preset == "figure1") {
        opts.d = 3;
        opts.sector = "singlet";
        opts.nb_range = {0, 60};
        levels = 12;
    } else if (!preset.empty()) {
        throw std::runtime_error("unknown preset: " + preset);
    }
    Table t;
    t.header = {"nb"};
    for (int i = 1; i <= levels; ++i) t.header.push_back("E" + std::to_string(i));
    for (int nb : cutoff_list(opts)) {
        Spectrum s = eigenvalues_analytic(make_spec(opts, nb));
        std::vector<double> row{static_cast<double>(nb)};
        for (int i = 0; i < levels && i < static_cast<int>(s.values.size()); ++i)
            row.push_back(s.values[i]);
        t.rows.push_back(std::move(row));
    }
    t.meta = {{"tool", "cutfock spectrum"},
              {"d", opts.d},
              {"sector", opts.sector},
              {"convention", opts.vector_convention}};
    emit(t, opts.format, opts.out);
    return 0;
}

// ---- count -------------------------------------------------------------

int run_count(const CommonOpts& o)
{
    auto g = charcount::GroupSpec::for_dimension(o.d);
    auto table = charcount::count_representation_table(o.nb, g, parse_sector(o.sector));
    Table t;
    t.header = {"nb", "multiplicity", "raw", "residual"};
    for (size_t n = 0; n < table.size(); ++n)
        t.rows.push_back({static_cast<double>(n), static_cast<double>(table[n].multiplicity),
                          table[n].raw, table[n].residual});
    t.meta = {{"tool", "cutfock count"}, {"d", o.d}, {"sector", o.sector}};
    emit(t, o.format, o.out);
    return 0;
}

// ---- wavefunction / reconstruct ----------------------------------------

std::vector<double> make_grid(double lo, double hi, int points)
{
    if (points < 2 || !(hi > lo)) throw std::runtime_error("invalid r grid");
    std::vector<double> r(points);
    for (int i = 0; i < points; ++i) r[i] = lo + (hi - lo) * i / (points - 1);
    return r;
}

int run_wavefunction(const CommonOpts& o, int index, double rlo, double rhi, int points)
{
    auto grid = make_grid(rlo, rhi, points);
    auto wave = waves::cutoff_eigenstate_wavefunction(make_spec(o, o.nb), index, grid);
    Spectrum s = eigenvalues_analytic(make_spec(o, o.nb));
    double kappa = std::sqrt(s.values[index - 1]);
    // r = 0 column entry is the finite limit of the Bessel radial wave.
    const double at_zero = std::exp((1.0 - 0.5 * o.d) * std::log(2.0)
                                    - specfun::log_gamma(0.5 * o.d));
    Table t;
    t.header = {"r", "value", "bessel_target"};
    for (size_t i = 0; i < grid.size(); ++i)
        t.rows.push_back({grid[i], wave.value[i],
                          grid[i] > 0.0 ? waves::bessel_radial_exact(o.d, kappa, grid[i])
                                        : at_zero});
    t.meta = {{"tool", "cutfock wavefunction"}, {"d", o.d}, {"nb", o.nb},
              {"eigen_index", index}, {"energy", s.values[index - 1]}};
    emit(t, o.format, o.out);
    return 0;
}

int run_reconstruct(const CommonOpts& o, double kappa, double rlo, double rhi, int points,
                    int terms, const std::string& summation)
{
    waves::Summation mode;
    if (summation == "partial")
        mode = waves::Summation::Partial;
    else if (summation == "cesaro")
        mode = waves::Summation::Cesaro;
    else
        throw std::runtime_error("unknown --summation (expected partial|cesaro)");
    auto grid = make_grid(rlo, rhi, points);
    Table t;
    t.header = {"r", "value", "bessel_target"};
    for (double r : grid)
        t.rows.push_back({r, waves::plane_wave_reconstruction(o.d, kappa, r, terms, mode),
                          waves::bessel_radial_exact(o.d, kappa, r)});
    t.meta = {{"tool", "cutfock reconstruct"}, {"d", o.d}, {"kappa", kappa},
              {"terms", terms}, {"summation", summation}};
    emit(t, o.format, o.out);
    return 0;
}

// ---- scaling -----------------------------------------------------------

int run_scaling(const CommonOpts& o, const std::string& preset, int fit_lo, int fit_hi)
{
    if (preset == "table2") {
        Table t;
        t.header = {"d", "gamma1", "stderr1", "gamma2", "stderr2"};
        for (int d : {1, 3, 9}) {
            auto f = scaling::fit_gamma(d, fit_lo, fit_hi);
            t.rows.push_back({static_cast<double>(d), f.gamma1, f.stderr1, f.gamma2, f.stderr2});
        }
        t.meta = {{"tool", "cutfock scaling"}, {"preset", "table2"},
                  {"fit_range", {fit_lo, fit_hi}}};
        emit(t, o.format, o.out);
        return 0;
    }
    if (preset == "figure2") {
        const int nb = 200;
        Table t;
        t.header = {"d", "n", "n2_over_nb2", "energy", "estimate"};
        for (int d : {1, 150}) {
            SectorSpec spec{d, Sector::Singlet, nb, VectorConvention::Paper};
            Spectrum s = eigenvalues_analytic(spec);
            for (int n = 1; n <= nb / 2; ++n)
                t.rows.push_back({static_cast<double>(d), static_cast<double>(n),
                                  static_cast<double>(n) * n / (static_cast<double>(nb) * nb),
                                  s.values[n - 1], scaling::scaling_estimate(n, nb, d)});
        }
        t.meta = {{"tool", "cutfock scaling"}, {"preset", "figure2"}, {"nb", nb}};
        emit(t, o.format, o.out);
        return 0;
    }
    if (!preset.empty()) throw std::runtime_error("unknown preset: " + preset);

    // No preset: single fit report for --d over the requested range.
    auto f = scaling::fit_gamma(o.d, fit_lo, fit_hi);
    if (o.format == "json") {
        std::ostringstream body;
        scaling::write_json(f, body);
        if (o.out.empty())
            std::cout << body.str();
        else {
            std::ofstream file(o.out);
            if (!file) throw std::runtime_error("cannot open output file: " + o.out);
            file << body.str();
        }
        return 0;
    }
    Table t;
    t.header = {"d", "gamma1", "stderr1", "gamma2", "stderr2"};
    t.rows.push_back({static_cast<double>(o.d), f.gamma1, f.stderr1, f.gamma2, f.stderr2});
    t.meta = {{"tool", "cutfock scaling"}, {"fit_range", {fit_lo, fit_hi}}};
    emit(t, o.format, o.out);
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"cut Fock-basis spectra of the free Laplacian"};
    app.require_subcommand(1);

    CommonOpts o;
    std::string preset;
    int levels = 12;
    int eigen_index = 1;
    double kappa = 1.0, rlo = 0.0, rhi = 2.0, rec_rlo = 0.5, rec_rhi = 2.0;
    int points = 201, terms = 4000;
    std::string summation = "cesaro";
    int fit_lo = 1, fit_hi = 50;

    auto* spectrum = app.add_subcommand("spectrum", "cut eigenvalues vs cutoff");
    add_common(spectrum, o, true);
    spectrum->add_option("--preset", preset, "figure1");
    spectrum->add_option("--levels", levels, "how many lowest eigenvalues");

    auto* count = app.add_subcommand("count", "state multiplicities per level");
    add_common(count, o, false);

    auto* wavefunction = app.add_subcommand("wavefunction", "cut eigenstate radial profile");
    add_common(wavefunction, o, false);
    wavefunction->add_option("--index", eigen_index, "eigenstate index (1-based)");
    wavefunction->add_option("--rmin", rlo, "grid start");
    wavefunction->add_option("--rmax", rhi, "grid end");
    wavefunction->add_option("--points", points, "grid points");

    auto* reconstruct = app.add_subcommand("reconstruct", "bilinear Laguerre sum vs Bessel");
    add_common(reconstruct, o, false);
    reconstruct->add_option("--kappa", kappa, "wave number");
    reconstruct->add_option("--rmin", rec_rlo, "grid start");
    reconstruct->add_option("--rmax", rec_rhi, "grid end");
    reconstruct->add_option("--points", points, "grid points");
    reconstruct->add_option("--terms", terms, "number of series terms");
    reconstruct->add_option("--summation", summation, "partial|cesaro");

    std::vector<int> fit_range;
    auto* scalingcmd = app.add_subcommand("scaling", "fits and scaling-law data");
    add_common(scalingcmd, o, false);
    scalingcmd->add_option("--preset", preset, "figure2|table2");
    scalingcmd->add_option("--fit-range", fit_range, "fit range: lo hi")->expected(2);

    CLI11_PARSE(app, argc, argv);

    if (fit_range.size() == 2) {
        fit_lo = fit_range[0];
        fit_hi = fit_range[1];
    }

    try {
        if (spectrum->parsed()) return run_spectrum(o, preset, levels);
        if (count->parsed()) return run_count(o);
        if (wavefunction->parsed())
            return run_wavefunction(o, eigen_index, rlo, rhi, points);
        if (reconstruct->parsed())
            return run_reconstruct(o, kappa, rec_rlo, rec_rhi, points, terms, summation);
        if (scalingcmd->parsed()) return run_scaling(o, preset, fit_lo, fit_hi);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
