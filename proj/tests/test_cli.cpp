// ---------------------------------------------------------------------------
// cutfock -- spectra of the free Laplacian in a rotation-invariant cut basis
// SPDX-License-Identifier: Apache-2.0
// ---------------------------------------------------------------------------

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string binary_path()
{
    const char* p = std::getenv("CUTFOCK_BIN");
    REQUIRE_MESSAGE(p != nullptr, "CUTFOCK_BIN must point at the cutfock executable");
    return p;
}

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args, const std::string& outfile)
{
    std::string cmd = binary_path() + " " + args + " 2>/dev/null";
    int rc = std::system(cmd.c_str());
    std::ifstream f(outfile);
    std::stringstream ss;
    ss << f.rdbuf();
    return {rc == 0 ? 0 : 1, ss.str()};
}

std::string tmp(const std::string& name)
{
    return std::string("cli_test_") + name;
}

}  // namespace

TEST_CASE("spectrum single point")
{
    auto out = tmp("single.csv");
    auto r = run("spectrum --d 3 --nb 0 --levels 1 --out " + out, out);
    CHECK(r.exit_code == 0);
    CHECK(r.output == "nb,E1\n0,1.5\n");
}

TEST_CASE("spectrum d=2 row")
{
    auto out = tmp("d2.csv");
    auto r = run("spectrum --d 2 --nb 2 --levels 2 --out " + out, out);
    CHECK(r.exit_code == 0);
    CHECK(r.output.rfind("nb,E1,E2\n2,0.585786437626905,3.41421356237309", 0) == 0);
}

TEST_CASE("figure1 preset yields decaying columns")
{
    auto out = tmp("figure1.csv");
    auto r = run("spectrum --preset figure1 --out " + out, out);
    CHECK(r.exit_code == 0);
    std::istringstream is(r.output);
    std::string header;
    std::getline(is, header);
    CHECK(header == "nb,E1,E2,E3,E4,E5,E6,E7,E8,E9,E10,E11,E12");
    double first_e1 = -1.0, last_e1 = -1.0, last_row_max = 0.0;
    std::string line;
    int rows = 0;
    while (std::getline(is, line)) {
        std::istringstream row(line);
        std::string cell;
        std::getline(row, cell, ',');
        int nb = std::stoi(cell);
        std::getline(row, cell, ',');
        double e1 = std::stod(cell);
        if (nb == 0) first_e1 = e1;
        if (nb == 60) {
            last_e1 = e1;
            last_row_max = e1;
            while (std::getline(row, cell, ',')) last_row_max = std::max(last_row_max, std::stod(cell));
        }
        ++rows;
    }
    CHECK(rows == 61);
    CHECK(first_e1 == doctest::Approx(1.5));
    CHECK(last_e1 < first_e1);
    CHECK(last_row_max < 30.0);  // the y-range of the published spectrum plot
}

TEST_CASE("deterministic output")
{
    auto out1 = tmp("det1.csv");
    auto out2 = tmp("det2.csv");
    auto r1 = run("count --d 5 --sector vector --nb 6 --out " + out1, out1);
    auto r2 = run("count --d 5 --sector vector --nb 6 --out " + out2, out2);
    CHECK(r1.exit_code == 0);
    CHECK(r1.output == r2.output);
    CHECK(!r1.output.empty());
}

TEST_CASE("json format carries metadata")
{
    auto out = tmp("meta.json");
    auto r = run("spectrum --d 4 --nb 3 --levels 2 --format json --out " + out, out);
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["meta"]["d"] == 4);
    CHECK(j["columns"].size() == 3);
    CHECK(j["rows"].size() == 1);
}

TEST_CASE("dat format is gnuplot friendly")
{
    auto out = tmp("plot.dat");
    auto r = run("wavefunction --d 3 --nb 8 --index 2 --rmin 0 --rmax 1 --points 3 --format dat --out "
                     + out,
                 out);
    CHECK(r.exit_code == 0);
    CHECK(r.output.rfind("# r value bessel_target\n", 0) == 0);
}

TEST_CASE("reconstruct emits the overlay columns")
{
    auto out = tmp("rec.csv");
    auto r = run("reconstruct --d 3 --kappa 1 --rmin 0.5 --rmax 2 --points 4 --terms 500 "
                 "--summation cesaro --out "
                     + out,
                 out);
    CHECK(r.exit_code == 0);
    std::istringstream is(r.output);
    std::string header;
    std::getline(is, header);
    CHECK(header == "r,value,bessel_target");
    std::string line;
    while (std::getline(is, line)) {
        std::istringstream row(line);
        std::string r_s, v_s, b_s;
        std::getline(row, r_s, ',');
        std::getline(row, v_s, ',');
        std::getline(row, b_s, ',');
        CHECK(std::stod(v_s) / std::stod(b_s) == doctest::Approx(0.5).epsilon(5e-3));
    }
}

TEST_CASE("scaling fit report via --fit-range")
{
    auto out = tmp("fit.json");
    auto r = run("scaling --d 3 --fit-range 1 40 --format json --out " + out, out);
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["gamma1"].get<double>() == doctest::Approx(3.14159265358979).epsilon(1e-9));
    CHECK(j["n_max"] == 40);
}

TEST_CASE("errors exit nonzero with a one-line message")
{
    std::string cmd = binary_path() + " scaling --d 3 --fit-range 1 5 2>cli_test_err.txt >/dev/null";
    int rc = std::system(cmd.c_str());
    CHECK(rc != 0);
    std::ifstream f("cli_test_err.txt");
    std::string line;
    std::getline(f, line);
    CHECK(line.rfind("error: ", 0) == 0);
}

TEST_CASE("vector convention flag changes the basis")
{
    auto paper = tmp("vp.csv");
    auto strict = tmp("vs.csv");
    auto rp = run("spectrum --d 3 --sector vector --nb 4 --levels 3 --out " + paper, paper);
    auto rs = run("spectrum --d 3 --sector vector --nb 4 --levels 3 "
                  "--vector-cutoff-convention strict --out "
                      + strict,
                  strict);
    CHECK(rp.exit_code == 0);
    CHECK(rs.exit_code == 0);
    CHECK(rp.output != rs.output);
}
