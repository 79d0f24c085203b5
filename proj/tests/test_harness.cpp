#include "doctest.h"

#include <algorithm>
#include <sstream>

#include "rcl/colouring.hpp"
#include "rcl/error.hpp"
#include "rcl/harness.hpp"

using namespace rcl;

TEST_CASE("config parsing") {
    ExperimentConfig c = parse_config(
        "# comment\n"
        "n = 8, 10\n"
        "p = 0.3, 0.5\n"
        "offsets = 0, 4\n"
        "strategies = clique, random\n"
        "seeds = 3\n"
        "seed = 99\n"
        "budget = 1000000\n"
        "jobs = 2\n"
        "timing = off\n"
        "eps = 0.05\n");
    CHECK(c.n_values == std::vector<int>{8, 10});
    CHECK(c.p_values == std::vector<double>{0.3, 0.5});
    CHECK(c.offsets == std::vector<double>{0, 4});
    CHECK(c.strategies == std::vector<std::string>{"clique", "random"});
    CHECK(c.seeds == 3);
    CHECK(c.base_seed == 99);
    CHECK(c.budget == 1000000);
    CHECK(c.jobs == 2);
    CHECK_FALSE(c.timing);
    CHECK(c.eps == doctest::Approx(0.05));

    CHECK_THROWS_AS(parse_config("nonsense line without equals\n"), Error);
    CHECK_THROWS_AS(parse_config("unknown_key = 1\n"), Error);
    CHECK_THROWS_AS(parse_config("p = 1.5\n"), Error);
    CHECK_THROWS_AS(parse_config("strategies = flying-circus\n"), Error);
    CHECK_THROWS_AS(parse_config("seeds = -2\n"), Error);
    CHECK_THROWS_AS(parse_config("timing = maybe\n"), Error);
}

TEST_CASE("csv schema") {
    CHECK(csv_header() == "n,p,N,seed,strategy,mono_red,mono_blue,method,elapsed_ms");
    ExperimentRecord r;
    r.n = 8;
    r.p = 0.5;
    r.N = 13;
    r.seed = 7;
    r.strategy = "random";
    r.mono_red = true;
    r.method = "exact";
    r.elapsed_ms = 12;
    CHECK(csv_row(r) == "8,0.5,13,7,random,1,0,exact,12");
}

TEST_CASE("verify-lb smoke") {
    std::ostringstream rep;
    int rc = cmd_verify_lower_bound(5, 6, rep);
    CHECK(rc == 0);
    std::string out = rep.str();
    CHECK(out.find("n=5") != std::string::npos);
    CHECK(out.find("n=6") != std::string::npos);
    CHECK(out.find("fail") == std::string::npos);
    // out-of-range endpoints are reported, not silently run
    std::ostringstream rep2;
    CHECK(cmd_verify_lower_bound(4, 4, rep2) == 0);
    CHECK(rep2.str().find("skip") != std::string::npos);
}

TEST_CASE("sweep determinism with timing off") {
    ExperimentConfig c = parse_config(
        "n = 8\n"
        "p = 0.5\n"
        "offsets = 0, 2\n"
        "strategies = random\n"
        "seeds = 3\n"
        "timing = off\n");
    std::ostringstream csv1, csv2, log;
    CHECK(cmd_threshold_sweep(c, csv1, log) == 0);
    CHECK(cmd_threshold_sweep(c, csv2, log) == 0);
    CHECK(csv1.str() == csv2.str());
    // header plus 2 offsets * 3 seeds rows
    int lines = 0;
    for (char ch : csv1.str())
        if (ch == '\n') ++lines;
    CHECK(lines == 1 + 2 * 3);
    // jobs must not change the byte output
    c.jobs = 4;
    std::ostringstream csv3;
    CHECK(cmd_threshold_sweep(c, csv3, log) == 0);
    CHECK(csv3.str() == csv1.str());
}

TEST_CASE("booster stats smoke") {
    std::ostringstream csv, log;
    int rc = cmd_booster_stats(10, 0.4, 2, csv, log);
    CHECK(rc == 0);
    std::string text = csv.str();
    CHECK(text.find("seed") != std::string::npos);
    CHECK(std::count(text.begin(), text.end(), '\n') >= 3);
}

TEST_CASE("spectrum smoke") {
    std::ostringstream rep;
    int rc = cmd_cycle_spectrum(40, 0.4, 5, 10'000'000, rep);
    CHECK(rc == 0);
    CHECK(rep.str().find("ell") != std::string::npos);
}

TEST_CASE("plot generation") {
    std::string csv =
        "n,p,N,seed,strategy,mono_red,mono_blue,method,elapsed_ms\n"
        "8,0.5,11,1,random,1,0,exact,0\n"
        "8,0.5,11,2,random,0,0,exact,0\n"
        "8,0.5,15,1,random,1,1,exact,0\n"
        "8,0.5,15,2,random,1,0,exact,0\n";
    std::ostringstream svg1, svg2;
    emit_svg_plot(csv, svg1);
    emit_svg_plot(csv, svg2);
    CHECK(svg1.str() == svg2.str());
    CHECK(svg1.str().find("<svg") != std::string::npos);
    CHECK(svg1.str().find("polyline") != std::string::npos);
    CHECK(svg1.str().find("random") != std::string::npos);

    // empty data: axes-only document, still valid SVG
    std::ostringstream empty;
    emit_svg_plot("n,p,N,seed,strategy,mono_red,mono_blue,method,elapsed_ms\n", empty);
    CHECK(empty.str().find("<svg") != std::string::npos);
    CHECK(empty.str().find("polyline") == std::string::npos);

    // header mismatch is a parse error
    std::ostringstream bad;
    CHECK_THROWS_AS(emit_svg_plot("a,b,c\n1,2,3\n", bad), Error);
    CHECK_THROWS_AS(emit_svg_plot(csv_header() + "\n8,0.5,11,1,random\n", bad), Error);
}

TEST_CASE("sweep detects planted monochromatic cycles") {
    // all-red colouring of a clique always contains C_n; random never misses it
    ExperimentConfig c = parse_config(
        "n = 6\n"
        "p = 0.5\n"
        "offsets = 8\n"
        "strategies = random\n"
        "seeds = 4\n"
        "timing = off\n");
    std::ostringstream csv, log;
    CHECK(cmd_threshold_sweep(c, csv, log) == 0);
    std::istringstream in(csv.str());
    std::string line;
    std::getline(in, line);  // header
    int rows = 0, mono = 0;
    while (std::getline(in, line)) {
        ++rows;
        // columns 6,7 are mono_red, mono_blue
        std::vector<std::string> cols;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) cols.push_back(cell);
        REQUIRE(cols.size() == 9);
        if (cols[5] == "1" || cols[6] == "1") ++mono;
    }
    CHECK(rows == 4);
    CHECK(mono == 4);  // N = R + 16 >> R: every 2-colouring has a mono C_6
}
