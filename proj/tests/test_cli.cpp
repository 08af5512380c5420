#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "commands.hpp"
#include "sgl/indexing.hpp"

using namespace sgl;
using namespace sgl::cli;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir(const std::string& tag) {
    const auto dir = fs::temp_directory_path() / ("sglfft_cli_" + tag);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

int run(const std::string& args) {
    const std::string cmd = std::string(SGLFFT_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

int run_capture(const std::string& args, std::string& output) {
    const auto tmp = fs::temp_directory_path() / "sglfft_cli_capture.txt";
    const std::string cmd =
        std::string(SGLFFT_CLI_PATH) + " " + args + " >" + tmp.string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    std::ifstream in(tmp);
    std::stringstream ss;
    ss << in.rdbuf();
    output = ss.str();
    return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("csv records roundtrip through format and parse") {
    BenchRecord r;
    r.bandlimit = 8;
    r.variant = "fast";
    r.repetitions = 10;
    r.mean_time_s = 0.012345678901234567;
    r.mean_max_abs_err = 3.3e-12;
    r.mean_max_rel_err = 7.7e-11;
    const auto line = to_csv_line(r);
    const auto back = from_csv_line(line);
    CHECK(back.bandlimit == r.bandlimit);
    CHECK(back.variant == r.variant);
    CHECK(back.repetitions == r.repetitions);
    CHECK(back.mean_time_s == r.mean_time_s);
    CHECK(back.mean_max_abs_err == r.mean_max_abs_err);
    CHECK(back.mean_max_rel_err == r.mean_max_rel_err);

    const auto dir = temp_dir("csv");
    append_csv(dir / "out.csv", {r, r});
    append_csv(dir / "out.csv", {r});
    const auto records = read_csv(dir / "out.csv");
    REQUIRE(records.size() == 3);
    for (const auto& rec : records) {
        CHECK(rec.mean_time_s == r.mean_time_s);
    }
    fs::remove_all(dir);
}

TEST_CASE("coefficient stream is deterministic and in range") {
    CoefficientStream a(1234), b(1234), c(99);
    const auto ca = a.next(4), cb = b.next(4), cc = c.next(4);
    REQUIRE(ca.values.size() == coefficient_count(4));
    for (std::size_t i = 0; i < ca.values.size(); ++i) {
        CHECK(ca.values[i] == cb.values[i]);
        CHECK(ca.values[i].real() >= -1.0);
        CHECK(ca.values[i].real() < 1.0);
        CHECK(ca.values[i].imag() >= -1.0);
        CHECK(ca.values[i].imag() < 1.0);
    }
    bool any_different = false;
    for (std::size_t i = 0; i < ca.values.size(); ++i) {
        any_different = any_different || (ca.values[i] != cc.values[i]);
    }
    CHECK(any_different);
}

TEST_CASE("slow-variant warning predicate") {
    CHECK(should_warn_slow("naive", 32));
    CHECK(should_warn_slow("naive", 64));
    CHECK(!should_warn_slow("naive", 16));
    CHECK(!should_warn_slow("fast", 64));
    CHECK(!should_warn_slow("separated", 32));
}

TEST_CASE("precompute command writes tables and reports usage errors") {
    const auto dir = temp_dir("precompute");
    CHECK(run("precompute --bandlimit 2 --out " + (dir / "t").string()) == 0);
    CHECK(fs::exists(dir / "t" / "manifest.txt"));
    CHECK(run("precompute --out " + dir.string()) == 2);       // missing --bandlimit
    CHECK(run("precompute --bandlimit 2") == 2);               // missing --out
    CHECK(run("precompute --bandlimit 0 --out " + (dir / "bad").string()) == 1);
    fs::remove_all(dir);
}

TEST_CASE("precompute into an unwritable path fails with exit 1") {
    // a path component that is a regular file cannot be created as a
    // directory, regardless of privileges
    const auto dir = temp_dir("unwritable");
    std::ofstream(dir / "blocker") << "x";
    const int code = run("precompute --bandlimit 2 --out " + (dir / "blocker" / "x").string());
    CHECK(code == 1);
    fs::remove_all(dir);
}

TEST_CASE("roundtrip command: determinism, csv, table fallback") {
    const auto dir = temp_dir("roundtrip");
    const auto tables = (dir / "tables").string();
    REQUIRE(run("precompute --bandlimit 4 --out " + tables) == 0);

    std::string out1, out2;
    const std::string args = "roundtrip --bandlimit 4 --variant fast --repetitions 3 --seed 7 "
                             "--tables " + tables + " --csv " + (dir / "r.csv").string();
    CHECK(run_capture(args, out1) == 0);
    CHECK(run_capture(args, out2) == 0);

    const auto records = read_csv(dir / "r.csv");
    REQUIRE(records.size() == 2);
    // identical error columns for identical seeds; timings may differ
    CHECK(records[0].mean_max_abs_err == records[1].mean_max_abs_err);
    CHECK(records[0].mean_max_rel_err == records[1].mean_max_rel_err);
    CHECK(records[0].mean_max_abs_err < 1e-10);

    // no tables and no --allow-generate: runtime error
    CHECK(run("roundtrip --bandlimit 2 --repetitions 1 --tables " + (dir / "nope").string()) == 1);
    // --allow-generate falls back to on-the-fly generation
    CHECK(run("roundtrip --bandlimit 2 --repetitions 1 --allow-generate --seed 1") == 0);
    // unknown variant is a usage error
    CHECK(run("roundtrip --bandlimit 2 --variant magic --allow-generate") == 2);
    fs::remove_all(dir);
}

TEST_CASE("bench command emits one csv row per (B, variant)") {
    const auto dir = temp_dir("bench");
    const std::string csv = (dir / "bench.csv").string();
    const int code = run("bench --bandlimits 2,4 --variants fast,separated --repetitions 2 "
                         "--seed 3 --allow-generate --csv " + csv);
    CHECK(code == 0);
    const auto records = read_csv(csv);
    REQUIRE(records.size() == 4);
    CHECK(records[0].bandlimit == 2);
    CHECK(records[0].variant == "fast");
    CHECK(records[1].variant == "separated");
    CHECK(records[2].bandlimit == 4);
    for (const auto& r : records) {
        CHECK(r.repetitions == 2);
        CHECK(r.mean_max_abs_err < 1e-9);
        CHECK(r.mean_max_rel_err >= 0.0);
    }
    fs::remove_all(dir);
}

TEST_CASE("transform command roundtrips a vector file") {
    const auto dir = temp_dir("transform");
    const auto tables = (dir / "tables").string();
    REQUIRE(run("precompute --bandlimit 2 --out " + tables) == 0);
    const int B = 2;

    // random coefficients -> file
    CoefficientStream stream(11);
    const auto coeffs = stream.next(B);
    write_complex_vector(dir / "c.bin", coeffs.values);

    CHECK(run("transform --direction inv --bandlimit 2 --in " + (dir / "c.bin").string() +
              " --out " + (dir / "g.bin").string() + " --tables " + tables) == 0);
    CHECK(run("transform --direction fwd --bandlimit 2 --in " + (dir / "g.bin").string() +
              " --out " + (dir / "c2.bin").string() + " --tables " + tables) == 0);

    const auto back = read_complex_vector(dir / "c2.bin", coefficient_count(B));
    const auto err = roundtrip_error(coeffs.values, back);
    CHECK(err.max_abs < 1e-10);

    // zero vector in -> zero vector out
    cvector zeros(sample_count(B), cplx(0.0));
    write_complex_vector(dir / "z.bin", zeros);
    CHECK(run("transform --direction fwd --bandlimit 2 --in " + (dir / "z.bin").string() +
              " --out " + (dir / "zc.bin").string() + " --tables " + tables) == 0);
    const auto zc = read_complex_vector(dir / "zc.bin", coefficient_count(B));
    for (const auto& v : zc) {
        CHECK(std::abs(v) == 0.0);
    }

    // wrong input length: error message names the expected count
    std::string output;
    const int code = run_capture("transform --direction fwd --bandlimit 2 --in " +
                                     (dir / "c.bin").string() + " --out " +
                                     (dir / "x.bin").string() + " --tables " + tables,
                                 output);
    CHECK(code == 1);
    CHECK(output.find(std::to_string(sample_count(B))) != std::string::npos);

    // bad direction is a usage error
    CHECK(run("transform --direction sideways --bandlimit 2 --in a --out b") == 2);
    fs::remove_all(dir);
}

TEST_CASE("SGL_TABLES environment fallback") {
    const auto dir = temp_dir("env");
    REQUIRE(run("precompute --bandlimit 2 --out " + dir.string()) == 0);
    const std::string cmd = "SGL_TABLES=" + dir.string() + " " + std::string(SGLFFT_CLI_PATH) +
                            " roundtrip --bandlimit 2 --repetitions 1 --seed 5 >/dev/null 2>&1";
    CHECK(WEXITSTATUS(std::system(cmd.c_str())) == 0);
    fs::remove_all(dir);
}

TEST_CASE("roundtrip_error skips exact zeros in the relative column") {
    PlanOptions opts;
    opts.allow_generate = true;
    std::ostringstream diag;
    const auto plan = acquire_plan(2, opts, diag);
    RoundtripOptions rt;
    rt.bandlimit = 2;
    rt.variant = "fast";
    rt.repetitions = 1;
    rt.seed = 100;
    const auto record = run_roundtrip(plan, rt);
    CHECK(record.mean_max_abs_err >= 0.0);
    CHECK(record.mean_max_rel_err >= 0.0);
}
