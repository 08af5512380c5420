#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "commands.hpp"

using namespace sgl::cli;

int main(int argc, char** argv) {
    CLI::App app{"Spherical Gauss-Laguerre Fourier transforms"};
    app.require_subcommand(1);

    // precompute
    auto* precompute = app.add_subcommand("precompute", "Generate and persist transform tables");
    int pre_B = 0;
    std::string pre_out;
    precompute->add_option("--bandlimit", pre_B, "Bandlimit B")->required();
    precompute->add_option("--out", pre_out, "Output directory")->required();

    // shared transform options
    const auto add_plan_options = [](CLI::App* cmd, PlanOptions& plan_options) {
        cmd->add_option("--tables", plan_options.tables_dir,
                        "Directory with precomputed tables (fallback: SGL_TABLES)");
        cmd->add_flag("--allow-generate", plan_options.allow_generate,
                      "Generate missing tables on the fly (slow for large B)");
    };

    // roundtrip
    auto* roundtrip =
        app.add_subcommand("roundtrip", "Inverse+forward roundtrip on random coefficients");
    RoundtripOptions rt;
    PlanOptions rt_plan;
    std::string rt_csv;
    roundtrip->add_option("--bandlimit", rt.bandlimit, "Bandlimit B")->required();
    roundtrip->add_option("--variant", rt.variant, "naive | separated | fast")
        ->check(CLI::IsMember({"naive", "separated", "fast"}));
    roundtrip->add_option("--repetitions", rt.repetitions, "Number of repetitions (default 10)");
    roundtrip->add_option("--seed", rt.seed, "PRNG seed (mt19937_64)");
    roundtrip->add_option("--threads", rt.threads, "Worker threads (0 = all cores)");
    roundtrip->add_option("--csv", rt_csv, "Append the result row to this CSV file");
    add_plan_options(roundtrip, rt_plan);

    // bench
    auto* bench = app.add_subcommand("bench", "Roundtrip benchmark over bandlimits and variants");
    std::vector<int> bench_B{2, 4, 8, 16, 32};
    std::vector<std::string> bench_variants{"fast"};
    int bench_reps = 10;
    std::uint64_t bench_seed = 0;
    unsigned bench_threads = 0;
    std::string bench_csv;
    PlanOptions bench_plan;
    bench->add_option("--bandlimits", bench_B, "Bandlimits to run")->delimiter(',');
    bench->add_option("--variants", bench_variants, "Variants to run")
        ->delimiter(',')
        ->check(CLI::IsMember({"naive", "separated", "fast"}));
    bench->add_option("--repetitions", bench_reps, "Repetitions per (B, variant)");
    bench->add_option("--seed", bench_seed, "PRNG seed (mt19937_64)");
    bench->add_option("--threads", bench_threads, "Worker threads (0 = all cores)");
    bench->add_option("--csv", bench_csv, "Append result rows to this CSV file");
    add_plan_options(bench, bench_plan);

    // transform
    auto* transform = app.add_subcommand("transform", "Transform a raw complex vector file");
    std::string tr_direction, tr_variant = "fast", tr_in, tr_out;
    int tr_B = 0;
    unsigned tr_threads = 0;
    PlanOptions tr_plan;
    transform->add_option("--direction", tr_direction, "fwd | inv")
        ->required()
        ->check(CLI::IsMember({"fwd", "inv"}));
    transform->add_option("--bandlimit", tr_B, "Bandlimit B")->required();
    transform->add_option("--in", tr_in, "Input vector file (interleaved re/im f64 LE)")
        ->required();
    transform->add_option("--out", tr_out, "Output vector file")->required();
    transform->add_option("--variant", tr_variant, "naive | separated | fast")
        ->check(CLI::IsMember({"naive", "separated", "fast"}));
    transform->add_option("--threads", tr_threads, "Worker threads (0 = all cores)");
    add_plan_options(transform, tr_plan);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // 0
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        std::cerr << "run with --help for usage\n";
        return 2;
    }

    if (precompute->parsed()) {
        return run_precompute(pre_B, pre_out, std::cout, std::cerr);
    }
    if (roundtrip->parsed()) {
        std::optional<std::filesystem::path> csv;
        if (!rt_csv.empty()) {
            csv = rt_csv;
        }
        return run_roundtrip_command(rt, rt_plan, csv, std::cout, std::cerr);
    }
    if (bench->parsed()) {
        std::optional<std::filesystem::path> csv;
        if (!bench_csv.empty()) {
            csv = bench_csv;
        }
        return run_bench_command(bench_B, bench_variants, bench_reps, bench_seed, bench_threads,
                                 bench_plan, csv, std::cout, std::cerr);
    }
    if (transform->parsed()) {
        return run_transform_command(tr_direction, tr_B, tr_variant, tr_threads,
                                     {tr_in, tr_out}, tr_plan, std::cerr);
    }
    return 2;
}
