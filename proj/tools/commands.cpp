#include "commands.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "sgl/indexing.hpp"
#include "sgl/parallel.hpp"
#include "sgl/precompute_store.hpp"

namespace sgl::cli {

namespace fs = std::filesystem;

std::string to_csv_line(const BenchRecord& r) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%d,%s,%d,%.17g,%.17g,%.17g", r.bandlimit, r.variant.c_str(),
                  r.repetitions, r.mean_time_s, r.mean_max_abs_err, r.mean_max_rel_err);
    return buf;
}

BenchRecord from_csv_line(const std::string& line) {
    BenchRecord r;
    std::istringstream ss(line);
    std::string field;
    std::getline(ss, field, ',');
    r.bandlimit = std::stoi(field);
    std::getline(ss, r.variant, ',');
    std::getline(ss, field, ',');
    r.repetitions = std::stoi(field);
    std::getline(ss, field, ',');
    r.mean_time_s = std::stod(field);
    std::getline(ss, field, ',');
    r.mean_max_abs_err = std::stod(field);
    std::getline(ss, field, ',');
    r.mean_max_rel_err = std::stod(field);
    return r;
}

void append_csv(const fs::path& path, const std::vector<BenchRecord>& records) {
    const bool fresh = !fs::exists(path) || fs::file_size(path) == 0;
    std::ofstream out(path, std::ios::app);
    if (!out) {
        throw std::runtime_error("cannot open CSV for writing: " + path.string());
    }
    if (fresh) {
        out << kCsvHeader << "\n";
    }
    for (const auto& r : records) {
        out << to_csv_line(r) << "\n";
    }
}

std::vector<BenchRecord> read_csv(const fs::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open CSV for reading: " + path.string());
    }
    std::vector<BenchRecord> records;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line == kCsvHeader) {
            continue;
        }
        records.push_back(from_csv_line(line));
    }
    return records;
}

SglCoefficients CoefficientStream::next(int bandlimit) {
    SglCoefficients c;
    c.bandlimit = bandlimit;
    c.values.resize(coefficient_count(bandlimit));
    constexpr double kScale = 1.0 / 9007199254740992.0;  // 2^-53
    const auto draw = [&] {
        const std::uint64_t x = engine_();
        return 2.0 * (static_cast<double>(x >> 11) * kScale) - 1.0;
    };
    for (auto& v : c.values) {
        const double re = draw();
        const double im = draw();
        v = {re, im};
    }
    return c;
}

TransformPlan acquire_plan(int B, const PlanOptions& options, std::ostream& diag) {
    std::string dir = options.tables_dir;
    if (dir.empty()) {
        if (const char* env = std::getenv("SGL_TABLES")) {
            dir = env;
        }
    }
    if (!dir.empty()) {
        try {
            return TransformPlan::from_tables(dir, B);
        } catch (const std::exception& e) {
            if (!options.allow_generate) {
                throw std::runtime_error(std::string("failed to load tables: ") + e.what());
            }
            diag << "warning: " << e.what() << "\n";
        }
    } else if (!options.allow_generate) {
        throw std::runtime_error(
            "no tables directory given; pass --tables DIR (or set SGL_TABLES), or opt into "
            "on-the-fly generation with --allow-generate");
    }
    diag << "warning: generating tables for B = " << B
         << " on the fly; this is slow for large bandlimits\n";
    return TransformPlan::compute(B);
}

bool should_warn_slow(const std::string& variant, int B) {
    return variant == "naive" && B >= 32;
}

namespace {

SglCoefficients forward_of(const std::string& variant, const SampleGrid& grid,
                           const TransformPlan& plan, unsigned threads) {
    if (variant == "naive") {
        return dsglft_naive(grid, plan, threads);
    }
    if (variant == "separated") {
        return dsglft_separated(grid, plan, threads);
    }
    if (variant == "fast") {
        return fsglft(grid, plan, threads);
    }
    throw std::runtime_error("unknown variant: " + variant);
}

SampleGrid inverse_of(const std::string& variant, const SglCoefficients& coeffs,
                      const TransformPlan& plan, unsigned threads) {
    if (variant == "naive") {
        return idsglft_naive(coeffs, plan, threads);
    }
    if (variant == "separated") {
        return idsglft_separated(coeffs, plan, threads);
    }
    if (variant == "fast") {
        return ifsglft(coeffs, plan, threads);
    }
    throw std::runtime_error("unknown variant: " + variant);
}

}  // namespace

BenchRecord run_roundtrip(const TransformPlan& plan, const RoundtripOptions& options) {
    if (options.repetitions < 1) {
        throw std::runtime_error("repetitions must be at least 1");
    }
    CoefficientStream stream(options.seed);
    BenchRecord record;
    record.bandlimit = plan.bandlimit;
    record.variant = options.variant;
    record.repetitions = options.repetitions;
    double time_sum = 0.0, abs_sum = 0.0, rel_sum = 0.0;
    for (int rep = 0; rep < options.repetitions; ++rep) {
        const auto coeffs = stream.next(plan.bandlimit);
        const auto t0 = std::chrono::steady_clock::now();
        const auto grid = inverse_of(options.variant, coeffs, plan, options.threads);
        const auto back = forward_of(options.variant, grid, plan, options.threads);
        const auto t1 = std::chrono::steady_clock::now();
        const auto err = roundtrip_error(coeffs.values, back.values);
        time_sum += std::chrono::duration<double>(t1 - t0).count();
        abs_sum += err.max_abs;
        rel_sum += err.max_rel;
    }
    record.mean_time_s = time_sum / options.repetitions;
    record.mean_max_abs_err = abs_sum / options.repetitions;
    record.mean_max_rel_err = rel_sum / options.repetitions;
    return record;
}

void print_table_header(std::ostream& out) {
    char buf[128];
    std::snprintf(buf, sizeof(buf), "%4s  %-9s  %4s  %12s  %13s  %13s", "B", "variant", "reps",
                  "mean_time_s", "mean_max_abs", "mean_max_rel");
    out << buf << "\n";
}

void print_record(std::ostream& out, const BenchRecord& r) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%4d  %-9s  %4d  %12.6f  %13.6e  %13.6e", r.bandlimit,
                  r.variant.c_str(), r.repetitions, r.mean_time_s, r.mean_max_abs_err,
                  r.mean_max_rel_err);
    out << buf << "\n";
}

cvector read_complex_vector(const fs::path& path, std::size_t expected) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open input vector: " + path.string());
    }
    in.seekg(0, std::ios::end);
    const auto bytes = static_cast<std::size_t>(in.tellg());
    in.seekg(0, std::ios::beg);
    const std::size_t expected_bytes = expected * 2 * sizeof(double);
    if (bytes != expected_bytes) {
        throw std::runtime_error("input vector " + path.string() + " holds " +
                                 std::to_string(bytes / (2 * sizeof(double))) +
                                 " complex values, expected " + std::to_string(expected));
    }
    cvector values(expected);
    in.read(reinterpret_cast<char*>(values.data()), static_cast<std::streamsize>(expected_bytes));
    if (!in) {
        throw std::runtime_error("read failed: " + path.string());
    }
    return values;
}

void write_complex_vector(const fs::path& path, const cvector& values) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot open output vector: " + path.string());
    }
    out.write(reinterpret_cast<const char*>(values.data()),
              static_cast<std::streamsize>(values.size() * 2 * sizeof(double)));
    if (!out) {
        throw std::runtime_error("write failed: " + path.string());
    }
}

int run_precompute(int B, const fs::path& out_dir, std::ostream& out, std::ostream& err) {
    try {
        const auto files = store::precompute_all(B, out_dir);
        for (const auto& f : files) {
            out << "wrote " << f.string() << "\n";
        }
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int run_roundtrip_command(const RoundtripOptions& options, const PlanOptions& plan_options,
                          const std::optional<fs::path>& csv, std::ostream& out,
                          std::ostream& err) {
    try {
        if (should_warn_slow(options.variant, options.bandlimit)) {
            err << "warning: the naive transform at B = " << options.bandlimit
                << " takes a long time\n";
        }
        const auto plan = acquire_plan(options.bandlimit, plan_options, err);
        const auto record = run_roundtrip(plan, options);
        const unsigned threads =
            options.threads == 0 ? default_thread_count() : options.threads;
        out << "# threads: " << threads << ", seed: " << options.seed << "\n";
        print_table_header(out);
        print_record(out, record);
        if (csv) {
            append_csv(*csv, {record});
        }
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int run_bench_command(const std::vector<int>& bandlimits, const std::vector<std::string>& variants,
                      int repetitions, std::uint64_t seed, unsigned threads,
                      const PlanOptions& plan_options, const std::optional<fs::path>& csv,
                      std::ostream& out, std::ostream& err) {
    try {
        std::vector<BenchRecord> records;
        const unsigned effective = threads == 0 ? default_thread_count() : threads;
        out << "# threads: " << effective << ", seed: " << seed << "\n";
        print_table_header(out);
        for (int B : bandlimits) {
            const auto plan = acquire_plan(B, plan_options, err);
            for (const auto& variant : variants) {
                if (should_warn_slow(variant, B)) {
                    err << "warning: the naive transform at B = " << B << " takes a long time\n";
                }
                RoundtripOptions options;
                options.bandlimit = B;
                options.variant = variant;
                options.repetitions = repetitions;
                options.seed = seed;
                options.threads = threads;
                records.push_back(run_roundtrip(plan, options));
                print_record(out, records.back());
            }
        }
        if (csv) {
            append_csv(*csv, records);
        }
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int run_transform_command(const std::string& direction, int B, const std::string& variant,
                          unsigned threads, const TransformFiles& files,
                          const PlanOptions& plan_options, std::ostream& err) {
    try {
        const auto plan = acquire_plan(B, plan_options, err);
        if (direction == "fwd") {
            SampleGrid grid;
            grid.bandlimit = B;
            grid.values = read_complex_vector(files.input, sample_count(B));
            const auto coeffs = forward_of(variant, grid, plan, threads);
            write_complex_vector(files.output, coeffs.values);
        } else if (direction == "inv") {
            SglCoefficients coeffs;
            coeffs.bandlimit = B;
            coeffs.values = read_complex_vector(files.input, coefficient_count(B));
            const auto grid = inverse_of(variant, coeffs, plan, threads);
            write_complex_vector(files.output, grid.values);
        } else {
            throw std::runtime_error("unknown direction: " + direction);
        }
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace sgl::cli
