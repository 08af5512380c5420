#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sgl/sgl_transform.hpp"

namespace sgl::cli {

/// One benchmark line: mean wall time of one inverse plus one forward
/// transform and the mean roundtrip error maxima over the repetitions.
struct BenchRecord {
    int bandlimit = 0;
    std::string variant;  // naive | separated | fast
    int repetitions = 0;
    double mean_time_s = 0.0;
    double mean_max_abs_err = 0.0;
    double mean_max_rel_err = 0.0;
};

inline constexpr const char* kCsvHeader =
    "B,variant,reps,mean_time_s,mean_max_abs_err,mean_max_rel_err";

std::string to_csv_line(const BenchRecord& record);
BenchRecord from_csv_line(const std::string& line);
void append_csv(const std::filesystem::path& path, const std::vector<BenchRecord>& records);
std::vector<BenchRecord> read_csv(const std::filesystem::path& path);

/// Coefficient stream used by the benchmark protocol: real and imaginary
/// parts uniform in [-1, 1), drawn from a mt19937_64 engine seeded once.
/// Each draw consumes one raw engine output x and maps its top 53 bits to
/// 2 * ((x >> 11) * 2^-53) - 1, so the stream is identical on every
/// conforming platform. Coefficients are filled in omega-order, real part
/// first.
class CoefficientStream {
  public:
    explicit CoefficientStream(std::uint64_t seed) : engine_(seed) {}

    SglCoefficients next(int bandlimit);

  private:
    std::mt19937_64 engine_;
};

struct PlanOptions {
    std::string tables_dir;   // empty: consult SGL_TABLES, then on-the-fly
    bool allow_generate = false;
};

/// Loads the plan from persisted tables, falling back to on-the-fly
/// generation (with a warning on diag) when allowed.
TransformPlan acquire_plan(int B, const PlanOptions& options, std::ostream& diag);

/// True when the requested variant is expected to run for a long time and a
/// heads-up should be printed before starting.
bool should_warn_slow(const std::string& variant, int B);

struct RoundtripOptions {
    int bandlimit = 0;
    std::string variant = "fast";
    int repetitions = 10;
    std::uint64_t seed = 0;
    unsigned threads = 0;  // 0: all cores
};

/// Runs the roundtrip protocol: draw random coefficients, inverse transform,
/// forward transform, measure wall time and errors; repeat.
BenchRecord run_roundtrip(const TransformPlan& plan, const RoundtripOptions& options);

void print_table_header(std::ostream& out);
void print_record(std::ostream& out, const BenchRecord& record);

struct TransformFiles {
    std::filesystem::path input;
    std::filesystem::path output;
};

/// Raw complex vector I/O: interleaved re/im 64-bit little-endian floats,
/// no header. Throws std::runtime_error naming the expected element count
/// when the file length disagrees.
cvector read_complex_vector(const std::filesystem::path& path, std::size_t expected);
void write_complex_vector(const std::filesystem::path& path, const cvector& values);

int run_precompute(int B, const std::filesystem::path& out_dir, std::ostream& out,
                   std::ostream& err);
int run_roundtrip_command(const RoundtripOptions& options, const PlanOptions& plan_options,
                          const std::optional<std::filesystem::path>& csv, std::ostream& out,
                          std::ostream& err);
int run_bench_command(const std::vector<int>& bandlimits, const std::vector<std::string>& variants,
                      int repetitions, std::uint64_t seed, unsigned threads,
                      const PlanOptions& plan_options,
                      const std::optional<std::filesystem::path>& csv, std::ostream& out,
                      std::ostream& err);
int run_transform_command(const std::string& direction, int B, const std::string& variant,
                          unsigned threads, const TransformFiles& files,
                          const PlanOptions& plan_options, std::ostream& err);

}  // namespace sgl::cli
