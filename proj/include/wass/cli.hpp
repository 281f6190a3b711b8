#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wass/distribution.hpp"

namespace wass::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitValidation = 2,
  kExitSolver = 3,
  kExitIo = 4,
};

/// Unreadable or malformed input file, or unwritable output.
class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Reads comma-separated reals, one observation per row. A file whose rows
/// all have a single column is returned flat; otherwise as a matrix.
/// Blank lines are ignored. Throws IoError on ragged rows or bad numbers.
ValueArray read_points_csv(const std::filesystem::path& path, bool skip_header = false);

/// One real per row.
std::vector<double> read_weights_csv(const std::filesystem::path& path, bool skip_header = false);

struct ComputeArgs {
  std::filesystem::path u;
  std::filesystem::path v;
  std::optional<std::filesystem::path> u_weights;
  std::optional<std::filesystem::path> v_weights;
  std::optional<std::filesystem::path> plan;
  std::string format = "json";
  bool header = false;
};

int compute_command(const ComputeArgs& args, std::ostream& out, std::ostream& err);

struct BenchArgs {
  int min_exp = 0;
  int max_exp = 9;
  std::size_t repeats = 100;
  std::size_t dim = 2;
  std::uint64_t seed = 12345;
  std::filesystem::path out = "bench.csv";
  std::optional<std::filesystem::path> summary;
};

struct BenchRecord {
  std::size_t n;
  std::size_t trial;
  std::int64_t wall_time_ns;
  double distance;
};

struct BenchSummary {
  std::size_t n;
  double mean_wall_time_ns;
  double log_mean;     // ln(mean_wall_time_ns)
  double paper_scaled; // mean over trials of ln(t_ns - 1)
};

/// Times one solve per trial for n = 2^min_exp .. 2^max_exp points per side,
/// coordinates uniform in [0, 1)^dim from a seeded mt19937_64.
std::vector<BenchRecord> run_bench(const BenchArgs& args);

std::vector<BenchSummary> summarize(const std::vector<BenchRecord>& records);

void write_bench_csv(std::ostream& os, const std::vector<BenchRecord>& records);
void write_summary_csv(std::ostream& os, const std::vector<BenchSummary>& rows);

/// Summary path used when --summary is not given: bench.csv -> bench_summary.csv.
std::filesystem::path default_summary_path(const std::filesystem::path& out);

int bench_command(const BenchArgs& args, std::ostream& out, std::ostream& err);

/// Full command line, without the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Shortest round-trip decimal, or "inf" / "-inf" / "nan".
std::string format_real(double x);

} // namespace wass::cli
