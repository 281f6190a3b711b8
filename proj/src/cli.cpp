#include "wass/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string_view>

#include <CLI11.hpp>
#include <json.hpp>

#include "wass/error.hpp"
#include "wass/wasserstein.hpp"

namespace wass::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_real(std::string_view field, const std::filesystem::path& path, std::size_t line) {
  field = trim(field);
  if (!field.empty() && field.front() == '+') {
    field.remove_prefix(1);
  }
  double value = 0.0;
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (field.empty() || ec != std::errc() || ptr != end) {
    throw IoError(path.string() + ":" + std::to_string(line) + ": cannot parse '" +
                  std::string(field) + "' as a number");
  }
  return value;
}

std::vector<std::vector<double>> read_rows(const std::filesystem::path& path, bool skip_header) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open " + path.string());
  }
  std::vector<std::vector<double>> rows;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (line == 1 && skip_header) {
      continue;
    }
    const std::string_view view = trim(text);
    if (view.empty()) {
      continue;
    }
    std::vector<double> row;
    std::size_t pos = 0;
    while (true) {
      const auto comma = view.find(',', pos);
      row.push_back(parse_real(view.substr(pos, comma - pos), path, line));
      if (comma == std::string_view::npos) {
        break;
      }
      pos = comma + 1;
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw IoError(path.string() + ":" + std::to_string(line) + ": expected " +
                    std::to_string(rows.front().size()) + " columns, found " +
                    std::to_string(row.size()));
    }
    rows.push_back(std::move(row));
  }
  if (in.bad()) {
    throw IoError("error reading " + path.string());
  }
  return rows;
}

nlohmann::ordered_json distance_json(const Distance& d) {
  switch (d.kind()) {
  case Distance::Kind::Finite: return d.as_double();
  case Distance::Kind::Infinite: return "inf";
  case Distance::Kind::Undefined: break;
  }
  return "nan";
}

std::string_view path_name(SolverPath path) {
  return path == SolverPath::Cdf1d ? "cdf1d" : "lp";
}

double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot write " + path.string());
  }
  return out;
}

} // namespace

std::string format_real(double x) {
  if (std::isnan(x)) {
    return "nan";
  }
  if (std::isinf(x)) {
    return x > 0 ? "inf" : "-inf";
  }
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

ValueArray read_points_csv(const std::filesystem::path& path, bool skip_header) {
  const auto rows = read_rows(path, skip_header);
  if (!rows.empty() && rows.front().size() == 1) {
    std::vector<double> flat;
    flat.reserve(rows.size());
    for (const auto& r : rows) {
      flat.push_back(r.front());
    }
    return ValueArray::flat(std::move(flat));
  }
  if (rows.empty()) {
    return ValueArray::flat({});
  }
  return ValueArray::rows(rows);
}

std::vector<double> read_weights_csv(const std::filesystem::path& path, bool skip_header) {
  const auto rows = read_rows(path, skip_header);
  std::vector<double> weights;
  weights.reserve(rows.size());
  for (const auto& r : rows) {
    if (r.size() != 1) {
      throw IoError(path.string() + ": weights files hold one value per row");
    }
    weights.push_back(r.front());
  }
  return weights;
}

int compute_command(const ComputeArgs& args, std::ostream& out, std::ostream& err) {
  try {
    const auto u = read_points_csv(args.u, args.header);
    const auto v = read_points_csv(args.v, args.header);
    std::optional<std::vector<double>> uw;
    std::optional<std::vector<double>> vw;
    if (args.u_weights) {
      uw = read_weights_csv(*args.u_weights, args.header);
    }
    if (args.v_weights) {
      vw = read_weights_csv(*args.v_weights, args.header);
    }

    DistanceOptions options;
    options.want_plan = args.plan.has_value();
    const auto result =
        wasserstein_distance(u, v, uw ? std::optional<std::span<const double>>(*uw) : std::nullopt,
                             vw ? std::optional<std::span<const double>>(*vw) : std::nullopt,
                             options);

    nlohmann::ordered_json doc;
    doc["distance"] = distance_json(result.distance);
    doc["path"] = path_name(result.diagnostics.path);
    doc["iterations"] = result.diagnostics.iterations;
    doc["wall_time_ns"] = result.diagnostics.wall_time_ns;
    if (args.plan) {
      auto& plan = doc["plan"] = nlohmann::ordered_json::array();
      if (result.plan) {
        for (const auto& f : result.plan->flows) {
          plan.push_back({f.source, f.target, f.mass});
        }
      }
      auto file = open_output(*args.plan);
      file << doc.dump(2) << '\n';
    }

    if (args.format == "text") {
      out << "distance: " << format_real(result.distance.as_double()) << '\n'
          << "path: " << path_name(result.diagnostics.path) << '\n'
          << "iterations: " << result.diagnostics.iterations << '\n'
          << "wall_time_ns: " << result.diagnostics.wall_time_ns << '\n';
      if (result.plan) {
        for (const auto& f : result.plan->flows) {
          out << "flow: " << f.source << ' ' << f.target << ' ' << format_real(f.mass) << '\n';
        }
      }
    } else {
      out << doc.dump() << '\n';
    }
    return kExitOk;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_validation_error(e.code()) ? kExitValidation : kExitSolver;
  }
}

std::vector<BenchRecord> run_bench(const BenchArgs& args) {
  std::mt19937_64 rng(args.seed);
  std::vector<BenchRecord> records;
  for (int e = args.min_exp; e <= args.max_exp; ++e) {
    const std::size_t n = std::size_t{1} << e;
    for (std::size_t trial = 0; trial < args.repeats; ++trial) {
      std::vector<double> u(n * args.dim);
      std::vector<double> v(n * args.dim);
      std::generate(u.begin(), u.end(), [&] { return unit_uniform(rng); });
      std::generate(v.begin(), v.end(), [&] { return unit_uniform(rng); });
      const auto ua = ValueArray::matrix(n, args.dim, std::move(u));
      const auto va = ValueArray::matrix(n, args.dim, std::move(v));

      const auto start = std::chrono::steady_clock::now();
      const auto result = wasserstein_distance(ua, va);
      const auto stop = std::chrono::steady_clock::now();

      const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count();
      records.push_back({n, trial, std::max<std::int64_t>(ns, 1), result.distance.as_double()});
    }
  }
  return records;
}

std::vector<BenchSummary> summarize(const std::vector<BenchRecord>& records) {
  struct Acc {
    double time_sum = 0.0;
    double scaled_sum = 0.0;
    std::size_t count = 0;
  };
  std::map<std::size_t, Acc> by_size;
  for (const auto& r : records) {
    auto& acc = by_size[r.n];
    const double t = static_cast<double>(r.wall_time_ns);
    acc.time_sum += t;
    acc.scaled_sum += std::log(t - 1.0);
    ++acc.count;
  }
  std::vector<BenchSummary> rows;
  for (const auto& [n, acc] : by_size) {
    const double mean = acc.time_sum / static_cast<double>(acc.count);
    rows.push_back({n, mean, std::log(mean), acc.scaled_sum / static_cast<double>(acc.count)});
  }
  return rows;
}

void write_bench_csv(std::ostream& os, const std::vector<BenchRecord>& records) {
  os << "n,trial,wall_time_ns,distance\n";
  for (const auto& r : records) {
    os << r.n << ',' << r.trial << ',' << r.wall_time_ns << ',' << format_real(r.distance) << '\n';
  }
}

void write_summary_csv(std::ostream& os, const std::vector<BenchSummary>& rows) {
  os << "n,mean_wall_time_ns,log_mean,paper_scaled\n";
  for (const auto& r : rows) {
    os << r.n << ',' << format_real(r.mean_wall_time_ns) << ',' << format_real(r.log_mean) << ','
       << format_real(r.paper_scaled) << '\n';
  }
}

std::filesystem::path default_summary_path(const std::filesystem::path& out) {
  auto summary = out;
  summary.replace_filename(out.stem().string() + "_summary.csv");
  return summary;
}

int bench_command(const BenchArgs& args, std::ostream& out, std::ostream& err) {
  if (args.min_exp < 0 || args.max_exp < args.min_exp || args.max_exp > 20 || args.repeats == 0 ||
      args.dim == 0) {
    err << "error: need 0 <= min-exp <= max-exp <= 20, repeats >= 1 and dim >= 1\n";
    return kExitValidation;
  }
  try {
    const auto summary_path = args.summary.value_or(default_summary_path(args.out));
    auto records_file = open_output(args.out);
    auto summary_file = open_output(summary_path);

    const auto records = run_bench(args);
    const auto rows = summarize(records);
    write_bench_csv(records_file, records);
    write_summary_csv(summary_file, rows);
    records_file.flush();
    summary_file.flush();
    if (!records_file || !summary_file) {
      throw IoError("failed writing benchmark output");
    }
    out << "wrote " << records.size() << " trials to " << args.out.string() << " and summary to "
        << summary_path.string() << '\n';
    return kExitOk;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_validation_error(e.code()) ? kExitValidation : kExitSolver;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Wasserstein-1 distances between weighted point sets"};
  app.require_subcommand(1);

  ComputeArgs compute;
  auto* compute_cmd = app.add_subcommand("compute", "Distance between two CSV point sets");
  compute_cmd->add_option("--u", compute.u, "CSV file with the source points")->required();
  compute_cmd->add_option("--v", compute.v, "CSV file with the target points")->required();
  compute_cmd->add_option("--u-weights", compute.u_weights, "One weight per source point");
  compute_cmd->add_option("--v-weights", compute.v_weights, "One weight per target point");
  compute_cmd->add_option("--plan", compute.plan, "Also write the result with its plan as JSON");
  compute_cmd->add_option("--format", compute.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));
  compute_cmd->add_flag("--header", compute.header, "Skip the first row of every input file");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time solves on random point sets");
  bench_cmd->add_option("--min-exp", bench.min_exp, "Smallest size is 2^min-exp");
  bench_cmd->add_option("--max-exp", bench.max_exp, "Largest size is 2^max-exp");
  bench_cmd->add_option("--repeats", bench.repeats, "Trials per size");
  bench_cmd->add_option("--dim", bench.dim, "Point dimensionality");
  bench_cmd->add_option("--seed", bench.seed, "Generator seed");
  bench_cmd->add_option("--out", bench.out, "Per-trial CSV");
  bench_cmd->add_option("--summary", bench.summary, "Per-size summary CSV");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    for (const auto* sub : {compute_cmd, bench_cmd}) {
      if (sub->parsed()) {
        out << sub->help();
        return kExitOk;
      }
    }
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }

  if (compute_cmd->parsed()) {
    return compute_command(compute, out, err);
  }
  return bench_command(bench, out, err);
}

} // namespace wass::cli
