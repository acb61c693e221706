#include "xbench/cli/cli.hpp"

#include <charconv>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "xbench/errors.hpp"
#include "xbench/graphcut/bk_maxflow.hpp"
#include "xbench/graphcut/expansion.hpp"
#include "xbench/graphcut/graph_io.hpp"
#include "xbench/graphcut/pgm.hpp"
#include "xbench/harness/bench_record.hpp"
#include "xbench/harness/runner.hpp"
#include "xbench/harness/summary.hpp"

namespace xbench::cli {

namespace {

namespace gc = xbench::graphcut;
namespace hn = xbench::harness;

// Error carrying the exit code it maps to.
struct Exit {
  int code;
  std::string message;
};

std::optional<std::uint64_t> parse_u64(std::string_view s) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

// Integer with an optional k (1e3) or M (1e6) suffix.
std::optional<std::int64_t> parse_scaled(std::string_view s) {
  std::int64_t scale = 1;
  if (!s.empty() && (s.back() == 'k' || s.back() == 'K')) {
    scale = 1000;
    s.remove_suffix(1);
  } else if (!s.empty() && (s.back() == 'm' || s.back() == 'M')) {
    scale = 1'000'000;
    s.remove_suffix(1);
  }
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v * scale;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("XBENCH_SEED"); env && *env) {
    const auto v = parse_u64(env);
    if (!v) throw Exit{kUsage, std::string("XBENCH_SEED is not an unsigned integer: '") + env + "'"};
    return *v;
  }
  return hn::kDefaultSeed;
}

// Destination for data: a file or, for "-", the caller's out stream.
class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
    if (path == "-") return;
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*file_) throw Exit{kUnwritable, "cannot write '" + path + "'"};
    path_ = path;
  }

  std::ostream& stream() { return file_ ? *file_ : fallback_; }
  bool is_stdout() const noexcept { return !file_; }

  void write(const std::string& data) {
    stream() << data;
    stream().flush();
    if (!stream()) throw Exit{kUnwritable, "failed writing '" + path_ + "'"};
  }

 private:
  std::ostream& fallback_;
  std::unique_ptr<std::ofstream> file_;
  std::string path_ = "<stdout>";
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Exit{kFailure, "cannot read '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

gc::GrayImage load_image(const std::string& path) {
  try {
    return gc::read_pgm(std::filesystem::path(path));
  } catch (const ParseError& e) {
    throw Exit{kBadInput, "malformed PGM '" + path + "': " + e.what()};
  } catch (const Error& e) {
    throw Exit{kBadInput, "malformed PGM '" + path + "': " + e.what()};
  }
}

// --- run -------------------------------------------------------------------

struct RunArgs {
  std::string suite = "all";
  std::optional<std::uint64_t> seed;
  std::size_t reps = 10;
  std::size_t warmup = 1;
  std::optional<std::int64_t> inner;
  std::vector<std::string> params;
  std::string out = "-";
  std::string format = "json";
  std::string env = "native";
  bool no_meta = false;
};

std::vector<hn::WorkloadId> parse_suite(const std::string& suite) {
  std::vector<hn::WorkloadId> ids;
  if (suite == "all") {
    const auto all = hn::all_workloads();
    return {all.begin(), all.end()};
  }
  std::stringstream ss(suite);
  std::string name;
  while (std::getline(ss, name, ',')) {
    const auto id = hn::parse_workload(name);
    if (!id) {
      throw Exit{kUsage, "unknown workload '" + name + "'; valid ids: all, " +
                             hn::workload_name_list()};
    }
    ids.push_back(*id);
  }
  if (ids.empty()) throw Exit{kUsage, "empty suite; valid ids: all, " + hn::workload_name_list()};
  return ids;
}

void apply_param(std::vector<hn::WorkloadSpec>& specs, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos) {
    throw Exit{kUsage, "--param expects key=value or workload.key=value, got '" + assignment + "'"};
  }
  std::string key = assignment.substr(0, eq);
  const auto value = parse_scaled(std::string_view(assignment).substr(eq + 1));
  if (!value) throw Exit{kUsage, "--param " + key + ": value is not an integer"};

  std::optional<hn::WorkloadId> only;
  if (const auto dot = key.find('.'); dot != std::string::npos) {
    only = hn::parse_workload(key.substr(0, dot));
    if (!only) {
      throw Exit{kUsage, "unknown workload '" + key.substr(0, dot) + "' in --param; valid ids: " +
                             hn::workload_name_list()};
    }
    key = key.substr(dot + 1);
  }

  bool applied = false;
  for (auto& spec : specs) {
    if (only && spec.id != *only) continue;
    if (!only && !spec.params.contains(key)) continue;
    hn::set_param(spec, key, *value);
    applied = true;
  }
  if (!applied && !only) {
    throw Exit{kUsage, "no selected workload has a parameter named '" + key + "'"};
  }
}

int cmd_run(const RunArgs& args, std::ostream& out, std::ostream& err) {
  const auto ids = parse_suite(args.suite);
  const std::uint64_t seed = resolve_seed(args.seed);
  if (args.reps == 0) throw Exit{kUsage, "--reps must be at least 1"};

  std::vector<hn::WorkloadSpec> specs;
  for (const auto id : ids) {
    auto spec = hn::default_spec(id);
    spec.seed = seed;
    specs.push_back(std::move(spec));
  }
  try {
    if (args.inner) {
      for (auto& spec : specs) hn::set_param(spec, "inner_iterations", *args.inner);
    }
    for (const auto& p : args.params) apply_param(specs, p);
  } catch (const ConfigError& e) {
    throw Exit{kUsage, e.what()};
  }

  Output output(args.out, out);
  std::ostream& log = output.is_stdout() ? err : out;

  hn::RunOptions options;
  options.repetitions = args.reps;
  options.warmup = args.warmup;
  options.environment = args.env;
  options.include_meta = !args.no_meta;

  hn::HostClock clock;
  std::vector<hn::BenchRecord> records;
  for (const auto& spec : specs) {
    hn::BenchRecord r;
    try {
      r = hn::run_workload(spec, clock, options);
    } catch (const ConfigError& e) {
      throw Exit{kUsage, e.what()};
    } catch (const std::exception& e) {
      throw Exit{kFailure, e.what()};
    }
    char line[256];
    std::snprintf(line, sizeof line, "%-17s mean=%.3f ms std=%.3f ms reps=%zu checksum=%llu\n",
                  r.workload.c_str(), r.mean_ms, r.std_ms, r.repetitions,
                  static_cast<unsigned long long>(r.result_checksum));
    log << line << std::flush;
    records.push_back(std::move(r));
  }

  if (args.format == "json") {
    output.write(hn::records_to_json(records));
  } else if (args.format == "csv") {
    output.write(hn::records_to_csv(records));
  } else {
    output.write(hn::render_markdown(hn::summarize(records)));
  }
  return kOk;
}

// --- report ----------------------------------------------------------------

struct ReportArgs {
  std::vector<std::string> files;
  std::string format = "md";
  std::optional<std::string> baseline;
  bool merge = false;
  std::string out = "-";
};

int cmd_report(const ReportArgs& args, std::ostream& out) {
  std::vector<hn::BenchRecord> records;
  for (const auto& path : args.files) {
    const std::string text = slurp(path);
    try {
      auto loaded = hn::records_from_json(text);
      records.insert(records.end(), loaded.begin(), loaded.end());
    } catch (const SchemaError& e) {
      throw Exit{kSchemaMismatch, path + ": " + e.what()};
    }
  }
  if (records.empty()) throw Exit{kFailure, "no records in the given files"};

  hn::SummaryTable table;
  try {
    table = hn::summarize(records, {args.baseline, args.merge});
  } catch (const AggregationError& e) {
    throw Exit{kUsage, e.what()};
  } catch (const ConfigError& e) {
    throw Exit{kUsage, e.what()};
  }
  Output output(args.out, out);
  output.write(args.format == "csv" ? hn::render_csv(table) : hn::render_markdown(table));
  return kOk;
}

// --- segment / extract-graph / gen-image ------------------------------------

struct SegmentArgs {
  std::string image;
  int threshold = 128;
  long long lambda = 1;
  std::string out;
  bool no_meta = false;
};

int cmd_segment(const SegmentArgs& args, std::ostream& out) {
  const gc::GrayImage image = load_image(args.image);

  const auto start = std::chrono::steady_clock::now();
  const gc::GrayImage labeling = gc::threshold(image, static_cast<std::uint8_t>(args.threshold));
  const gc::EnergyModel model = gc::EnergyModel::binary(image, args.lambda);
  gc::ExpansionGraph graph = gc::build_expansion_graph(labeling, model, 255);
  const gc::CutResult cut = gc::bk_maxflow(graph.net);
  const gc::GrayImage result = graph.labeling_from_cut(labeling, cut.side);
  const double elapsed =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  try {
    gc::write_pgm(result, std::filesystem::path(args.out));
  } catch (const Error& e) {
    throw Exit{kUnwritable, e.what()};
  }

  out << "max_flow=" << cut.max_flow << " energy=" << model.energy(result);
  if (!args.no_meta) {
    char buf[64];
    std::snprintf(buf, sizeof buf, " elapsed_ms=%.3f", elapsed);
    out << buf;
  }
  out << '\n';
  return kOk;
}

struct ExtractArgs {
  std::string image;
  int threshold = 128;
  long long lambda = 1;
  std::string out;
};

int cmd_extract_graph(const ExtractArgs& args, std::ostream& out) {
  const gc::GrayImage image = load_image(args.image);
  const gc::GrayImage labeling = gc::threshold(image, static_cast<std::uint8_t>(args.threshold));
  const gc::EnergyModel model = gc::EnergyModel::binary(image, args.lambda);
  const gc::ExpansionGraph graph = gc::build_expansion_graph(labeling, model, 255);
  try {
    gc::save_graph(graph.net, std::filesystem::path(args.out));
  } catch (const Error& e) {
    throw Exit{kUnwritable, e.what()};
  }
  out << "vertices=" << graph.net.vertex_count() << " edges=" << graph.net.edge_count()
      << " pixels=" << graph.pixel_count << " aux=" << graph.aux_count << '\n';
  return kOk;
}

struct GenImageArgs {
  std::size_t width = 64;
  std::size_t height = 64;
  std::string pattern = "blobs";
  std::optional<std::uint64_t> seed;
  std::string out;
  bool ascii = false;
};

int cmd_gen_image(const GenImageArgs& args) {
  gc::Pattern pattern;
  try {
    pattern = gc::parse_pattern(args.pattern);
  } catch (const ConfigError& e) {
    throw Exit{kUsage, e.what()};
  }
  Rng rng(resolve_seed(args.seed));
  const gc::GrayImage img = gc::generate_test_image(args.width, args.height, pattern, rng);
  try {
    gc::write_pgm(img, std::filesystem::path(args.out),
                  args.ascii ? gc::PgmEncoding::ascii : gc::PgmEncoding::binary);
  } catch (const Error& e) {
    throw Exit{kUnwritable, e.what()};
  }
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cross-runtime algorithm benchmark suite"};
  app.name("xbench");
  app.require_subcommand(1);

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "Run workloads and write benchmark records");
  run_cmd->add_option("--suite", run.suite, "Comma-separated workload ids, or 'all'");
  run_cmd->add_option("--seed", run.seed, "RNG seed (falls back to $XBENCH_SEED, then 42)");
  run_cmd->add_option("--reps", run.reps, "Measured repetitions per workload");
  run_cmd->add_option("--warmup", run.warmup, "Unmeasured warmup repetitions");
  run_cmd->add_option("--inner", run.inner, "Override inner_iterations for every selected workload");
  run_cmd->add_option("--param", run.params, "key=value or workload.key=value (k/M suffixes allowed)");
  run_cmd->add_option("--out", run.out, "Output file, '-' for stdout");
  run_cmd->add_option("--format", run.format, "json, csv or md")
      ->check(CLI::IsMember({"json", "csv", "md"}));
  run_cmd->add_option("--env", run.env, "Environment tag stored in each record");
  run_cmd->add_flag("--no-meta", run.no_meta, "Omit timestamp and host fields");

  ReportArgs report;
  auto* report_cmd = app.add_subcommand("report", "Merge result files into a comparison table");
  report_cmd->add_option("files", report.files, "Result files (schema v1 JSON)")->required();
  report_cmd->add_option("--format", report.format, "md or csv")
      ->check(CLI::IsMember({"md", "csv"}));
  report_cmd->add_option("--baseline", report.baseline, "Environment tag used as speedup baseline");
  report_cmd->add_flag("--merge", report.merge, "Pool samples of duplicate workload/environment pairs");
  report_cmd->add_option("--out", report.out, "Output file, '-' for stdout");

  SegmentArgs segment;
  auto* segment_cmd = app.add_subcommand("segment", "Threshold an image and solve the alpha=255 move");
  segment_cmd->add_option("--image,image", segment.image, "Input PGM")->required();
  segment_cmd->add_option("--threshold", segment.threshold)->check(CLI::Range(0, 255));
  segment_cmd->add_option("--lambda", segment.lambda, "Potts smoothness weight")
      ->check(CLI::NonNegativeNumber);
  segment_cmd->add_option("--out", segment.out, "Output labeling PGM")->required();
  segment_cmd->add_flag("--no-meta", segment.no_meta, "Omit the elapsed time");

  ExtractArgs extract;
  auto* extract_cmd = app.add_subcommand("extract-graph", "Write the alpha=255 expansion graph");
  extract_cmd->add_option("--image,image", extract.image, "Input PGM")->required();
  extract_cmd->add_option("--threshold", extract.threshold)->check(CLI::Range(0, 255));
  extract_cmd->add_option("--lambda", extract.lambda, "Potts smoothness weight")
      ->check(CLI::NonNegativeNumber);
  extract_cmd->add_option("--out", extract.out, "Output graph file")->required();

  GenImageArgs gen;
  auto* gen_cmd = app.add_subcommand("gen-image", "Write a synthetic test image");
  gen_cmd->add_option("--width", gen.width)->check(CLI::Range(1, 1 << 14));
  gen_cmd->add_option("--height", gen.height)->check(CLI::Range(1, 1 << 14));
  gen_cmd->add_option("--pattern", gen.pattern, "blobs, stripes or noise");
  gen_cmd->add_option("--seed", gen.seed, "RNG seed (falls back to $XBENCH_SEED, then 42)");
  gen_cmd->add_option("--out", gen.out, "Output PGM")->required();
  gen_cmd->add_flag("--ascii", gen.ascii, "Write P2 instead of P5");

  std::vector<std::string> argv_storage{"xbench"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*run_cmd) return cmd_run(run, out, err);
    if (*report_cmd) return cmd_report(report, out);
    if (*segment_cmd) return cmd_segment(segment, out);
    if (*extract_cmd) return cmd_extract_graph(extract, out);
    if (*gen_cmd) return cmd_gen_image(gen);
  } catch (const Exit& e) {
    err << "xbench: " << e.message << '\n';
    return e.code;
  } catch (const std::exception& e) {
    err << "xbench: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

}  // namespace xbench::cli
