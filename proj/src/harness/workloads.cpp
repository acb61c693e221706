#include <array>
#include <cmath>
#include <string>

#include "xbench/checksum.hpp"
#include "xbench/errors.hpp"
#include "xbench/fft.hpp"
#include "xbench/floyd_warshall.hpp"
#include "xbench/graphcut/bk_maxflow.hpp"
#include "xbench/graphcut/expansion.hpp"
#include "xbench/graphcut/image.hpp"
#include "xbench/harness/workload.hpp"
#include "xbench/huffman.hpp"
#include "xbench/microbench.hpp"
#include "xbench/permutations.hpp"
#include "xbench/rng.hpp"

namespace xbench::harness {

namespace {

constexpr std::array<WorkloadId, kWorkloadCount> kAll{
    WorkloadId::fill_array_rand, WorkloadId::rec_fib,       WorkloadId::int_compare,
    WorkloadId::floyd_warshall,  WorkloadId::huffman,       WorkloadId::permutations,
    WorkloadId::fft,             WorkloadId::mincut_single, WorkloadId::mincut_expansion,
};

constexpr std::array<std::string_view, kWorkloadCount> kNames{
    "fill_array_rand", "rec_fib", "int_compare",   "floyd_warshall",   "huffman",
    "permutations",    "fft",     "mincut_single", "mincut_expansion",
};

constexpr std::string_view kLoremIpsum =
    "Lorem ipsum dolor sit amet, consectetur adipiscing elit, sed do eiusmod tempor "
    "incididunt ut labore et dolore magna aliqua. Ut enim ad minim veniam, quis nostrud "
    "exercitation ullamco laboris nisi ut aliquip ex ea commodo consequat. Duis aute irure "
    "dolor in reprehenderit in voluptate velit esse cillum dolore eu fugiat nulla pariatur. "
    "Excepteur sint occaecat cupidatat non proident, sunt in culpa qui officia deserunt "
    "mollit anim id est laborum.";

constexpr std::string_view kPermutationAlphabet = "abcdefghij";

std::int64_t get(const Params& params, const char* key) { return params.at(key); }

std::int64_t require_range(const Params& params, const char* key, std::int64_t lo,
                           std::int64_t hi) {
  const auto it = params.find(key);
  if (it == params.end()) raise<ConfigError>(std::string("missing parameter '") + key + "'");
  if (it->second < lo || it->second > hi) {
    raise<ConfigError>(std::string("parameter '") + key + "' = " + std::to_string(it->second) +
                       " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return it->second;
}

class FillArrayRand final : public Workload {
 public:
  explicit FillArrayRand(const Params& p) : n_(static_cast<std::uint64_t>(get(p, "n"))) {}
  void setup(std::uint64_t seed) override { rng_ = Rng(seed); }
  std::uint64_t iterate() override { return fill_array_rand(n_, rng_); }

 private:
  std::uint64_t n_;
  Rng rng_{0};
};

class RecFib final : public Workload {
 public:
  explicit RecFib(const Params& p) : n_(static_cast<unsigned>(get(p, "n"))) {}
  void setup(std::uint64_t) override {}
  std::uint64_t iterate() override { return fib_recursive(n_); }

 private:
  unsigned n_;
};

class IntCompare final : public Workload {
 public:
  explicit IntCompare(const Params& p) : n_(static_cast<std::uint64_t>(get(p, "n"))) {}
  void setup(std::uint64_t seed) override { rng_ = Rng(seed); }
  std::uint64_t iterate() override {
    const CompareTally t = int_compare(n_, rng_);
    return fold_words({t.less, t.equal, t.greater});
  }

 private:
  std::uint64_t n_;
  Rng rng_{0};
};

class FloydWarshallWorkload final : public Workload {
 public:
  explicit FloydWarshallWorkload(const Params& p)
      : n_(static_cast<std::size_t>(get(p, "vertices"))), max_weight_(get(p, "max_weight")) {}

  void setup(std::uint64_t seed) override {
    Rng rng(seed);
    graph_ = random_complete_graph(n_, max_weight_, rng);
  }

  std::uint64_t iterate() override {
    DenseGraph work = graph_;
    floyd_warshall_inplace(work);
    std::uint64_t sum = 0;
    for (const Weight w : work.weights()) sum += w == kInfinity ? 1 : static_cast<std::uint64_t>(w);
    return sum;
  }

 private:
  std::size_t n_;
  Weight max_weight_;
  DenseGraph graph_{0};
};

class HuffmanWorkload final : public Workload {
 public:
  void setup(std::uint64_t) override {}
  std::uint64_t iterate() override {
    const auto weights = symbol_frequencies(kLoremIpsum);
    const HuffmanTree tree = huffman_build(weights);
    const CodeTable table = make_code_table(tree);
    const BitString bits = huffman_encode(kLoremIpsum, table);
    if (huffman_decode(bits, tree) != kLoremIpsum) {
      raise<Error>("huffman: round trip mismatch");
    }
    return bits.size();
  }
};

class PermutationsWorkload final : public Workload {
 public:
  explicit PermutationsWorkload(const Params& p)
      : text_(kPermutationAlphabet.substr(0, static_cast<std::size_t>(get(p, "n")))) {}
  void setup(std::uint64_t) override {}
  std::uint64_t iterate() override {
    const auto perms = permutations(text_);
    return fold_words({perms.size(), fnv1a(perms.front()), fnv1a(perms.back())});
  }

 private:
  std::string text_;
};

class FftWorkload final : public Workload {
 public:
  explicit FftWorkload(const Params& p) : n_(static_cast<std::size_t>(get(p, "n"))) {}

  void setup(std::uint64_t seed) override {
    Rng rng(seed);
    input_.resize(n_);
    for (auto& v : input_) {
      const double re = 2 * rng.next_double() - 1;
      const double im = 2 * rng.next_double() - 1;
      v = Complex(re, im);
    }
  }

  // Components are rounded to 1e-6 before folding so that last-ulp libm
  // differences between targets do not change the digest.
  std::uint64_t iterate() override {
    const ComplexVector out = fft_recursive(input_);
    std::uint64_t sum = 0;
    for (const auto& v : out) {
      sum = sum * 31 + static_cast<std::uint64_t>(std::llround(v.real() * 1e6));
      sum = sum * 31 + static_cast<std::uint64_t>(std::llround(v.imag() * 1e6));
    }
    return sum;
  }

 private:
  std::size_t n_;
  ComplexVector input_;
};

// Shared input for both min-cut workloads: blobs image, thresholded labeling,
// binary Potts model against the grayscale intensities.
struct SegmentationInput {
  graphcut::GrayImage labeling;
  std::optional<graphcut::EnergyModel> model;

  void prepare(const Params& p, std::uint64_t seed) {
    const auto size = static_cast<std::size_t>(get(p, "size"));
    Rng rng(seed);
    graphcut::GrayImage image =
        graphcut::generate_test_image(size, size, graphcut::Pattern::blobs, rng);
    labeling = graphcut::threshold(image, static_cast<std::uint8_t>(get(p, "threshold")));
    model.emplace(graphcut::EnergyModel::binary(std::move(image), get(p, "lambda")));
  }
};

class MincutSingle final : public Workload {
 public:
  explicit MincutSingle(const Params& p) : params_(p) {}

  void setup(std::uint64_t seed) override {
    input_.prepare(params_, seed);
    graph_.emplace(graphcut::build_expansion_graph(input_.labeling, *input_.model, 255));
  }

  std::uint64_t iterate() override {
    return static_cast<std::uint64_t>(graphcut::bk_maxflow(graph_->net).max_flow);
  }

 private:
  Params params_;
  SegmentationInput input_;
  std::optional<graphcut::ExpansionGraph> graph_;
};

class MincutExpansion final : public Workload {
 public:
  explicit MincutExpansion(const Params& p) : params_(p) {}
  void setup(std::uint64_t seed) override { input_.prepare(params_, seed); }
  std::uint64_t iterate() override {
    return static_cast<std::uint64_t>(
        graphcut::alpha_expansion(input_.labeling, *input_.model).energy);
  }

 private:
  Params params_;
  SegmentationInput input_;
};

void check_params(const WorkloadSpec& spec) {
  const Params& p = spec.params;
  require_range(p, "inner_iterations", 1, std::int64_t{1} << 40);
  switch (spec.id) {
    case WorkloadId::fill_array_rand:
    case WorkloadId::int_compare:
      require_range(p, "n", 1, std::int64_t{1} << 32);
      break;
    case WorkloadId::rec_fib:
      require_range(p, "n", 0, kMaxFibonacci);
      break;
    case WorkloadId::floyd_warshall:
      require_range(p, "vertices", 1, 1 << 16);
      require_range(p, "max_weight", 1, 1 << 20);
      break;
    case WorkloadId::huffman:
      break;
    case WorkloadId::permutations:
      require_range(p, "n", 1, static_cast<std::int64_t>(kMaxPermutationLength));
      break;
    case WorkloadId::fft: {
      const auto n = require_range(p, "n", 1, std::int64_t{1} << 24);
      if (!is_power_of_two(static_cast<std::size_t>(n))) {
        raise<ConfigError>("parameter 'n' = " + std::to_string(n) + " is not a power of two");
      }
      break;
    }
    case WorkloadId::mincut_single:
    case WorkloadId::mincut_expansion:
      require_range(p, "size", 1, 4096);
      require_range(p, "threshold", 0, 255);
      require_range(p, "lambda", 0, 1'000'000);
      break;
  }
}

}  // namespace

std::span<const WorkloadId> all_workloads() noexcept { return kAll; }

std::string_view workload_name(WorkloadId id) noexcept {
  return kNames[static_cast<std::size_t>(id)];
}

std::optional<WorkloadId> parse_workload(std::string_view name) noexcept {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return kAll[i];
  }
  return std::nullopt;
}

std::string workload_name_list() {
  std::string out;
  for (const auto name : kNames) {
    if (!out.empty()) out += ", ";
    out += name;
  }
  return out;
}

std::uint64_t WorkloadSpec::inner_iterations() const {
  const auto it = params.find("inner_iterations");
  return it == params.end() ? 1 : static_cast<std::uint64_t>(it->second);
}

WorkloadSpec default_spec(WorkloadId id) {
  WorkloadSpec spec{id, {}, kDefaultSeed};
  auto& p = spec.params;
  p["inner_iterations"] = 1;
  switch (id) {
    case WorkloadId::fill_array_rand:
      p["n"] = 1'000'000;
      break;
    case WorkloadId::rec_fib:
      p["n"] = 40;
      break;
    case WorkloadId::int_compare:
      p["n"] = 10'000'000;
      break;
    case WorkloadId::floyd_warshall:
      p["vertices"] = 1000;
      p["max_weight"] = 100;
      break;
    case WorkloadId::huffman:
      p["inner_iterations"] = 100'000;
      break;
    case WorkloadId::permutations:
      p["n"] = 9;
      break;
    case WorkloadId::fft:
      p["n"] = 1024;
      p["inner_iterations"] = 100'000;
      break;
    case WorkloadId::mincut_single:
    case WorkloadId::mincut_expansion:
      p["size"] = 100;
      p["threshold"] = 128;
      p["lambda"] = 1;
      break;
  }
  return spec;
}

void set_param(WorkloadSpec& spec, std::string_view key, std::int64_t value) {
  const auto it = spec.params.find(std::string(key));
  if (it == spec.params.end()) {
    std::string known;
    for (const auto& [k, v] : spec.params) known += (known.empty() ? "" : ", ") + k;
    raise<ConfigError>(std::string(workload_name(spec.id)) + " has no parameter '" +
                       std::string(key) + "' (known: " + known + ")");
  }
  it->second = value;
  check_params(spec);
}

std::unique_ptr<Workload> make_workload(const WorkloadSpec& spec) {
  const WorkloadSpec defaults = default_spec(spec.id);
  for (const auto& [key, value] : spec.params) {
    if (!defaults.params.contains(key)) {
      raise<ConfigError>(std::string(workload_name(spec.id)) + " has no parameter '" + key + "'");
    }
  }
  for (const auto& [key, value] : defaults.params) {
    if (!spec.params.contains(key)) {
      raise<ConfigError>(std::string(workload_name(spec.id)) + " is missing parameter '" + key + "'");
    }
  }
  check_params(spec);

  const Params& p = spec.params;
  switch (spec.id) {
    case WorkloadId::fill_array_rand:
      return std::make_unique<FillArrayRand>(p);
    case WorkloadId::rec_fib:
      return std::make_unique<RecFib>(p);
    case WorkloadId::int_compare:
      return std::make_unique<IntCompare>(p);
    case WorkloadId::floyd_warshall:
      return std::make_unique<FloydWarshallWorkload>(p);
    case WorkloadId::huffman:
      return std::make_unique<HuffmanWorkload>();
    case WorkloadId::permutations:
      return std::make_unique<PermutationsWorkload>(p);
    case WorkloadId::fft:
      return std::make_unique<FftWorkload>(p);
    case WorkloadId::mincut_single:
      return std::make_unique<MincutSingle>(p);
    case WorkloadId::mincut_expansion:
      return std::make_unique<MincutExpansion>(p);
  }
  raise<ConfigError>("unknown workload");
}

Measurement measure(Workload& workload, Clock& clock, std::uint64_t inner_iterations) {
  Measurement m;
  const double start = clock.now_ms();
  for (std::uint64_t i = 0; i < inner_iterations; ++i) m.checksum += workload.iterate();
  m.elapsed_ms = clock.now_ms() - start;
  return m;
}

std::string_view lorem_ipsum() noexcept { return kLoremIpsum; }

}  // namespace xbench::harness
