#include <cmath>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "xbench/errors.hpp"
#include "xbench/harness/bench_record.hpp"
#include "xbench/harness/summary.hpp"

using namespace xbench;
using namespace xbench::harness;

namespace {

BenchRecord make_record(std::string workload, std::string env, std::vector<double> samples) {
  BenchRecord r;
  r.workload = std::move(workload);
  r.params = {{"inner_iterations", 1}, {"n", 10}};
  r.environment = std::move(env);
  r.seed = 42;
  r.repetitions = samples.size();
  if (samples.empty()) return r;
  double sum = 0;
  for (double s : samples) sum += s;
  r.mean_ms = sum / static_cast<double>(samples.size());
  double sq = 0;
  for (double s : samples) sq += (s - r.mean_ms) * (s - r.mean_ms);
  r.std_ms = std::sqrt(sq / static_cast<double>(samples.size()));
  r.samples_ms = std::move(samples);
  r.result_checksum = 55;
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE("records") {

TEST_CASE("json round trip is lossless") {
  BenchRecord a = make_record("rec_fib", "native", {1.0 / 3.0, 2.718281828459045, 1e-300});
  a.seed = 18446744073709551615ULL;
  a.result_checksum = 9007199254740993ULL;
  a.timestamp = "2026-01-01T00:00:00Z";
  a.host = "Linux 6 x86_64";
  BenchRecord b = make_record("fft", "wasm-node", {4, 5});
  b.target = Target::wasm;
  BenchRecord c = make_record("huffman", "wasm-node", {});
  c.repetitions = 10;
  c.error = "RuntimeError: unreachable";
  const std::vector<BenchRecord> records{a, b, c};
  const std::string text = records_to_json(records);
  CHECK(records_from_json(text) == records);
  CHECK(text.back() == '\n');
}

TEST_CASE("json field names and encodings") {
  BenchRecord r = make_record("rec_fib", "native", {1, 2});
  r.seed = 12345678901234567890ULL;
  const auto doc = nlohmann::json::parse(records_to_json({r}));
  CHECK(doc["v"] == 1);
  const auto& j = doc["records"][0];
  CHECK(j["seed"] == "12345678901234567890");
  CHECK(j["result_checksum"] == "55");
  CHECK(j["target"] == "native");
  CHECK(j["params"]["n"] == 10);
  CHECK_FALSE(j.contains("timestamp"));
  CHECK_FALSE(j.contains("host"));
  CHECK_FALSE(j.contains("error"));
  std::vector<std::string> keys;
  const auto ordered = nlohmann::ordered_json::parse(records_to_json({r}));
  for (const auto& item : ordered["records"][0].items()) {
    keys.push_back(item.key());
  }
  CHECK(keys == std::vector<std::string>{"workload", "params", "environment", "target", "seed", "repetitions",
                                         "samples_ms", "mean_ms", "std_ms", "result_checksum"});
}

TEST_CASE("schema violations") {
  const std::string good = records_to_json({make_record("rec_fib", "native", {1})});
  auto mutate = [&](auto fn) {
    auto doc = nlohmann::ordered_json::parse(good);
    fn(doc);
    return doc.dump();
  };
  CHECK_THROWS_AS(records_from_json("not json"), SchemaError);
  CHECK_THROWS_AS(records_from_json("[]"), SchemaError);
  CHECK_THROWS_AS(records_from_json(mutate([](auto& d) { d["v"] = 2; })), SchemaError);
  CHECK_THROWS_AS(records_from_json(mutate([](auto& d) { d.erase("records"); })), SchemaError);
  CHECK_THROWS_AS(records_from_json(mutate([](auto& d) { d["records"][0].erase("mean_ms"); })), SchemaError);
  CHECK_THROWS_AS(records_from_json(mutate([](auto& d) { d["records"][0]["seed"] = 42; })), SchemaError);
  CHECK_THROWS_AS(records_from_json(mutate([](auto& d) { d["records"][0]["seed"] = "-1"; })), SchemaError);
  CHECK_THROWS_AS(records_from_json(mutate([](auto& d) { d["records"][0]["target"] = "jvm"; })), SchemaError);
  CHECK_THROWS_AS(records_from_json(mutate([](auto& d) { d["records"][0]["repetitions"] = 2; })), SchemaError);
  CHECK_THROWS_AS(records_from_json(mutate([](auto& d) { d["records"][0]["params"]["n"] = 1.5; })), SchemaError);
  CHECK_THROWS_AS(records_from_json(mutate([](auto& d) { d["records"][0]["workload"] = 3; })), SchemaError);
  CHECK_NOTHROW(records_from_json(mutate([](auto& d) { d["records"][0]["host"] = nullptr; })));
}

TEST_CASE("csv layout") {
  BenchRecord r = make_record("rec_fib", "native", {1.5, 2.5});
  const std::string csv = records_to_csv({r});
  CHECK(csv ==
        "workload,environment,target,seed,repetitions,mean_ms,std_ms,result_checksum,params,samples_ms\n"
        "rec_fib,native,native,42,2,2,0.5,55,inner_iterations=1;n=10,1.5;2.5\n");
  BenchRecord q = make_record("rec_fib", "node, v20", {1});
  CHECK(records_to_csv({q}).find("\"node, v20\"") != std::string::npos);
}

TEST_CASE("one record gives a 1x1 table with unit speedup") {
  const SummaryTable t = summarize({make_record("rec_fib", "native", {3, 5})});
  CHECK(t.workloads == std::vector<std::string>{"rec_fib"});
  CHECK(t.environments == std::vector<std::string>{"native"});
  CHECK(t.cells[0][0]->mean_ms == 4);
  CHECK(t.speedup(0, 0) == 1.0);
}

TEST_CASE("speedup is the ratio of means") {
  const SummaryTable t = summarize({make_record("fft", "native", {100}), make_record("fft", "wasm", {200})},
                                   {.baseline = "wasm"});
  CHECK(*t.speedup(0, 0) == 2.0);
  CHECK(*t.speedup(0, 1) == 1.0);
  const SummaryTable d = summarize({make_record("fft", "native", {100}), make_record("fft", "wasm", {200})});
  CHECK(d.baseline == "native");
  CHECK(*d.speedup(0, 1) == 0.5);
}

TEST_CASE("duplicates need merge") {
  const std::vector<BenchRecord> dup{make_record("fft", "native", {1, 3}), make_record("fft", "native", {5})};
  CHECK_THROWS_AS(summarize(dup), AggregationError);
  const SummaryTable t = summarize(dup, {.merge = true});
  CHECK(t.cells[0][0]->repetitions == 3);
  CHECK(t.cells[0][0]->mean_ms == 3);
  CHECK_THROWS_AS(summarize({}), DomainError);
  CHECK_THROWS_AS(summarize(dup, {.baseline = "nope", .merge = true}), ConfigError);
}

TEST_CASE("rows follow the canonical workload order") {
  const SummaryTable t = summarize({make_record("fft", "a", {1}), make_record("rec_fib", "b", {1}),
                                    make_record("custom", "a", {1}), make_record("fill_array_rand", "a", {1})});
  CHECK(t.workloads == std::vector<std::string>{"fill_array_rand", "rec_fib", "fft", "custom"});
  CHECK(t.environments == std::vector<std::string>{"a", "b"});
  CHECK_FALSE(t.cells[1][0].has_value());
  CHECK_FALSE(t.speedup(1, 1).has_value());
}

TEST_CASE("failed records render as failed") {
  BenchRecord bad = make_record("fft", "wasm", {});
  bad.error = "trap";
  const SummaryTable t = summarize({make_record("fft", "native", {2}), bad});
  CHECK(t.cells[0][1]->failed);
  CHECK_FALSE(t.speedup(0, 1).has_value());
  const std::string md = render_markdown(t);
  CHECK(md.find("| fft | 2.000 (0.000) | failed | 1.000 | - |") != std::string::npos);
}

TEST_CASE("markdown and csv against the committed fixture report") {
  const std::string dir = XBENCH_TEST_DATA;
  auto records = records_from_json(slurp(dir + "/report_native.json"));
  const auto wasm = records_from_json(slurp(dir + "/report_wasm.json"));
  records.insert(records.end(), wasm.begin(), wasm.end());
  const SummaryTable t = summarize(records);
  CHECK(render_markdown(t) == slurp(dir + "/report_golden.md"));
  CHECK(render_csv(t) == slurp(dir + "/report_golden.csv"));
}

}
