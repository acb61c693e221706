#include "xbench/harness/bench_record.hpp"

#include <charconv>
#include <cstdio>

#include "csv.hpp"
#include "json.hpp"
#include "xbench/errors.hpp"

namespace xbench::harness {

using ojson = nlohmann::ordered_json;

std::string_view target_name(Target t) noexcept { return t == Target::wasm ? "wasm" : "native"; }

namespace {

std::uint64_t parse_u64(const ojson& j, const char* field) {
  if (!j.is_string()) throw SchemaError(std::string("'") + field + "' must be a decimal string");
  const auto& s = j.get_ref<const std::string&>();
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw SchemaError(std::string("'") + field + "' is not a u64: '" + s + "'");
  }
  return v;
}

const ojson& field(const ojson& obj, const char* name) {
  const auto it = obj.find(name);
  if (it == obj.end()) throw SchemaError(std::string("record is missing '") + name + "'");
  return *it;
}

template <class T>
T typed(const ojson& obj, const char* name) {
  try {
    return field(obj, name).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw SchemaError(std::string("record field '") + name + "' has the wrong type");
  }
}

ojson to_json(const BenchRecord& r) {
  ojson j;
  j["workload"] = r.workload;
  ojson params = ojson::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  j["params"] = std::move(params);
  j["environment"] = r.environment;
  j["target"] = target_name(r.target);
  j["seed"] = std::to_string(r.seed);
  j["repetitions"] = r.repetitions;
  j["samples_ms"] = r.samples_ms;
  j["mean_ms"] = r.mean_ms;
  j["std_ms"] = r.std_ms;
  j["result_checksum"] = std::to_string(r.result_checksum);
  if (r.timestamp) j["timestamp"] = *r.timestamp;
  if (r.host) j["host"] = *r.host;
  if (r.error) j["error"] = *r.error;
  return j;
}

BenchRecord from_json(const ojson& j) {
  if (!j.is_object()) throw SchemaError("record is not an object");
  BenchRecord r;
  r.workload = typed<std::string>(j, "workload");
  const ojson& params = field(j, "params");
  if (!params.is_object()) throw SchemaError("'params' must be an object");
  for (const auto& [k, v] : params.items()) {
    if (!v.is_number_integer()) throw SchemaError("parameter '" + k + "' must be an integer");
    r.params[k] = v.get<std::int64_t>();
  }
  r.environment = typed<std::string>(j, "environment");
  const auto target = typed<std::string>(j, "target");
  if (target == "native") {
    r.target = Target::native;
  } else if (target == "wasm") {
    r.target = Target::wasm;
  } else {
    throw SchemaError("unknown target '" + target + "'");
  }
  r.seed = parse_u64(field(j, "seed"), "seed");
  r.repetitions = typed<std::size_t>(j, "repetitions");
  r.samples_ms = typed<std::vector<double>>(j, "samples_ms");
  r.mean_ms = typed<double>(j, "mean_ms");
  r.std_ms = typed<double>(j, "std_ms");
  r.result_checksum = parse_u64(field(j, "result_checksum"), "result_checksum");
  if (j.contains("timestamp") && !j["timestamp"].is_null()) r.timestamp = typed<std::string>(j, "timestamp");
  if (j.contains("host") && !j["host"].is_null()) r.host = typed<std::string>(j, "host");
  if (j.contains("error") && !j["error"].is_null()) r.error = typed<std::string>(j, "error");
  if (!r.error && r.samples_ms.size() != r.repetitions) {
    throw SchemaError("record for '" + r.workload + "' has " + std::to_string(r.samples_ms.size()) +
                      " samples but repetitions = " + std::to_string(r.repetitions));
  }
  return r;
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string records_to_json(const std::vector<BenchRecord>& records) {
  ojson doc;
  doc["v"] = kSchemaVersion;
  doc["records"] = ojson::array();
  for (const auto& r : records) doc["records"].push_back(to_json(r));
  return doc.dump(2) + "\n";
}

std::vector<BenchRecord> records_from_json(std::string_view text) {
  ojson doc;
  try {
    doc = ojson::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("v")) throw SchemaError("missing schema version 'v'");
  if (!doc["v"].is_number_integer() || doc["v"].get<std::int64_t>() != kSchemaVersion) {
    throw SchemaError("unsupported schema version " + doc["v"].dump() + " (expected " +
                      std::to_string(kSchemaVersion) + ")");
  }
  if (!doc.contains("records") || !doc["records"].is_array()) {
    throw SchemaError("missing 'records' array");
  }
  std::vector<BenchRecord> out;
  for (const auto& j : doc["records"]) out.push_back(from_json(j));
  return out;
}

std::string records_to_csv(const std::vector<BenchRecord>& records) {
  std::string out =
      "workload,environment,target,seed,repetitions,mean_ms,std_ms,result_checksum,params,"
      "samples_ms\n";
  for (const auto& r : records) {
    std::string params;
    for (const auto& [k, v] : r.params) {
      if (!params.empty()) params += ';';
      params += k + "=" + std::to_string(v);
    }
    std::string samples;
    for (double s : r.samples_ms) {
      if (!samples.empty()) samples += ';';
      samples += format_double(s);
    }
    out += csv_field(r.workload) + "," + csv_field(r.environment) + "," + std::string(target_name(r.target)) + "," +
           std::to_string(r.seed) + "," + std::to_string(r.repetitions) + "," +
           format_double(r.mean_ms) + "," + format_double(r.std_ms) + "," +
           std::to_string(r.result_checksum) + "," + params + "," + samples + "\n";
  }
  return out;
}

}  // namespace xbench::harness
