#include "divisor_lab/report.hpp"

#include <sstream>

namespace divisor_lab {

namespace {

Json set_json(const std::vector<std::int64_t>& elements) { return Json(elements); }

Json by_k_json(const std::vector<std::uint64_t>& by_k) {
  Json j = Json::object();
  for (std::size_t k = 0; k < by_k.size(); ++k) {
    if (by_k[k] != 0) j[std::to_string(k)] = by_k[k];
  }
  return j;
}

}  // namespace

Json task_json(const SearchTask& task) {
  Json j;
  j["n"] = task.n;
  if (task.k) j["k"] = *task.k;
  j["max_element"] = task.max_element;
  j["normalize_gcd"] = task.normalize_gcd;
  if (!task.shard_prefix.empty()) j["shard_prefix"] = task.shard_prefix;
  return j;
}

SearchTask task_from_json(const Json& j) {
  SearchTask task;
  task.n = j.at("n").get<int>();
  if (j.contains("k")) task.k = j["k"].get<int>();
  task.max_element = j.at("max_element").get<std::int64_t>();
  task.normalize_gcd = j.value("normalize_gcd", true);
  if (j.contains("shard_prefix")) {
    task.shard_prefix = j["shard_prefix"].get<std::vector<std::int64_t>>();
  }
  return task;
}

Json task_json(const MuSearchTask& task) {
  Json j;
  j["n"] = task.n;
  if (task.k) j["k"] = *task.k;
  j["bound"] = task.bound;
  j["objective"] = task.objective == MuObjective::Max ? "max" : "min";
  if (!task.shard_prefix.empty()) j["shard_prefix"] = task.shard_prefix;
  return j;
}

MuSearchTask mu_task_from_json(const Json& j) {
  MuSearchTask task;
  task.n = j.at("n").get<int>();
  if (j.contains("k")) task.k = j["k"].get<int>();
  task.bound = j.at("bound").get<std::int64_t>();
  const std::string objective = j.at("objective").get<std::string>();
  if (objective == "max") {
    task.objective = MuObjective::Max;
  } else if (objective == "min") {
    task.objective = MuObjective::Min;
  } else {
    throw std::invalid_argument("objective must be \"min\" or \"max\"; got " + objective);
  }
  if (j.contains("shard_prefix")) {
    task.shard_prefix = j["shard_prefix"].get<std::vector<std::int64_t>>();
  }
  return task;
}

Json census_json(const SeparationCensus& census) {
  Json j;
  j["strong"] = census.strong;
  j["barren"] = census.barren;
  j["neutral"] = census.neutral;
  j["abundant"] = census.abundant;
  j["pairs"] = census.pairs();
  return j;
}

Json divisor_report_json(const DivisorReport& report, bool include_divisors) {
  Json j;
  j["set"] = set_json(report.set.elements());
  j["total"] = report.set.total();
  j["d"] = report.d;
  j["d_by_k"] = by_k_json(report.d_by_k);
  j["prime_set"] = report.d == 1;
  if (report.set.size() >= 2) j["anti_pencil"] = is_anti_pencil(report.set);
  if (include_divisors) {
    Json divisors = Json::array();
    for (SubsetMask mask : report.divisors) {
      Json subset = Json::array();
      for (std::uint64_t bits = mask.bits; bits != 0; bits &= bits - 1) {
        subset.push_back(report.set[static_cast<std::size_t>(std::countr_zero(bits))]);
      }
      divisors.push_back(subset);
    }
    j["divisors"] = divisors;
  }
  j["census"] = census_json(report.census);
  return j;
}

Json divisor_counts_json(const IntSet& set, const DivisorCounts& counts) {
  Json j;
  j["set"] = set_json(set.elements());
  j["total"] = set.total();
  j["d"] = counts.d;
  j["d_by_k"] = by_k_json(counts.by_k);
  j["prime_set"] = counts.d == 1;
  j["method"] = "meet-in-the-middle";
  return j;
}

Json record_json(const SearchRecord& record) {
  Json j;
  j["task"] = task_json(record.task);
  j["max_value"] = record.max_value;
  j["argmax_sets"] = record.argmax_sets;
  j["sets_examined"] = record.sets_examined;
  j["checksum"] = record.checksum;
  return j;
}

Json record_json(const MuSearchRecord& record) {
  Json j;
  j["task"] = task_json(record.task);
  j["space_empty"] = record.space_empty;
  if (!record.space_empty) {
    j["extremal_value"] = record.extremal_value;
    j["witness_sets"] = record.witness_sets;
  }
  j["sets_examined"] = record.sets_examined;
  j["checksum"] = record.checksum;
  j["caveat"] = record.caveat;
  return j;
}

Json bound_check_json(const BoundCheck& check) {
  Json j;
  j["task"] = task_json(check.task);
  j["bound"] = check.bound;
  j["holds"] = check.holds;
  if (check.counterexample) {
    j["counterexample"] = *check.counterexample;
    j["counterexample_value"] = check.counterexample_value;
  }
  j["sets_examined"] = check.sets_examined;
  return j;
}

Json characterization_json(const CharacterizationReport& report) {
  Json j;
  j["record"] = record_json(report.record);
  j["predicted_max"] = report.predicted_max;
  j["attainment_witnessed"] = report.attainment_witnessed;
  Json classified = Json::array();
  for (const ClassifiedSet& c : report.classified) {
    Json entry;
    entry["set"] = c.set;
    entry["family"] = c.family;
    entry["matches"] = c.matches;
    classified.push_back(entry);
  }
  j["classified"] = classified;
  if (!report.unexplained.empty()) j["unexplained"] = report.unexplained;
  j["consistent"] = report.consistent;
  j["note"] = report.note;
  return j;
}

Json dkn_probe_json(const DknProbe& probe) {
  Json j;
  j["record"] = record_json(probe.record);
  j["reference_binomial"] = probe.reference;
  j["verdict"] = probe.exceeds ? "EXCEEDS" : "CONSISTENT";
  return j;
}

Json result_document(const std::string& command, Json inputs, Json outputs, double seconds) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["library_version"] = kLibraryVersion;
  j["command"] = command;
  j["inputs"] = std::move(inputs);
  j["outputs"] = std::move(outputs);
  j["timing"] = Json{{"seconds", seconds}};
  return j;
}

std::string witness_csv(const std::vector<std::vector<std::int64_t>>& sets,
                        std::uint64_t value) {
  std::ostringstream out;
  out << "set,value\n";
  for (const auto& set : sets) {
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (i > 0) out << ' ';
      out << set[i];
    }
    out << ',' << value << '\n';
  }
  return out.str();
}

}  // namespace divisor_lab
