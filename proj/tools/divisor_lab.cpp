// divisor-lab: subset-divisor statistics, extremal constructions and
// exhaustive desk-scale searches over integer sets, plus the zero-sum
// continuous analogue. Every subcommand can emit a canonical JSON document.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "divisor_lab/constructions.hpp"
#include "divisor_lab/core.hpp"
#include "divisor_lab/enumeration.hpp"
#include "divisor_lab/report.hpp"
#include "divisor_lab/repro.hpp"
#include "divisor_lab/search.hpp"
#include "divisor_lab/zero_sum.hpp"

namespace {

using namespace divisor_lab;
using Clock = std::chrono::steady_clock;

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::vector<std::int64_t> parse_set_literal(const std::string& text) {
  std::vector<std::int64_t> values;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    const std::string token = text.substr(pos, next - pos);
    try {
      std::size_t used = 0;
      values.push_back(std::stoll(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed set literal near '" + token +
                                  "' (expected comma-separated integers)");
    }
    pos = next + 1;
  }
  if (values.empty()) throw std::invalid_argument("empty set literal");
  return values;
}

std::string show_set(const std::vector<std::int64_t>& set) {
  std::string s = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i > 0) s += ", ";
    s += std::to_string(set[i]);
  }
  return s + "}";
}

struct CommonFlags {
  bool json = false;
  std::string csv_path;
  int threads = 0;
  int shard_depth = 2;
  double budget = 0;
  std::string checkpoint;

  RunOptions run() const {
    RunOptions r;
    r.threads = threads;
    r.shard_depth = shard_depth;
    r.budget_seconds = budget;
    r.checkpoint_path = checkpoint;
    return r;
  }
};

void add_common(CLI::App* cmd, CommonFlags& flags, bool with_search_flags = true) {
  cmd->add_flag("--json", flags.json, "emit a canonical JSON result document");
  cmd->add_option("--threads", flags.threads, "worker threads (0 = all cores)")
      ->envname("DIVISOR_LAB_THREADS");
  if (with_search_flags) {
    cmd->add_option("--csv", flags.csv_path, "write the witness table as CSV");
    cmd->add_option("--shard-depth", flags.shard_depth,
                    "prefix length defining work shards (results are identical for any value)");
    cmd->add_option("--budget", flags.budget, "time budget in seconds (0 = unlimited)");
    cmd->add_option("--resume,--checkpoint", flags.checkpoint,
                    "checkpoint file: loaded when present, written when the budget runs out");
  }
}

void emit(const CommonFlags& flags, const std::string& command, Json inputs, Json outputs,
          double seconds, const std::string& human) {
  if (flags.json) {
    std::cout << result_document(command, std::move(inputs), std::move(outputs), seconds).dump(2)
              << '\n';
  } else {
    std::cout << human;
  }
}

void maybe_write_csv(const CommonFlags& flags, const std::vector<std::vector<std::int64_t>>& sets,
                     std::uint64_t value) {
  if (flags.csv_path.empty()) return;
  std::ofstream out(flags.csv_path);
  out << witness_csv(sets, value);
}

std::string join_args(int argc, char** argv) {
  std::string s;
  for (int i = 1; i < argc; ++i) {
    if (i > 1) s += ' ';
    s += argv[i];
  }
  return s;
}

// --- subcommand bodies ------------------------------------------------------

int cmd_divisors(const std::string& literal, std::optional<int> k, bool with_census, bool mitm,
                 const CommonFlags& flags, const std::string& command) {
  const auto start = Clock::now();
  const IntSet set{parse_set_literal(literal)};

  Json inputs;
  inputs["set"] = set.elements();
  if (k) inputs["k"] = *k;
  inputs["method"] = mitm ? "mitm" : "naive";

  Json outputs;
  std::string human;
  if (mitm) {
    const DivisorCounts counts = count_divisors_mitm(set);
    outputs = divisor_counts_json(set, counts);
    human += "set " + show_set(set.elements()) + "  total " + std::to_string(set.total()) + "\n";
    human += "d = " + std::to_string(counts.d) + "  (meet-in-the-middle)\n";
    if (k) human += "d_" + std::to_string(*k) + " = " + std::to_string(counts.d_k(*k)) + "\n";
  } else {
    const DivisorReport report = divisor_report(set);
    outputs = divisor_report_json(report, set.size() <= 16);
    human += "set " + show_set(set.elements()) + "  total " + std::to_string(set.total()) + "\n";
    human += "d = " + std::to_string(report.d);
    if (report.d == 1) human += "  [prime set]";
    human += "\n";
    if (k) human += "d_" + std::to_string(*k) + " = " + std::to_string(report.d_k(*k)) + "\n";
    human += "d_by_k:";
    for (std::size_t i = 1; i < report.d_by_k.size(); ++i) {
      if (report.d_by_k[i]) {
        human += " " + std::to_string(i) + ":" + std::to_string(report.d_by_k[i]);
      }
    }
    human += "\n";
    if (with_census) {
      human += "census: barren " + std::to_string(report.census.barren) + ", neutral " +
               std::to_string(report.census.neutral) + ", abundant " +
               std::to_string(report.census.abundant) + "\n";
    }
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  emit(flags, command, std::move(inputs), std::move(outputs), seconds, human);
  return kExitOk;
}

int cmd_construct(FamilyKind kind, const std::string& base_literal, std::int64_t scale_factor,
                  std::size_t k, const CommonFlags& flags, const std::string& command) {
  const auto start = Clock::now();
  FamilyId id;
  id.kind = kind;
  id.scale = scale_factor;
  id.k = k;
  Json inputs;
  if (!base_literal.empty()) {
    id.base = IntSet(parse_set_literal(base_literal));
    inputs["base"] = id.base->elements();
  }
  if (kind == FamilyKind::KAntiPencil) inputs["k"] = k;
  if (scale_factor != 1) inputs["scale"] = scale_factor;

  const IntSet constructed = family(id);
  const DivisorReport report = divisor_report(constructed);

  Json outputs = divisor_report_json(report, constructed.size() <= 16);
  std::string human = "constructed " + show_set(constructed.elements()) + "  total " +
                      std::to_string(constructed.total()) + "\n" + "d = " +
                      std::to_string(report.d) + "\n";
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  emit(flags, command, std::move(inputs), std::move(outputs), seconds, human);
  return kExitOk;
}

int cmd_search_dmax(const SearchTask& task, const CommonFlags& flags,
                    const std::string& command) {
  const SearchRecord record = run_search(task, flags.run());
  maybe_write_csv(flags, record.argmax_sets, record.max_value);

  std::string human = (task.k ? "max d_" + std::to_string(*task.k) : std::string("max d")) +
                      " = " + std::to_string(record.max_value) + " over " +
                      std::to_string(record.sets_examined) + " sets\n";
  for (const auto& set : record.argmax_sets) human += "  argmax " + show_set(set) + "\n";
  human += "checksum " + std::to_string(record.checksum) + "\n";
  emit(flags, command, task_json(task), record_json(record), record.elapsed_seconds, human);
  return kExitOk;
}

int cmd_search_mu(const MuSearchTask& task, const CommonFlags& flags,
                  const std::string& command) {
  const MuSearchRecord record = search_mu(task, flags.run());
  maybe_write_csv(flags, record.witness_sets, record.extremal_value);

  std::string human;
  if (record.space_empty) {
    human = "no zero-sum sets within the bound\n";
  } else {
    human = std::string(task.objective == MuObjective::Max ? "max" : "min") +
            (task.k ? " mu_" + std::to_string(*task.k) : " mu") + " = " +
            std::to_string(record.extremal_value) + " over " +
            std::to_string(record.sets_examined) + " zero-sum sets\n";
    for (const auto& set : record.witness_sets) human += "  witness " + show_set(set) + "\n";
  }
  human += "note: " + record.caveat + "\n";
  emit(flags, command, task_json(task), record_json(record), record.elapsed_seconds, human);
  return kExitOk;
}

int cmd_verify_bound(const SearchTask& task, std::uint64_t bound, const CommonFlags& flags,
                     const std::string& command) {
  const BoundCheck check = verify_upper_bound(task, bound, flags.run());
  std::string human;
  if (check.holds) {
    human = "bound " + std::to_string(bound) + " holds over " +
            std::to_string(check.sets_examined) + " sets\n";
  } else {
    human = "counterexample " + show_set(*check.counterexample) + " with value " +
            std::to_string(check.counterexample_value) + " > " + std::to_string(bound) + "\n";
  }
  Json inputs = task_json(task);
  inputs["bound"] = bound;
  emit(flags, command, std::move(inputs), bound_check_json(check), check.elapsed_seconds, human);
  return check.holds ? kExitOk : kExitCounterexample;
}

int cmd_verify_characterization(const SearchTask& task, const CommonFlags& flags,
                                const std::string& command) {
  const CharacterizationReport report = verify_characterization(task, flags.run());
  maybe_write_csv(flags, report.record.argmax_sets, report.record.max_value);

  std::string human = "max = " + std::to_string(report.record.max_value) + " (predicted " +
                      std::to_string(report.predicted_max) + ")\n";
  for (const ClassifiedSet& c : report.classified) {
    human += "  " + show_set(c.set) + " -> " + c.family + "\n";
  }
  human += report.note + "\n";
  emit(flags, command, task_json(task), characterization_json(report),
       report.record.elapsed_seconds, human);
  return report.consistent ? kExitOk : kExitCounterexample;
}

int cmd_conjecture_dkn(int n, int k, std::int64_t max_element, const CommonFlags& flags,
                       const std::string& command) {
  const DknProbe probe = probe_dkn(n, k, max_element, flags.run());
  maybe_write_csv(flags, probe.record.argmax_sets, probe.record.max_value);

  std::string human = "max d_" + std::to_string(k) + " = " +
                      std::to_string(probe.record.max_value) + " vs C(" + std::to_string(n - 1) +
                      "," + std::to_string(k) + ") = " + std::to_string(probe.reference) + ": " +
                      (probe.exceeds ? "EXCEEDS" : "CONSISTENT") + "\n";
  for (const auto& set : probe.record.argmax_sets) human += "  argmax " + show_set(set) + "\n";
  emit(flags, command, task_json(probe.record.task), dkn_probe_json(probe),
       probe.record.elapsed_seconds, human);
  return probe.exceeds ? kExitCounterexample : kExitOk;
}

int cmd_conjecture_mms(int n, int k, std::int64_t bound, const CommonFlags& flags,
                       const std::string& command) {
  MuSearchTask task{n, k, bound, MuObjective::Min, {}};
  const MuSearchRecord record = search_mu(task, flags.run());
  maybe_write_csv(flags, record.witness_sets, record.extremal_value);

  const std::uint64_t target =
      binomial(static_cast<std::uint64_t>(n - 1), static_cast<std::uint64_t>(k - 1));
  const bool consistent = record.space_empty || record.extremal_value >= target;
  Json outputs = record_json(record);
  outputs["mms_target"] = target;
  outputs["n_ge_4k"] = n >= 4 * k;
  outputs["verdict"] = consistent ? "CONSISTENT" : "VIOLATED";

  std::string human = "min mu_" + std::to_string(k) + " = " +
                      std::to_string(record.extremal_value) + " vs C(" + std::to_string(n - 1) +
                      "," + std::to_string(k - 1) + ") = " + std::to_string(target) + ": " +
                      (consistent ? "CONSISTENT" : "VIOLATED") + "\n";
  for (const auto& set : record.witness_sets) human += "  witness " + show_set(set) + "\n";
  human += "note: " + record.caveat + "\n";
  emit(flags, command, task_json(task), std::move(outputs), record.elapsed_seconds, human);
  return consistent ? kExitOk : kExitCounterexample;
}

int cmd_conjecture_mu_max(int n, int k, std::int64_t bound, const CommonFlags& flags,
                          const std::string& command) {
  MuSearchTask task{n, k, bound, MuObjective::Max, {}};
  const MuSearchRecord record = search_mu(task, flags.run());
  maybe_write_csv(flags, record.witness_sets, record.extremal_value);

  const std::uint64_t target =
      binomial(static_cast<std::uint64_t>(n - 1), static_cast<std::uint64_t>(k));
  const bool exceeds = !record.space_empty && record.extremal_value > target;
  Json outputs = record_json(record);
  outputs["conjectured_max"] = target;
  outputs["n_ge_4k"] = n >= 4 * k;
  outputs["verdict"] = exceeds ? "EXCEEDS" : "CONSISTENT";

  std::string human = "max mu_" + std::to_string(k) + " = " +
                      std::to_string(record.extremal_value) + " vs C(" + std::to_string(n - 1) +
                      "," + std::to_string(k) + ") = " + std::to_string(target) + ": " +
                      (exceeds ? "EXCEEDS" : "CONSISTENT") + "\n";
  human += "note: " + record.caveat + "\n";
  emit(flags, command, task_json(task), std::move(outputs), record.elapsed_seconds, human);
  return exceeds ? kExitCounterexample : kExitOk;
}

int cmd_conjecture_mu_prime(const std::string& literal, std::size_t k, const CommonFlags& flags,
                            const std::string& command) {
  const auto start = Clock::now();
  const std::vector<std::int64_t> elements = parse_set_literal(literal);
  const bool feasible = check_mu_prime_feasible(elements, k);

  Json inputs;
  inputs["set"] = elements;
  inputs["k"] = k;

  Json outputs;
  outputs["feasible"] = feasible;
  std::string human;
  bool consistent = feasible;
  if (feasible) {
    const std::uint64_t mu = count_nonneg_subsets(elements);
    std::uint64_t formula = 1;
    for (std::size_t i = 0; i + 1 <= k; ++i) {
      formula += binomial(elements.size() - 1, i);
    }
    consistent = mu <= formula;
    outputs["mu"] = mu;
    outputs["formula_bound"] = formula;
    outputs["verdict"] = consistent ? "CONSISTENT" : "EXCEEDS";
    human = "mu = " + std::to_string(mu) + " vs bound " + std::to_string(formula) + ": " +
            (consistent ? "CONSISTENT" : "EXCEEDS") + "\n";
  } else {
    human = "set does not satisfy the mu'-feasibility constraints (some subset larger than k "
            "has nonnegative sum)\n";
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  emit(flags, command, std::move(inputs), std::move(outputs), seconds, human);
  return consistent ? kExitOk : kExitCounterexample;
}

int cmd_repro(const CommonFlags& flags, const std::string& command) {
  ReproOptions options;
  options.threads = flags.threads;
  const auto start = Clock::now();
  const std::vector<CriterionResult> results = run_acceptance_criteria(options);

  bool all_pass = true;
  Json table = Json::array();
  std::string human;
  for (const CriterionResult& r : results) {
    all_pass = all_pass && r.pass;
    char line[160];
    std::snprintf(line, sizeof(line), "[%s] %2d %-20s (%.2fs)\n", r.pass ? "PASS" : "FAIL",
                  r.index, r.lemma.c_str(), r.seconds);
    human += line;
    if (!r.detail.empty()) human += "       " + r.detail + "\n";
    Json entry;
    entry["criterion"] = r.index;
    entry["lemma"] = r.lemma;
    entry["pass"] = r.pass;
    entry["detail"] = r.detail;
    table.push_back(entry);
  }
  human += all_pass ? "all criteria passed\n" : "SOME CRITERIA FAILED\n";
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  emit(flags, command, Json::object(), Json{{"criteria", table}, {"all_pass", all_pass}}, seconds,
       human);
  return all_pass ? kExitOk : kExitCounterexample;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"divisor-lab: exact subset-divisor statistics, extremal constructions and "
               "exhaustive verification at desk scale"};
  app.require_subcommand(1);
  const std::string command = join_args(argc, argv);

  // divisors
  auto* divisors = app.add_subcommand("divisors", "divisor statistics of a set");
  std::string div_set;
  std::optional<int> div_k;
  bool div_census = false, div_mitm = false;
  CommonFlags div_flags;
  divisors->add_option("set", div_set, "comma-separated positive integers")->required();
  divisors->add_option("--k", div_k, "also report d_k");
  divisors->add_flag("--census", div_census, "print the separation census");
  divisors->add_flag("--mitm", div_mitm, "use meet-in-the-middle counting (counts only)");
  add_common(divisors, div_flags, false);

  // construct
  auto* construct = app.add_subcommand("construct", "build the named extremal families");
  construct->require_subcommand(1);
  std::string con_base;
  std::int64_t con_scale = 1;
  std::size_t con_k = 1;
  std::string con_family_name;
  CommonFlags con_flags;
  auto* con_ap = construct->add_subcommand("anti-pencil", "lcm construction over a base set");
  con_ap->add_option("--base", con_base, "base set A'")->required();
  auto* con_kap = construct->add_subcommand("k-anti-pencil", "lcm construction over k-subset sums");
  con_kap->add_option("--base", con_base, "base set A'")->required();
  con_kap->add_option("--k", con_k, "subset size")->required();
  auto* con_prime = construct->add_subcommand("prime", "prime-total construction (1 not in base)");
  con_prime->add_option("--base", con_base, "base set A'")->required();
  auto* con_family = construct->add_subcommand("family", "closed-form family at a scale");
  con_family
      ->add_option("name", con_family_name,
                   "triple-1-2-3 | quad-1-2-3-6 | quad-1-5-7-11 | quad-1-11-19-29")
      ->required();
  con_family->add_option("--scale", con_scale, "scale factor a (default 1)");
  for (auto* sub : {con_ap, con_kap, con_prime, con_family}) add_common(sub, con_flags, false);

  // search
  auto* search = app.add_subcommand("search", "exhaustive extremal searches");
  search->require_subcommand(1);
  auto* search_dmax = search->add_subcommand("dmax", "maximize d (or d_k with --k)");
  SearchTask dmax_task;
  CommonFlags dmax_flags;
  search_dmax->add_option("--n", dmax_task.n, "set size")->required();
  std::optional<int> dmax_k;
  search_dmax->add_option("--k", dmax_k, "subset size (omit for total d)");
  search_dmax->add_option("--max", dmax_task.max_element, "largest element")->required();
  bool dmax_raw = false;
  search_dmax->add_flag("--no-gcd-normalize", dmax_raw, "also examine sets with gcd > 1");
  add_common(search_dmax, dmax_flags);

  auto* search_mu_cmd = search->add_subcommand("mu", "extremize mu (or mu_k) over zero-sum sets");
  int mu_n = 0;
  std::optional<int> mu_k;
  std::int64_t mu_bound = 0;
  std::string mu_objective = "min";
  CommonFlags mu_flags;
  search_mu_cmd->add_option("--n", mu_n, "set size")->required();
  search_mu_cmd->add_option("--k", mu_k, "subset size (omit for full mu)");
  search_mu_cmd->add_option("--bound", mu_bound, "elements drawn from [-bound, bound]")
      ->required();
  search_mu_cmd->add_option("--objective", mu_objective, "min or max")
      ->check(CLI::IsMember({"min", "max"}));
  add_common(search_mu_cmd, mu_flags);

  // verify
  auto* verify = app.add_subcommand("verify", "verify bounds and characterizations");
  verify->require_subcommand(1);
  auto* verify_bound = verify->add_subcommand("upper-bound", "no examined set exceeds a bound");
  SearchTask vb_task;
  std::optional<int> vb_k;
  std::uint64_t vb_bound = 0;
  CommonFlags vb_flags;
  verify_bound->add_option("--n", vb_task.n, "set size")->required();
  verify_bound->add_option("--k", vb_k, "subset size (omit for total d)");
  verify_bound->add_option("--max", vb_task.max_element, "largest element")->required();
  verify_bound->add_option("--bound", vb_bound, "claimed upper bound")->required();
  add_common(verify_bound, vb_flags);

  auto* verify_dchar =
      verify->add_subcommand("d-characterization", "argmax sets match the predicted families");
  SearchTask dc_task;
  CommonFlags dc_flags;
  verify_dchar->add_option("--n", dc_task.n, "set size")->required();
  verify_dchar->add_option("--max", dc_task.max_element, "largest element")->required();
  add_common(verify_dchar, dc_flags);

  auto* verify_kchar = verify->add_subcommand(
      "dk-characterization", "k-subset argmax sets match the predicted families (n = 2k)");
  SearchTask kc_task;
  int kc_k = 0;
  CommonFlags kc_flags;
  verify_kchar->add_option("--n", kc_task.n, "set size")->required();
  verify_kchar->add_option("--k", kc_k, "subset size, n = 2k")->required();
  verify_kchar->add_option("--max", kc_task.max_element, "largest element")->required();
  add_common(verify_kchar, kc_flags);

  // conjecture
  auto* conjecture = app.add_subcommand("conjecture", "bounded probes of the open conjectures");
  conjecture->require_subcommand(1);
  auto* conj_mms = conjecture->add_subcommand("mms", "min mu_k vs C(n-1, k-1)");
  int mms_n = 0, mms_k = 0;
  std::int64_t mms_bound = 0;
  CommonFlags mms_flags;
  conj_mms->add_option("--n", mms_n, "set size")->required();
  conj_mms->add_option("--k", mms_k, "subset size")->required();
  conj_mms->add_option("--bound", mms_bound, "elements drawn from [-bound, bound]")->required();
  add_common(conj_mms, mms_flags);

  auto* conj_dkn = conjecture->add_subcommand("dkn", "max d_k vs C(n-1, k)");
  int dkn_n = 0, dkn_k = 0;
  std::int64_t dkn_max = 0;
  CommonFlags dkn_flags;
  conj_dkn->add_option("--n", dkn_n, "set size")->required();
  conj_dkn->add_option("--k", dkn_k, "subset size")->required();
  conj_dkn->add_option("--max", dkn_max, "largest element")->required();
  add_common(conj_dkn, dkn_flags);

  auto* conj_mumax = conjecture->add_subcommand("mu-max", "max mu_k vs C(n-1, k)");
  int mumax_n = 0, mumax_k = 0;
  std::int64_t mumax_bound = 0;
  CommonFlags mumax_flags;
  conj_mumax->add_option("--n", mumax_n, "set size")->required();
  conj_mumax->add_option("--k", mumax_k, "subset size")->required();
  conj_mumax->add_option("--bound", mumax_bound, "elements drawn from [-bound, bound]")
      ->required();
  add_common(conj_mumax, mumax_flags);

  auto* conj_muprime =
      conjecture->add_subcommand("mu-prime",
                                 "mu of a set whose >k-subsets all sum negative, vs the formula");
  std::string muprime_set;
  std::size_t muprime_k = 0;
  CommonFlags muprime_flags;
  conj_muprime->add_option("--set", muprime_set, "comma-separated nonzero integers")->required();
  conj_muprime->add_option("--k", muprime_k, "constraint size")->required();
  add_common(conj_muprime, muprime_flags, false);

  // repro
  auto* repro = app.add_subcommand("repro", "run the full reproduction suite");
  CommonFlags repro_flags;
  add_common(repro, repro_flags, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (divisors->parsed()) {
      return cmd_divisors(div_set, div_k, div_census, div_mitm, div_flags, command);
    }
    if (construct->parsed()) {
      if (con_ap->parsed()) {
        return cmd_construct(FamilyKind::AntiPencil, con_base, 1, 0, con_flags, command);
      }
      if (con_kap->parsed()) {
        return cmd_construct(FamilyKind::KAntiPencil, con_base, 1, con_k, con_flags, command);
      }
      if (con_prime->parsed()) {
        return cmd_construct(FamilyKind::PrimeSet, con_base, 1, 0, con_flags, command);
      }
      FamilyKind kind;
      if (con_family_name == "triple-1-2-3") kind = FamilyKind::Triple_1_2_3;
      else if (con_family_name == "quad-1-2-3-6") kind = FamilyKind::Quad_1_2_3_6;
      else if (con_family_name == "quad-1-5-7-11") kind = FamilyKind::Quad_1_5_7_11;
      else if (con_family_name == "quad-1-11-19-29") kind = FamilyKind::Quad_1_11_19_29;
      else throw std::invalid_argument("unknown family name: " + con_family_name);
      return cmd_construct(kind, "", con_scale, 0, con_flags, command);
    }
    if (search_dmax->parsed()) {
      dmax_task.k = dmax_k;
      dmax_task.normalize_gcd = !dmax_raw;
      return cmd_search_dmax(dmax_task, dmax_flags, command);
    }
    if (search_mu_cmd->parsed()) {
      MuSearchTask task{mu_n, mu_k, mu_bound,
                        mu_objective == "max" ? MuObjective::Max : MuObjective::Min, {}};
      return cmd_search_mu(task, mu_flags, command);
    }
    if (verify_bound->parsed()) {
      vb_task.k = vb_k;
      return cmd_verify_bound(vb_task, vb_bound, vb_flags, command);
    }
    if (verify_dchar->parsed()) {
      return cmd_verify_characterization(dc_task, dc_flags, command);
    }
    if (verify_kchar->parsed()) {
      kc_task.k = kc_k;
      return cmd_verify_characterization(kc_task, kc_flags, command);
    }
    if (conj_mms->parsed()) {
      return cmd_conjecture_mms(mms_n, mms_k, mms_bound, mms_flags, command);
    }
    if (conj_dkn->parsed()) {
      return cmd_conjecture_dkn(dkn_n, dkn_k, dkn_max, dkn_flags, command);
    }
    if (conj_mumax->parsed()) {
      return cmd_conjecture_mu_max(mumax_n, mumax_k, mumax_bound, mumax_flags, command);
    }
    if (conj_muprime->parsed()) {
      return cmd_conjecture_mu_prime(muprime_set, muprime_k, muprime_flags, command);
    }
    if (repro->parsed()) {
      return cmd_repro(repro_flags, command);
    }
  } catch (const BudgetExceededError& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid arguments: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidMaskError& e) {
    std::cerr << "invalid mask: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCounterexample;
  }
  return kExitUsage;
}
