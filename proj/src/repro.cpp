#include "divisor_lab/repro.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <filesystem>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "divisor_lab/constructions.hpp"
#include "divisor_lab/core.hpp"
#include "divisor_lab/enumeration.hpp"
#include "divisor_lab/search.hpp"
#include "divisor_lab/zero_sum.hpp"

namespace divisor_lab {

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      if (detail.tellp() > 0) detail << "; ";
      detail << "FAILED: " << what;
    }
  }
};

std::string show(const std::vector<std::int64_t>& set) {
  std::string s = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(set[i]);
  }
  return s + "}";
}

IntSet random_int_set(std::mt19937_64& rng, std::size_t n, std::int64_t lo, std::int64_t hi) {
  std::uniform_int_distribution<std::int64_t> dist(lo, hi);
  std::set<std::int64_t> chosen;
  while (chosen.size() < n) chosen.insert(dist(rng));
  return IntSet(std::vector<std::int64_t>(chosen.begin(), chosen.end()));
}

ZeroSumSet random_zero_sum_set(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<std::int64_t> dist(-50, 50);
  for (;;) {
    std::set<std::int64_t> chosen;
    while (chosen.size() < n - 1) {
      const std::int64_t v = dist(rng);
      if (v != 0) chosen.insert(v);
    }
    std::int64_t sum = 0;
    for (std::int64_t v : chosen) sum += v;
    const std::int64_t last = -sum;
    if (last == 0 || chosen.count(last)) continue;
    chosen.insert(last);
    return ZeroSumSet(std::vector<std::int64_t>(chosen.begin(), chosen.end()));
  }
}

// --- criteria -------------------------------------------------------------

void criterion_d24_maximum(Check& c, const RunOptions& run) {
  SearchTask task{4, 2, 60, true, {}};
  const SearchRecord record = run_search(task, run);
  c.expect(record.max_value == 4, "d(2,4) search max is " + std::to_string(record.max_value));
  const std::vector<std::vector<std::int64_t>> expected{{1, 5, 7, 11}, {1, 11, 19, 29}};
  c.expect(record.argmax_sets == expected, "argmax sets differ from the two extremal quads");
  c.detail << "max d_2 = " << record.max_value << ", argmax " << show({1, 5, 7, 11}) << " and "
           << show({1, 11, 19, 29});
}

void criterion_small_d_values(Check& c, const RunOptions& run) {
  c.expect(divisor_report(IntSet({1})).d == 1, "d({1}) != 1");
  const SearchRecord two = run_search(SearchTask{2, std::nullopt, 20, true, {}}, run);
  c.expect(two.max_value == 2, "d(2) search max is " + std::to_string(two.max_value));
  const SearchRecord three = run_search(SearchTask{3, std::nullopt, 30, true, {}}, run);
  c.expect(three.max_value == 5, "d(3) search max is " + std::to_string(three.max_value));
  c.expect(three.argmax_sets == std::vector<std::vector<std::int64_t>>{{1, 2, 3}},
           "d(3) argmax is not uniquely {1,2,3}");
  c.detail << "d(1)=1, d(2)=2, d(3)=5 with unique argmax {1,2,3}";
}

void criterion_d4_characterization(Check& c, const RunOptions& run) {
  SearchTask task{4, std::nullopt, 60, true, {}};
  const CharacterizationReport report = verify_characterization(task, run);
  c.expect(report.record.max_value == 8,
           "d(4) search max is " + std::to_string(report.record.max_value));
  const std::vector<std::vector<std::int64_t>> expected{{1, 2, 3, 6}, {1, 2, 3, 54}};
  c.expect(report.record.argmax_sets == expected, "argmax sets differ from {1,2,3,6},{1,2,3,54}");
  c.expect(report.attainment_witnessed && report.consistent,
           "characterization inconsistent: " + report.note);
  std::string families;
  for (const ClassifiedSet& cs : report.classified) {
    if (!families.empty()) families += ", ";
    families += show(cs.set) + " -> " + cs.family;
    c.expect(cs.matches, show(cs.set) + " unclassified");
  }
  c.detail << "max d = 8; " << families;
}

void criterion_dn_upper_bound(Check& c, const RunOptions& run) {
  const BoundCheck bound = verify_upper_bound(SearchTask{5, std::nullopt, 40, true, {}}, 16, run);
  c.expect(bound.holds, "a 5-set within [1,40] exceeds d = 16");
  const IntSet witness = construct_anti_pencil(IntSet({1, 2, 3, 4}));
  c.expect(witness.elements() == std::vector<std::int64_t>{1, 2, 3, 4, 2510},
           "anti-pencil from {1,2,3,4} is " + show(witness.elements()));
  const std::uint64_t d = divisor_report(witness).d;
  c.expect(d == 16, "witness d = " + std::to_string(d));
  c.detail << "no violation over " << bound.sets_examined
           << " sets; attainment by {1,2,3,4,2510} with d = 16";
}

void criterion_dk2k_upper_bound(Check& c, const RunOptions& run) {
  const BoundCheck bound = verify_upper_bound(SearchTask{6, 3, 30, true, {}}, 10, run);
  c.expect(bound.holds, "a 6-set within [1,30] exceeds d_3 = 10");
  const IntSet witness = construct_k_anti_pencil(IntSet({1, 2, 3, 4, 5}), 3);
  c.expect(witness.elements() == std::vector<std::int64_t>{1, 2, 3, 4, 5, 27705},
           "3-anti-pencil from {1..5} is " + show(witness.elements()));
  const std::uint64_t d3 = divisor_report(witness).d_k(3);
  c.expect(d3 == 10, "witness d_3 = " + std::to_string(d3));
  c.detail << "no violation over " << bound.sets_examined
           << " sets; attainment by {1,2,3,4,5,27705} with d_3 = 10";
}

void criterion_prime_sets(Check& c) {
  std::mt19937_64 rng(601);
  std::uniform_int_distribution<std::size_t> size_dist(1, 7);
  for (int trial = 0; trial < 100 && c.ok; ++trial) {
    const IntSet base = random_int_set(rng, size_dist(rng), 2, 60);
    const IntSet prime = construct_prime_set(base);
    c.expect(is_prime_set(prime), "base " + show(base.elements()) + " gave non-prime set " +
                                      show(prime.elements()));
    c.expect(is_prime_u64(static_cast<std::uint64_t>(prime.total())),
             "total of " + show(prime.elements()) + " is not prime");
  }
  c.detail << "100 random bases (1 excluded): every construct_prime_set output has d = 1";
}

void criterion_counting_oracles(Check& c) {
  std::mt19937_64 rng(701);
  std::uniform_int_distribution<std::size_t> size_dist(1, 18);
  for (int trial = 0; trial < 200 && c.ok; ++trial) {
    const IntSet set = random_int_set(rng, size_dist(rng), 1, 3000);
    const DivisorReport naive = divisor_report(set);
    const DivisorCounts mitm = count_divisors_mitm(set);
    c.expect(mitm.d == naive.d && mitm.by_k == naive.d_by_k,
             "mitm divisor counts differ on " + show(set.elements()));

    const std::vector<SubsetMask> halves = halving_sets(set);
    const HalvingCounts hc = count_halving_mitm(set);
    c.expect(hc.total == halves.size(),
             "mitm halving count differs on " + show(set.elements()));
    for (std::size_t i = 0; i < halves.size() && c.ok; ++i) {
      for (std::size_t j = i + 1; j < halves.size(); ++j) {
        const int diff = std::popcount(halves[i].bits ^ halves[j].bits);
        c.expect(diff > 2, "two halving sets of " + show(set.elements()) +
                               " differ in only " + std::to_string(diff) + " positions");
      }
    }
  }
  c.detail << "200 random sets (n <= 18): mitm == naive in every stratum; |B xor C| > 2 for all "
              "distinct halving sets";
}

void criterion_census_identities(Check& c) {
  std::mt19937_64 rng(801);
  std::uniform_int_distribution<std::size_t> size_dist(2, 16);
  for (int trial = 0; trial < 200 && c.ok; ++trial) {
    const IntSet set = random_int_set(rng, size_dist(rng), 1, 2000);
    const DivisorReport report = divisor_report(set);
    c.expect(report.d == report.census.neutral + 2 * report.census.abundant,
             "general census identity fails on " + show(set.elements()));
    if (set.size() % 2 == 0) {
      const SeparationCensus strong = census(set, true);
      c.expect(report.d_k(set.size() / 2) == strong.neutral + 2 * strong.abundant,
               "strong census identity fails on " + show(set.elements()));
    }
  }
  c.detail << "200 random sets: d = neutral + 2*abundant and d_{n/2} = neutral_s + 2*abundant_s";
}

void criterion_mu_min(Check& c, const RunOptions& run) {
  MuSearchTask task{4, std::nullopt, 8, MuObjective::Min, {}};
  const MuSearchRecord record = search_mu(task, run);
  c.expect(record.extremal_value == 9,
           "min mu over n=4, bound 8 is " + std::to_string(record.extremal_value));

  std::mt19937_64 rng(901);
  std::uniform_int_distribution<std::size_t> size_dist(2, 14);
  for (int trial = 0; trial < 200 && c.ok; ++trial) {
    const ZeroSumSet set = random_zero_sum_set(rng, size_dist(rng));
    const MuReport report = mu_report(set);
    c.expect(report.zero_subsets % 2 == 0,
             "odd zero-subset count on " + show(set.elements()));
    const std::uint64_t predicted =
        (std::uint64_t{1} << (set.size() - 1)) + report.zero_subsets / 2;
    c.expect(report.mu == predicted, "mu identity fails on " + show(set.elements()));
  }
  c.detail << "min mu = 9 = 2^3 + 1; mu = 2^{n-1} + z/2 held on 200 random zero-sum sets";
}

void criterion_mu_max_bounded(Check& c, const RunOptions& run) {
  const MuSearchRecord four = search_mu(MuSearchTask{4, std::nullopt, 5, MuObjective::Max, {}}, run);
  c.expect(four.extremal_value == 10,
           "max mu over n=4, bound 5 is " + std::to_string(four.extremal_value));
  const std::vector<std::int64_t> balanced{-2, -1, 1, 2};
  c.expect(std::find(four.witness_sets.begin(), four.witness_sets.end(), balanced) !=
               four.witness_sets.end(),
           "{-2,-1,1,2} missing from the witnesses");

  // n=5 within [-4,4]: the unrestricted maximizer {-2,-1,0,1,2} is excluded
  // (0 is not allowed), so cross-check the bounded maximum against a direct
  // enumeration of all C(8,5) candidate sets.
  const MuSearchRecord five = search_mu(MuSearchTask{5, std::nullopt, 4, MuObjective::Max, {}}, run);
  std::uint64_t oracle_best = 0;
  const std::vector<std::int64_t> values{-4, -3, -2, -1, 1, 2, 3, 4};
  for (std::uint64_t mask = 0; mask < (1u << values.size()); ++mask) {
    if (std::popcount(mask) != 5) continue;
    std::vector<std::int64_t> candidate;
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (mask & (std::uint64_t{1} << i)) {
        candidate.push_back(values[i]);
        sum += values[i];
      }
    }
    if (sum != 0) continue;
    std::uint64_t mu = 0;
    for (std::uint64_t sub = 0; sub < 32; ++sub) {
      std::int64_t s = 0;
      for (std::size_t i = 0; i < 5; ++i) {
        if (sub & (std::uint64_t{1} << i)) s += candidate[i];
      }
      if (s >= 0) ++mu;
    }
    oracle_best = std::max(oracle_best, mu);
  }
  c.expect(five.extremal_value == oracle_best,
           "bounded n=5 max mu " + std::to_string(five.extremal_value) +
               " != direct-enumeration value " + std::to_string(oracle_best));
  for (const auto& w : five.witness_sets) {
    c.expect(std::find(w.begin(), w.end(), 0) == w.end(), "witness contains 0");
  }
  c.expect(five.caveat.find("0 excluded") != std::string::npos &&
               five.caveat.find("[-4, 4]") != std::string::npos,
           "integer-bound caveat label missing");
  c.detail << "n=4: max mu = 10 witnessed by {-2,-1,1,2}; n=5 bound 4: max mu = "
           << five.extremal_value << " (bound-restricted; caveat labeled)";
}

void criterion_mms(Check& c, const RunOptions& base_run, const std::string& checkpoint_dir) {
  RunOptions run = base_run;
  run.budget_seconds = 600;
  const auto path = std::filesystem::path(checkpoint_dir.empty() ? "." : checkpoint_dir) /
                    "mms-n8-k2-b28.checkpoint.json";
  run.checkpoint_path = path.string();

  MuSearchTask task{8, 2, 28, MuObjective::Min, {}};
  const MuSearchRecord record = search_mu(task, run);
  c.expect(record.extremal_value == 7 && record.extremal_value == binomial(7, 1),
           "min mu_2 over n=8, bound 28 is " + std::to_string(record.extremal_value));
  const std::vector<std::int64_t> pencil = make_pencil(8).elements();
  c.expect(std::find(record.witness_sets.begin(), record.witness_sets.end(), pencil) !=
               record.witness_sets.end(),
           "the 2-pencil {-7..-1, 28} is not among the witnesses");
  for (const auto& w : record.witness_sets) {
    const MuReport check = mu_report(ZeroSumSet(std::vector<std::int64_t>(w)));
    c.expect(check.mu_k(2) == record.extremal_value,
             "witness " + show(w) + " does not re-verify");
  }
  c.detail << "exhaustive min mu_2 = 7 = C(7,1) over " << record.sets_examined
           << " zero-sum sets; pencil attains it; " << record.witness_sets.size()
           << " witness(es) re-verified";
}

void criterion_determinism(Check& c) {
  SearchTask dmax{4, 2, 60, true, {}};
  MuSearchTask mu{5, 2, 10, MuObjective::Min, {}};
  std::uint64_t dmax_sum = 0, mu_sum = 0;
  bool first = true;
  for (int threads : {1, 4}) {
    for (int depth : {1, 2, 3}) {
      RunOptions run;
      run.threads = threads;
      run.shard_depth = depth;
      const SearchRecord r1 = run_search(dmax, run);
      const MuSearchRecord r2 = search_mu(mu, run);
      if (first) {
        dmax_sum = r1.checksum;
        mu_sum = r2.checksum;
        first = false;
      }
      c.expect(r1.checksum == dmax_sum, "dmax checksum varies with threads=" +
                                            std::to_string(threads) + ", shard_depth=" +
                                            std::to_string(depth));
      c.expect(r2.checksum == mu_sum, "mu checksum varies with threads=" +
                                          std::to_string(threads) + ", shard_depth=" +
                                          std::to_string(depth));
    }
  }
  c.detail << "identical checksums across threads {1,4} x shard depths {1,2,3}";
}

CriterionResult run_one(int index, const std::string& lemma,
                        const std::function<void(Check&)>& body) {
  CriterionResult result;
  result.index = index;
  result.lemma = lemma;
  Check check;
  const auto start = Clock::now();
  try {
    body(check);
    result.pass = check.ok;
  } catch (const std::exception& e) {
    result.pass = false;
    check.detail << "exception: " << e.what();
  }
  result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  result.detail = check.detail.str();
  return result;
}

}  // namespace

std::vector<CriterionResult> run_acceptance_criteria(const ReproOptions& options) {
  RunOptions run;
  run.threads = options.threads;

  std::vector<CriterionResult> results;
  results.push_back(run_one(1, "d(2,4)-maximum", [&](Check& c) { criterion_d24_maximum(c, run); }));
  results.push_back(run_one(2, "small-d-values", [&](Check& c) { criterion_small_d_values(c, run); }));
  results.push_back(
      run_one(3, "d(4)-characterization", [&](Check& c) { criterion_d4_characterization(c, run); }));
  results.push_back(
      run_one(4, "d(n)-upper-bound", [&](Check& c) { criterion_dn_upper_bound(c, run); }));
  results.push_back(
      run_one(5, "d(k,2k)-upper-bound", [&](Check& c) { criterion_dk2k_upper_bound(c, run); }));
  results.push_back(run_one(6, "prime-sets", [&](Check& c) { criterion_prime_sets(c); }));
  results.push_back(
      run_one(7, "counting-oracles", [&](Check& c) { criterion_counting_oracles(c); }));
  results.push_back(
      run_one(8, "census-identities", [&](Check& c) { criterion_census_identities(c); }));
  results.push_back(run_one(9, "mu-min", [&](Check& c) { criterion_mu_min(c, run); }));
  results.push_back(
      run_one(10, "mu-max-bounded", [&](Check& c) { criterion_mu_max_bounded(c, run); }));
  results.push_back(run_one(11, "mms-probe",
                            [&](Check& c) { criterion_mms(c, run, options.checkpoint_dir); }));
  results.push_back(run_one(12, "determinism", [&](Check& c) { criterion_determinism(c); }));
  return results;
}

}  // namespace divisor_lab
