#include <doctest.h>

#include "divisor_lab/report.hpp"

using namespace divisor_lab;

TEST_CASE("task serialization round-trips") {
  SearchTask task{4, 2, 60, true, {1, 5}};
  CHECK(task_from_json(task_json(task)) == task);

  SearchTask no_k{5, std::nullopt, 40, false, {}};
  CHECK(task_from_json(task_json(no_k)) == no_k);

  MuSearchTask mu{8, 2, 28, MuObjective::Min, {}};
  CHECK(mu_task_from_json(task_json(mu)) == mu);

  MuSearchTask mu_max{4, std::nullopt, 5, MuObjective::Max, {-2}};
  CHECK(mu_task_from_json(task_json(mu_max)) == mu_max);
}

TEST_CASE("documents dump identically after a parse round trip") {
  const DivisorReport report = divisor_report(IntSet({1, 5, 7, 11}));
  const Json doc = result_document("divisors 1,5,7,11 --json", Json{{"set", {1, 5, 7, 11}}},
                                   divisor_report_json(report, true), 0.25);
  const std::string once = doc.dump(2);
  const std::string twice = Json::parse(once).dump(2);
  CHECK(once == twice);
  CHECK(doc.at("schema_version") == kSchemaVersion);
  CHECK(doc.at("library_version") == kLibraryVersion);
  CHECK(doc.at("timing").at("seconds") == 0.25);
}

TEST_CASE("replaying a search reproduces the outputs bit-for-bit") {
  const SearchTask task{4, 2, 60, true, {}};
  const std::string first = record_json(run_search(task)).dump();
  const std::string second = record_json(run_search(task)).dump();
  CHECK(first == second);
}

TEST_CASE("divisor report JSON carries the headline statistics") {
  const Json j = divisor_report_json(divisor_report(IntSet({2, 3, 6})), true);
  CHECK(j.at("d") == 1);
  CHECK(j.at("prime_set") == true);
  CHECK(j.at("total") == 11);

  const Json quad = divisor_report_json(divisor_report(IntSet({1, 2, 3, 54})), false);
  CHECK(quad.at("d_by_k") == Json{{"1", 3}, {"2", 3}, {"3", 1}, {"4", 1}});
  CHECK(quad.at("anti_pencil") == true);
  CHECK(!quad.contains("divisors"));
}

TEST_CASE("witness CSV") {
  CHECK(witness_csv({{1, 2, 3}, {2, 4, 6}}, 5) == "set,value\n1 2 3,5\n2 4 6,5\n");
  CHECK(witness_csv({}, 7) == "set,value\n");
}
