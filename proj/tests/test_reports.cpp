#include <catch2/catch_amalgamated.hpp>

#include <cif/cif.hpp>

TEST_CASE("bound values are exact big integers") {
  CHECK(cif::splitting_count_bound(1) == 2);
  CHECK(cif::splitting_count_bound(2) == 9);
  CHECK(cif::splitting_count_bound(3) == 256);
  CHECK(cif::splitting_count_bound(4) == 390625);
  // 6^(2^4) = 2821109907456; 7^(2^5) overflows every machine word
  CHECK(cif::splitting_count_bound(5) == cif::bigint("2821109907456"));
  CHECK(cif::splitting_count_bound(6).str() == "1104427674243920646305299201");
  CHECK(cif::simple_construction_count(3) == 256);
  CHECK(cif::simple_construction_count_log2(3) == 8.0);
}

TEST_CASE("census values at n = 1 and n = 2") {
  const auto r1 = cif::build_census(1);
  CHECK(r1.splitting_count == 2);
  CHECK(r1.matching_count == 1);
  CHECK(r1.splitting_count_no_0faces == 1);
  CHECK(r1.distinct_q4_tables == 2u);
  CHECK(r1.distinct_boolean_lifts == 2u);
  CHECK(r1.splitting_count_bound_exact == 2);

  const auto r2 = cif::build_census(2);
  CHECK(r2.splitting_count == 8);
  CHECK(r2.matching_count == 2);
  CHECK(r2.splitting_count_no_0faces == 3);
  CHECK(r2.distinct_q4_tables == 8u);
  CHECK(r2.distinct_boolean_lifts == 8u);
  CHECK(r2.splitting_count_bound_exact == 9);
  CHECK(r2.skipped.empty());
}

TEST_CASE("census at n = 4 skips the function-level fields and says so") {
  const auto r = cif::build_census(4);
  CHECK(r.splitting_count == 89512);
  CHECK(r.matching_count == 272);
  CHECK_FALSE(r.distinct_q4_tables.has_value());
  CHECK_FALSE(r.distinct_boolean_lifts.has_value());
  REQUIRE(r.skipped.size() == 2);
  CHECK(r.skipped[0].find("distinct_q4_tables") != std::string::npos);

  CHECK_THROWS_AS(cif::build_census(5), cif::capacity_error);
  CHECK_THROWS_AS(cif::build_census(0), cif::capacity_error);
}

TEST_CASE("census CSV is byte-stable") {
  const std::string expected =
      "n,splitting_count,splitting_count_no_0faces,matching_count,distinct_q4_tables,"
      "distinct_boolean_lifts,splitting_count_bound,log2_splitting_count,"
      "log2_splitting_count_no_0faces,log2_matching_count,log2_distinct_q4_tables,"
      "log2_distinct_boolean_lifts,log2_splitting_count_bound\n"
      "2,8,3,2,8,8,9,3.000000,1.584963,1.000000,3.000000,3.000000,3.169925\n";
  CHECK(cif::census_csv(cif::build_census(2)) == expected);
  CHECK(cif::census_csv(cif::build_census(2)) == cif::census_csv(cif::build_census(2)));
}

TEST_CASE("census JSON carries the same numbers") {
  const std::string doc = cif::census_json(cif::build_census(2));
  CHECK(doc.find("\"splitting_count\":8") != std::string::npos);
  CHECK(doc.find("\"matching_count\":2") != std::string::npos);
  CHECK(doc.find("\"splitting_count_bound\":\"9\"") != std::string::npos);
  CHECK(doc.find("\"distinct_q4_tables\":8") != std::string::npos);
  CHECK(doc.back() == '\n');
}

TEST_CASE("bounds table rows") {
  const auto rows = cif::bounds_table(2, 3);
  REQUIRE(rows.size() == 4);

  CHECK(rows[0].quantity == "simple_construction_count");
  CHECK(rows[0].exact_value == "256");
  CHECK(rows[0].log2_value == 8.0);

  CHECK(rows[1].quantity == "splitting_count_bound");
  CHECK(rows[1].exact_value == "9");
  CHECK(cif::format_fixed(rows[1].log2_value) == "3.169925");

  CHECK(rows[2].quantity == "splittings_enumerated");
  CHECK(rows[2].exact_value == "8");
  CHECK(rows[2].log2_value == 3.0);

  CHECK(rows[3].kind == "asymptotic");
  CHECK(rows[3].exact_value.empty());
}

TEST_CASE("bounds renderers") {
  const auto rows = cif::bounds_table(1, 1);
  const std::string csv = cif::bounds_csv(rows);
  CHECK(csv.find("splitting_count_bound,n=1,1.000000,2,exact\n") != std::string::npos);
  CHECK(csv.find("splittings_enumerated,n=1,1.000000,2,exact\n") != std::string::npos);
  const std::string json = cif::bounds_json(rows);
  CHECK(json.find("\"kind\":\"asymptotic\"") != std::string::npos);
  CHECK(json.find("\"exact_value\":null") != std::string::npos);
}
