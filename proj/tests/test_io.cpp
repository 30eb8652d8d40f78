#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <string>

#include <cif/cif.hpp>

using cif::face;
using cif::splitting;
using cif::truth_table;

TEST_CASE("truth table text round trip") {
  const auto f = cif::parse_truth_table("2 3\n01101001\n");
  CHECK(f.alphabet() == 2);
  CHECK(f.arity() == 3);
  CHECK(f.bit_string() == "01101001");
  CHECK(cif::truth_table_text(f) == "2 3\n01101001\n");

  const auto q4 = cif::parse_truth_table("4 1\n0011\n");
  CHECK(q4.alphabet() == 4);
  CHECK(cif::truth_table_text(q4) == "4 1\n0011\n");
}

TEST_CASE("truth table parse errors carry line and column") {
  try {
    cif::parse_truth_table("2 2\n0a10\n");
    FAIL("expected parse_error");
  } catch (const cif::parse_error& e) {
    CHECK(e.line == 2);
    CHECK(e.column == 2);
  }

  try {
    cif::parse_truth_table("2 2\n010\n");
    FAIL("expected parse_error");
  } catch (const cif::parse_error& e) {
    CHECK(e.line == 2);
  }

  CHECK_THROWS_AS(cif::parse_truth_table("3 2\n0101\n"), cif::parse_error);
  CHECK_THROWS_AS(cif::parse_truth_table(""), cif::parse_error);
  CHECK_THROWS_AS(cif::parse_truth_table("2 junk\n0110\n"), cif::parse_error);
}

TEST_CASE("canonical splitting serialization") {
  const splitting split_x1 =
      cif::make_splitting(2, {face(2, 2, {{1, 1}}), face(2, 2, {{1, 0}})});
  CHECK(cif::splitting_to_json(split_x1) ==
        "{\"n\": 2, \"faces\": [{\"fixed\": [[1, 0]]}, {\"fixed\": [[1, 1]]}]}");

  const splitting whole = cif::make_splitting(2, {face(2, 2, {})});
  CHECK(cif::splitting_to_json(whole) == "{\"n\": 2, \"faces\": [{\"fixed\": []}]}");
}

TEST_CASE("splitting JSON parse round trip") {
  for (unsigned n = 0; n <= 3; ++n) {
    cif::for_each_splitting(n, [&](const splitting& s) {
      const splitting reparsed = cif::parse_splitting_json(cif::splitting_to_json(s));
      REQUIRE(reparsed == s);
    });
  }
}

TEST_CASE("splitting JSON rejects malformed input") {
  CHECK_THROWS_AS(cif::parse_splitting_json("not json"), std::invalid_argument);
  CHECK_THROWS_AS(cif::parse_splitting_json("{\"n\": 2}"), std::invalid_argument);
  CHECK_THROWS_AS(cif::parse_splitting_json("{\"n\": 2, \"faces\": [{}]}"),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      cif::parse_splitting_json("{\"n\": 2, \"faces\": [{\"fixed\": [[1, 7]]}]}"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      cif::parse_splitting_json("{\"n\": 2, \"faces\": [{\"fixed\": [[5, 0]]}]}"),
      std::invalid_argument);
}

TEST_CASE("hashes are stable and distinct across splittings") {
  const splitting whole = cif::make_splitting(2, {face(2, 2, {})});
  CHECK(cif::splitting_hash(whole) == cif::splitting_hash(whole));
  CHECK(cif::splitting_hash(whole).size() == 16);

  std::set<std::string> hashes;
  std::uint64_t total = 0;
  cif::for_each_splitting(3, [&](const splitting& s) {
    hashes.insert(cif::splitting_hash(s));
    ++total;
  });
  CHECK(hashes.size() == total);
}

TEST_CASE("direction code string round trip") {
  const cif::direction_code code{2, {1, 1}};
  CHECK(cif::code_to_string(code) == "1,1");
  CHECK(cif::parse_code(2, "1,1") == code);
  CHECK(cif::parse_code(0, "") == cif::direction_code{0, {}});
  CHECK_THROWS_AS(cif::parse_code(2, "1"), std::invalid_argument);
  CHECK_THROWS_AS(cif::parse_code(2, "1,3"), std::invalid_argument);
  CHECK_THROWS_AS(cif::parse_code(2, "1,x"), std::invalid_argument);
}

TEST_CASE("audit JSON names the colliding code and members") {
  const std::string doc = cif::audit_json(cif::injectivity_audit(2));
  CHECK(doc.find("\"splittings\":8") != std::string::npos);
  CHECK(doc.find("\"codes\":7") != std::string::npos);
  CHECK(doc.find("\"code\":\"1,1\"") != std::string::npos);
}
