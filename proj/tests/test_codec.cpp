#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <set>

#include <cif/cif.hpp>

#include "oracles.hpp"

using cif::direction_code;
using cif::face;
using cif::splitting;

namespace {

const splitting singletons2 = cif::make_splitting(
    2, {face(2, 2, {{1, 0}, {2, 0}}), face(2, 2, {{1, 0}, {2, 1}}),
        face(2, 2, {{1, 1}, {2, 0}}), face(2, 2, {{1, 1}, {2, 1}})});
const splitting split_x1 =
    cif::make_splitting(2, {face(2, 2, {{1, 0}}), face(2, 2, {{1, 1}})});
const splitting split_x2 =
    cif::make_splitting(2, {face(2, 2, {{2, 0}}), face(2, 2, {{2, 1}})});
const splitting whole2 = cif::make_splitting(2, {face(2, 2, {})});

std::vector<std::uint8_t> labels(const direction_code& c) { return c.labels; }

}  // namespace

TEST_CASE("even vertices are listed in ascending rank") {
  CHECK(cif::even_vertex_ranks(2) == std::vector<std::uint64_t>{0, 3});
  CHECK(cif::even_vertex_ranks(3) == std::vector<std::uint64_t>{0, 3, 5, 6});
  CHECK(cif::expected_code_length(0) == 0);
  CHECK(cif::expected_code_length(4) == 8);
}

TEST_CASE("deterministic encodings of the n=2 splittings") {
  CHECK(labels(cif::encode_splitting(singletons2)) == std::vector<std::uint8_t>{0, 0});
  CHECK(labels(cif::encode_splitting(split_x2)) == std::vector<std::uint8_t>{1, 1});
  CHECK(labels(cif::encode_splitting(whole2)) == std::vector<std::uint8_t>{1, 1});
  CHECK(labels(cif::encode_splitting(split_x1)) == std::vector<std::uint8_t>{2, 2});
}

TEST_CASE("admissible code sets") {
  const auto whole_codes = cif::admissible_codes(whole2);
  std::set<std::vector<std::uint8_t>> as_sets;
  for (const auto& code : whole_codes) as_sets.insert(code.labels);
  CHECK(as_sets == std::set<std::vector<std::uint8_t>>{{1, 1}, {1, 2}, {2, 1}, {2, 2}});

  const auto forced = cif::admissible_codes(split_x1);
  REQUIRE(forced.size() == 1);
  CHECK(forced[0].labels == std::vector<std::uint8_t>{2, 2});

  const splitting whole1 = cif::make_splitting(1, {face(2, 1, {})});
  const auto single = cif::admissible_codes(whole1);
  REQUIRE(single.size() == 1);
  CHECK(single[0].labels == std::vector<std::uint8_t>{1});
}

TEST_CASE("matchings and all-singleton splittings have a forced word") {
  for (unsigned n = 1; n <= 3; ++n) {
    cif::for_each_matching(
        n, [&](const splitting& s) { REQUIRE(cif::admissible_code_count(s) == 1); });
    std::vector<face> points;
    for (std::uint64_t v = 0; v < cif::ipow(2, n); ++v) {
      std::vector<face::assignment> fixed;
      for (unsigned c = 1; c <= n; ++c)
        fixed.emplace_back(c, static_cast<std::uint8_t>((v >> (n - c)) & 1));
      points.emplace_back(2, n, std::move(fixed));
    }
    CHECK(cif::admissible_code_count(cif::make_splitting(n, std::move(points))) == 1);
  }
}

TEST_CASE("encoding is always admissible (n <= 4)") {
  for (unsigned n = 0; n <= 4; ++n) {
    cif::for_each_splitting(n, [&](const splitting& s) {
      REQUIRE(cif::code_admissible_for(cif::encode_splitting(s), s));
    });
  }
}

TEST_CASE("oracle agreement: admissible labels recomputed from scratch (n <= 3)") {
  for (unsigned n = 1; n <= 3; ++n) {
    cif::for_each_splitting(n, [&](const splitting& s) {
      const auto sets = cif::admissible_label_sets(s);
      const auto evens = cif::even_vertex_ranks(n);
      REQUIRE(sets.size() == evens.size());
      for (std::size_t i = 0; i < evens.size(); ++i) {
        auto expected = oracles::admissible_labels_from_scratch(s, cif::unrank(2, n, evens[i]));
        std::sort(expected.begin(), expected.end());
        auto actual = sets[i];
        std::sort(actual.begin(), actual.end());
        REQUIRE(actual == expected);
      }
    });
  }
}

TEST_CASE("decoding finds exactly the consistent splittings") {
  const auto only_singletons = cif::consistent_splittings(direction_code{2, {0, 0}});
  REQUIRE(only_singletons.size() == 1);
  CHECK(only_singletons[0] == singletons2);

  const auto only_whole = cif::consistent_splittings(direction_code{2, {2, 1}});
  REQUIRE(only_whole.size() == 1);
  CHECK(only_whole[0] == whole2);

  const auto ambiguous = cif::consistent_splittings(direction_code{2, {1, 1}});
  REQUIRE(ambiguous.size() == 2);
  CHECK(std::count(ambiguous.begin(), ambiguous.end(), whole2) == 1);
  CHECK(std::count(ambiguous.begin(), ambiguous.end(), split_x2) == 1);

  CHECK_THROWS_AS(cif::consistent_splittings(direction_code{2, {1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(cif::consistent_splittings(direction_code{2, {3, 1}}),
                  std::invalid_argument);
}

TEST_CASE("every splitting is consistent with its own encoding (n <= 3)") {
  for (unsigned n = 0; n <= 3; ++n) {
    cif::for_each_splitting(n, [&](const splitting& s) {
      const auto matches = cif::consistent_splittings(cif::encode_splitting(s));
      REQUIRE(std::count(matches.begin(), matches.end(), s) == 1);
    });
  }
}

TEST_CASE("injectivity audit at n = 0, 1, 2") {
  const auto r0 = cif::injectivity_audit(0);
  CHECK(r0.splitting_count == 1);
  CHECK(r0.distinct_code_count == 1);
  CHECK(r0.collisions.empty());

  const auto r1 = cif::injectivity_audit(1);
  CHECK(r1.splitting_count == 2);
  CHECK(r1.distinct_code_count == 2);
  CHECK(r1.collisions.empty());

  const auto r2 = cif::injectivity_audit(2);
  CHECK(r2.splitting_count == 8);
  CHECK(r2.distinct_code_count == 7);
  REQUIRE(r2.collisions.size() == 1);
  CHECK(r2.collisions[0].code.labels == std::vector<std::uint8_t>{1, 1});
  CHECK(r2.collisions[0].members.size() == 2);
}

TEST_CASE("distinct code count never exceeds the word space (n <= 4)") {
  for (unsigned n = 1; n <= 4; ++n) {
    const auto report = cif::injectivity_audit(n);
    CHECK(report.distinct_code_count <= report.splitting_count);
    CHECK(cif::bigint(report.distinct_code_count) <= cif::splitting_count_bound(n));
  }
}

TEST_CASE("audit grouping matches the from-scratch encoding (n <= 3)") {
  for (unsigned n = 1; n <= 3; ++n) {
    std::map<direction_code, std::vector<std::size_t>> groups;
    std::size_t index = 0;
    cif::for_each_splitting(n, [&](const splitting& s) {
      groups[oracles::encode_from_scratch(s)].push_back(index++);
    });
    const auto report = cif::injectivity_audit(n);
    CHECK(report.distinct_code_count == groups.size());
    std::vector<std::vector<std::size_t>> expected_collisions;
    for (const auto& [code, members] : groups)
      if (members.size() >= 2) expected_collisions.push_back(members);
    REQUIRE(report.collisions.size() == expected_collisions.size());
    for (std::size_t i = 0; i < expected_collisions.size(); ++i)
      CHECK(report.collisions[i].members == expected_collisions[i]);
  }
}
