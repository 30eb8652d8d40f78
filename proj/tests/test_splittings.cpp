#include <catch2/catch_amalgamated.hpp>

#include <set>

#include <cif/cif.hpp>

#include "oracles.hpp"

using cif::face;
using cif::splitting;

TEST_CASE("validate: whole square is a splitting") {
  const splitting whole = cif::make_splitting(2, {face(2, 2, {})});
  CHECK(cif::validate_splitting(whole).ok());
}

TEST_CASE("validate: duplicate face reports the overlap vertex") {
  const splitting bad = cif::make_splitting(2, {face(2, 2, {{1, 0}}), face(2, 2, {{1, 0}})});
  const auto report = cif::validate_splitting(bad);
  REQUIRE(report.kind == cif::validation_report::status::overlap);
  CHECK(report.vertex == 0);  // (0,0)
}

TEST_CASE("validate: missing half reports the first gap vertex") {
  const splitting partial = cif::make_splitting(2, {face(2, 2, {{1, 0}})});
  const auto report = cif::validate_splitting(partial);
  REQUIRE(report.kind == cif::validation_report::status::gap);
  CHECK(report.vertex == 2);  // (1,0)
}

TEST_CASE("enumeration counts at tiny arity") {
  CHECK(cif::enumerate_splittings(0).size() == 1);
  CHECK(cif::enumerate_splittings(1).size() == 2);
  CHECK(cif::enumerate_splittings(2).size() == 8);
  CHECK(cif::enumerate_splittings(3).size() == 154);
}

TEST_CASE("matching enumeration counts") {
  CHECK(cif::enumerate_matchings(1).size() == 1);
  CHECK(cif::enumerate_matchings(2).size() == 2);
  CHECK(cif::enumerate_matchings(3).size() == 9);
  CHECK_THROWS_AS(cif::enumerate_matchings(0), std::invalid_argument);
}

TEST_CASE("every emitted splitting validates; matchings are all edges") {
  for (unsigned n = 0; n <= 3; ++n) {
    cif::for_each_splitting(n, [&](const splitting& s) {
      REQUIRE(cif::validate_splitting(s).ok());
      // canonical face order
      for (std::size_t i = 1; i < s.faces.size(); ++i)
        REQUIRE(s.faces[i - 1].min_rank() < s.faces[i].min_rank());
    });
  }
  cif::for_each_matching(3, [&](const splitting& s) {
    REQUIRE(cif::validate_splitting(s).ok());
    for (const face& L : s.faces) REQUIRE(L.dimension() == 1);
  });
}

TEST_CASE("enumeration emits no duplicates") {
  for (unsigned n = 0; n <= 3; ++n) {
    const auto all = cif::enumerate_splittings(n);
    const std::set<splitting> dedup(all.begin(), all.end());
    CHECK(dedup.size() == all.size());
  }
}

TEST_CASE("counting strategies agree and match the frozen values") {
  CHECK(cif::count_splittings(1) == 2);
  CHECK(cif::count_splittings(2) == 8);
  CHECK(cif::count_splittings(3) == 154);
  CHECK(cif::count_matchings(4) == 272);

  for (unsigned n = 1; n <= 4; ++n) {
    CHECK(cif::count_splittings_backtracking(n) == cif::count_splittings_exact_cover(n));
    CHECK(cif::count_matchings_backtracking(n) == cif::count_matchings_exact_cover(n));
  }
}

TEST_CASE("set-partition oracle confirms the splitting counts") {
  CHECK(oracles::count_splittings_set_partitions(1) == cif::count_splittings(1));
  CHECK(oracles::count_splittings_set_partitions(2) == cif::count_splittings(2));
  CHECK(oracles::count_splittings_set_partitions(3) == cif::count_splittings(3));
}

TEST_CASE("edge-list oracle confirms the matching counts") {
  for (unsigned n = 1; n <= 4; ++n)
    CHECK(oracles::count_matchings_edge_list(n) == cif::count_matchings(n));
}

TEST_CASE("matchings never outnumber splittings") {
  for (unsigned n = 1; n <= 4; ++n)
    CHECK(cif::count_matchings(n) <= cif::count_splittings(n));
}

TEST_CASE("splitting counts respect the direction-word bound") {
  CHECK(cif::splitting_count_bound(2) == 9);
  CHECK(cif::splitting_count_bound(3) == 256);
  for (unsigned n = 1; n <= 4; ++n)
    CHECK(cif::bigint(cif::count_splittings(n)) <= cif::splitting_count_bound(n));
}

TEST_CASE("zero-face-free counts") {
  CHECK(cif::count_splittings_no_zero_faces(1) == 1);
  CHECK(cif::count_splittings_no_zero_faces(2) == 3);
}

TEST_CASE("enumeration refuses oversized arity") {
  CHECK_THROWS_AS(cif::enumerate_splittings(5), cif::capacity_error);
  CHECK_THROWS_AS(cif::count_splittings(5), cif::capacity_error);
  CHECK_THROWS_AS(cif::count_matchings(5), cif::capacity_error);
}

TEST_CASE("exact cover counter on a hand-built instance") {
  // Items {0,1,2}; options {0,1}, {2}, {0,1,2}, {1,2}: covers are
  // {{0,1},{2}} and {{0,1,2}}.
  CHECK(cif::exact_cover_count(3, {0b011, 0b100, 0b111, 0b110}) == 2);
  CHECK(cif::exact_cover_count(2, {0b01}) == 0);
  CHECK(cif::exact_cover_count(0, {}) == 1);
}
