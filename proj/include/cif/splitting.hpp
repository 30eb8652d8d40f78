#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "common.hpp"
#include "face.hpp"

namespace cif {

/*! \brief A partition of the binary hypercube Q_2^n into pairwise disjoint
 * faces.
 *
 * Faces are kept in canonical order: ascending rank of each face's minimum
 * point. Two splittings are equal iff their canonical face sequences are
 * equal, so equality and ordering are plain sequence comparisons.
 */
struct splitting {
  unsigned n = 0;
  std::vector<face> faces;

  friend bool operator==(const splitting&, const splitting&) = default;
  friend bool operator<(const splitting& a, const splitting& b) {
    if (a.n != b.n) return a.n < b.n;
    return a.faces < b.faces;
  }
};

/// Builds a splitting from faces in any order; sorts them canonically.
inline splitting make_splitting(unsigned n, std::vector<face> faces) {
  for (const face& L : faces) {
    if (L.alphabet() != 2)
      throw std::invalid_argument("splittings are over the binary hypercube");
    if (L.arity() != n)
      throw std::invalid_argument("face arity " + std::to_string(L.arity()) +
                                  " does not match splitting arity " + std::to_string(n));
  }
  std::sort(faces.begin(), faces.end(), [](const face& a, const face& b) {
    const std::uint64_t ra = a.min_rank(), rb = b.min_rank();
    return ra != rb ? ra < rb : a < b;
  });
  return splitting{n, std::move(faces)};
}

struct validation_report {
  enum class status { ok, bad_face, overlap, gap };

  status kind = status::ok;
  std::string message;   // empty when ok
  std::uint64_t vertex = 0;  // offending vertex rank for overlap/gap
  std::size_t face_a = 0;    // offending face indices for overlap
  std::size_t face_b = 0;

  bool ok() const { return kind == status::ok; }
};

/*! \brief Checks that the faces are pairwise disjoint and cover Q_2^n.
 *
 * Returns a report rather than throwing: naming the first offending vertex
 * (and face pair, for overlaps) is part of the contract. Faces are scanned
 * in canonical order, so the report is deterministic.
 */
inline validation_report validate_splitting(const splitting& s) {
  validation_report report;
  if (s.n > 63) {
    report.kind = validation_report::status::bad_face;
    report.message = "splitting arity too large to validate";
    return report;
  }
  const std::uint64_t num_points = ipow(2, s.n);

  std::vector<std::size_t> owner(num_points, SIZE_MAX);
  for (std::size_t i = 0; i < s.faces.size(); ++i) {
    const face& L = s.faces[i];
    if (L.alphabet() != 2 || L.arity() != s.n) {
      report.kind = validation_report::status::bad_face;
      report.message = "face " + std::to_string(i) + " does not live in Q_2^" +
                       std::to_string(s.n);
      report.face_a = i;
      return report;
    }
    for (const point& x : L.points()) {
      const std::uint64_t v = rank(2, x);
      if (owner[v] != SIZE_MAX) {
        report.kind = validation_report::status::overlap;
        report.vertex = v;
        report.face_a = owner[v];
        report.face_b = i;
        report.message = "faces " + std::to_string(owner[v]) + " and " + std::to_string(i) +
                         " overlap at vertex " + std::to_string(v);
        return report;
      }
      owner[v] = i;
    }
  }
  for (std::uint64_t v = 0; v < num_points; ++v) {
    if (owner[v] == SIZE_MAX) {
      report.kind = validation_report::status::gap;
      report.vertex = v;
      report.message = "vertex " + std::to_string(v) + " is not covered by any face";
      return report;
    }
  }
  return report;
}

/// Throws invalid_argument unless the splitting validates.
inline void require_valid(const splitting& s) {
  const validation_report report = validate_splitting(s);
  if (!report.ok()) throw std::invalid_argument("invalid splitting: " + report.message);
}

/// Index of the face containing each vertex, by vertex rank.
inline std::vector<std::size_t> face_of_vertex(const splitting& s) {
  std::vector<std::size_t> owner(ipow(2, s.n), SIZE_MAX);
  for (std::size_t i = 0; i < s.faces.size(); ++i)
    for (const point& x : s.faces[i].points()) owner[rank(2, x)] = i;
  return owner;
}

}  // namespace cif
