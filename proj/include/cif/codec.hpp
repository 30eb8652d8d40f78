#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "common.hpp"
#include "enumerate.hpp"
#include "splitting.hpp"

namespace cif {

/*! \brief A direction word for a splitting of Q_2^n.
 *
 * One label in {0,...,n} per even-Hamming-weight vertex, listed in ascending
 * rank order (2^(n-1) labels for n >= 1, none for n = 0). Label 0 marks a
 * vertex sitting in a 0-dimensional face; otherwise the label is a 1-based
 * coordinate pointing to an in-face neighbor of minimum weight.
 */
struct direction_code {
  unsigned n = 0;
  std::vector<std::uint8_t> labels;

  friend bool operator==(const direction_code&, const direction_code&) = default;
  friend bool operator<(const direction_code& a, const direction_code& b) {
    if (a.n != b.n) return a.n < b.n;
    return a.labels < b.labels;
  }
};

inline std::size_t expected_code_length(unsigned n) {
  return n == 0 ? 0 : static_cast<std::size_t>(ipow(2, n - 1));
}

/// Ranks of the even-weight vertices of Q_2^n, ascending.
inline std::vector<std::uint64_t> even_vertex_ranks(unsigned n) {
  std::vector<std::uint64_t> ranks;
  const std::uint64_t num_points = ipow(2, n);
  for (std::uint64_t v = 0; v < num_points; ++v)
    if (popcount64(v) % 2 == 0) ranks.push_back(v);
  return ranks;
}

namespace detail {

/*! Admissible labels for one even vertex v inside its face.
 *
 * Flipping a free coordinate d moves to an in-face neighbor whose weight is
 * wt(v) - 1 when v_d = 1 and wt(v) + 1 when v_d = 0, so the minimum-weight
 * neighbors are reached through the free coordinates set to 1 when any
 * exist, and through every free coordinate otherwise. 0-dimensional faces
 * admit only the label 0.
 */
inline std::vector<std::uint8_t> admissible_labels_at(unsigned n, std::uint64_t v,
                                                      const face& L) {
  if (L.dimension() == 0) return {0};
  std::vector<std::uint8_t> decreasing, increasing;
  for (unsigned coord = 1; coord <= n; ++coord) {
    if (L.fixes(coord)) continue;
    const unsigned bit = n - coord;
    if ((v >> bit) & 1)
      decreasing.push_back(static_cast<std::uint8_t>(coord));
    else
      increasing.push_back(static_cast<std::uint8_t>(coord));
  }
  return decreasing.empty() ? increasing : decreasing;
}

}  // namespace detail

/// Admissible label set of every even vertex, in ascending vertex rank order.
/// At n = 0 the word is empty, matching expected_code_length.
inline std::vector<std::vector<std::uint8_t>> admissible_label_sets(const splitting& s) {
  require_valid(s);
  if (s.n == 0) return {};
  const std::vector<std::size_t> owner = face_of_vertex(s);
  std::vector<std::vector<std::uint8_t>> sets;
  for (std::uint64_t v : even_vertex_ranks(s.n))
    sets.push_back(detail::admissible_labels_at(s.n, v, s.faces[owner[v]]));
  return sets;
}

/*! \brief The deterministic direction word of a splitting.
 *
 * Each even vertex gets the smallest admissible label. The arbitrary-choice
 * rule this pins down ("any minimum-weight in-face neighbor") does not make
 * the word unique per splitting; injectivity_audit measures the collisions.
 */
inline direction_code encode_splitting(const splitting& s) {
  direction_code code;
  code.n = s.n;
  for (const auto& labels : admissible_label_sets(s)) code.labels.push_back(labels.front());
  return code;
}

/// Number of admissible words, i.e. the product of the per-vertex set sizes.
inline std::uint64_t admissible_code_count(const splitting& s) {
  std::uint64_t count = 1;
  for (const auto& labels : admissible_label_sets(s)) count *= labels.size();
  return count;
}

/// Materializes the full admissible word set (Cartesian product).
inline std::vector<direction_code> admissible_codes(const splitting& s) {
  const auto sets = admissible_label_sets(s);
  std::vector<direction_code> codes;
  codes.push_back(direction_code{s.n, {}});
  for (const auto& labels : sets) {
    std::vector<direction_code> extended;
    extended.reserve(codes.size() * labels.size());
    for (const direction_code& prefix : codes) {
      for (std::uint8_t label : labels) {
        direction_code next = prefix;
        next.labels.push_back(label);
        extended.push_back(std::move(next));
      }
    }
    codes = std::move(extended);
  }
  return codes;
}

inline bool code_admissible_for(const direction_code& code, const splitting& s) {
  const auto sets = admissible_label_sets(s);
  if (code.labels.size() != sets.size()) return false;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    bool found = false;
    for (std::uint8_t label : sets[i]) found = found || label == code.labels[i];
    if (!found) return false;
  }
  return true;
}

/*! \brief All splittings consistent with a direction word.
 *
 * There is no direct reconstruction procedure; consistency is decided by
 * exhaustive search over the splittings of Q_2^n, so the arity is capacity
 * guarded like the enumeration itself. encode_splitting(s) is always
 * consistent with s.
 */
inline std::vector<splitting> consistent_splittings(const direction_code& code) {
  if (code.labels.size() != expected_code_length(code.n))
    throw std::invalid_argument("direction code for n=" + std::to_string(code.n) + " needs " +
                                std::to_string(expected_code_length(code.n)) + " labels, got " +
                                std::to_string(code.labels.size()));
  for (std::uint8_t label : code.labels)
    if (label > code.n)
      throw std::invalid_argument("direction label " + std::to_string(label) +
                                  " exceeds arity " + std::to_string(code.n));

  std::vector<splitting> matches;
  for_each_splitting(code.n, [&](const splitting& s) {
    if (code_admissible_for(code, s)) matches.push_back(s);
  });
  return matches;
}

struct injectivity_report {
  struct collision_class {
    direction_code code;
    std::vector<std::size_t> members;  // indices into the enumeration order
  };

  unsigned n = 0;
  std::uint64_t splitting_count = 0;
  std::uint64_t distinct_code_count = 0;
  std::vector<collision_class> collisions;  // codes hit by >= 2 splittings
};

/*! \brief Groups all splittings of Q_2^n by their deterministic direction
 * word and reports every collision.
 *
 * The word length argument says 2^(n-1) labels suffice to identify a
 * splitting; the audit quantifies how far the deterministic smallest-label
 * encoding actually is from injective (at n = 2 it already collides once).
 */
inline injectivity_report injectivity_audit(unsigned n) {
  injectivity_report report;
  report.n = n;
  std::map<direction_code, std::vector<std::size_t>> groups;
  std::size_t index = 0;
  for_each_splitting(n, [&](const splitting& s) {
    groups[encode_splitting(s)].push_back(index++);
  });
  report.splitting_count = index;
  report.distinct_code_count = groups.size();
  for (auto& [code, members] : groups)
    if (members.size() >= 2)
      report.collisions.push_back(injectivity_report::collision_class{code, members});
  return report;
}

}  // namespace cif
