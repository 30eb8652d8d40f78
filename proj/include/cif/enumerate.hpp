#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "common.hpp"
#include "splitting.hpp"

namespace cif {

/// Full enumeration is kept to n <= 4; beyond that the streams are
/// astronomically large (the admissible direction words alone exceed 10^12
/// at n = 5).
inline constexpr unsigned max_enumeration_arity = 4;

namespace detail {

inline void check_enumeration_arity(unsigned n) {
  if (n > max_enumeration_arity)
    throw capacity_error("full enumeration supports n <= " +
                         std::to_string(max_enumeration_arity) + ", got n=" +
                         std::to_string(n));
}

/// Point-set mask of the face anchored at vertex `v` with free rank-bit set
/// `dirs`: v must have zero bits on `dirs`, so v is the face's minimum point.
inline std::uint64_t face_mask(std::uint64_t v, std::uint64_t dirs) {
  std::uint64_t mask = 0;
  std::uint64_t s = 0;
  do {
    mask |= std::uint64_t{1} << (v | s);
    s = (s - dirs) & dirs;
  } while (s != 0);
  return mask;
}

inline face face_from_anchor(unsigned n, std::uint64_t v, std::uint64_t dirs) {
  std::vector<face::assignment> fixed;
  for (unsigned coord = 1; coord <= n; ++coord) {
    const unsigned bit = n - coord;  // coordinate 1 is the most significant rank bit
    if (!((dirs >> bit) & 1))
      fixed.emplace_back(coord, static_cast<std::uint8_t>((v >> bit) & 1));
  }
  return face(2, n, std::move(fixed));
}

/*! Recursion behind every splitting stream.
 *
 * Take the lowest-rank uncovered vertex v. In any completion, the face that
 * covers v has its minimum point exactly at v: the minimum point is obtained
 * by zeroing free coordinates, lies in the same (uncovered) face, and cannot
 * rank below the lowest uncovered vertex. Branching over the faces anchored
 * at v therefore yields every splitting exactly once, faces emitted in
 * canonical (ascending min-rank) order, with no isomorphism rejection.
 *
 * `SingleDirs` restricts the branching to 1-dimensional faces, which turns
 * the stream into perfect matchings of the hypercube.
 */
template <bool SingleDirs, typename Fn>
void recurse_splittings(unsigned n, std::uint64_t full_mask, std::uint64_t covered,
                        std::vector<std::pair<std::uint64_t, std::uint64_t>>& anchors,
                        Fn&& emit) {
  if (covered == full_mask) {
    emit(anchors);
    return;
  }
  std::uint64_t v = 0;
  while ((covered >> v) & 1) ++v;

  // Free directions must sit on zero bits of v (so v stays minimal).
  std::vector<unsigned> zero_bits;
  for (unsigned b = 0; b < n; ++b)
    if (!((v >> b) & 1)) zero_bits.push_back(b);

  if constexpr (SingleDirs) {
    for (unsigned b : zero_bits) {
      const std::uint64_t dirs = std::uint64_t{1} << b;
      const std::uint64_t mask = face_mask(v, dirs);
      if (mask & covered) continue;
      anchors.emplace_back(v, dirs);
      recurse_splittings<SingleDirs>(n, full_mask, covered | mask, anchors, emit);
      anchors.pop_back();
    }
  } else {
    const std::uint64_t combos = std::uint64_t{1} << zero_bits.size();
    for (std::uint64_t c = 0; c < combos; ++c) {
      std::uint64_t dirs = 0;
      for (std::size_t i = 0; i < zero_bits.size(); ++i)
        if ((c >> i) & 1) dirs |= std::uint64_t{1} << zero_bits[i];
      const std::uint64_t mask = face_mask(v, dirs);
      if (mask & covered) continue;
      anchors.emplace_back(v, dirs);
      recurse_splittings<SingleDirs>(n, full_mask, covered | mask, anchors, emit);
      anchors.pop_back();
    }
  }
}

inline std::uint64_t all_points_mask(unsigned n) {
  const std::uint64_t num_points = ipow(2, n);
  return num_points == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << num_points) - 1;
}

template <bool SingleDirs, typename Fn>
void stream_splittings(unsigned n, Fn&& fn) {
  check_enumeration_arity(n);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> anchors;
  recurse_splittings<SingleDirs>(
      n, all_points_mask(n), 0, anchors,
      [&](const std::vector<std::pair<std::uint64_t, std::uint64_t>>& parts) {
        std::vector<face> faces;
        faces.reserve(parts.size());
        for (auto [v, dirs] : parts) faces.push_back(face_from_anchor(n, v, dirs));
        // Anchors appear in ascending vertex order already, which is the
        // canonical face order.
        fn(splitting{n, std::move(faces)});
      });
}

template <bool SingleDirs>
std::uint64_t count_stream(unsigned n) {
  check_enumeration_arity(n);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> anchors;
  std::uint64_t count = 0;
  recurse_splittings<SingleDirs>(n, all_points_mask(n), 0, anchors,
                                 [&](const auto&) { ++count; });
  return count;
}

}  // namespace detail

/// Streams every splitting of Q_2^n exactly once, in canonical order.
template <typename Fn>
void for_each_splitting(unsigned n, Fn&& fn) {
  detail::stream_splittings<false>(n, std::forward<Fn>(fn));
}

/// Streams every perfect matching (splitting into 1-faces only).
template <typename Fn>
void for_each_matching(unsigned n, Fn&& fn) {
  if (n < 1) throw std::invalid_argument("matchings need n >= 1");
  detail::stream_splittings<true>(n, std::forward<Fn>(fn));
}

inline std::vector<splitting> enumerate_splittings(unsigned n) {
  std::vector<splitting> all;
  for_each_splitting(n, [&](splitting s) { all.push_back(std::move(s)); });
  return all;
}

inline std::vector<splitting> enumerate_matchings(unsigned n) {
  std::vector<splitting> all;
  for_each_matching(n, [&](splitting s) { all.push_back(std::move(s)); });
  return all;
}

/// Splitting count by the canonical backtracking alone. count_splittings()
/// cross-checks this against the exact-cover strategy.
inline std::uint64_t count_splittings_backtracking(unsigned n) {
  return detail::count_stream<false>(n);
}

inline std::uint64_t count_matchings_backtracking(unsigned n) {
  if (n < 1) throw std::invalid_argument("matchings need n >= 1");
  return detail::count_stream<true>(n);
}

}  // namespace cif
