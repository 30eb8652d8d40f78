#pragma once

#include <climits>
#include <cstdint>
#include <vector>

#include "common.hpp"
#include "enumerate.hpp"
#include "face.hpp"
#include "splitting.hpp"

namespace cif {

/*! \brief Counts exact covers of {0,...,num_items-1} by the given options.
 *
 * Each option is a bitmask of the items it covers. Algorithm X search:
 * always branch on the uncovered item with the fewest remaining options.
 * This explores a different tree than the anchored backtracking in
 * enumerate.hpp, which is the point: the two are compared against each
 * other.
 */
inline std::uint64_t exact_cover_count(unsigned num_items,
                                       const std::vector<std::uint64_t>& options) {
  if (num_items == 0) return 1;
  if (num_items > 64) throw capacity_error("exact cover universe limited to 64 items");
  const std::uint64_t full = num_items == 64 ? ~std::uint64_t{0}
                                             : (std::uint64_t{1} << num_items) - 1;

  // Options covering each item.
  std::vector<std::vector<std::uint32_t>> by_item(num_items);
  for (std::uint32_t i = 0; i < options.size(); ++i)
    for (unsigned item = 0; item < num_items; ++item)
      if ((options[i] >> item) & 1) by_item[item].push_back(i);

  std::uint64_t count = 0;
  auto search = [&](auto&& self, std::uint64_t covered) -> void {
    if (covered == full) {
      ++count;
      return;
    }
    unsigned best_item = num_items;
    std::size_t best_candidates = SIZE_MAX;
    for (unsigned item = 0; item < num_items; ++item) {
      if ((covered >> item) & 1) continue;
      std::size_t candidates = 0;
      for (std::uint32_t i : by_item[item])
        if (!(options[i] & covered)) ++candidates;
      if (candidates < best_candidates) {
        best_candidates = candidates;
        best_item = item;
        if (candidates == 0) break;
      }
    }
    if (best_candidates == 0) return;
    for (std::uint32_t i : by_item[best_item]) {
      if (options[i] & covered) continue;
      self(self, covered | options[i]);
    }
  };
  search(search, 0);
  return count;
}

/// Every face of Q_2^n (all 3^n of them), optionally restricted by dimension.
inline std::vector<face> all_faces(unsigned n, unsigned min_dimension = 0,
                                   unsigned max_dimension = UINT_MAX) {
  std::vector<face> faces;
  const std::uint64_t dir_sets = ipow(2, n);
  for (std::uint64_t dirs = 0; dirs < dir_sets; ++dirs) {
    const unsigned dim = popcount64(dirs);
    if (dim < min_dimension || dim > max_dimension) continue;
    std::vector<unsigned> fixed_coords;
    for (unsigned coord = 1; coord <= n; ++coord)
      if (!((dirs >> (n - coord)) & 1)) fixed_coords.push_back(coord);
    const std::uint64_t assignments = ipow(2, static_cast<unsigned>(fixed_coords.size()));
    for (std::uint64_t a = 0; a < assignments; ++a) {
      std::vector<face::assignment> fixed;
      fixed.reserve(fixed_coords.size());
      for (std::size_t i = 0; i < fixed_coords.size(); ++i) {
        const unsigned shift = static_cast<unsigned>(fixed_coords.size() - 1 - i);
        fixed.emplace_back(fixed_coords[i], static_cast<std::uint8_t>((a >> shift) & 1));
      }
      faces.emplace_back(2, n, std::move(fixed));
    }
  }
  return faces;
}

inline std::uint64_t point_set_mask(const face& L) {
  std::uint64_t mask = 0;
  for (const point& x : L.points()) mask |= std::uint64_t{1} << rank(2, x);
  return mask;
}

namespace detail {

inline std::uint64_t cover_count_by_faces(unsigned n, unsigned min_dimension,
                                          unsigned max_dimension) {
  check_enumeration_arity(n);
  std::vector<std::uint64_t> options;
  for (const face& L : all_faces(n, min_dimension, max_dimension))
    options.push_back(point_set_mask(L));
  return exact_cover_count(static_cast<unsigned>(ipow(2, n)), options);
}

}  // namespace detail

inline std::uint64_t count_splittings_exact_cover(unsigned n) {
  return detail::cover_count_by_faces(n, 0, UINT_MAX);
}

inline std::uint64_t count_matchings_exact_cover(unsigned n) {
  if (n < 1) throw std::invalid_argument("matchings need n >= 1");
  return detail::cover_count_by_faces(n, 1, 1);
}

inline std::uint64_t count_splittings_no_zero_faces_exact_cover(unsigned n) {
  return detail::cover_count_by_faces(n, 1, UINT_MAX);
}

namespace detail {

inline std::uint64_t agreed_count(std::uint64_t a, std::uint64_t b, const char* what,
                                  unsigned n) {
  if (a != b)
    throw verification_error(std::string(what) + " strategies disagree at n=" +
                             std::to_string(n) + ": backtracking says " + std::to_string(a) +
                             ", exact cover says " + std::to_string(b));
  return a;
}

}  // namespace detail

/// Splitting count, computed by both independent strategies; they must agree.
inline std::uint64_t count_splittings(unsigned n) {
  return detail::agreed_count(count_splittings_backtracking(n),
                              count_splittings_exact_cover(n), "splitting count", n);
}

/// Perfect matching count, computed by both independent strategies.
inline std::uint64_t count_matchings(unsigned n) {
  return detail::agreed_count(count_matchings_backtracking(n), count_matchings_exact_cover(n),
                              "matching count", n);
}

/// Count of splittings containing no 0-dimensional face, both strategies.
inline std::uint64_t count_splittings_no_zero_faces(unsigned n) {
  std::uint64_t backtracking = 0;
  for_each_splitting(n, [&](const splitting& s) {
    for (const face& L : s.faces)
      if (L.dimension() == 0) return;
    ++backtracking;
  });
  return detail::agreed_count(backtracking, count_splittings_no_zero_faces_exact_cover(n),
                              "0-face-free splitting count", n);
}

}  // namespace cif
