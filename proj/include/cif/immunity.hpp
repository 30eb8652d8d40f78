#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "common.hpp"
#include "truth_table.hpp"

namespace cif {

namespace detail {

/// Walks one face given by fixing the coordinates in `coords` (1-based,
/// ascending) to the digits of `assignment` and returns its ones count.
/// Index arithmetic only; no face object is materialized.
inline std::uint64_t face_ones_count(const truth_table& f, const std::vector<unsigned>& coords,
                                     std::uint64_t assignment) {
  const unsigned q = f.alphabet();
  const unsigned n = f.arity();

  // Place value of each coordinate in the rank, and the fixed base offset.
  std::uint64_t base = 0;
  {
    std::uint64_t a = assignment;
    for (std::size_t i = coords.size(); i-- > 0;) {
      const unsigned coord = coords[i];
      base += (a % q) * ipow(q, n - coord);
      a /= q;
    }
  }

  std::vector<std::uint64_t> free_places;
  free_places.reserve(n - coords.size());
  {
    std::size_t k = 0;
    for (unsigned c = 1; c <= n; ++c) {
      if (k < coords.size() && coords[k] == c) {
        ++k;
      } else {
        free_places.push_back(ipow(q, n - c));
      }
    }
  }

  std::uint64_t ones = 0;
  const std::uint64_t combos = ipow(q, static_cast<unsigned>(free_places.size()));
  for (std::uint64_t a = 0; a < combos; ++a) {
    std::uint64_t index = base;
    std::uint64_t rest = a;
    for (std::size_t i = free_places.size(); i-- > 0;) {
      index += (rest % q) * free_places[i];
      rest /= q;
    }
    ones += f.value_at(index);
  }
  return ones;
}

inline bool first_combination(std::vector<unsigned>& coords, unsigned n, unsigned r) {
  coords.resize(r);
  for (unsigned i = 0; i < r; ++i) coords[i] = i + 1;
  return r <= n;
}

inline bool next_combination(std::vector<unsigned>& coords, unsigned n) {
  const unsigned r = static_cast<unsigned>(coords.size());
  for (unsigned i = r; i-- > 0;) {
    if (coords[i] < n - (r - 1 - i)) {
      ++coords[i];
      for (unsigned j = i + 1; j < r; ++j) coords[j] = coords[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace detail

/*! \brief Definition-based correlation immunity check.
 *
 * f is correlation immune of order r iff every face obtained by fixing
 * exactly r coordinates (every choice of r coordinates, every assignment of
 * symbols to them) contains the same number of ones. Faces fixing fewer
 * coordinates follow by monotonicity and are not re-checked here. Order 0 is
 * vacuously true: the only 0-fixing face is the whole cube.
 */
inline bool is_correlation_immune(const truth_table& f, unsigned r) {
  const unsigned n = f.arity();
  if (r > n) throw std::out_of_range("order r exceeds arity");
  if (r == 0) return true;

  const unsigned q = f.alphabet();
  std::vector<unsigned> coords;
  detail::first_combination(coords, n, r);
  std::optional<std::uint64_t> expected;
  do {
    const std::uint64_t assignments = ipow(q, r);
    for (std::uint64_t a = 0; a < assignments; ++a) {
      const std::uint64_t ones = detail::face_ones_count(f, coords, a);
      if (!expected)
        expected = ones;
      else if (ones != *expected)
        return false;
    }
  } while (detail::next_combination(coords, n));
  return true;
}

/// Correlation immune of order r and balanced.
inline bool is_resilient(const truth_table& f, unsigned r) {
  return is_balanced(f) && is_correlation_immune(f, r);
}

/// Largest r such that f is r-resilient; empty if f is unbalanced.
inline std::optional<unsigned> max_resiliency_order(const truth_table& f) {
  if (!is_balanced(f)) return std::nullopt;
  unsigned best = 0;
  for (unsigned r = 1; r <= f.arity(); ++r) {
    if (!is_correlation_immune(f, r)) break;
    best = r;
  }
  return best;
}

}  // namespace cif
