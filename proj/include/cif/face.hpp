#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "common.hpp"
#include "truth_table.hpp"

namespace cif {

/*! \brief An axis-aligned subcube of Q_q^n.
 *
 * Described by assignments (coordinate, symbol) for the fixed coordinates;
 * coordinates are 1-based and kept sorted. The remaining m = n - |fixed|
 * coordinates range over the whole alphabet, so the face has q^m points.
 */
class face {
 public:
  using assignment = std::pair<unsigned, std::uint8_t>;

  face(unsigned q, unsigned n, std::vector<assignment> fixed)
      : q_(q), n_(n), fixed_(std::move(fixed)) {
    std::sort(fixed_.begin(), fixed_.end());
    for (std::size_t i = 0; i < fixed_.size(); ++i) {
      auto [coord, symbol] = fixed_[i];
      if (coord < 1 || coord > n_)
        throw std::invalid_argument("face coordinate " + std::to_string(coord) +
                                    " out of range [1," + std::to_string(n_) + "]");
      if (symbol >= q_)
        throw std::invalid_argument("face symbol " + std::to_string(symbol) +
                                    " out of range for alphabet size " + std::to_string(q_));
      if (i > 0 && fixed_[i - 1].first == coord)
        throw std::invalid_argument("face fixes coordinate " + std::to_string(coord) +
                                    " twice");
    }
  }

  unsigned alphabet() const { return q_; }
  unsigned arity() const { return n_; }
  unsigned dimension() const { return n_ - static_cast<unsigned>(fixed_.size()); }
  const std::vector<assignment>& fixed() const { return fixed_; }

  bool fixes(unsigned coord) const {
    for (auto [c, v] : fixed_)
      if (c == coord) return true;
    return false;
  }

  bool contains(const point& x) const {
    if (x.size() != n_) return false;
    for (auto [coord, symbol] : fixed_)
      if (x[coord - 1] != symbol) return false;
    return true;
  }

  /// The face's point of minimum rank: fixed coordinates at their symbols,
  /// free coordinates at 0.
  point min_point() const {
    point x(n_, 0);
    for (auto [coord, symbol] : fixed_) x[coord - 1] = symbol;
    return x;
  }

  std::uint64_t min_rank() const { return rank(q_, min_point()); }

  /// All q^dimension() points of the face, in ascending rank order.
  std::vector<point> points() const {
    std::vector<unsigned> free_coords;
    for (unsigned c = 1; c <= n_; ++c)
      if (!fixes(c)) free_coords.push_back(c);

    std::vector<point> result;
    result.reserve(ipow(q_, static_cast<unsigned>(free_coords.size())));
    point x = min_point();
    const std::uint64_t combos = ipow(q_, static_cast<unsigned>(free_coords.size()));
    for (std::uint64_t a = 0; a < combos; ++a) {
      std::uint64_t rest = a;
      // Earlier free coordinates are more significant, so ascending a gives
      // ascending rank.
      for (std::size_t i = free_coords.size(); i-- > 0;) {
        x[free_coords[i] - 1] = static_cast<std::uint8_t>(rest % q_);
        rest /= q_;
      }
      result.push_back(x);
    }
    return result;
  }

  friend bool operator==(const face&, const face&) = default;
  friend bool operator<(const face& a, const face& b) {
    if (a.q_ != b.q_) return a.q_ < b.q_;
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.fixed_ < b.fixed_;
  }

 private:
  unsigned q_;
  unsigned n_;
  std::vector<assignment> fixed_;
};

/// Number of points x in L with f(x) = 1.
inline std::uint64_t ones_count_on_face(const truth_table& f, const face& L) {
  if (L.alphabet() != f.alphabet() || L.arity() != f.arity())
    throw std::invalid_argument("face and truth table live in different spaces");
  std::uint64_t count = 0;
  for (const point& x : L.points()) count += f(x);
  return count;
}

}  // namespace cif
