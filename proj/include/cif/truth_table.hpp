#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "common.hpp"

namespace cif {

/// A point of the hypercube Q_q^n: n symbols, each in [0, q).
using point = std::vector<std::uint8_t>;

/// Index of a point, coordinate 1 most significant: rank(x) = sum x_i * q^(n-i).
inline std::uint64_t rank(unsigned q, const point& x) {
  std::uint64_t index = 0;
  for (std::uint8_t symbol : x) {
    if (symbol >= q)
      throw std::invalid_argument("invalid point: symbol " + std::to_string(symbol) +
                                  " out of range for alphabet size " + std::to_string(q));
    index = index * q + symbol;
  }
  return index;
}

/// Exact inverse of rank for arity n.
inline point unrank(unsigned q, unsigned n, std::uint64_t index) {
  point x(n);
  for (unsigned i = n; i-- > 0;) {
    x[i] = static_cast<std::uint8_t>(index % q);
    index /= q;
  }
  if (index != 0)
    throw std::out_of_range("point index out of range for Q_" + std::to_string(q) + "^" +
                            std::to_string(n));
  return x;
}

/// Parity of the Hamming weight of a binary point.
inline unsigned parity_weight(const point& y) {
  unsigned acc = 0;
  for (std::uint8_t symbol : y) {
    if (symbol >= 2) throw std::invalid_argument("parity_weight expects a binary point");
    acc ^= symbol;
  }
  return acc;
}

/*! \brief A function f : Q_q^n -> {0,1} stored as an indexed bit sequence.
 *
 * Entry i holds f(unrank(i)); coordinate 1 is the most significant digit of
 * the index, so the stored order matches the tuple order (x_1, ..., x_n).
 * Supported alphabets are q = 2 and q = 4.
 */
class truth_table {
 public:
  truth_table(unsigned q, unsigned n) : q_(q), n_(n), values_(checked_size(q, n), 0) {}

  /// f described by a {0,1} character string of length q^n, entry i = f(unrank(i)).
  static truth_table from_bits(unsigned q, unsigned n, std::string_view bits) {
    truth_table t(q, n);
    if (bits.size() != t.values_.size())
      throw std::invalid_argument("truth table needs " + std::to_string(t.values_.size()) +
                                  " entries, got " + std::to_string(bits.size()));
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (bits[i] != '0' && bits[i] != '1')
        throw std::invalid_argument(std::string("invalid truth table character '") + bits[i] +
                                    "'");
      t.values_[i] = static_cast<std::uint8_t>(bits[i] - '0');
    }
    return t;
  }

  unsigned alphabet() const { return q_; }
  unsigned arity() const { return n_; }
  std::uint64_t num_entries() const { return values_.size(); }

  unsigned value_at(std::uint64_t index) const { return values_.at(index); }
  void set_value(std::uint64_t index, unsigned bit) {
    values_.at(index) = static_cast<std::uint8_t>(bit & 1u);
  }

  unsigned operator()(const point& x) const { return values_.at(rank(q_, x)); }

  std::uint64_t weight() const {
    std::uint64_t w = 0;
    for (std::uint8_t v : values_) w += v;
    return w;
  }

  std::string bit_string() const {
    std::string s(values_.size(), '0');
    for (std::size_t i = 0; i < values_.size(); ++i) s[i] += values_[i];
    return s;
  }

  friend bool operator==(const truth_table&, const truth_table&) = default;
  friend bool operator<(const truth_table& a, const truth_table& b) {
    if (a.q_ != b.q_) return a.q_ < b.q_;
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.values_ < b.values_;
  }

 private:
  static std::uint64_t checked_size(unsigned q, unsigned n) {
    if (q != 2 && q != 4)
      throw std::invalid_argument("unsupported alphabet size " + std::to_string(q));
    return ipow(q, n);
  }

  unsigned q_;
  unsigned n_;
  std::vector<std::uint8_t> values_;
};

/// True iff f takes the values 0 and 1 equally often.
inline bool is_balanced(const truth_table& f) { return 2 * f.weight() == f.num_entries(); }

}  // namespace cif
