#pragma once

#include <array>
#include <cstdint>
#include <string_view>

#include "common.hpp"
#include "splitting.hpp"
#include "truth_table.hpp"

namespace cif {

/*! \brief A bijection Q_2^2 -> Q_4, written as a permutation of {0,1,2,3}
 * applied after the canonical pairing (x,y) -> 2x+y.
 *
 * There are exactly 24 of them; the default is the identity permutation,
 * under which the high bit of phi(x,y) is x and the low bit is y.
 */
class phi_map {
 public:
  phi_map() : perm_{0, 1, 2, 3} {}

  explicit phi_map(std::array<std::uint8_t, 4> perm) : perm_(perm) {
    std::uint8_t seen = 0;
    for (std::uint8_t v : perm_) {
      if (v > 3) throw std::invalid_argument("phi permutation entries must be in {0,1,2,3}");
      seen |= static_cast<std::uint8_t>(1u << v);
    }
    if (seen != 0xf) throw std::invalid_argument("phi must be a permutation of {0,1,2,3}");
  }

  /// Parses the four digits of the permutation, e.g. "0123" for the identity.
  static phi_map from_digits(std::string_view digits) {
    if (digits.size() != 4)
      throw std::invalid_argument("phi permutation must be 4 digits, e.g. \"0123\"");
    std::array<std::uint8_t, 4> perm{};
    for (std::size_t i = 0; i < 4; ++i) {
      if (digits[i] < '0' || digits[i] > '3')
        throw std::invalid_argument("phi digits must be in {0,1,2,3}");
      perm[i] = static_cast<std::uint8_t>(digits[i] - '0');
    }
    return phi_map(perm);
  }

  std::uint8_t map(unsigned x, unsigned y) const { return perm_[2 * (x & 1) + (y & 1)]; }

  std::string digits() const {
    std::string s(4, '0');
    for (std::size_t i = 0; i < 4; ++i) s[i] += perm_[i];
    return s;
  }

 private:
  std::array<std::uint8_t, 4> perm_;
};

/*! \brief F(x,y) = f(x) xor |y| on 2m variables.
 *
 * x is the first m coordinates, y the last m; |y| is the parity of the
 * Hamming weight of y. Every face leaving some y_i free balances F, so F is
 * resilient of order at least m-1, and f is recoverable from F at y = 0, so
 * the map f -> F is injective: it yields 2^(2^m) distinct (m-1)-resilient
 * functions.
 */
inline truth_table simple_lift(const truth_table& f) {
  if (f.alphabet() != 2) throw std::invalid_argument("simple_lift expects a binary table");
  const unsigned m = f.arity();
  truth_table lifted(2, 2 * m);
  const std::uint64_t half = f.num_entries();
  for (std::uint64_t x = 0; x < half; ++x)
    for (std::uint64_t y = 0; y < half; ++y)
      lifted.set_value(x * half + y, f.value_at(x) ^ (popcount64(y) & 1));
  return lifted;
}

/*! \brief Appends m fresh variables and xors their parity in.
 *
 * result(x,y) = f(x) xor |y|. An r-resilient input gives an output that is
 * at least (r+m)-resilient: the only masks with a surviving Walsh
 * coefficient combine an input mask of weight > r with the all-ones mask on
 * the fresh block.
 */
inline truth_table xor_extend(const truth_table& f, unsigned m) {
  if (f.alphabet() != 2) throw std::invalid_argument("xor_extend expects a binary table");
  if (m < 1) throw std::invalid_argument("xor_extend needs at least one fresh variable");
  truth_table extended(2, f.arity() + m);
  const std::uint64_t inner = f.num_entries();
  const std::uint64_t fresh = ipow(2, m);
  for (std::uint64_t x = 0; x < inner; ++x)
    for (std::uint64_t y = 0; y < fresh; ++y)
      extended.set_value(x * fresh + y, f.value_at(x) ^ (popcount64(y) & 1));
  return extended;
}

/*! \brief The quaternary function induced by a splitting of Q_2^n.
 *
 * View Q_4^n as Q_2^n x Q_2^n by digit: z_i = 2*u_i + v_i. Each face L of
 * the splitting induces the block {z : u in L}. On that block the value is
 *
 *     f(z) = xor over fixed coordinates i of L of v_i
 *        xor over free  coordinates j of L of u_j.
 *
 * On a coordinate fixed to u_i = 0 the contribution is the indicator of
 * z_i = 1, on a free coordinate it is the indicator of z_i in {2,3}. The
 * result is balanced and correlation immune of order n-1: every
 * 1-dimensional face of Q_4^n holds exactly two ones.
 */
inline truth_table q4_from_splitting(const splitting& s) {
  require_valid(s);
  const unsigned n = s.n;
  const std::vector<std::size_t> owner = face_of_vertex(s);

  // Per-face coordinate roles, as bit masks over coordinates (bit n-coord).
  std::vector<std::uint32_t> free_mask(s.faces.size(), 0);
  for (std::size_t i = 0; i < s.faces.size(); ++i) {
    std::uint32_t fixed_bits = 0;
    for (auto [coord, symbol] : s.faces[i].fixed())
      fixed_bits |= std::uint32_t{1} << (n - coord);
    free_mask[i] = ~fixed_bits & ((std::uint32_t{1} << n) - 1);
  }

  truth_table f(4, n);
  const std::uint64_t entries = f.num_entries();
  for (std::uint64_t z = 0; z < entries; ++z) {
    std::uint32_t u = 0, v = 0;
    std::uint64_t rest = z;
    for (unsigned bit = 0; bit < n; ++bit) {  // bit = n - coord
      const unsigned digit = rest & 3;
      rest >>= 2;
      u |= (digit >> 1) << bit;
      v |= (digit & 1) << bit;
    }
    const std::size_t L = owner[u];
    const unsigned value = popcount64(v & ~free_mask[L]) ^ popcount64(u & free_mask[L]);
    f.set_value(z, value & 1);
  }
  return f;
}

/*! \brief F(x,y) = f(phi(x_1,y_1), ..., phi(x_n,y_n)) on 2n binary variables.
 *
 * The output layout is block form: coordinates (x_1,...,x_n,y_1,...,y_n),
 * pair (x_i, y_i) feeding phi. If f is correlation immune of order n-1 with
 * two ones in every 1-dimensional face, F is resilient of order n-1: any
 * face leaving a pair (x_i,y_i) fully free projects onto 1-faces of Q_4^n.
 */
inline truth_table boolean_lift(const truth_table& f, const phi_map& phi) {
  if (f.alphabet() != 4) throw std::invalid_argument("boolean_lift expects a quaternary table");
  const unsigned n = f.arity();
  truth_table lifted(2, 2 * n);
  const std::uint64_t half = ipow(2, n);
  for (std::uint64_t x = 0; x < half; ++x) {
    for (std::uint64_t y = 0; y < half; ++y) {
      std::uint64_t z = 0;
      for (unsigned coord = 1; coord <= n; ++coord) {
        const unsigned bit = n - coord;
        z = z * 4 + phi.map((x >> bit) & 1, (y >> bit) & 1);
      }
      lifted.set_value(x * half + y, f.value_at(z));
    }
  }
  return lifted;
}

/// The full pipeline: splitting -> quaternary table -> Boolean lift.
/// Always (n-1)-resilient on 2n variables; distinct splittings give
/// distinct outputs for a fixed phi.
inline truth_table splitting_to_resilient(const splitting& s, const phi_map& phi) {
  return boolean_lift(q4_from_splitting(s), phi);
}

}  // namespace cif
