#pragma once

#include <cstdint>
#include <vector>

#include "common.hpp"
#include "truth_table.hpp"

namespace cif {

/*! \brief Signed Walsh-Hadamard coefficients of a binary truth table.
 *
 * Convention: W(w) = sum_x (-1)^(f(x) xor <w,x>) with f in {0,1} and <.,.>
 * the inner product mod 2. Masks are indexed by rank, coordinate 1 most
 * significant, like truth table entries. Under this convention W(0) =
 * 2^n - 2*weight(f), so balancedness is exactly W(0) = 0, and Parseval reads
 * sum_w W(w)^2 = 4^n.
 */
struct walsh_spectrum {
  unsigned n = 0;
  std::vector<std::int64_t> coefficients;

  std::int64_t at_mask(std::uint64_t w) const { return coefficients.at(w); }
};

/// Fast Walsh-Hadamard transform, n butterfly stages over 2^n entries.
inline walsh_spectrum walsh_transform(const truth_table& f) {
  if (f.alphabet() != 2)
    throw std::invalid_argument("walsh_transform supports q=2 only, got q=" +
                                std::to_string(f.alphabet()));
  const unsigned n = f.arity();
  const std::uint64_t size = f.num_entries();

  walsh_spectrum spectrum;
  spectrum.n = n;
  spectrum.coefficients.resize(size);
  for (std::uint64_t i = 0; i < size; ++i)
    spectrum.coefficients[i] = f.value_at(i) ? -1 : 1;

  for (std::uint64_t half = 1; half < size; half <<= 1) {
    for (std::uint64_t block = 0; block < size; block += 2 * half) {
      for (std::uint64_t i = block; i < block + half; ++i) {
        const std::int64_t a = spectrum.coefficients[i];
        const std::int64_t b = spectrum.coefficients[i + half];
        spectrum.coefficients[i] = a + b;
        spectrum.coefficients[i + half] = a - b;
      }
    }
  }
  return spectrum;
}

/*! \brief Spectral correlation immunity check.
 *
 * f is correlation immune of order r iff W(w) = 0 for every mask w with
 * 1 <= wt(w) <= r. Independent of the face-walking definition checker; the
 * two must agree on every input.
 */
inline bool is_ci_spectral(const truth_table& f, unsigned r) {
  if (r > f.arity()) throw std::out_of_range("order r exceeds arity");
  const walsh_spectrum spectrum = walsh_transform(f);
  for (std::uint64_t w = 1; w < spectrum.coefficients.size(); ++w) {
    const unsigned wt = popcount64(w);
    if (wt >= 1 && wt <= r && spectrum.coefficients[w] != 0) return false;
  }
  return true;
}

/// Spectral resilience check: additionally requires W(0) = 0.
inline bool is_resilient_spectral(const truth_table& f, unsigned r) {
  const walsh_spectrum spectrum = walsh_transform(f);
  if (spectrum.coefficients[0] != 0) return false;
  for (std::uint64_t w = 1; w < spectrum.coefficients.size(); ++w) {
    const unsigned wt = popcount64(w);
    if (wt >= 1 && wt <= r && spectrum.coefficients[w] != 0) return false;
  }
  return true;
}

}  // namespace cif
