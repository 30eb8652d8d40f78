#pragma once

#include <cstdint>

#include "common.hpp"
#include "immunity.hpp"
#include "truth_table.hpp"

namespace cif {

/*! \brief Counts r-resilient binary truth tables on n variables by scanning
 * all 2^(2^n) tables.
 *
 * Brute force by design: serves as the independent ground truth the
 * constructive counting claims are compared against. Guarded at n <= 4
 * (65536 tables); larger n is refused.
 */
inline std::uint64_t exhaustive_resilient_census(unsigned n, unsigned r) {
  if (n > 4)
    throw capacity_error("exhaustive census over 2^(2^n) tables needs n <= 4, got n=" +
                         std::to_string(n));
  if (r > n) throw std::out_of_range("order r exceeds arity");

  const std::uint64_t entries = ipow(2, n);
  const std::uint64_t tables = ipow(2, static_cast<unsigned>(entries));
  std::uint64_t count = 0;
  for (std::uint64_t bits = 0; bits < tables; ++bits) {
    if (popcount64(bits) * 2 != entries) continue;  // resilient requires balanced
    truth_table f(2, n);
    for (std::uint64_t i = 0; i < entries; ++i)
      f.set_value(i, static_cast<unsigned>((bits >> i) & 1));
    if (is_correlation_immune(f, r)) ++count;
  }
  return count;
}

}  // namespace cif
