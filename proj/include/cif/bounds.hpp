#pragma once

#include <cmath>
#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

#include "common.hpp"

namespace cif {

using bigint = boost::multiprecision::cpp_int;

namespace detail {

inline bigint bigint_pow(bigint base, std::uint64_t exponent) {
  bigint result = 1;
  while (exponent) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

}  // namespace detail

/// Number of direction words of length 2^(n-1) over {0,...,n}, i.e.
/// (n+1)^(2^(n-1)). Upper-bounds the number of splittings of Q_2^n.
inline bigint splitting_count_bound(unsigned n) {
  if (n < 1) throw std::invalid_argument("splitting count bound needs n >= 1");
  return detail::bigint_pow(bigint(n + 1), ipow(2, n - 1));
}

inline double splitting_count_bound_log2(unsigned n) {
  if (n < 1) throw std::invalid_argument("splitting count bound needs n >= 1");
  return std::exp2(static_cast<double>(n - 1)) * std::log2(static_cast<double>(n + 1));
}

/// Number of functions produced by the parity lift on m inner variables:
/// 2^(2^m), one output per inner table.
inline bigint simple_construction_count(unsigned m) {
  return detail::bigint_pow(bigint(2), ipow(2, m));
}

inline double simple_construction_count_log2(unsigned m) {
  return std::exp2(static_cast<double>(m));
}

/// log2 of N^(2^((N/2)-1)) evaluated at N = 2n output variables: the
/// asymptotic-only form of the count of (n-1)-resilient functions on 2n
/// variables the splitting pipeline yields. Reported for display; no exact
/// claim is attached to it at small n (the exact lower bound at small n is
/// the enumerated splitting count itself).
inline double construction_count_asymptotic_log2(unsigned n) {
  if (n < 1) throw std::invalid_argument("asymptotic bound needs n >= 1");
  return std::exp2(static_cast<double>(n) - 1.0) * std::log2(2.0 * static_cast<double>(n));
}

}  // namespace cif
