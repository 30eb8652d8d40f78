#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cif {

/// Raised when an enumeration or scan is requested beyond the sizes the
/// library is willing to run exhaustively.
struct capacity_error : std::runtime_error {
  explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when two independent computations of the same quantity disagree,
/// or when a constructed object fails the property it is guaranteed to have.
/// Seeing this exception always indicates a bug, never bad user input.
struct verification_error : std::runtime_error {
  explicit verification_error(const std::string& what) : std::runtime_error(what) {}
};

/// Input-text error with position information.
struct parse_error : std::invalid_argument {
  parse_error(unsigned line, unsigned column, const std::string& message)
      : std::invalid_argument("line " + std::to_string(line) + ", column " +
                              std::to_string(column) + ": " + message),
        line(line),
        column(column) {}

  unsigned line;
  unsigned column;
};

inline std::uint64_t ipow(std::uint64_t base, unsigned exponent) {
  std::uint64_t result = 1;
  while (exponent--) result *= base;
  return result;
}

inline unsigned popcount64(std::uint64_t v) {
  return static_cast<unsigned>(std::popcount(v));
}

/// FNV-1a over a byte string, used for stable content fingerprints.
inline std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::string to_hex16(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[static_cast<std::size_t>(i)] = digits[v & 0xf];
    v >>= 4;
  }
  return s;
}

}  // namespace cif
