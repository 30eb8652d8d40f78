#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "codec.hpp"
#include "common.hpp"
#include "splitting.hpp"
#include "truth_table.hpp"

namespace cif {

/*! \brief Truth table text format, bit exact.
 *
 * Line 1: "q n" in decimal, space separated. Line 2: q^n characters over
 * {0,1}; character i is f(unrank(i)).
 */
inline truth_table parse_truth_table(const std::string& text) {
  std::istringstream in(text);
  std::string header;
  if (!std::getline(in, header)) throw parse_error(1, 1, "missing header line \"q n\"");

  unsigned q = 0, n = 0;
  {
    std::istringstream hs(header);
    if (!(hs >> q >> n)) throw parse_error(1, 1, "header must be \"q n\" in decimal");
    std::string trailing;
    if (hs >> trailing)
      throw parse_error(1, static_cast<unsigned>(header.find(trailing)) + 1,
                        "unexpected trailing token '" + trailing + "' in header");
    if (q != 2 && q != 4) throw parse_error(1, 1, "alphabet size must be 2 or 4");
  }

  std::string bits;
  if (!std::getline(in, bits)) throw parse_error(2, 1, "missing truth table line");
  if (!bits.empty() && bits.back() == '\r') bits.pop_back();

  const std::uint64_t expected = ipow(q, n);
  if (bits.size() != expected)
    throw parse_error(2, static_cast<unsigned>(bits.size()) + 1,
                      "expected " + std::to_string(expected) + " entries, got " +
                          std::to_string(bits.size()));
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i] != '0' && bits[i] != '1')
      throw parse_error(2, static_cast<unsigned>(i) + 1,
                        std::string("invalid character '") + bits[i] +
                            "' (expected '0' or '1')");

  std::string extra;
  if (std::getline(in, extra) && !extra.empty())
    throw parse_error(3, 1, "unexpected content after truth table line");

  return truth_table::from_bits(q, n, bits);
}

inline truth_table read_truth_table(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_truth_table(buffer.str());
}

inline void write_truth_table(std::ostream& out, const truth_table& f) {
  out << f.alphabet() << ' ' << f.arity() << '\n' << f.bit_string() << '\n';
}

inline std::string truth_table_text(const truth_table& f) {
  std::ostringstream out;
  write_truth_table(out, f);
  return out.str();
}

/*! \brief Canonical splitting serialization.
 *
 * {"n": int, "faces": [{"fixed": [[coord, value], ...]}, ...]} with 1-based
 * coordinates and faces in canonical order. Written by hand so the byte
 * sequence is stable; this exact string feeds the content hash.
 */
inline std::string splitting_to_json(const splitting& s) {
  std::string out = "{\"n\": " + std::to_string(s.n) + ", \"faces\": [";
  for (std::size_t i = 0; i < s.faces.size(); ++i) {
    if (i > 0) out += ", ";
    out += "{\"fixed\": [";
    const auto& fixed = s.faces[i].fixed();
    for (std::size_t j = 0; j < fixed.size(); ++j) {
      if (j > 0) out += ", ";
      out += "[" + std::to_string(fixed[j].first) + ", " +
             std::to_string(fixed[j].second) + "]";
    }
    out += "]}";
  }
  out += "]}";
  return out;
}

/// FNV-1a fingerprint of the canonical serialization, 16 hex characters.
inline std::string splitting_hash(const splitting& s) {
  return to_hex16(fnv1a64(splitting_to_json(s)));
}

inline splitting parse_splitting_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("splitting JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("faces"))
    throw std::invalid_argument("splitting JSON must be {\"n\": ..., \"faces\": [...]}");
  if (!doc["n"].is_number_unsigned())
    throw std::invalid_argument("splitting JSON: \"n\" must be a nonnegative integer");
  const unsigned n = doc["n"].get<unsigned>();
  if (n > 16)
    throw std::invalid_argument("splitting JSON: n=" + std::to_string(n) +
                                " is beyond what this tool will materialize (n <= 16)");
  if (!doc["faces"].is_array())
    throw std::invalid_argument("splitting JSON: \"faces\" must be an array");

  std::vector<face> faces;
  for (const auto& face_doc : doc["faces"]) {
    if (!face_doc.is_object() || !face_doc.contains("fixed") || !face_doc["fixed"].is_array())
      throw std::invalid_argument("splitting JSON: each face must be {\"fixed\": [...]}");
    std::vector<face::assignment> fixed;
    for (const auto& pair_doc : face_doc["fixed"]) {
      if (!pair_doc.is_array() || pair_doc.size() != 2 ||
          !pair_doc[0].is_number_unsigned() || !pair_doc[1].is_number_unsigned())
        throw std::invalid_argument(
            "splitting JSON: fixed entries must be [coordinate, value] pairs");
      const unsigned coord = pair_doc[0].get<unsigned>();
      const unsigned value = pair_doc[1].get<unsigned>();
      if (value > 1)
        throw std::invalid_argument("splitting JSON: fixed values must be 0 or 1");
      fixed.emplace_back(coord, static_cast<std::uint8_t>(value));
    }
    faces.emplace_back(2, n, std::move(fixed));
  }
  return make_splitting(n, std::move(faces));
}

/// Comma-separated labels in even-vertex rank order, e.g. "1,1".
inline std::string code_to_string(const direction_code& code) {
  std::string out;
  for (std::size_t i = 0; i < code.labels.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(code.labels[i]);
  }
  return out;
}

/// Audit report as JSON: {"splittings": ..., "codes": ..., "collisions":
/// [{"code": ..., "members": [splitting hashes]}]}. Collision classes are
/// listed in code order, members in enumeration order.
inline std::string audit_json(const injectivity_report& report) {
  std::vector<std::string> hashes;
  hashes.reserve(static_cast<std::size_t>(report.splitting_count));
  for_each_splitting(report.n, [&](const splitting& s) { hashes.push_back(splitting_hash(s)); });

  nlohmann::json doc;
  doc["splittings"] = report.splitting_count;
  doc["codes"] = report.distinct_code_count;
  doc["collisions"] = nlohmann::json::array();
  for (const auto& collision : report.collisions) {
    nlohmann::json entry;
    entry["code"] = code_to_string(collision.code);
    entry["members"] = nlohmann::json::array();
    for (std::size_t index : collision.members)
      entry["members"].push_back(hashes.at(index));
    doc["collisions"].push_back(entry);
  }
  return doc.dump() + "\n";
}

inline direction_code parse_code(unsigned n, std::string_view text) {
  direction_code code;
  code.n = n;
  if (!text.empty()) {
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = text.find(',', start);
      const std::string_view token = text.substr(
          start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
      if (token.empty()) throw std::invalid_argument("empty label in direction code");
      unsigned value = 0;
      for (char c : token) {
        if (c < '0' || c > '9')
          throw std::invalid_argument(std::string("invalid direction code character '") + c +
                                      "'");
        value = value * 10 + static_cast<unsigned>(c - '0');
        if (value > 255) throw std::invalid_argument("direction label out of range");
      }
      code.labels.push_back(static_cast<std::uint8_t>(value));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }
  if (code.labels.size() != expected_code_length(n))
    throw std::invalid_argument("direction code for n=" + std::to_string(n) + " needs " +
                                std::to_string(expected_code_length(n)) + " labels, got " +
                                std::to_string(code.labels.size()));
  for (std::uint8_t label : code.labels)
    if (label > n)
      throw std::invalid_argument("direction label " + std::to_string(label) +
                                  " exceeds arity " + std::to_string(n));
  return code;
}

}  // namespace cif
