#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "bounds.hpp"
#include "common.hpp"
#include "constructions.hpp"
#include "enumerate.hpp"
#include "exact_cover.hpp"
#include "immunity.hpp"
#include "walsh.hpp"

namespace cif {

inline std::string format_fixed(double value, unsigned decimals = 6) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*f", decimals, value);
  return buffer;
}

inline double round_fixed(double value, unsigned decimals = 6) {
  const double scale = std::pow(10.0, decimals);
  return std::round(value * scale) / scale;
}

/*! \brief Exact small-n census of the whole counting chain.
 *
 * Splitting and matching counts are dual-strategy (backtracking vs exact
 * cover). The distinct-table counts exist only for n <= 3, where every
 * constructed function is verified against the checkers before it is
 * counted; at n = 4 those fields are skipped and the skip is recorded.
 */
struct census_report {
  unsigned n = 0;
  std::string phi_digits;
  std::uint64_t splitting_count = 0;
  std::uint64_t splitting_count_no_0faces = 0;
  std::uint64_t matching_count = 0;
  std::optional<std::uint64_t> distinct_q4_tables;
  std::optional<std::uint64_t> distinct_boolean_lifts;
  bigint splitting_count_bound_exact;
  std::vector<std::string> skipped;
};

inline constexpr unsigned max_function_census_arity = 3;

inline census_report build_census(unsigned n, const phi_map& phi = phi_map{}) {
  if (n < 1 || n > max_enumeration_arity)
    throw capacity_error("census supports 1 <= n <= " +
                         std::to_string(max_enumeration_arity) + ", got n=" +
                         std::to_string(n));

  census_report report;
  report.n = n;
  report.phi_digits = phi.digits();
  report.splitting_count = count_splittings(n);
  report.splitting_count_no_0faces = count_splittings_no_zero_faces(n);
  report.matching_count = count_matchings(n);
  report.splitting_count_bound_exact = splitting_count_bound(n);

  if (n <= max_function_census_arity) {
    std::set<std::string> q4_tables;
    std::set<std::string> lifts;
    std::uint64_t enumerated = 0;
    for_each_splitting(n, [&](const splitting& s) {
      ++enumerated;
      const truth_table q4 = q4_from_splitting(s);
      if (!is_balanced(q4) || !is_correlation_immune(q4, n - 1))
        throw verification_error("census: splitting " + std::to_string(enumerated - 1) +
                                 " produced a quaternary table that is not balanced CI of "
                                 "order n-1");
      const truth_table lifted = boolean_lift(q4, phi);
      if (!is_resilient(lifted, n - 1) || !is_resilient_spectral(lifted, n - 1))
        throw verification_error("census: splitting " + std::to_string(enumerated - 1) +
                                 " produced a lift that is not (n-1)-resilient");
      q4_tables.insert(q4.bit_string());
      lifts.insert(lifted.bit_string());
    });
    if (enumerated != report.splitting_count)
      throw verification_error("census: enumeration emitted " + std::to_string(enumerated) +
                               " splittings but the counts say " +
                               std::to_string(report.splitting_count));
    report.distinct_q4_tables = q4_tables.size();
    report.distinct_boolean_lifts = lifts.size();
  } else {
    report.skipped.push_back("distinct_q4_tables: skipped, function-level census is capped at n <= " +
                             std::to_string(max_function_census_arity));
    report.skipped.push_back(
        "distinct_boolean_lifts: skipped, function-level census is capped at n <= " +
        std::to_string(max_function_census_arity));
  }

  // Field invariants; a violation here is an implementation bug.
  if (report.matching_count > report.splitting_count)
    throw verification_error("census invariant violated: matchings exceed splittings");
  if (bigint(report.splitting_count) > report.splitting_count_bound_exact)
    throw verification_error(
        "census invariant violated: splitting count exceeds the direction-word bound");
  if (report.distinct_q4_tables && *report.distinct_q4_tables != report.splitting_count)
    throw verification_error(
        "census invariant violated: quaternary tables are not pairwise distinct");
  if (report.distinct_boolean_lifts && *report.distinct_boolean_lifts != report.splitting_count)
    throw verification_error("census invariant violated: lifts are not pairwise distinct");
  return report;
}

inline std::string census_csv(const census_report& r) {
  const auto log2_of = [](std::uint64_t v) {
    return format_fixed(std::log2(static_cast<double>(v)));
  };
  std::string out =
      "n,splitting_count,splitting_count_no_0faces,matching_count,distinct_q4_tables,"
      "distinct_boolean_lifts,splitting_count_bound,log2_splitting_count,"
      "log2_splitting_count_no_0faces,log2_matching_count,log2_distinct_q4_tables,"
      "log2_distinct_boolean_lifts,log2_splitting_count_bound\n";
  out += std::to_string(r.n);
  out += ',' + std::to_string(r.splitting_count);
  out += ',' + std::to_string(r.splitting_count_no_0faces);
  out += ',' + std::to_string(r.matching_count);
  out += ',';
  if (r.distinct_q4_tables) out += std::to_string(*r.distinct_q4_tables);
  out += ',';
  if (r.distinct_boolean_lifts) out += std::to_string(*r.distinct_boolean_lifts);
  out += ',' + r.splitting_count_bound_exact.str();
  out += ',' + log2_of(r.splitting_count);
  out += ',' + log2_of(r.splitting_count_no_0faces);
  out += ',' + log2_of(r.matching_count);
  out += ',';
  if (r.distinct_q4_tables) out += log2_of(*r.distinct_q4_tables);
  out += ',';
  if (r.distinct_boolean_lifts) out += log2_of(*r.distinct_boolean_lifts);
  out += ',' + format_fixed(splitting_count_bound_log2(r.n));
  out += '\n';
  return out;
}

inline std::string census_json(const census_report& r) {
  const auto log2_of = [](std::uint64_t v) {
    return round_fixed(std::log2(static_cast<double>(v)));
  };
  nlohmann::json doc;
  doc["n"] = r.n;
  doc["phi"] = r.phi_digits;
  doc["splitting_count"] = r.splitting_count;
  doc["splitting_count_no_0faces"] = r.splitting_count_no_0faces;
  doc["matching_count"] = r.matching_count;
  if (r.distinct_q4_tables)
    doc["distinct_q4_tables"] = *r.distinct_q4_tables;
  else
    doc["distinct_q4_tables"] = nullptr;
  if (r.distinct_boolean_lifts)
    doc["distinct_boolean_lifts"] = *r.distinct_boolean_lifts;
  else
    doc["distinct_boolean_lifts"] = nullptr;
  doc["splitting_count_bound"] = r.splitting_count_bound_exact.str();
  doc["log2_splitting_count"] = log2_of(r.splitting_count);
  doc["log2_splitting_count_no_0faces"] = log2_of(r.splitting_count_no_0faces);
  doc["log2_matching_count"] = log2_of(r.matching_count);
  doc["log2_distinct_q4_tables"] =
      r.distinct_q4_tables ? nlohmann::json(log2_of(*r.distinct_q4_tables))
                           : nlohmann::json(nullptr);
  doc["log2_distinct_boolean_lifts"] =
      r.distinct_boolean_lifts ? nlohmann::json(log2_of(*r.distinct_boolean_lifts))
                               : nlohmann::json(nullptr);
  doc["log2_splitting_count_bound"] = round_fixed(splitting_count_bound_log2(r.n));
  doc["skipped"] = r.skipped;
  return doc.dump() + "\n";
}

/*! \brief One row of the bound comparison table.
 *
 * Exact values are decimal strings (they outgrow machine words quickly);
 * rows whose formula is only asymptotic carry kind = "asymptotic" and no
 * exact value, so nothing ever asserts equality for them at small n.
 */
struct bound_row {
  std::string quantity;
  std::string parameter;
  double log2_value = 0.0;
  std::string exact_value;  // empty when not exactly representable/known
  std::string kind;         // "exact" or "asymptotic"
};

inline std::vector<bound_row> bounds_table(unsigned n, unsigned m) {
  std::vector<bound_row> rows;

  bound_row simple;
  simple.quantity = "simple_construction_count";
  simple.parameter = "m=" + std::to_string(m);
  simple.log2_value = simple_construction_count_log2(m);
  if (m <= 6) simple.exact_value = simple_construction_count(m).str();
  simple.kind = "exact";
  rows.push_back(simple);

  bound_row bound;
  bound.quantity = "splitting_count_bound";
  bound.parameter = "n=" + std::to_string(n);
  bound.log2_value = splitting_count_bound_log2(n);
  if (n <= 6) bound.exact_value = splitting_count_bound(n).str();
  bound.kind = "exact";
  rows.push_back(bound);

  if (n <= max_enumeration_arity) {
    bound_row enumerated;
    enumerated.quantity = "splittings_enumerated";
    enumerated.parameter = "n=" + std::to_string(n);
    const std::uint64_t count = count_splittings(n);
    enumerated.log2_value = std::log2(static_cast<double>(count));
    enumerated.exact_value = std::to_string(count);
    enumerated.kind = "exact";
    rows.push_back(enumerated);
  }

  bound_row asymptotic;
  asymptotic.quantity = "resilient_count_asymptotic";
  asymptotic.parameter = "output_variables=" + std::to_string(2 * n);
  asymptotic.log2_value = construction_count_asymptotic_log2(n);
  asymptotic.kind = "asymptotic";
  rows.push_back(asymptotic);

  return rows;
}

inline std::string bounds_csv(const std::vector<bound_row>& rows) {
  std::string out = "quantity,parameter,log2_value,exact_value,kind\n";
  for (const bound_row& row : rows) {
    out += row.quantity + ',' + row.parameter + ',' + format_fixed(row.log2_value) + ',' +
           row.exact_value + ',' + row.kind + '\n';
  }
  return out;
}

inline std::string bounds_json(const std::vector<bound_row>& rows) {
  nlohmann::json doc = nlohmann::json::array();
  for (const bound_row& row : rows) {
    nlohmann::json entry;
    entry["quantity"] = row.quantity;
    entry["parameter"] = row.parameter;
    entry["log2_value"] = round_fixed(row.log2_value);
    if (row.exact_value.empty())
      entry["exact_value"] = nullptr;
    else
      entry["exact_value"] = row.exact_value;
    entry["kind"] = row.kind;
    doc.push_back(entry);
  }
  return doc.dump() + "\n";
}

}  // namespace cif
