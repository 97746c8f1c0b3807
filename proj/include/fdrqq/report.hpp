#pragma once

#include <cstddef>
#include <string>

#include "fdrqq/detail/format.hpp"
#include "fdrqq/fdr.hpp"
#include "fdrqq/geometry.hpp"
#include "fdrqq/types.hpp"

namespace fdrqq {

struct ReportBundle {
  std::string json;
  std::string csv;
};

namespace detail {

// Quote a CSV field only when it needs quoting.
inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace detail

// Machine-readable summary of one analysis: a fixed-key JSON object and a
// per-test CSV table sorted by rank. Reals are serialized with up to 12
// significant digits; alpha_implied is null when nothing is rejected.
inline ReportBundle write_report(const FdrResult& result, const QValueVector& qvals,
                                 const Readouts& readouts, const OrderedTests& ordered) {
  using detail::format_general;
  const std::size_t m = ordered.m();

  std::string json = "{";
  json += "\"m\":" + std::to_string(m);
  json += ",\"method\":\"" + std::string(method_name(result.method)) + "\"";
  json += ",\"q\":" + format_general(result.q);
  json += ",\"k_star\":" + std::to_string(result.k_star);
  json += ",\"alpha_implied\":" +
          (result.alpha_implied ? format_general(*result.alpha_implied) : std::string("null"));
  json += ",\"proportion_significant\":" + format_general(result.proportion_significant);
  json += ",\"q_min\":" + format_general(readouts.q_min);
  json += ",\"k_at_min\":" + std::to_string(readouts.k_at_min);
  json += "}\n";

  std::string csv = "id,p,rank,q_value,significant\n";
  for (std::size_t i = 1; i <= m; ++i) {
    const OrderedEntry& entry = ordered.entries[i - 1];
    csv += detail::csv_field(entry.id);
    csv += ',' + format_general(entry.p);
    csv += ',' + std::to_string(i);
    csv += ',' + format_general(qvals.values[i - 1]);
    csv += i <= result.k_star ? ",true\n" : ",false\n";
  }
  return {std::move(json), std::move(csv)};
}

// CSV form of a raw p-value set (columns id,p), input order preserved.
// This is the on-disk format the simulator writes and the parser reads back.
inline std::string write_pvalues_csv(const PValueSet& set) {
  std::string csv = "id,p\n";
  for (const TestRecord& rec : set.records)
    csv += detail::csv_field(rec.id) + ',' + detail::format_general(rec.p) + '\n';
  return csv;
}

}  // namespace fdrqq
