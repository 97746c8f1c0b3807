#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "fdrqq/error.hpp"
#include "fdrqq/types.hpp"

namespace fdrqq {

enum class InputFormat { plain, csv, tsv };

struct ParseOptions {
  // Column holding the p-values (csv/tsv only). Either a header name or,
  // when the string is all digits, a 0-based column index.
  std::string p_column = "p";
  // Optional id column; when absent, ids are synthesized as "test_<row>".
  std::optional<std::string> id_column;
  // When set, a p-value of exactly 0 is replaced by this value instead of
  // being rejected. Negative p-values are rejected regardless.
  std::optional<double> clamp_zero;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline std::optional<double> parse_double(std::string_view field) {
  field = trim(field);
  if (field.empty()) return std::nullopt;
  if (field.front() == '+') field.remove_prefix(1);  // from_chars rejects a leading '+'
  double value = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) return std::nullopt;
  return value;
}

inline std::vector<std::string_view> split(std::string_view line, char delim) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find(delim, start);
    if (pos == std::string_view::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return fields;
}

// Resolve a column spec (name, or all-digits 0-based index) against a header.
inline std::size_t resolve_column(const std::vector<std::string_view>& header,
                                  std::string_view spec, const char* what) {
  bool all_digits = !spec.empty() &&
                    std::all_of(spec.begin(), spec.end(),
                                [](unsigned char c) { return std::isdigit(c) != 0; });
  if (all_digits) {
    std::size_t idx = 0;
    std::from_chars(spec.data(), spec.data() + spec.size(), idx);
    if (idx >= header.size())
      throw Error(errc::missing_column, std::string(what) + " column index " +
                                            std::string(spec) + " out of range (header has " +
                                            std::to_string(header.size()) + " columns)");
    return idx;
  }
  for (std::size_t i = 0; i < header.size(); ++i)
    if (trim(header[i]) == spec) return i;
  throw Error(errc::missing_column,
              std::string(what) + " column '" + std::string(spec) + "' not found in header");
}

// Validates 0 < p <= 1, applying the clamp rule for p == 0.
inline double check_p(double p, std::size_t row, const ParseOptions& opts) {
  if (p == 0.0 && opts.clamp_zero) return *opts.clamp_zero;
  if (p <= 0.0)
    throw Error(errc::out_of_range, "p out of range (0,1] at row " + std::to_string(row) +
                                        (opts.clamp_zero ? "" : "; p=0 needs clamp_zero"));
  if (p > 1.0)
    throw Error(errc::out_of_range, "p out of range (0,1] at row " + std::to_string(row));
  return p;
}

}  // namespace detail

// Parses a p-value dataset from text.
//
// plain: one p per line, '#'-prefixed lines are comments, blank lines skipped.
// csv/tsv: header row required; fields split on ',' or '\t' (no quoting).
// Row numbers in diagnostics and synthesized ids count data rows from 1.
inline PValueSet parse_pvalues(std::string_view text, InputFormat format,
                               const ParseOptions& opts = {}) {
  if (opts.clamp_zero && !(*opts.clamp_zero > 0.0 && *opts.clamp_zero <= 1.0))
    throw Error(errc::invalid_spec, "clamp_zero must be in (0,1]");

  // Strip a UTF-8 BOM if present.
  if (text.size() >= 3 && text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);

  PValueSet set;
  std::unordered_set<std::string> seen_ids;
  std::size_t row = 0;

  auto add_record = [&](std::string id, double p) {
    ++row;
    if (id.empty()) id = "test_" + std::to_string(row);
    if (!seen_ids.insert(id).second)
      throw Error(errc::duplicate_id, "duplicate id '" + id + "' at row " + std::to_string(row));
    set.records.push_back({std::move(id), detail::check_p(p, row, opts)});
  };

  const char delim = format == InputFormat::tsv ? '\t' : ',';
  bool header_seen = false;
  std::size_t p_idx = 0;
  std::optional<std::size_t> id_idx;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

    std::string_view stripped = detail::trim(line);
    if (stripped.empty() || stripped.front() == '#') continue;

    if (format == InputFormat::plain) {
      auto p = detail::parse_double(stripped);
      if (!p)
        throw Error(errc::non_numeric, "unparseable p-value '" + std::string(stripped) +
                                           "' at row " + std::to_string(row + 1));
      add_record({}, *p);
      continue;
    }

    auto fields = detail::split(line, delim);
    if (!header_seen) {
      header_seen = true;
      p_idx = detail::resolve_column(fields, opts.p_column, "p");
      if (opts.id_column) id_idx = detail::resolve_column(fields, *opts.id_column, "id");
      continue;
    }
    if (p_idx >= fields.size())
      throw Error(errc::non_numeric,
                  "missing p field at row " + std::to_string(row + 1));
    auto p = detail::parse_double(fields[p_idx]);
    if (!p)
      throw Error(errc::non_numeric, "unparseable p-value '" +
                                         std::string(detail::trim(fields[p_idx])) + "' at row " +
                                         std::to_string(row + 1));
    std::string id;
    if (id_idx && *id_idx < fields.size()) id = std::string(detail::trim(fields[*id_idx]));
    add_record(std::move(id), *p);
  }

  if (set.records.empty()) throw Error(errc::empty_input, "input contains no data rows");
  return set;
}

// Sorts by p ascending (stable, so ties keep input order) and assigns
// ranks 1..m.
inline OrderedTests order_tests(const PValueSet& set) {
  OrderedTests ordered;
  ordered.entries.reserve(set.m());
  for (const TestRecord& rec : set.records) ordered.entries.push_back({0, rec.id, rec.p});
  std::stable_sort(ordered.entries.begin(), ordered.entries.end(),
                   [](const OrderedEntry& a, const OrderedEntry& b) { return a.p < b.p; });
  for (std::size_t i = 0; i < ordered.entries.size(); ++i) ordered.entries[i].rank = i + 1;
  return ordered;
}

}  // namespace fdrqq
