#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace fdrqq {

// One significance test: a label and its observed p-value.
// Valid records satisfy 0 < p <= 1; the parser enforces this.
struct TestRecord {
  std::string id;
  double p = 0.0;

  friend bool operator==(const TestRecord&, const TestRecord&) = default;
};

// A set of m tests in input order. All analyses start here.
struct PValueSet {
  std::vector<TestRecord> records;

  std::size_t m() const noexcept { return records.size(); }
};

// One test after sorting, carrying its ascending rank (1-based).
struct OrderedEntry {
  std::size_t rank = 0;  // 1..m
  std::string id;
  double p = 0.0;

  friend bool operator==(const OrderedEntry&, const OrderedEntry&) = default;
};

// Tests sorted by p ascending, ranks 1..m. Ties keep input order
// (stable sort), so tied p-values occupy distinct consecutive ranks.
struct OrderedTests {
  std::vector<OrderedEntry> entries;

  std::size_t m() const noexcept { return entries.size(); }
};

}  // namespace fdrqq
