#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fdrqq/error.hpp"
#include "fdrqq/types.hpp"

namespace fdrqq {

enum class Method { bh, by };

inline const char* method_name(Method m) { return m == Method::bh ? "bh" : "by"; }

// The level m*p/rank at which rank first enters the step-up rejection set.
// Every comparison in this library (step-up, q-values, plot geometry) goes
// through this one expression, so their decisions can never diverge by a
// rounding difference. rank == m returns p directly: (m*p)/m does not
// always round back to p, and q_m = p_(m) must hold exactly.
inline double raw_bh_level(double p, std::size_t rank, std::size_t m) {
  if (rank == m) return p;
  return (static_cast<double>(m) * p) / static_cast<double>(rank);
}

// One step-up analysis at level q.
struct FdrResult {
  double q = 0.0;
  Method method = Method::bh;
  std::size_t k_star = 0;                    // largest rejected rank, 0 = none
  std::optional<double> alpha_implied;       // p_(k_star) when k_star >= 1
  double proportion_significant = 0.0;       // k_star / m
  std::vector<bool> rejected;                // rejected[i-1] <=> rank i <= k_star
};

// Per-rank minimum attainable FDR, nondecreasing, capped at 1.
struct QValueVector {
  std::vector<double> values;

  std::size_t m() const noexcept { return values.size(); }
};

// Partial harmonic sum H_m = sum_{j=1..m} 1/j, the c(m) factor of the
// Benjamini-Yekutieli correction.
struct HarmonicCorrection {
  double value = 0.0;
};

inline HarmonicCorrection harmonic_number(std::size_t m) {
  double h = 0.0;
  for (std::size_t j = m; j >= 1; --j) h += 1.0 / static_cast<double>(j);
  return {h};
}

namespace detail {

inline void check_level(double q) {
  if (!(q > 0.0 && q <= 1.0)) throw Error(errc::invalid_level, "q must be in (0,1]");
}

// Shared step-up scan: k* = max{ i : raw_bh_level(p_(i), i, m) <= level }.
inline FdrResult stepup_at(const OrderedTests& ordered, double q, Method method, double level) {
  const std::size_t m = ordered.m();
  FdrResult result;
  result.q = q;
  result.method = method;
  for (std::size_t i = m; i >= 1; --i) {
    if (raw_bh_level(ordered.entries[i - 1].p, i, m) <= level) {
      result.k_star = i;
      break;
    }
  }
  result.rejected.resize(m);
  for (std::size_t i = 1; i <= m; ++i) result.rejected[i - 1] = i <= result.k_star;
  if (result.k_star >= 1) result.alpha_implied = ordered.entries[result.k_star - 1].p;
  result.proportion_significant =
      m == 0 ? 0.0 : static_cast<double>(result.k_star) / static_cast<double>(m);
  return result;
}

}  // namespace detail

// Benjamini-Hochberg step-up: reject ranks 1..k* where
// k* = max{ i : p_(i) <= q*i/m }.
inline FdrResult bh_stepup(const OrderedTests& ordered, double q) {
  detail::check_level(q);
  return detail::stepup_at(ordered, q, Method::bh, q);
}

// Benjamini-Yekutieli step-up: BH with the threshold divided by H_m.
// Valid under arbitrary dependence; never rejects more than BH.
inline FdrResult by_stepup(const OrderedTests& ordered, double q) {
  detail::check_level(q);
  const double h = ordered.m() == 0 ? 1.0 : harmonic_number(ordered.m()).value;
  return detail::stepup_at(ordered, q, Method::by, q / h);
}

// q_i = min(1, min_{j >= i} m*p_(j)/j): the smallest level at which rank i
// is rejected by bh_stepup. Suffix-min construction; tied p-values and
// plateau regions automatically share a q-value.
inline QValueVector q_values(const OrderedTests& ordered) {
  const std::size_t m = ordered.m();
  QValueVector qv;
  qv.values.resize(m);
  double running = 1.0;
  for (std::size_t i = m; i >= 1; --i) {
    running = std::min(running, raw_bh_level(ordered.entries[i - 1].p, i, m));
    qv.values[i - 1] = running;
  }
  return qv;
}

struct MinAttainableFdr {
  double q_min = 0.0;        // first entry of q_values
  std::size_t k_at_min = 0;  // step-up cut index at level q_min
};

// The level below which nothing is ever rejected, and how many ranks the
// step-up rule rejects right at that level.
inline MinAttainableFdr min_attainable_fdr(const OrderedTests& ordered) {
  if (ordered.m() == 0)
    throw Error(errc::empty_input, "min_attainable_fdr requires at least one test");
  const double q_min = q_values(ordered).values.front();
  return {q_min, bh_stepup(ordered, q_min).k_star};
}

}  // namespace fdrqq
