#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fdrqq/error.hpp"
#include "fdrqq/fdr.hpp"
#include "fdrqq/types.hpp"

namespace fdrqq {

struct Rgb {
  std::uint8_t r = 0, g = 0, b = 0;

  friend bool operator==(const Rgb&, const Rgb&) = default;
};

// Expected -log10 quantile under the global null for rank i of m.
// The plotting position is i/m, not i/(m+1): with i/m, a point sits on or
// above the line of intercept -log10(q) exactly when p_(i) <= q*i/m, so the
// plot geometry and the step-up algebra are the same statement.
inline double expected_position(std::size_t rank, std::size_t m) {
  return 0.0 - std::log10(static_cast<double>(rank) / static_cast<double>(m));
}

// A line parallel to the H0 diagonal: y = x + intercept, intercept = -log10(q).
// q = 1 gives the H0 line itself.
struct FdrLine {
  double q = 1.0;
  double intercept = 0.0;

  explicit FdrLine(double level) : q(level) {
    detail::check_level(level);
    intercept = 0.0 - std::log10(level);
  }
};

struct PlotPoint {
  std::size_t rank = 0;  // 1..m
  std::size_t m = 0;
  double p = 0.0;        // untransformed p-value; keeps line tests exact
  double x = 0.0;        // -log10(rank/m)
  double y = 0.0;        // -log10(p)
  double q_value = 0.0;
  Rgb color;
  bool significant = false;  // from the step-up index at the reference level
};

// Point symbol color: channel-wise interpolation from light red (q >= 0.5)
// to deep red (q <= 0.05) on the -log10 scale.
inline Rgb color_for_q(double q_value) {
  detail::check_level(q_value);
  double t = (0.0 - std::log10(q_value) - 0.30103) / 1.0;
  t = std::clamp(t, 0.0, 1.0);
  constexpr double light[3] = {255.0, 214.0, 214.0};
  constexpr double deep[3] = {139.0, 0.0, 0.0};
  auto channel = [t](double lo, double hi) {
    return static_cast<std::uint8_t>(std::round(lo + t * (hi - lo)));
  };
  return {channel(light[0], deep[0]), channel(light[1], deep[1]), channel(light[2], deep[2])};
}

// True when the point sits on or above the line in plot space. Evaluated on
// the untransformed inequality p_(i) <= q*i/m through raw_bh_level, so the
// answer is identical to the step-up comparison, with no log-space rounding.
inline bool point_on_or_above(const PlotPoint& point, const FdrLine& line) {
  return raw_bh_level(point.p, point.rank, point.m) <= line.q;
}

// Scans points ordered by ascending x (descending rank) and returns the rank
// of the first point on or above the line: the largest significant rank,
// exactly bh_stepup(..., line.q).k_star. Returns 0 when no point qualifies.
inline std::size_t first_above_from_left(std::span<const PlotPoint> points_ascending_x,
                                         const FdrLine& line) {
  for (const PlotPoint& point : points_ascending_x)
    if (point_on_or_above(point, line)) return point.rank;
  return 0;
}

// Coordinate read-offs for one analysis. When k_star = 0 (no discoveries)
// alpha and the cut coordinates are absent and the proportion is 0.
struct Readouts {
  std::size_t k_star = 0;
  std::optional<double> alpha_implied;
  double proportion_significant = 0.0;
  std::optional<double> x_at_cut;  // -log10(k_star/m)
  std::optional<double> y_at_cut;  // -log10(alpha_implied)
  double q_min = 0.0;
  std::size_t k_at_min = 0;
};

struct QQPlotModel {
  std::vector<PlotPoint> points;  // ascending rank
  FdrLine h0_line{1.0};
  std::vector<FdrLine> fdr_lines;  // reference level first
  double reference_q = 0.05;
  Readouts annotations;
  double axis_max_x = 0.0;
  double axis_max_y = 0.0;
};

namespace detail {

inline Readouts make_readouts(const FdrResult& result, const MinAttainableFdr& min_fdr,
                              std::size_t m) {
  Readouts out;
  out.k_star = result.k_star;
  out.q_min = min_fdr.q_min;
  out.k_at_min = min_fdr.k_at_min;
  if (result.k_star >= 1) {
    out.alpha_implied = result.alpha_implied;
    const double ratio = static_cast<double>(result.k_star) / static_cast<double>(m);
    out.proportion_significant = ratio;
    out.x_at_cut = 0.0 - std::log10(ratio);
    out.y_at_cut = 0.0 - std::log10(*result.alpha_implied);
  }
  return out;
}

}  // namespace detail

// Recomputes the read-offs for a result (possibly at another level or with
// the BY variant) against the same ordered set the model was built from.
inline Readouts annotate_readouts(const QQPlotModel& model, const FdrResult& result) {
  return detail::make_readouts(result, {model.annotations.q_min, model.annotations.k_at_min},
                               model.points.size());
}

// Assembles the full plot-space model. Points carry colors from their
// q-values; significance flags come from the step-up index at reference_q,
// never from per-point line position (ranks at or below k* are significant
// whether or not their points sit above the line). Axis bounds are the
// maximum point coordinates padded by 5%.
inline QQPlotModel build_plot_model(const OrderedTests& ordered, const QValueVector& qvals,
                                    double reference_q, std::span<const double> extra_q_lines = {}) {
  const std::size_t m = ordered.m();
  if (m == 0) throw Error(errc::empty_input, "cannot build a plot model from zero tests");
  if (qvals.m() != m)
    throw Error(errc::invalid_spec, "q-value vector size does not match the ordered set");

  QQPlotModel model;
  model.reference_q = reference_q;
  model.fdr_lines.emplace_back(reference_q);
  for (double q : extra_q_lines) {
    FdrLine line(q);
    bool present = std::any_of(model.fdr_lines.begin(), model.fdr_lines.end(),
                               [&](const FdrLine& l) { return l.q == line.q; });
    if (!present) model.fdr_lines.push_back(line);
  }

  const FdrResult reference = bh_stepup(ordered, reference_q);
  model.annotations = detail::make_readouts(reference, min_attainable_fdr(ordered), m);

  model.points.reserve(m);
  for (const OrderedEntry& entry : ordered.entries) {
    PlotPoint point;
    point.rank = entry.rank;
    point.m = m;
    point.p = entry.p;
    point.x = expected_position(entry.rank, m);
    point.y = 0.0 - std::log10(entry.p);
    point.q_value = qvals.values[entry.rank - 1];
    point.color = color_for_q(point.q_value);
    point.significant = entry.rank <= reference.k_star;
    model.points.push_back(point);
  }

  // x peaks at rank 1 and y peaks at the smallest p, also rank 1.
  model.axis_max_x = model.points.front().x * 1.05;
  model.axis_max_y = model.points.front().y * 1.05;
  return model;
}

}  // namespace fdrqq
