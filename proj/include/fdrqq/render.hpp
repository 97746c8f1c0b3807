#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "fdrqq/detail/format.hpp"
#include "fdrqq/error.hpp"
#include "fdrqq/geometry.hpp"

namespace fdrqq {

struct RenderOptions {
  int width_px = 720;
  int height_px = 720;
  int margin_px = 60;
  int point_radius_px = 3;
  int precision = 4;  // decimal places for every number in the SVG
};

namespace detail {

// Largest "nice" tick step (1, 2 or 5 times a power of ten) giving ~4 ticks.
inline double nice_tick_step(double range) {
  const double raw = range / 4.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double frac = raw / mag;
  double step = 10.0;
  if (frac <= 1.0)
    step = 1.0;
  else if (frac <= 2.0)
    step = 2.0;
  else if (frac <= 5.0)
    step = 5.0;
  return step * mag;
}

inline std::string hex_color(Rgb c) {
  static const char* digits = "0123456789abcdef";
  std::string s = "#......";
  s[1] = digits[c.r >> 4];
  s[2] = digits[c.r & 15];
  s[3] = digits[c.g >> 4];
  s[4] = digits[c.g & 15];
  s[5] = digits[c.b >> 4];
  s[6] = digits[c.b & 15];
  return s;
}

}  // namespace detail

// Renders the model as standalone SVG 1.1. The output is a pure function of
// (model, opts): elements appear in fixed order (axes, H0 line, FDR lines,
// points by ascending rank, callouts, legend), every number is written with
// opts.precision decimal places and a '.' decimal point, and nothing
// time- or environment-dependent is emitted. Points whose y exceeds the
// model's y extent are clipped to the top edge and drawn as triangles.
inline std::string render_svg(const QQPlotModel& model, const RenderOptions& opts = {}) {
  if (opts.width_px <= 0 || opts.height_px <= 0 || opts.point_radius_px <= 0 ||
      opts.precision < 0 || opts.margin_px < 0 ||
      opts.margin_px >= std::min(opts.width_px, opts.height_px) / 2)
    throw Error(errc::invalid_spec, "invalid render options");
  if (!(model.axis_max_x > 0.0) || !(model.axis_max_y > 0.0))
    throw Error(errc::degenerate_extent,
                "plot extent is degenerate (single test with p = 1 has no spread)");

  const double w = opts.width_px, h = opts.height_px, margin = opts.margin_px;
  const double sx = (w - 2.0 * margin) / model.axis_max_x;
  const double sy = (h - 2.0 * margin) / model.axis_max_y;
  auto px = [&](double x) { return margin + x * sx; };
  auto py = [&](double y) { return h - margin - y * sy; };
  auto num = [&](double v) { return detail::format_fixed(v, opts.precision); };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(opts.width_px) +
         "\" height=\"" + std::to_string(opts.height_px) + "\" viewBox=\"0 0 " +
         std::to_string(opts.width_px) + " " + std::to_string(opts.height_px) + "\">\n";
  svg += "<rect width=\"" + std::to_string(opts.width_px) + "\" height=\"" +
         std::to_string(opts.height_px) + "\" fill=\"#ffffff\"/>\n";

  // Axes: spines and ticks are paths so that <line> elements are reserved
  // for the H0 and FDR lines.
  svg += "<g font-family=\"Helvetica, Arial, sans-serif\" font-size=\"12\" fill=\"#000000\">\n";
  svg += "<path d=\"M " + num(margin) + " " + num(h - margin) + " L " + num(w - margin) + " " +
         num(h - margin) + " M " + num(margin) + " " + num(h - margin) + " L " + num(margin) +
         " " + num(margin) + "\" stroke=\"#000000\" fill=\"none\"/>\n";
  const double x_step = detail::nice_tick_step(model.axis_max_x);
  for (double v = 0.0; v <= model.axis_max_x * (1.0 + 1e-9); v += x_step) {
    svg += "<path d=\"M " + num(px(v)) + " " + num(h - margin) + " l 0 5\" stroke=\"#000000\"/>\n";
    svg += "<text x=\"" + num(px(v)) + "\" y=\"" + num(h - margin + 18.0) +
           "\" text-anchor=\"middle\">" + num(v) + "</text>\n";
  }
  const double y_step = detail::nice_tick_step(model.axis_max_y);
  for (double v = 0.0; v <= model.axis_max_y * (1.0 + 1e-9); v += y_step) {
    svg += "<path d=\"M " + num(margin) + " " + num(py(v)) + " l -5 0\" stroke=\"#000000\"/>\n";
    svg += "<text x=\"" + num(margin - 8.0) + "\" y=\"" + num(py(v) + 4.0) +
           "\" text-anchor=\"end\">" + num(v) + "</text>\n";
  }
  svg += "<text x=\"" + num(w / 2.0) + "\" y=\"" + num(h - margin + 36.0) +
         "\" text-anchor=\"middle\">Expected -log10(p)</text>\n";
  svg += "<text x=\"16\" y=\"" + num(h / 2.0) + "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " +
         num(h / 2.0) + ")\">Observed -log10(p)</text>\n";
  svg += "</g>\n";

  // H0 diagonal, dashed.
  const double h0_end = std::min(model.axis_max_x, model.axis_max_y);
  svg += "<line x1=\"" + num(px(0.0)) + "\" y1=\"" + num(py(0.0)) + "\" x2=\"" + num(px(h0_end)) +
         "\" y2=\"" + num(py(h0_end)) +
         "\" stroke=\"#444444\" stroke-width=\"1\" stroke-dasharray=\"6,4\"/>\n";

  // FDR lines: y = x + intercept, clipped to the plot box.
  std::vector<std::string> legend;
  for (const FdrLine& line : model.fdr_lines) {
    const std::string label = "FDR q=" + num(line.q);
    const double x_end = std::min(model.axis_max_x, model.axis_max_y - line.intercept);
    if (x_end < 0.0) {
      legend.push_back(label + " (off scale)");
      continue;
    }
    svg += "<line x1=\"" + num(px(0.0)) + "\" y1=\"" + num(py(line.intercept)) + "\" x2=\"" +
           num(px(x_end)) + "\" y2=\"" + num(py(x_end + line.intercept)) +
           "\" stroke=\"#b22222\" stroke-width=\"1\"/>\n";
    svg += "<text x=\"" + num(px(x_end) - 4.0) + "\" y=\"" + num(py(x_end + line.intercept) - 6.0) +
           "\" text-anchor=\"end\" font-family=\"Helvetica, Arial, sans-serif\" font-size=\"11\" "
           "fill=\"#b22222\">" +
           label + "</text>\n";
  }

  // Points, ascending rank. Off-scale points become top-edge triangles.
  std::size_t clipped = 0;
  for (const PlotPoint& point : model.points) {
    const std::string fill = detail::hex_color(point.color);
    if (point.y > model.axis_max_y) {
      ++clipped;
      const double cx = px(point.x), cy = py(model.axis_max_y);
      const double r = opts.point_radius_px + 1.0;
      svg += "<path d=\"M " + num(cx) + " " + num(cy - r) + " L " + num(cx - r) + " " +
             num(cy + r) + " L " + num(cx + r) + " " + num(cy + r) + " Z\" fill=\"" + fill +
             "\"/>\n";
      continue;
    }
    svg += "<circle cx=\"" + num(px(point.x)) + "\" cy=\"" + num(py(point.y)) + "\" r=\"" +
           std::to_string(opts.point_radius_px) + "\" fill=\"" + fill + "\"/>\n";
  }

  // Read-off callouts: guide from the alpha axis position over to the cut
  // point and down to the proportion axis position.
  const Readouts& notes = model.annotations;
  if (notes.k_star >= 1 && notes.x_at_cut && notes.y_at_cut) {
    const double gx = px(*notes.x_at_cut), gy = py(*notes.y_at_cut);
    svg += "<path d=\"M " + num(px(0.0)) + " " + num(gy) + " L " + num(gx) + " " + num(gy) +
           " L " + num(gx) + " " + num(py(0.0)) +
           "\" stroke=\"#888888\" stroke-dasharray=\"2,3\" fill=\"none\"/>\n";
    svg += "<g font-family=\"Helvetica, Arial, sans-serif\" font-size=\"11\" fill=\"#333333\">\n";
    svg += "<text x=\"" + num(px(0.0) + 4.0) + "\" y=\"" + num(gy - 4.0) + "\">alpha = " +
           num(*notes.alpha_implied) + "</text>\n";
    svg += "<text x=\"" + num(gx + 4.0) + "\" y=\"" + num(py(0.0) - 6.0) + "\">proportion = " +
           num(notes.proportion_significant) + "</text>\n";
    svg += "</g>\n";
  } else {
    legend.push_back("no discoveries at q=" + num(model.reference_q));
  }
  if (clipped > 0)
    legend.push_back(std::to_string(clipped) + " point" + (clipped == 1 ? "" : "s") +
                     " clipped at top");

  double legend_y = margin + 16.0;
  for (const std::string& entry : legend) {
    svg += "<text x=\"" + num(w - margin - 8.0) + "\" y=\"" + num(legend_y) +
           "\" text-anchor=\"end\" font-family=\"Helvetica, Arial, sans-serif\" font-size=\"11\" "
           "fill=\"#333333\">" +
           entry + "</text>\n";
    legend_y += 16.0;
  }

  svg += "</svg>\n";
  return svg;
}

}  // namespace fdrqq
