// fdrqq command-line tool: analyze, plot and simulate p-value datasets.
//
// Exit codes: 0 success, 1 I/O failure, 2 validation failure.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fdrqq/fdrqq.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitValidation = 2;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("failed reading '" + path + "'");
  return buf.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open output file '" + path + "'");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  out.flush();
  if (!out) throw IoError("failed writing '" + path + "'");
}

fdrqq::InputFormat pick_format(const std::string& flag, const std::string& path) {
  if (flag == "plain") return fdrqq::InputFormat::plain;
  if (flag == "csv") return fdrqq::InputFormat::csv;
  if (flag == "tsv") return fdrqq::InputFormat::tsv;
  // auto: decide from the extension, defaulting to plain.
  auto ext = std::filesystem::path(path).extension().string();
  if (ext == ".csv") return fdrqq::InputFormat::csv;
  if (ext == ".tsv" || ext == ".tab") return fdrqq::InputFormat::tsv;
  return fdrqq::InputFormat::plain;
}

struct InputFlags {
  std::string input;
  std::string format = "auto";
  std::string p_col = "p";
  std::string id_col = "auto";
  std::optional<double> clamp_zero;
};

void add_input_flags(CLI::App* cmd, InputFlags& flags) {
  cmd->add_option("--input", flags.input, "Input file with p-values")->required();
  cmd->add_option("--format", flags.format, "Input format: auto, plain, csv, tsv (default auto)")
      ->check(CLI::IsMember({"auto", "plain", "csv", "tsv"}));
  cmd->add_option("--p-col", flags.p_col,
                  "p-value column: header name or 0-based index (csv/tsv; default 'p')");
  cmd->add_option("--id-col", flags.id_col,
                  "id column name or 0-based index; 'auto' uses a column named 'id' when "
                  "present, 'none' always synthesizes ids (default auto)");
  cmd->add_option("--clamp-zero", flags.clamp_zero,
                  "replace p = 0 by this positive value instead of rejecting it");
}

fdrqq::OrderedTests load_ordered(const InputFlags& flags, fdrqq::PValueSet* out_set = nullptr) {
  const std::string text = read_file(flags.input);
  const fdrqq::InputFormat format = pick_format(flags.format, flags.input);

  fdrqq::ParseOptions opts;
  opts.p_column = flags.p_col;
  opts.clamp_zero = flags.clamp_zero;
  if (flags.id_col == "auto") {
    // Use an 'id' column when the header has one.
    if (format != fdrqq::InputFormat::plain) {
      const std::string head = text.substr(0, text.find('\n'));
      const char delim = format == fdrqq::InputFormat::tsv ? '\t' : ',';
      for (auto field : fdrqq::detail::split(head, delim))
        if (fdrqq::detail::trim(field) == "id") opts.id_column = "id";
    }
  } else if (flags.id_col != "none") {
    opts.id_column = flags.id_col;
  }

  fdrqq::PValueSet set = fdrqq::parse_pvalues(text, format, opts);
  if (out_set) *out_set = set;
  return fdrqq::order_tests(set);
}

void print_summary(const fdrqq::FdrResult& result, std::size_t m) {
  std::cout << "k*=" << result.k_star << " of m=" << m << " significant at FDR q="
            << fdrqq::detail::format_general(result.q) << " (alpha="
            << (result.alpha_implied ? fdrqq::detail::format_general(*result.alpha_implied)
                                     : std::string("n/a"))
            << ")\n";
}

int run_analyze(const InputFlags& flags, double q, const std::string& method,
                const std::string& out_json, const std::string& out_table) {
  const fdrqq::OrderedTests ordered = load_ordered(flags);
  const fdrqq::FdrResult result = method == "by" ? fdrqq::by_stepup(ordered, q)
                                                 : fdrqq::bh_stepup(ordered, q);
  const fdrqq::QValueVector qvals = fdrqq::q_values(ordered);
  const fdrqq::QQPlotModel model = fdrqq::build_plot_model(ordered, qvals, q);
  const fdrqq::Readouts readouts = fdrqq::annotate_readouts(model, result);
  const fdrqq::ReportBundle report = fdrqq::write_report(result, qvals, readouts, ordered);
  write_file(out_json, report.json);
  write_file(out_table, report.csv);
  print_summary(result, ordered.m());
  return kExitOk;
}

int run_plot(const InputFlags& flags, double q, const std::vector<double>& q_lines,
             const std::string& out_svg, const fdrqq::RenderOptions& render_opts) {
  const fdrqq::OrderedTests ordered = load_ordered(flags);
  const fdrqq::QValueVector qvals = fdrqq::q_values(ordered);
  const fdrqq::QQPlotModel model = fdrqq::build_plot_model(ordered, qvals, q, q_lines);
  write_file(out_svg, fdrqq::render_svg(model, render_opts));
  print_summary(fdrqq::bh_stepup(ordered, q), ordered.m());
  return kExitOk;
}

int run_simulate(const fdrqq::SimSpec& spec, const std::string& pattern, const std::string& out) {
  fdrqq::SimSpec resolved = spec;
  if (pattern == "equicorrelated")
    resolved.pattern = fdrqq::Pattern::equicorrelated;
  else
    resolved.pattern = fdrqq::Pattern::independent;
  const fdrqq::PValueSet set = fdrqq::simulate_pvalues(resolved);
  write_file(out, fdrqq::write_pvalues_csv(set));
  std::cout << "wrote " << set.m() << " simulated p-values to " << out << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fdrqq: FDR analysis and annotated Q-Q plots for p-value datasets"};
  app.require_subcommand(1);

  InputFlags input;
  double q = 0.05;
  std::string method = "bh";
  std::string out_json = "report.json";
  std::string out_table = "table.csv";
  std::string out_svg = "qq.svg";
  std::vector<double> q_lines;
  fdrqq::RenderOptions render_opts;

  auto* analyze = app.add_subcommand("analyze", "Run the step-up procedure and write reports");
  add_input_flags(analyze, input);
  analyze->add_option("--q", q, "FDR level in (0,1] (default 0.05)");
  analyze->add_option("--method", method, "bh or by (default bh)")
      ->check(CLI::IsMember({"bh", "by"}));
  analyze->add_option("--out", out_json, "JSON report path (default report.json)");
  analyze->add_option("--table", out_table, "per-test CSV table path (default table.csv)");

  auto* plot = app.add_subcommand("plot", "Render the annotated Q-Q plot as SVG");
  add_input_flags(plot, input);
  plot->add_option("--q", q, "reference FDR level in (0,1] (default 0.05)");
  plot->add_option("--q-lines", q_lines, "extra FDR lines, comma separated (e.g. 0.05,0.1,0.3)")
      ->delimiter(',');
  plot->add_option("--out", out_svg, "SVG output path (default qq.svg)");
  plot->add_option("--width", render_opts.width_px, "image width in px (default 720)");
  plot->add_option("--height", render_opts.height_px, "image height in px (default 720)");
  plot->add_option("--margin", render_opts.margin_px, "margin in px (default 60)");
  plot->add_option("--point-radius", render_opts.point_radius_px, "point radius in px (default 3)");
  plot->add_option("--precision", render_opts.precision,
                   "decimal places for SVG coordinates (default 4)");

  fdrqq::SimSpec spec;
  std::string pattern = "independent";
  std::string sim_out = "pvalues.csv";
  auto* simulate = app.add_subcommand("simulate", "Generate a seeded synthetic p-value dataset");
  simulate->add_option("--m", spec.m, "number of tests")->required();
  simulate->add_option("--pattern", pattern, "independent or equicorrelated (default independent)")
      ->check(CLI::IsMember({"independent", "equicorrelated"}));
  simulate->add_option("--pi1", spec.pi1, "fraction of non-null tests in [0,1] (default 0)");
  simulate->add_option("--effect", spec.effect, "mean shift of non-null statistics (default 0)");
  simulate->add_option("--rho", spec.rho, "equicorrelation in [0,1) (default 0)");
  simulate->add_option("--seed", spec.seed, "RNG seed (default 0)");
  simulate->add_option("--out", sim_out, "output CSV path (default pvalues.csv)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (analyze->parsed()) return run_analyze(input, q, method, out_json, out_table);
    if (plot->parsed()) return run_plot(input, q, q_lines, out_svg, render_opts);
    return run_simulate(spec, pattern, sim_out);
  } catch (const fdrqq::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
}
