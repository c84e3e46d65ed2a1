#include "affiliation/cli.hpp"

#include <memory>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "affiliation/baselines.hpp"
#include "affiliation/errors.hpp"
#include "affiliation/io.hpp"
#include "affiliation/metrics.hpp"
#include "affiliation/theory.hpp"

namespace affiliation::cli {

namespace {

void add_output(CLI::App* sub, RunConfig& config) {
  sub->add_option("-o,--output", config.output, "Output file (default: standard output)");
}

void add_oracle(CLI::App* sub, RunConfig& config) {
  sub->add_flag("--oracle", config.oracle,
                "Append brute-force numeric probabilities to every zone");
  sub->add_option("--grid-step", config.oracle_config.grid_step,
                  "Oracle trapezoid panel width in seconds (default |zone|/1e5)");
  sub->add_option("--min-panels", config.oracle_config.min_panels,
                  "Minimum oracle panels per integrated interval");
  sub->add_option("--seed", config.oracle_config.rng_seed, "Oracle random seed");
}

std::unique_ptr<CLI::App> build_app(RunConfig& config) {
  auto app = std::make_unique<CLI::App>(
      "Affiliation precision/recall for time-series anomaly detection", "affiliation-cli");
  app->require_subcommand(1);

  auto* evaluate = app->add_subcommand("evaluate", "Score range predictions against ground truth");
  evaluate->add_option("-i,--input", config.input, "Label CSV (timestamp,gt,pred) or event JSON")
      ->required()
      ->check(CLI::ExistingFile);
  evaluate->add_option("--format", config.format, "Input format")
      ->check(CLI::IsMember({"auto", "csv", "json"}));
  evaluate->add_option("--t-last", config.t_last,
                       "Closing timestamp t(N+1) for CSV input (default: repeat last spacing)");
  evaluate->add_flag("--table", config.table, "Render an aligned per-event table instead of JSON");
  evaluate->add_flag("--directional", config.directional,
                     "Report the signed mean offset of the nearest prediction per event");
  add_output(evaluate, config);
  add_oracle(evaluate, config);
  evaluate->callback([&config] { config.subcommand = Subcommand::kEvaluate; });

  auto* points = app->add_subcommand("evaluate-points", "Score point anomalies (JSON input)");
  points->add_option("-i,--input", config.input, "Point JSON {gt: [t...], pred: [t...], range}")
      ->required()
      ->check(CLI::ExistingFile);
  points->add_flag("--table", config.table, "Render an aligned per-event table instead of JSON");
  add_output(points, config);
  points->callback([&config] { config.subcommand = Subcommand::kEvaluatePoints; });

  auto* adversary = app->add_subcommand("adversary", "Generate adversary predictions");
  auto* labels = adversary->add_option("--labels", config.labels,
                                       "Inline comma-separated trivial labels, e.g. 0,0,1,1,0");
  adversary
      ->add_option("-i,--input", config.input,
                   "CSV with header timestamp,label (or timestamp,value with --threshold)")
      ->check(CLI::ExistingFile)
      ->excludes(labels);
  adversary->add_option("--threshold", config.threshold,
                        "Derive the trivial labels from timestamp,value input with this threshold");
  adversary->add_option("--direction", config.direction, "Threshold direction")
      ->check(CLI::IsMember({"below", "above"}));
  adversary->add_option("--variant", config.variant, "Generator")
      ->check(CLI::IsMember({"alternate", "point-adjust"}));
  adversary->add_option("--pieces", config.pieces, "Number of short predictions (point-adjust)");
  add_output(adversary, config);
  adversary->callback([&config] { config.subcommand = Subcommand::kAdversary; });

  auto* theory = app->add_subcommand("theory", "Emit single-point prediction curves as CSV");
  theory->add_option("--points", config.points, "Grid size: p = k/points for k = 1..points");
  theory->add_option("--p", config.p_values, "Explicit p values (overrides --points)")
      ->delimiter(',');
  add_output(theory, config);
  theory->callback([&config] { config.subcommand = Subcommand::kTheory; });

  auto* convert = app->add_subcommand("convert", "Convert a label CSV into event JSON");
  convert->add_option("-i,--input", config.input, "Label CSV (timestamp,gt,pred)")
      ->required()
      ->check(CLI::ExistingFile);
  convert->add_option("--t-last", config.t_last, "Closing timestamp t(N+1)");
  add_output(convert, config);
  convert->callback([&config] { config.subcommand = Subcommand::kConvert; });

  return app;
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::vector<int> parse_inline_labels(const std::string& text) {
  std::vector<int> labels;
  std::stringstream stream(text);
  std::string item;
  std::size_t index = 0;
  while (std::getline(stream, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    const std::string trimmed = first == std::string::npos ? "" : item.substr(first, last - first + 1);
    if (trimmed != "0" && trimmed != "1") {
      throw InputError("label " + std::to_string(index) + " must be 0 or 1, got '" + trimmed + "'");
    }
    labels.push_back(trimmed == "1" ? 1 : 0);
    ++index;
  }
  if (labels.empty()) throw InputError("no labels given");
  return labels;
}

std::string join_labels(const std::vector<int>& labels) {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ',';
    out += labels[i] ? '1' : '0';
  }
  return out + "\n";
}

std::string run_evaluate(const RunConfig& config) {
  const bool json = config.format == "json" || (config.format == "auto" && ends_with(config.input, ".json"));
  std::optional<io::EventFile> file;
  if (json) {
    if (config.t_last) throw InputError("--t-last only applies to CSV input");
    file.emplace(io::parse_event_json(config.input));
  } else {
    const auto table = io::parse_label_csv(config.input, config.t_last);
    file.emplace(io::EventFile{events_from_labels(table.gt, Role::kGroundTruth),
                               events_from_labels(table.pred, Role::kPrediction),
                               table.gt.range()});
    if (file->gt.empty()) throw InputError(config.input + ": ground truth has no positive sample");
  }
  const auto report = evaluate(file->gt, file->pred, file->range, {config.directional});
  if (config.table) return io::render_table(report);
  std::optional<oracle::NumericReport> numeric;
  if (config.oracle) numeric = oracle::evaluate_numeric(file->gt, file->pred, file->range, config.oracle_config);
  return io::report_to_json(report, numeric ? &*numeric : nullptr).dump(2) + "\n";
}

std::string run_evaluate_points(const RunConfig& config) {
  const auto file = io::parse_point_json_text(io::read_file(config.input));
  const auto report = evaluate_point_anomalies(file.gt, file.pred, file.range);
  if (config.table) return io::render_table(report);
  return io::report_to_json(report).dump(2) + "\n";
}

std::string run_adversary(const RunConfig& config) {
  std::vector<int> trivial;
  std::vector<double> timestamps;
  if (!config.labels.empty()) {
    trivial = parse_inline_labels(config.labels);
  } else if (!config.input.empty()) {
    const std::string text = io::read_file(config.input);
    if (config.threshold) {
      const auto column = io::parse_column_csv_text(text, "value");
      const TrivialRule rule{*config.threshold, config.direction == "above"
                                                    ? TrivialRule::Direction::kAbove
                                                    : TrivialRule::Direction::kBelow};
      trivial = trivial_predictions(column.values, rule);
      timestamps = column.timestamps;
    } else {
      const auto column = io::parse_column_csv_text(text, "label");
      for (std::size_t i = 0; i < column.values.size(); ++i) {
        const double v = column.values[i];
        if (v != 0.0 && v != 1.0) {
          throw InputError(config.input + ": line " + std::to_string(i + 2) +
                           ": column 'label' must be 0 or 1");
        }
        trivial.push_back(v == 1.0 ? 1 : 0);
      }
      timestamps = column.timestamps;
    }
  } else {
    throw InputError("adversary needs --labels or --input");
  }
  const auto labels = config.variant == "point-adjust" ? point_adjust_adversary(trivial, config.pieces)
                                                       : adversary_predictions(trivial);
  if (timestamps.empty()) return join_labels(labels);
  return io::labels_to_csv(timestamps, labels, "pred");
}

std::string run_theory(const RunConfig& config) {
  const auto grid = config.p_values.empty() ? theory::uniform_grid(config.points) : config.p_values;
  return io::curves_to_csv(theory::emit_curves(grid));
}

std::string run_convert(const RunConfig& config) {
  const auto table = io::parse_label_csv(config.input, config.t_last);
  const auto gt = events_from_labels(table.gt, Role::kGroundTruth);
  const auto pred = events_from_labels(table.pred, Role::kPrediction);
  return io::events_to_json(gt, pred, table.gt.range()).dump(2) + "\n";
}

}  // namespace

RunConfig parse_args(int argc, const char* const* argv) {
  RunConfig config;
  auto app = build_app(config);
  app->parse(argc, argv);
  return config;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    config.oracle_config.validate();
    std::string result;
    switch (config.subcommand) {
      case Subcommand::kEvaluate:
        result = run_evaluate(config);
        break;
      case Subcommand::kEvaluatePoints:
        result = run_evaluate_points(config);
        break;
      case Subcommand::kAdversary:
        result = run_adversary(config);
        break;
      case Subcommand::kTheory:
        result = run_theory(config);
        break;
      case Subcommand::kConvert:
        result = run_convert(config);
        break;
    }
    if (config.output.empty()) {
      out << result;
    } else {
      io::write_file(config.output, result);
    }
    return kExitOk;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitContractViolation;
  }
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  auto app = build_app(config);
  try {
    app->parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app->help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app->help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return run(config, out, err);
}

}  // namespace affiliation::cli
