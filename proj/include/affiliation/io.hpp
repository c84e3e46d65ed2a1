#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "affiliation/baselines.hpp"
#include "affiliation/events.hpp"
#include "affiliation/metrics.hpp"
#include "affiliation/oracle.hpp"
#include "affiliation/theory.hpp"
#include "json.hpp"

// File formats of the command-line tool.
//
//   label CSV   header `timestamp,gt,pred`, one row per sample, numeric seconds
//   event JSON  {"gt": [[start, stop], ...], "pred": [...], "range": [start, stop]}
//   point JSON  {"gt": [t, ...], "pred": [t, ...], "range": [start, stop]}
//   report      JSON object, see report_to_json
//   curves      CSV `p,position,precision,recall`
namespace affiliation::io {

struct LabelTable {
  LabeledSeries gt;
  LabeledSeries pred;
};

struct EventFile {
  EventSeries gt;
  EventSeries pred;
  Interval range;
};

struct PointFile {
  std::vector<double> gt;
  std::vector<double> pred;
  Interval range;
};

/// A single-label CSV such as `timestamp,label` or `timestamp,value`.
struct Column {
  std::vector<double> timestamps;
  std::vector<double> values;
};

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

/// Parses the label CSV. `closing_time` overrides the default t(N+1).
/// Errors name the offending line.
LabelTable parse_label_csv_text(std::string_view text, std::optional<double> closing_time = {});
LabelTable parse_label_csv(const std::string& path, std::optional<double> closing_time = {});

/// Reads a two-column CSV whose header is `timestamp,<column>`.
Column parse_column_csv_text(std::string_view text, std::string_view column);

/// Errors carry a JSON path such as `$.gt[1]`. A missing "pred" key means
/// no predictions.
EventFile parse_event_json_text(std::string_view text);
EventFile parse_event_json(const std::string& path);

PointFile parse_point_json_text(std::string_view text);

nlohmann::ordered_json events_to_json(const EventSeries& gt, const EventSeries& pred,
                                      const Interval& range);

/// Report object with keys precision, recall, f1, n_events, s_size, range and
/// zones. Undefined values are the string "NaN", infinite distances "inf".
/// When `oracle` is given each zone also carries p_precision_oracle and
/// p_recall_oracle.
nlohmann::ordered_json report_to_json(const EvaluationReport& report,
                                      const oracle::NumericReport* oracle = nullptr);

/// Aligned per-event text table.
std::string render_table(const EvaluationReport& report);

std::string curves_to_csv(const std::vector<theory::CurveRow>& rows);

std::string labels_to_csv(const std::vector<double>& timestamps, const std::vector<int>& labels,
                          std::string_view column);

/// Shortest round-trip decimal representation.
std::string format_number(double value);

}  // namespace affiliation::io
