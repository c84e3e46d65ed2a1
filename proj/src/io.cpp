#include "affiliation/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "affiliation/errors.hpp"

namespace affiliation::io {

namespace {

using nlohmann::ordered_json;

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    pos = end + 1;
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = line.find(',', pos);
    fields.push_back(line.substr(pos, comma == std::string_view::npos ? line.npos : comma - pos));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  for (auto& f : fields) {
    while (!f.empty() && (f.front() == ' ' || f.front() == '\t')) f.remove_prefix(1);
    while (!f.empty() && (f.back() == ' ' || f.back() == '\t')) f.remove_suffix(1);
  }
  return fields;
}

std::string line_tag(std::size_t line_no) { return "line " + std::to_string(line_no) + ": "; }

double parse_number(std::string_view field, std::size_t line_no, std::string_view column) {
  double value = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  if (!field.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (field.empty() || ec != std::errc() || ptr != last || !std::isfinite(value)) {
    throw InputError(line_tag(line_no) + "column '" + std::string(column) +
                     "' is not a finite number: '" + std::string(field) + "'");
  }
  return value;
}

int parse_label(std::string_view field, std::size_t line_no, std::string_view column) {
  if (field == "0") return 0;
  if (field == "1") return 1;
  throw InputError(line_tag(line_no) + "column '" + std::string(column) +
                   "' must be 0 or 1, got '" + std::string(field) + "'");
}

void check_increasing(const std::vector<double>& timestamps, std::size_t line_no) {
  const std::size_t n = timestamps.size();
  if (n >= 2 && !(timestamps[n - 1] > timestamps[n - 2])) {
    const char* why = timestamps[n - 1] == timestamps[n - 2] ? "duplicate" : "unsorted";
    throw InputError(line_tag(line_no) + why + " timestamp " + format_number(timestamps[n - 1]));
  }
}

ordered_json number_or(std::optional<double> value, const char* placeholder) {
  if (!value || std::isnan(*value)) return placeholder;
  if (std::isinf(*value)) return *value > 0 ? "inf" : "-inf";
  return *value;
}

std::string fixed2(std::optional<double> value) {
  if (!value) return "NaN";
  std::ostringstream out;
  out << std::fixed << std::setprecision(2) << *value;
  return out.str();
}

std::string seconds(std::optional<double> value) {
  if (!value) return "NaN";
  if (std::isinf(*value)) return "inf";
  return format_number(*value);
}

// --- JSON schema helpers -------------------------------------------------

double json_number(const ordered_json& node, const std::string& path) {
  if (!node.is_number()) throw InputError(path + ": expected a number");
  const double v = node.get<double>();
  if (!std::isfinite(v)) throw InputError(path + ": expected a finite number");
  return v;
}

Interval json_interval(const ordered_json& node, const std::string& path) {
  if (!node.is_array() || node.size() != 2) {
    throw InputError(path + ": expected a [start, stop] pair");
  }
  const double start = json_number(node[0], path + "[0]");
  const double stop = json_number(node[1], path + "[1]");
  if (!(stop > start)) throw InputError(path + ": stop must be greater than start");
  return Interval(start, stop);
}

std::vector<Interval> json_intervals(const ordered_json& root, const char* key) {
  const std::string path = std::string("$.") + key;
  if (!root.contains(key)) return {};
  const auto& node = root.at(key);
  if (!node.is_array()) throw InputError(path + ": expected an array of [start, stop] pairs");
  std::vector<Interval> out;
  out.reserve(node.size());
  for (std::size_t i = 0; i < node.size(); ++i) {
    out.push_back(json_interval(node[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::vector<double> json_points(const ordered_json& root, const char* key) {
  const std::string path = std::string("$.") + key;
  if (!root.contains(key)) return {};
  const auto& node = root.at(key);
  if (!node.is_array()) throw InputError(path + ": expected an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < node.size(); ++i) {
    out.push_back(json_number(node[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

ordered_json parse_root(std::string_view text) {
  ordered_json root;
  try {
    root = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("$: malformed JSON (") + e.what() + ")");
  }
  if (!root.is_object()) throw InputError("$: expected an object");
  if (!root.contains("range")) throw InputError("$.range: missing");
  return root;
}

template <typename F>
auto with_path(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

}  // namespace

std::string format_number(double value) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, ec == std::errc() ? ptr : buffer);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << content;
}

LabelTable parse_label_csv_text(std::string_view text, std::optional<double> closing_time) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw InputError("line 1: missing header, expected 'timestamp,gt,pred'");
  if (lines[0] != "timestamp,gt,pred") {
    throw InputError("line 1: header must be exactly 'timestamp,gt,pred', got '" +
                     std::string(lines[0]) + "'");
  }
  std::vector<double> timestamps;
  std::vector<int> gt;
  std::vector<int> pred;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    const auto fields = split_fields(lines[i]);
    if (fields.size() != 3) {
      throw InputError(line_tag(line_no) + "expected 3 fields, got " +
                       std::to_string(fields.size()));
    }
    timestamps.push_back(parse_number(fields[0], line_no, "timestamp"));
    check_increasing(timestamps, line_no);
    gt.push_back(parse_label(fields[1], line_no, "gt"));
    pred.push_back(parse_label(fields[2], line_no, "pred"));
  }
  if (timestamps.empty()) throw InputError("no data rows after the header");
  if (closing_time && !(*closing_time > timestamps.back())) {
    throw InputError("closing timestamp must be after the last sample");
  }
  return {LabeledSeries::from_samples(std::move(gt), timestamps, closing_time),
          LabeledSeries::from_samples(std::move(pred), timestamps, closing_time)};
}

LabelTable parse_label_csv(const std::string& path, std::optional<double> closing_time) {
  return with_path(path, [&] { return parse_label_csv_text(read_file(path), closing_time); });
}

Column parse_column_csv_text(std::string_view text, std::string_view column) {
  const auto lines = split_lines(text);
  const std::string header = "timestamp," + std::string(column);
  if (lines.empty() || lines[0] != header) {
    throw InputError("line 1: header must be exactly '" + header + "'");
  }
  Column out;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    const auto fields = split_fields(lines[i]);
    if (fields.size() != 2) {
      throw InputError(line_tag(line_no) + "expected 2 fields, got " +
                       std::to_string(fields.size()));
    }
    out.timestamps.push_back(parse_number(fields[0], line_no, "timestamp"));
    check_increasing(out.timestamps, line_no);
    out.values.push_back(parse_number(fields[1], line_no, column));
  }
  if (out.timestamps.empty()) throw InputError("no data rows after the header");
  return out;
}

EventFile parse_event_json_text(std::string_view text) {
  const auto root = parse_root(text);
  const Interval range = json_interval(root.at("range"), "$.range");
  if (!root.contains("gt")) throw InputError("$.gt: missing");
  auto gt_events = json_intervals(root, "gt");
  auto pred_events = json_intervals(root, "pred");
  auto gt = with_path("$.gt", [&] { return EventSeries(std::move(gt_events), Role::kGroundTruth); });
  if (gt.empty()) throw InputError("$.gt: ground truth has no events");
  auto pred = with_path("$.pred", [&] { return EventSeries(std::move(pred_events), Role::kPrediction); });
  for (std::size_t i = 0; i < gt.size(); ++i) {
    if (!range.contains(gt.events()[i])) {
      throw InputError("$.gt[" + std::to_string(i) + "]: outside $.range");
    }
  }
  for (std::size_t i = 0; i < pred.size(); ++i) {
    if (!range.contains(pred.events()[i])) {
      throw InputError("$.pred[" + std::to_string(i) + "]: outside $.range");
    }
  }
  return {std::move(gt), std::move(pred), range};
}

EventFile parse_event_json(const std::string& path) {
  return with_path(path, [&] { return parse_event_json_text(read_file(path)); });
}

PointFile parse_point_json_text(std::string_view text) {
  const auto root = parse_root(text);
  const Interval range = json_interval(root.at("range"), "$.range");
  if (!root.contains("gt")) throw InputError("$.gt: missing");
  PointFile file{json_points(root, "gt"), json_points(root, "pred"), range};
  if (file.gt.empty()) throw InputError("$.gt: ground truth has no points");
  return file;
}

nlohmann::ordered_json events_to_json(const EventSeries& gt, const EventSeries& pred,
                                      const Interval& range) {
  auto pairs = [](const EventSeries& series) {
    ordered_json arr = ordered_json::array();
    for (const auto& e : series.events()) arr.push_back({e.start(), e.stop()});
    return arr;
  };
  ordered_json out;
  out["gt"] = pairs(gt);
  out["pred"] = pairs(pred);
  out["range"] = {range.start(), range.stop()};
  return out;
}

nlohmann::ordered_json report_to_json(const EvaluationReport& report,
                                      const oracle::NumericReport* oracle) {
  ordered_json out;
  out["precision"] = number_or(report.precision, "NaN");
  out["recall"] = number_or(report.recall, "NaN");
  out["f1"] = number_or(report.f1, "NaN");
  out["n_events"] = report.n_events;
  out["s_size"] = report.s_size;
  out["range"] = {report.range.start(), report.range.stop()};
  if (oracle) {
    out["precision_oracle"] = number_or(oracle->precision, "NaN");
    out["recall_oracle"] = number_or(oracle->recall, "NaN");
  }
  ordered_json zones = ordered_json::array();
  for (std::size_t j = 0; j < report.zone_scores.size(); ++j) {
    const ZoneScore& s = report.zone_scores[j];
    ordered_json z;
    z["zone"] = {s.zone.start(), s.zone.stop()};
    z["gt"] = {s.event_start, s.event_stop};
    z["d_precision_s"] = number_or(s.d_precision, "NaN");
    z["d_recall_s"] = number_or(s.d_recall, "NaN");
    z["p_precision"] = number_or(s.p_precision, "NaN");
    z["p_recall"] = number_or(s.p_recall, "NaN");
    if (s.d_recall_signed) z["d_recall_signed_s"] = number_or(s.d_recall_signed, "NaN");
    if (oracle && j < oracle->zones.size()) {
      z["p_precision_oracle"] = number_or(oracle->zones[j].precision, "NaN");
      z["p_recall_oracle"] = number_or(oracle->zones[j].recall, "NaN");
    }
    zones.push_back(std::move(z));
  }
  out["zones"] = std::move(zones);
  return out;
}

std::string render_table(const EvaluationReport& report) {
  struct Row {
    std::string event, gt, d_precision, d_recall, scores;
  };
  std::vector<Row> rows;
  rows.push_back({"event", "gt", "d_precision_s", "d_recall_s", "precision/recall/F1"});
  for (const auto& s : report.zone_scores) {
    const std::string gt = s.event_stop > s.event_start
                               ? "[" + format_number(s.event_start) + ", " +
                                     format_number(s.event_stop) + ")"
                               : format_number(s.event_start);
    rows.push_back({std::to_string(s.zone_index + 1), gt, seconds(s.d_precision),
                    seconds(s.d_recall),
                    fixed2(s.p_precision) + "/" + fixed2(s.p_recall) + "/" +
                        fixed2(f1(s.p_precision, s.p_recall))});
  }
  rows.push_back({"mean", "", "", "",
                  fixed2(report.precision) + "/" + fixed2(report.recall) + "/" +
                      fixed2(report.f1)});

  std::size_t w[5] = {0, 0, 0, 0, 0};
  for (const auto& r : rows) {
    w[0] = std::max(w[0], r.event.size());
    w[1] = std::max(w[1], r.gt.size());
    w[2] = std::max(w[2], r.d_precision.size());
    w[3] = std::max(w[3], r.d_recall.size());
    w[4] = std::max(w[4], r.scores.size());
  }
  std::ostringstream out;
  for (const auto& r : rows) {
    out << std::left << std::setw(static_cast<int>(w[0])) << r.event << "  "
        << std::setw(static_cast<int>(w[1])) << r.gt << "  " << std::right
        << std::setw(static_cast<int>(w[2])) << r.d_precision << "  "
        << std::setw(static_cast<int>(w[3])) << r.d_recall << "  " << r.scores << '\n';
  }
  return out.str();
}

std::string curves_to_csv(const std::vector<theory::CurveRow>& rows) {
  std::string out = "p,position,precision,recall\n";
  for (const auto& r : rows) {
    out += format_number(r.p);
    out += ',';
    out += theory::position_name(r.position);
    out += ',';
    out += format_number(r.precision);
    out += ',';
    out += format_number(r.recall);
    out += '\n';
  }
  return out;
}

std::string labels_to_csv(const std::vector<double>& timestamps, const std::vector<int>& labels,
                          std::string_view column) {
  std::string out = "timestamp,";
  out += column;
  out += '\n';
  for (std::size_t i = 0; i < labels.size(); ++i) {
    out += format_number(timestamps[i]);
    out += ',';
    out += labels[i] ? '1' : '0';
    out += '\n';
  }
  return out;
}

}  // namespace affiliation::io
