#include "affiliation/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "affiliation/errors.hpp"
#include "affiliation/metrics.hpp"

namespace affiliation::oracle {

namespace {

double scan_distance(double x, std::span<const Interval> set) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& iv : set) {
    double d = 0.0;
    if (x < iv.start()) {
      d = iv.start() - x;
    } else if (x > iv.stop()) {
      d = x - iv.stop();
    }
    best = std::min(best, d);
  }
  return best;
}

double step_for(const AffiliationZone& zone, const OracleConfig& config) {
  return config.grid_step.value_or(zone.zone.duration() / 1e5);
}

template <typename F>
double trapezoid(double from, double to, double step, std::size_t min_panels, F&& f) {
  const double width = to - from;
  auto panels = static_cast<std::size_t>(std::ceil(width / step));
  panels = std::max(panels, min_panels);
  const double h = width / static_cast<double>(panels);
  double sum = 0.5 * (f(from) + f(to));
  for (std::size_t i = 1; i < panels; ++i) sum += f(from + h * static_cast<double>(i));
  return sum * h;
}

Estimate mean_estimate(double sum, double sum_sq, std::size_t n) {
  const auto count = static_cast<double>(n);
  const double mean = sum / count;
  const double var = n > 1 ? std::max(0.0, (sum_sq - count * mean * mean) / (count - 1.0)) : 0.0;
  return {mean, std::sqrt(var / count)};
}

// Exact survival at a sampled point; points inside the event use the
// left-limit convention (value 1 at distance 0).
double precision_integrand(const AffiliationZone& zone, double x) {
  const Interval event[] = {zone.event};
  return survival_precision_measure(zone, scan_distance(x, event));
}

}  // namespace

void OracleConfig::validate() const {
  if (grid_step && !(*grid_step > 0.0)) throw InputError("oracle grid step must be positive");
  if (mc_samples < 1) throw InputError("oracle needs at least one Monte-Carlo sample");
}

double survival_precision_measure(const AffiliationZone& zone, double d) {
  if (d < 0.0) throw InputError("distance must be non-negative");
  if (d == 0.0) return 1.0;
  const double left = std::max(0.0, (zone.event.start() - d) - zone.zone.start());
  const double right = std::max(0.0, zone.zone.stop() - (zone.event.stop() + d));
  return (left + right) / zone.zone.duration();
}

double survival_recall_measure(const Interval& zone, double y, double d) {
  if (d < 0.0) throw InputError("distance must be non-negative");
  if (d == 0.0) return 1.0;
  const double left = std::max(0.0, (y - d) - zone.start());
  const double right = std::max(0.0, zone.stop() - (y + d));
  return (left + right) / zone.duration();
}

Estimate survival_precision_mc(const AffiliationZone& zone, double d, const OracleConfig& config) {
  config.validate();
  std::mt19937_64 rng(config.rng_seed);
  std::uniform_real_distribution<double> uniform(zone.zone.start(), zone.zone.stop());
  const Interval event[] = {zone.event};
  std::size_t hits = 0;
  for (std::size_t i = 0; i < config.mc_samples; ++i) {
    if (scan_distance(uniform(rng), event) >= d) ++hits;
  }
  const double n = static_cast<double>(config.mc_samples);
  const double p = static_cast<double>(hits) / n;
  return {p, std::sqrt(p * (1.0 - p) / n)};
}

NumericProbabilities probabilities_numeric(const AffiliationZone& zone,
                                           std::span<const Interval> pred_fragments,
                                           const OracleConfig& config) {
  config.validate();
  if (pred_fragments.empty()) return {std::nullopt, 0.0};
  const double step = step_for(zone, config);

  double area = 0.0;
  double length = 0.0;
  for (const auto& fragment : pred_fragments) {
    area += trapezoid(fragment.start(), fragment.stop(), step, config.min_panels,
                      [&](double x) { return precision_integrand(zone, x); });
    length += fragment.duration();
  }

  const double recall_area =
      trapezoid(zone.event.start(), zone.event.stop(), step, config.min_panels, [&](double y) {
        return survival_recall_measure(zone.zone, y, scan_distance(y, pred_fragments));
      });
  return {area / length, recall_area / zone.event.duration()};
}

Estimate expected_recall_mc(const AffiliationZone& zone, const OracleConfig& config) {
  config.validate();
  std::mt19937_64 rng(config.rng_seed);
  std::uniform_real_distribution<double> uniform(zone.zone.start(), zone.zone.stop());
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::size_t i = 0; i < config.mc_samples; ++i) {
    const double point[] = {uniform(rng)};
    const double r = point_recall_probability(zone, point);
    sum += r;
    sum_sq += r * r;
  }
  return mean_estimate(sum, sum_sq, config.mc_samples);
}

Estimate expected_precision_mc(const AffiliationZone& zone, const OracleConfig& config) {
  config.validate();
  std::mt19937_64 rng(config.rng_seed);
  std::uniform_real_distribution<double> uniform(zone.zone.start(), zone.zone.stop());
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::size_t i = 0; i < config.mc_samples; ++i) {
    const double point[] = {uniform(rng)};
    const double p = *point_precision_probability(zone, point);
    sum += p;
    sum_sq += p * p;
  }
  return mean_estimate(sum, sum_sq, config.mc_samples);
}

NumericReport evaluate_numeric(const EventSeries& gt, const EventSeries& pred,
                               const Interval& range, const OracleConfig& config) {
  const auto zones = affiliation_zones(gt, range);
  const auto fragments = affiliate(pred, zones);
  NumericReport report{{}, std::nullopt, 0.0};
  double precision_sum = 0.0;
  std::size_t defined = 0;
  for (std::size_t j = 0; j < zones.size(); ++j) {
    const auto probs = probabilities_numeric(zones[j], fragments[j], config);
    if (probs.precision) {
      precision_sum += *probs.precision;
      ++defined;
    }
    report.recall += probs.recall;
    report.zones.push_back(probs);
  }
  report.recall /= static_cast<double>(zones.size());
  if (defined > 0) report.precision = precision_sum / static_cast<double>(defined);
  return report;
}

}  // namespace affiliation::oracle
