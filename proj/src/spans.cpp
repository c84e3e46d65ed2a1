#include "affiliation/detail/spans.hpp"

#include <algorithm>
#include <limits>

namespace affiliation::detail {

std::vector<Span> to_spans(std::span<const Interval> intervals) {
  std::vector<Span> out;
  out.reserve(intervals.size());
  for (const auto& iv : intervals) out.push_back({iv.start(), iv.stop()});
  return out;
}

std::vector<Span> to_spans(std::span<const double> points) {
  std::vector<Span> out;
  out.reserve(points.size());
  for (double p : points) out.push_back({p, p});
  return out;
}

std::vector<Span> normalized(std::vector<Span> spans) {
  std::sort(spans.begin(), spans.end(),
            [](const Span& l, const Span& r) { return l.lo < r.lo || (l.lo == r.lo && l.hi < r.hi); });
  std::vector<Span> merged;
  merged.reserve(spans.size());
  for (const auto& s : spans) {
    if (!merged.empty() && s.lo <= merged.back().hi) {
      merged.back().hi = std::max(merged.back().hi, s.hi);
    } else {
      merged.push_back(s);
    }
  }
  return merged;
}

double nearest_point(double x, std::span<const Span> spans) {
  // First span starting strictly after x.
  auto next = std::upper_bound(spans.begin(), spans.end(), x,
                               [](double v, const Span& s) { return v < s.lo; });
  if (next != spans.begin()) {
    const Span& prev = *(next - 1);
    if (x <= prev.hi) return x;
    if (next == spans.end() || x - prev.hi <= next->lo - x) return prev.hi;
  }
  return next->lo;
}

double distance_to(double x, std::span<const Span> spans) {
  if (spans.empty()) return std::numeric_limits<double>::infinity();
  const double y = nearest_point(x, spans);
  return x > y ? x - y : y - x;
}

double integrate_distance(double from, double to, std::span<const Span> spans) {
  if (spans.empty()) return std::numeric_limits<double>::infinity();
  if (!(to > from)) return 0.0;
  const double inf = std::numeric_limits<double>::infinity();
  const std::size_t n = spans.size();
  auto cell_hi = [&](std::size_t k) {
    return k + 1 < n ? 0.5 * (spans[k].hi + spans[k + 1].lo) : inf;
  };
  // First Voronoi cell whose upper edge lies beyond `from`.
  std::size_t lo_k = 0;
  std::size_t hi_k = n - 1;
  while (lo_k < hi_k) {
    const std::size_t mid = (lo_k + hi_k) / 2;
    if (cell_hi(mid) > from) {
      hi_k = mid;
    } else {
      lo_k = mid + 1;
    }
  }
  double total = 0.0;
  for (std::size_t k = lo_k; k < n; ++k) {
    const double c_lo = k == 0 ? -inf : cell_hi(k - 1);
    if (c_lo >= to) break;
    const double u = std::max(from, c_lo);
    const double v = std::min(to, cell_hi(k));
    const Span& s = spans[k];
    if (u < s.lo) {
      const double w = std::min(v, s.lo);
      total += (w - u) * (s.lo - 0.5 * (u + w));
    }
    if (v > s.hi) {
      const double w = std::max(u, s.hi);
      total += (v - w) * (0.5 * (v + w) - s.hi);
    }
  }
  return total;
}

}  // namespace affiliation::detail
