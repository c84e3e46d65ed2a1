#include "affiliation/events.hpp"

#include <gtest/gtest.h>

#include <random>

#include "affiliation/errors.hpp"
#include "test_support.hpp"

namespace affiliation {
namespace {

using testing::clock;

TEST(IntervalTest, RejectsEmptyAndReversed) {
  EXPECT_THROW(Interval(3.0, 3.0), InputError);
  EXPECT_THROW(Interval(4.0, 3.0), InputError);
  EXPECT_NO_THROW(Interval(3.0, 3.5));
  EXPECT_DOUBLE_EQ(Interval(2.0, 5.0).duration(), 3.0);
}

TEST(EventsFromLabelsTest, WorkedExample) {
  const auto pred = events_from_labels(testing::worked_example_pred());
  ASSERT_EQ(pred.size(), 3u);
  EXPECT_EQ(pred.events()[0], Interval(clock(3, 5), clock(3, 6)));
  EXPECT_EQ(pred.events()[1], Interval(clock(3, 7), clock(3, 10)));
  EXPECT_EQ(pred.events()[2], Interval(clock(3, 11), clock(3, 12)));

  const auto gt = events_from_labels(testing::worked_example_gt(), Role::kGroundTruth);
  ASSERT_EQ(gt.size(), 1u);
  EXPECT_EQ(gt.events()[0], Interval(clock(3, 0), clock(3, 10)));
}

TEST(EventsFromLabelsTest, AllZeroIsEmpty) {
  const LabeledSeries s{{0, 0, 0}, {0, 1, 2, 3}};
  EXPECT_TRUE(events_from_labels(s).empty());
}

TEST(EventsFromLabelsTest, MergesRuns) {
  const LabeledSeries s{{1, 1}, {0, 1, 2}};
  const auto ev = events_from_labels(s);
  ASSERT_EQ(ev.size(), 1u);
  EXPECT_EQ(ev.events()[0], Interval(0, 2));
}

TEST(EventsFromLabelsTest, RejectsBadInput) {
  EXPECT_THROW(events_from_labels(LabeledSeries{{0, 1}, {0, 2, 1}}), InputError);
  EXPECT_THROW(events_from_labels(LabeledSeries{{0, 1}, {0, 1, 1}}), InputError);
  EXPECT_THROW(events_from_labels(LabeledSeries{{0, 2}, {0, 1, 2}}), InputError);
  EXPECT_THROW(events_from_labels(LabeledSeries{{0, 1}, {0, 1}}), InputError);
}

TEST(LabeledSeriesTest, ClosingTimeRepeatsLastSpacing) {
  const auto s = LabeledSeries::from_samples({0, 1, 1}, {0.0, 1.0, 3.5});
  EXPECT_DOUBLE_EQ(s.timestamps.back(), 6.0);
  const auto o = LabeledSeries::from_samples({0, 1, 1}, {0.0, 1.0, 3.5}, 4.0);
  EXPECT_DOUBLE_EQ(o.timestamps.back(), 4.0);
  EXPECT_THROW(LabeledSeries::from_samples({0, 1, 1}, {0.0, 1.0, 3.5}, 3.5), InputError);
  EXPECT_THROW(LabeledSeries::from_samples({0, 1}, {0.0, 1.0, 3.5}), InputError);
}

TEST(AffiliationZonesTest, MidpointBoundary) {
  const EventSeries gt({Interval(0, 10), Interval(30, 40)}, Role::kGroundTruth);
  const auto zones = affiliation_zones(gt, Interval(0, 60));
  ASSERT_EQ(zones.size(), 2u);
  EXPECT_EQ(zones[0].zone, Interval(0, 20));
  EXPECT_EQ(zones[1].zone, Interval(20, 60));
}

TEST(AffiliationZonesTest, SingleEventOwnsRange) {
  const EventSeries gt({Interval(20, 40)}, Role::kGroundTruth);
  const auto zones = affiliation_zones(gt, Interval(0, 90));
  ASSERT_EQ(zones.size(), 1u);
  EXPECT_EQ(zones[0].zone, Interval(0, 90));
  EXPECT_DOUBLE_EQ(zones[0].near_gap, 20.0);
  EXPECT_DOUBLE_EQ(zones[0].far_gap, 50.0);
}

TEST(AffiliationZonesTest, ClockTimeBoundary) {
  const EventSeries gt({Interval(clock(3, 0), clock(3, 10)), Interval(clock(3, 50), clock(4, 10))},
                       Role::kGroundTruth);
  const auto zones = affiliation_zones(gt, Interval(clock(2, 0), clock(5, 0)));
  EXPECT_DOUBLE_EQ(zones[0].zone.stop(), clock(3, 30));
  EXPECT_DOUBLE_EQ(zones[1].zone.start(), clock(3, 30));
}

TEST(AffiliationZonesTest, Errors) {
  EXPECT_THROW(affiliation_zones(EventSeries({}, Role::kGroundTruth), Interval(0, 1)), InputError);
  const EventSeries outside({Interval(5, 12)}, Role::kGroundTruth);
  EXPECT_THROW(affiliation_zones(outside, Interval(0, 10)), InputError);
  EXPECT_THROW(EventSeries({Interval(0, 5), Interval(4, 9)}, Role::kGroundTruth), InputError);
  EXPECT_THROW(EventSeries({Interval(0, 5), Interval(5, 9)}, Role::kGroundTruth), InputError);
  // Touching predictions are fine; they describe the same union.
  EXPECT_NO_THROW(EventSeries({Interval(0, 5), Interval(5, 9)}, Role::kPrediction));
  // A prediction-tagged series is re-checked with the ground-truth rule.
  const EventSeries touching({Interval(0, 5), Interval(5, 9)}, Role::kPrediction);
  EXPECT_THROW(affiliation_zones(touching, Interval(0, 10)), InputError);
}

TEST(AffiliateTest, SplitsAtBoundary) {
  const EventSeries gt({Interval(0, 10), Interval(30, 40)}, Role::kGroundTruth);
  const auto zones = affiliation_zones(gt, Interval(0, 60));
  const auto frags = affiliate(EventSeries({Interval(15, 25)}, Role::kPrediction), zones);
  ASSERT_EQ(frags[0].size(), 1u);
  ASSERT_EQ(frags[1].size(), 1u);
  EXPECT_EQ(frags[0][0], Interval(15, 20));
  EXPECT_EQ(frags[1][0], Interval(20, 25));

  const auto inside = affiliate(EventSeries({Interval(32, 35)}, Role::kPrediction), zones);
  EXPECT_TRUE(inside[0].empty());
  ASSERT_EQ(inside[1].size(), 1u);
  EXPECT_EQ(inside[1][0], Interval(32, 35));

  const auto none = affiliate(EventSeries({}, Role::kPrediction), zones);
  EXPECT_TRUE(none[0].empty());
  EXPECT_TRUE(none[1].empty());
}

TEST(AffiliateTest, PointOnBoundaryGoesRight) {
  const Interval zones[] = {Interval(0, 20), Interval(20, 60)};
  const double points[] = {20.0, 5.0, 60.0};
  const auto grouped = affiliate_points(points, zones);
  EXPECT_EQ(grouped[0], std::vector<double>{5.0});
  EXPECT_EQ(grouped[1], (std::vector<double>{20.0, 60.0}));
}

TEST(AffiliationZonesProperty, PartitionAndGapIdentity) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Interval> gt;
    while (gt.empty()) gt = testing::random_disjoint_int(rng, 0, 1000, 1 + trial % 6);
    const Interval range(-10, 1010);
    const auto zones = affiliation_zones(EventSeries(gt, Role::kGroundTruth), range);
    ASSERT_EQ(zones.size(), gt.size());
    EXPECT_EQ(zones.front().zone.start(), range.start());
    EXPECT_EQ(zones.back().zone.stop(), range.stop());
    for (std::size_t j = 0; j < zones.size(); ++j) {
      const auto& z = zones[j];
      if (j > 0) EXPECT_EQ(z.zone.start(), zones[j - 1].zone.stop());
      EXPECT_TRUE(z.zone.contains(z.event));
      for (std::size_t k = 0; k < gt.size(); ++k) {
        if (k != j) EXPECT_FALSE(z.zone.start() < gt[k].stop() && gt[k].start() < z.zone.stop());
      }
      // Integer and half-integer endpoints keep this exact.
      EXPECT_EQ(z.event.duration() + z.near_gap + z.far_gap, z.zone.duration());
    }
  }
}

TEST(AffiliateProperty, FragmentsCoverPredictionInsideRange) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto inst = testing::random_instance(rng);
    const auto zones = affiliation_zones(inst.gt, inst.range);
    const auto frags = affiliate(inst.pred, zones);
    double total = 0.0;
    for (std::size_t j = 0; j < zones.size(); ++j) {
      for (std::size_t k = 0; k < frags[j].size(); ++k) {
        EXPECT_TRUE(zones[j].zone.contains(frags[j][k]));
        if (k > 0) EXPECT_GE(frags[j][k].start(), frags[j][k - 1].stop());
        total += frags[j][k].duration();
      }
    }
    EXPECT_NEAR(total, inst.pred.total_duration(), 1e-9 * inst.range.duration());
  }
}

TEST(EventsFromLabelsProperty, RasterRoundTrip) {
  std::mt19937_64 rng(3);
  std::bernoulli_distribution coin(0.3);
  std::uniform_real_distribution<double> step(0.1, 5.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 40;
    LabeledSeries s;
    double t = -20.0;
    s.timestamps.push_back(t);
    for (int i = 0; i < n; ++i) {
      s.labels.push_back(coin(rng) ? 1 : 0);
      t += step(rng);
      s.timestamps.push_back(t);
    }
    const auto events = events_from_labels(s);
    EXPECT_EQ(labels_from_events(events, s.timestamps), s.labels);
  }
}

TEST(AffiliationZonesProperty, ShiftInvariance) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto inst = testing::random_instance(rng);
    const double shift = 1024.0;
    std::vector<Interval> moved;
    for (const auto& e : inst.gt.events()) moved.emplace_back(e.start() + shift, e.stop() + shift);
    const auto a = affiliation_zones(inst.gt, inst.range);
    const auto b = affiliation_zones(EventSeries(moved, Role::kGroundTruth),
                                     Interval(inst.range.start() + shift, inst.range.stop() + shift));
    for (std::size_t j = 0; j < a.size(); ++j) {
      EXPECT_NEAR(b[j].zone.start(), a[j].zone.start() + shift, 1e-9);
      EXPECT_NEAR(b[j].zone.stop(), a[j].zone.stop() + shift, 1e-9);
    }
  }
}

}  // namespace
}  // namespace affiliation
