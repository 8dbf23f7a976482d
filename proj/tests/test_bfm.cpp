#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "prefdist/bfm.hpp"
#include "prefdist/error.hpp"

using namespace prefdist;

namespace {

const ObjectUniverse kABC({"A", "B", "C"});
constexpr double kRefTol = 5e-5;

WeakOrder parse(const std::string& text) { return parse_preference(text, kABC); }

std::size_t index_in(const std::vector<WeakOrder>& orders, const std::string& text) {
  const auto it = std::find(orders.begin(), orders.end(), parse(text));
  EXPECT_NE(it, orders.end()) << text;
  return static_cast<std::size_t>(it - orders.begin());
}

// Compatible orders of C > A (rows) and A > B (columns); the grid entry of
// each pair is sqrt(k)/sqrt(24).
const std::vector<std::string> kRowsPref1{"B > C > A", "C > A > B", "C > B > A", "C > (A = B)", "(B = C) > A"};
const std::vector<std::string> kColsPref2{"A > B > C", "A > C > B", "C > A > B", "A > (B = C)", "(A = C) > B"};
const double kGridK[5][5] = {
    {16, 24, 16, 18, 18}, {16, 8, 0, 10, 2}, {24, 16, 8, 18, 10}, {18, 10, 2, 12, 4}, {18, 18, 10, 16, 12},
};

/// All orders of 3 objects with any subset of objects forgotten.
std::vector<WeakOrder> all_ppos3() {
  std::vector<WeakOrder> out;
  for (const auto& r : oracle::all_weak_orders(3)) {
    for (unsigned mask = 0; mask < 8; ++mask) {
      auto partial = r;
      for (int i = 0; i < 3; ++i)
        if (!(mask & (1u << i))) partial[static_cast<std::size_t>(i)] = -1;
      const auto w = oracle::order_of(partial);
      if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
    }
  }
  return out;
}

}  // namespace

TEST(Attitude, HurwiczAlphaRange) {
  EXPECT_THROW(Attitude::hurwicz(-0.1), Error);
  EXPECT_THROW(Attitude::hurwicz(1.5), Error);
  EXPECT_THROW(Attitude::hurwicz(std::nan("")), Error);
  EXPECT_EQ(Attitude::hurwicz(0.0).alpha(), 0.0);
  EXPECT_EQ(Attitude::hurwicz(1.0).alpha(), 1.0);
}

TEST(BfmGrid, PartialPairReferenceGrid) {
  const auto report = bfm_distance(parse("C > A"), parse("A > B"), Attitude::average(), PsmConvention::Signed);
  ASSERT_EQ(report.grid.rows(), 5);
  ASSERT_EQ(report.grid.cols(), 5);
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) {
      const auto r = static_cast<Eigen::Index>(index_in(report.ctpos1, kRowsPref1[i]));
      const auto c = static_cast<Eigen::Index>(index_in(report.ctpos2, kColsPref2[j]));
      EXPECT_NEAR(report.grid(r, c), std::sqrt(kGridK[i][j]) / std::sqrt(24.0), 1e-12)
          << kRowsPref1[i] << " vs " << kColsPref2[j];
    }
  }
  // B > C > A vs A > C > B is a full reversal.
  EXPECT_DOUBLE_EQ(report.grid(static_cast<Eigen::Index>(index_in(report.ctpos1, kRowsPref1[0])),
                               static_cast<Eigen::Index>(index_in(report.ctpos2, kColsPref2[1]))),
                   1.0);
}

TEST(BfmGrid, MatchesTheStandaloneGridFunction) {
  const auto p1 = parse("C > A"), p2 = parse("A > B");
  EXPECT_EQ(bfm_grid(p1, p2, PsmConvention::Signed),
            bfm_distance(p1, p2, Attitude::average(), PsmConvention::Signed).grid);
}

TEST(BfmDistance, PartialPairAttitudes) {
  const auto p1 = parse("C > A"), p2 = parse("A > B");
  const auto report = bfm_distance(p1, p2, Attitude::hurwicz(0.5), PsmConvention::Signed);
  EXPECT_NEAR(report.optimistic, 0.0, kRefTol);
  EXPECT_NEAR(report.pessimistic, 1.0, kRefTol);
  EXPECT_NEAR(report.average, 0.6966, kRefTol);
  EXPECT_NEAR(report.average * 25.0, 17.4151, 25 * kRefTol);
  EXPECT_NEAR(report.hurwicz, 0.5, kRefTol);
  EXPECT_EQ(report.selected(), report.hurwicz);

  // Same scalars under the unit convention.
  const auto unit = bfm_distance(p1, p2, Attitude::average(), PsmConvention::Unit);
  EXPECT_NEAR(unit.average, report.average, 1e-12);
  EXPECT_EQ(unit.selected(), unit.average);
}

TEST(BfmDistance, HurwiczWeightsTheMinimum) {
  const auto p1 = parse("C > A"), p2 = parse("A > B");
  // min 0, max 1: alpha*min + (1-alpha)*max.
  EXPECT_NEAR(bfm_distance(p1, p2, Attitude::hurwicz(0.25), PsmConvention::Signed).hurwicz, 0.75, 1e-15);
  EXPECT_NEAR(bfm_distance(p1, p2, Attitude::hurwicz(1.0), PsmConvention::Signed).hurwicz, 0.0, 1e-15);
  EXPECT_EQ(bfm_distance(p1, p2, Attitude::optimistic(), PsmConvention::Signed).selected(), 0.0);
  EXPECT_EQ(bfm_distance(p1, p2, Attitude::pessimistic(), PsmConvention::Signed).selected(), 1.0);
}

TEST(BfmDistance, TotalInputs) {
  const auto t = parse("B > A > C");
  const auto same = bfm_distance(t, t, Attitude::average(), PsmConvention::Signed);
  EXPECT_EQ(same.grid.size(), 1);
  EXPECT_EQ(same.optimistic, 0.0);
  EXPECT_EQ(same.pessimistic, 0.0);
  EXPECT_EQ(same.average, 0.0);
  EXPECT_EQ(same.hurwicz, 0.0);

  // Chain vs its reverse: single pair at the maximum distance.
  const auto chain = parse("A > B > C");
  const auto rev = bfm_distance(chain, reverse(chain), Attitude::average(), PsmConvention::Signed);
  EXPECT_DOUBLE_EQ(rev.optimistic, 1.0);
  EXPECT_DOUBLE_EQ(rev.pessimistic, 1.0);
  EXPECT_DOUBLE_EQ(rev.average, 1.0);
  EXPECT_DOUBLE_EQ(rev.hurwicz, 1.0);
}

TEST(BfmDistance, Errors) {
  const auto two = parse_preference("A > B", ObjectUniverse({"A", "B"}));
  try {
    bfm_distance(two, parse("A > B"), Attitude::average(), PsmConvention::Signed);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DimensionMismatch);
  }
  const auto one = WeakOrder::empty(1);
  EXPECT_THROW(bfm_distance(one, one, Attitude::average(), PsmConvention::Signed), Error);
  const auto big = WeakOrder::empty(9);
  try {
    bfm_distance(big, big, Attitude::average(), PsmConvention::Signed);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CapExceeded);
  }
}

TEST(BfmProperties, SymmetryRangeAndMeanOnAllPartialOrders) {
  const auto ppos = all_ppos3();
  ASSERT_EQ(ppos.size(), 13u + 9u + 3u + 1u);  // 3, 2, 1 and 0 objects mentioned
  for (const auto& p : ppos) {
    for (const auto& q : ppos) {
      const auto pq = bfm_distance(p, q, Attitude::average(), PsmConvention::Signed);
      const auto qp = bfm_distance(q, p, Attitude::average(), PsmConvention::Signed);
      EXPECT_EQ(pq.grid, qp.grid.transpose());
      EXPECT_EQ(pq.optimistic, qp.optimistic);
      EXPECT_EQ(pq.pessimistic, qp.pessimistic);
      EXPECT_NEAR(pq.average, qp.average, 1e-12);
      EXPECT_EQ(pq.hurwicz, qp.hurwicz);
      EXPECT_GE(pq.grid.minCoeff(), 0.0);
      EXPECT_LE(pq.grid.maxCoeff(), 1.0 + 1e-12);
      EXPECT_LE(pq.optimistic, pq.average);
      EXPECT_LE(pq.average, pq.pessimistic);
      EXPECT_NEAR(pq.average, pq.grid.mean(), 1e-12);
      EXPECT_NEAR(pq.hurwicz, 0.5 * (pq.optimistic + pq.pessimistic), 1e-15);
      if (p.is_total() && q.is_total()) {
        const double d = normalized_distance(p, q, PsmConvention::Signed);
        EXPECT_NEAR(pq.optimistic, d, 1e-12);
        EXPECT_NEAR(pq.pessimistic, d, 1e-12);
        EXPECT_NEAR(pq.average, d, 1e-12);
      }
    }
  }
}

TEST(PairwiseMean, AgreesWithNaiveSum) {
  Eigen::MatrixXd m(7, 11);
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = std::sqrt(static_cast<double>(i % 17)) / 5.0;
  EXPECT_NEAR(pairwise_mean(m), m.mean(), 1e-13);
  EXPECT_THROW(pairwise_mean(Eigen::MatrixXd(0, 0)), Error);
}
