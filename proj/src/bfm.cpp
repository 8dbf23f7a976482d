#include "prefdist/bfm.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <string>

#include "prefdist/error.hpp"

namespace prefdist {

Attitude Attitude::hurwicz(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw Error(ErrorKind::InvalidArgument, "Hurwicz alpha must lie in [0, 1], got " + std::to_string(alpha));
  }
  return Attitude(Kind::Hurwicz, alpha);
}

std::string_view to_string(Attitude::Kind kind) {
  switch (kind) {
    case Attitude::Kind::Optimistic: return "optim";
    case Attitude::Kind::Pessimistic: return "pessim";
    case Attitude::Kind::Average: return "aver";
    case Attitude::Kind::Hurwicz: return "hurwicz";
  }
  return "?";
}

double BfmReport::selected() const {
  switch (attitude.kind()) {
    case Attitude::Kind::Optimistic: return optimistic;
    case Attitude::Kind::Pessimistic: return pessimistic;
    case Attitude::Kind::Average: return average;
    case Attitude::Kind::Hurwicz: return hurwicz;
  }
  return average;
}

namespace {

double cascade_sum(std::span<const double> values) {
  if (values.size() <= 8) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  const auto half = values.size() / 2;
  return cascade_sum(values.first(half)) + cascade_sum(values.subspan(half));
}

void check_pair(const WeakOrder& ppo1, const WeakOrder& ppo2) {
  if (ppo1.universe_size() != ppo2.universe_size()) {
    throw Error(ErrorKind::DimensionMismatch, "preferences over universes of size " +
                                                  std::to_string(ppo1.universe_size()) + " and " +
                                                  std::to_string(ppo2.universe_size()));
  }
  if (ppo1.universe_size() < 2) {
    throw Error(ErrorKind::DegenerateUniverse, "distance needs at least two objects");
  }
}

Eigen::MatrixXd grid_of(const std::vector<WeakOrder>& rows, const std::vector<WeakOrder>& cols, PsmConvention conv,
                        std::size_t n) {
  std::vector<PreferenceScoreMatrix> row_psm;
  std::vector<PreferenceScoreMatrix> col_psm;
  row_psm.reserve(rows.size());
  col_psm.reserve(cols.size());
  for (const auto& t : rows) row_psm.push_back(build_psm(t, conv));
  for (const auto& t : cols) col_psm.push_back(build_psm(t, conv));

  const double max_distance = max_psm_distance(n, conv);
  Eigen::MatrixXd grid(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
  for (Eigen::Index i = 0; i < grid.rows(); ++i) {
    for (Eigen::Index j = 0; j < grid.cols(); ++j) {
      grid(i, j) = frobenius_distance(row_psm[i], col_psm[j]) / max_distance;
    }
  }
  return grid;
}

}  // namespace

double pairwise_mean(const Eigen::MatrixXd& values) {
  if (values.size() == 0) throw Error(ErrorKind::InvalidArgument, "mean of an empty grid");
  return cascade_sum(std::span<const double>(values.data(), static_cast<std::size_t>(values.size()))) /
         static_cast<double>(values.size());
}

Eigen::MatrixXd bfm_grid(const WeakOrder& ppo1, const WeakOrder& ppo2, PsmConvention conv, std::size_t cap) {
  check_pair(ppo1, ppo2);
  const auto set1 = compatible_tpos(ppo1, cap);
  const auto set2 = compatible_tpos(ppo2, cap);
  return grid_of(set1.ctpos, set2.ctpos, conv, ppo1.universe_size());
}

BfmReport bfm_distance(const WeakOrder& ppo1, const WeakOrder& ppo2, Attitude attitude, PsmConvention conv,
                       std::size_t cap) {
  check_pair(ppo1, ppo2);
  BfmReport report;
  report.ctpos1 = compatible_tpos(ppo1, cap).ctpos;
  report.ctpos2 = compatible_tpos(ppo2, cap).ctpos;
  report.grid = grid_of(report.ctpos1, report.ctpos2, conv, ppo1.universe_size());
  report.attitude = attitude;
  report.convention = conv;

  report.optimistic = report.grid.minCoeff();
  report.pessimistic = report.grid.maxCoeff();
  // Rounding in the sum must not push the mean outside [min, max].
  report.average = std::clamp(pairwise_mean(report.grid), report.optimistic, report.pessimistic);
  const double alpha = attitude.alpha();
  report.hurwicz = alpha * report.optimistic + (1.0 - alpha) * report.pessimistic;
  return report;
}

}  // namespace prefdist
