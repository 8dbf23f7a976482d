#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <string_view>

#include "prefdist/model.hpp"

namespace prefdist {

/// Signed: +1 / -1 / 0 for succ / prec / tie. Unit: 1 / 0 / 0.5.
enum class PsmConvention { Signed, Unit };

std::string_view to_string(PsmConvention conv);

/// Pairwise preference-score matrix of a total order.
struct PreferenceScoreMatrix {
  Eigen::MatrixXd entries;
  PsmConvention convention;

  std::size_t size() const noexcept { return static_cast<std::size_t>(entries.rows()); }
};

/// Score of a single known relation; Unknown is rejected.
double psm_score(PairRelation rel, PsmConvention conv);

PreferenceScoreMatrix build_psm(const WeakOrder& tpo, PsmConvention conv);

/// sqrt(sum_ij |a_ij - b_ij|^2).
double frobenius_distance(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);
double frobenius_distance(const PreferenceScoreMatrix& a, const PreferenceScoreMatrix& b);

/// Distance between the chain x_1 > ... > x_n and its reverse. Equals
/// 2*sqrt(n(n-1)) for Signed and sqrt(n(n-1)) for Unit.
double max_psm_distance(std::size_t n, PsmConvention conv);

double normalized_distance(const WeakOrder& tpo1, const WeakOrder& tpo2, PsmConvention conv);

}  // namespace prefdist
