#pragma once

#include <Eigen/Dense>
#include <string_view>
#include <vector>

#include "prefdist/enumeration.hpp"
#include "prefdist/model.hpp"
#include "prefdist/psm.hpp"

namespace prefdist {

/// Rule collapsing the grid of CTPO-pair distances to a single number.
class Attitude {
 public:
  enum class Kind { Optimistic, Pessimistic, Average, Hurwicz };

  static Attitude optimistic() { return Attitude(Kind::Optimistic, 0.5); }
  static Attitude pessimistic() { return Attitude(Kind::Pessimistic, 0.5); }
  static Attitude average() { return Attitude(Kind::Average, 0.5); }
  /// alpha weights the optimistic (min) term: alpha*min + (1-alpha)*max.
  static Attitude hurwicz(double alpha);

  Kind kind() const noexcept { return kind_; }
  double alpha() const noexcept { return alpha_; }

 private:
  Attitude(Kind kind, double alpha) : kind_(kind), alpha_(alpha) {}

  Kind kind_;
  double alpha_;
};

std::string_view to_string(Attitude::Kind kind);

struct BfmReport {
  std::vector<WeakOrder> ctpos1;
  std::vector<WeakOrder> ctpos2;
  /// grid(i, j) = normalized distance between ctpos1[i] and ctpos2[j].
  Eigen::MatrixXd grid;
  double optimistic = 0.0;
  double pessimistic = 0.0;
  double average = 0.0;
  double hurwicz = 0.0;
  Attitude attitude = Attitude::average();
  PsmConvention convention = PsmConvention::Signed;

  /// The scalar picked by `attitude`.
  double selected() const;
};

/// Normalized distances for every pair of compatible total orders, rows and
/// columns in enumeration order.
Eigen::MatrixXd bfm_grid(const WeakOrder& ppo1, const WeakOrder& ppo2, PsmConvention conv,
                         std::size_t cap = kDefaultEnumerationCap);

BfmReport bfm_distance(const WeakOrder& ppo1, const WeakOrder& ppo2, Attitude attitude, PsmConvention conv,
                       std::size_t cap = kDefaultEnumerationCap);

/// Pairwise (cascade) summation of the matrix entries divided by their count.
double pairwise_mean(const Eigen::MatrixXd& values);

}  // namespace prefdist
