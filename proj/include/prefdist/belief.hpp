#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "prefdist/model.hpp"
#include "prefdist/report.hpp"

namespace prefdist {

/// Subsets of the pairwise preference frame {t1: X > Y, t2: X = Y, t3: X < Y}
/// as bitmasks (bit 0 = t1, bit 1 = t2, bit 2 = t3). The numeric values are
/// the component order of a mass vector.
using FocalSet = std::uint8_t;

namespace focal {
inline constexpr FocalSet kEmpty = 0;
inline constexpr FocalSet kSucc = 1;
inline constexpr FocalSet kEquiv = 2;
inline constexpr FocalSet kSuccOrEquiv = 3;
inline constexpr FocalSet kPrec = 4;
inline constexpr FocalSet kSuccOrPrec = 5;
inline constexpr FocalSet kEquivOrPrec = 6;
inline constexpr FocalSet kFrame = 7;
}  // namespace focal

inline constexpr std::size_t kFocalCount = 8;

/// Tolerance on the total mass of a BBA.
inline constexpr double kMassTolerance = 1e-9;

/// Normalized basic belief assignment on the 3-state preference frame.
class MassFunction {
 public:
  using Vector = std::array<double, kFocalCount>;

  /// Validates non-negativity, m(empty) = 0 and unit total mass.
  static MassFunction from_masses(const Vector& masses);
  /// All mass on one non-empty subset.
  static MassFunction certain(FocalSet subset);
  static MassFunction vacuous() { return certain(focal::kFrame); }

  double operator[](FocalSet subset) const { return masses_.at(subset); }
  const Vector& masses() const noexcept { return masses_; }

  /// Same evidence seen from the other object: swaps the roles of t1 and t3.
  MassFunction mirrored() const;

  bool operator==(const MassFunction&) const = default;

 private:
  explicit MassFunction(const Vector& masses) : masses_(masses) {}

  Vector masses_{};
};

/// The subset with t1 and t3 exchanged.
FocalSet mirror(FocalSet subset);

struct BeliefInterval {
  double bel;
  double pl;

  double uncertainty() const noexcept { return pl - bel; }
};

double bel(const MassFunction& m, FocalSet subset);
double pl(const MassFunction& m, FocalSet subset);
BeliefInterval belief_interval(const MassFunction& m, FocalSet subset);

MassFunction bba_from_relation(PairRelation rel);

/// N x N grid of BBAs; cell (i, j) lives on the frame of (x_i, x_j).
/// Diagonal cells are tie-certain and cell (j, i) is the mirror of (i, j).
class BbaMatrix {
 public:
  /// Row-major cells; validates the diagonal and mirror structure.
  BbaMatrix(std::size_t n, std::vector<MassFunction> cells);

  std::size_t size() const noexcept { return n_; }
  const MassFunction& at(std::size_t i, std::size_t j) const;
  const std::vector<MassFunction>& cells() const noexcept { return cells_; }

  /// The 8N x 8N sparse block form, materialized densely. Block (i, j) holds
  /// the mass vector of cell (i, j) on its diagonal.
  Eigen::MatrixXd flattened() const;

 private:
  std::size_t n_;
  std::vector<MassFunction> cells_;
};

BbaMatrix build_bba_matrix(const WeakOrder& ppo);

/// Frobenius distance between BBA matrices: sqrt of the sum over cells of the
/// squared mass-vector differences. Same value as the norm of the
/// difference of the 8N x 8N flattened matrices.
double bba_matrix_frobenius(const BbaMatrix& a, const BbaMatrix& b);

DistanceReport direct_distance(const WeakOrder& ppo1, const WeakOrder& ppo2);
DistanceReport direct_distance_general(const BbaMatrix& b1, const BbaMatrix& b2);

enum class BbaMetric { Jousselme, BeliefInterval };

std::string_view to_string(BbaMetric metric);

/// sqrt(0.5 (m1-m2)^T D (m1-m2)) with Jaccard weights D(A,B) = |A n B| / |A u B|.
double jousselme_distance(const MassFunction& m1, const MassFunction& m2);

/// sqrt(Nc * sum_A dW(BI1(A), BI2(A))^2) over the 7 non-empty subsets with
/// Nc = 1/4, dW the Wasserstein distance between belief intervals.
double belief_interval_distance(const MassFunction& m1, const MassFunction& m2);

double bba_distance(const MassFunction& m1, const MassFunction& m2, BbaMetric metric);

/// Entry (i, j) is the distance from cell (i, j) to the BBA certain of x_i > x_j.
Eigen::MatrixXd indirect_psm(const WeakOrder& ppo, BbaMetric metric);

DistanceReport indirect_distance(const WeakOrder& ppo1, const WeakOrder& ppo2, BbaMetric metric);

}  // namespace prefdist
