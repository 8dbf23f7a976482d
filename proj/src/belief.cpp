#include "prefdist/belief.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <string>

#include "prefdist/error.hpp"
#include "prefdist/psm.hpp"

namespace prefdist {

std::string_view to_string(BbaMetric metric) {
  return metric == BbaMetric::Jousselme ? "jousselme" : "belief-interval";
}

FocalSet mirror(FocalSet subset) {
  const FocalSet succ = subset & focal::kSucc;
  const FocalSet prec = subset & focal::kPrec;
  return static_cast<FocalSet>((subset & focal::kEquiv) | (succ << 2) | (prec >> 2));
}

// ---------------------------------------------------------------------------
// MassFunction

MassFunction MassFunction::from_masses(const Vector& masses) {
  double total = 0.0;
  for (std::size_t a = 0; a < kFocalCount; ++a) {
    if (!(masses[a] >= 0.0) || !std::isfinite(masses[a])) {
      throw Error(ErrorKind::UnnormalizedMass, "mass of subset " + std::to_string(a) + " is negative or not finite");
    }
    total += masses[a];
  }
  if (masses[focal::kEmpty] != 0.0) {
    throw Error(ErrorKind::UnnormalizedMass, "the empty set must carry no mass");
  }
  if (std::abs(total - 1.0) > kMassTolerance) {
    std::ostringstream msg;
    msg.precision(12);
    msg << "masses sum to " << total << ", expected 1";
    throw Error(ErrorKind::UnnormalizedMass, msg.str());
  }
  return MassFunction(masses);
}

MassFunction MassFunction::certain(FocalSet subset) {
  if (subset == focal::kEmpty || subset >= kFocalCount) {
    throw Error(ErrorKind::EmptySubset, "a certain BBA needs a non-empty subset of the frame");
  }
  Vector v{};
  v[subset] = 1.0;
  return MassFunction(v);
}

MassFunction MassFunction::mirrored() const {
  Vector v{};
  for (FocalSet a = 0; a < kFocalCount; ++a) v[mirror(a)] = masses_[a];
  return MassFunction(v);
}

// ---------------------------------------------------------------------------
// Bel / Pl

namespace {

void check_subset(FocalSet subset) {
  if (subset == focal::kEmpty || subset >= kFocalCount) {
    throw Error(ErrorKind::EmptySubset, "subset mask must be in 1..7, got " + std::to_string(subset));
  }
}

}  // namespace

double bel(const MassFunction& m, FocalSet subset) {
  check_subset(subset);
  double s = 0.0;
  for (FocalSet y = 1; y < kFocalCount; ++y) {
    if ((y & subset) == y) s += m[y];
  }
  return s;
}

double pl(const MassFunction& m, FocalSet subset) {
  check_subset(subset);
  double s = 0.0;
  for (FocalSet y = 1; y < kFocalCount; ++y) {
    if ((y & subset) != 0) s += m[y];
  }
  return s;
}

BeliefInterval belief_interval(const MassFunction& m, FocalSet subset) { return {bel(m, subset), pl(m, subset)}; }

MassFunction bba_from_relation(PairRelation rel) {
  switch (rel) {
    case PairRelation::Succ: return MassFunction::certain(focal::kSucc);
    case PairRelation::Equiv: return MassFunction::certain(focal::kEquiv);
    case PairRelation::Prec: return MassFunction::certain(focal::kPrec);
    case PairRelation::Unknown: break;
  }
  return MassFunction::vacuous();
}

// ---------------------------------------------------------------------------
// BbaMatrix

namespace {

bool close(const MassFunction& a, const MassFunction& b) {
  for (std::size_t k = 0; k < kFocalCount; ++k) {
    if (std::abs(a.masses()[k] - b.masses()[k]) > kMassTolerance) return false;
  }
  return true;
}

std::string cell_name(std::size_t i, std::size_t j) {
  return "cell (" + std::to_string(i) + ", " + std::to_string(j) + ")";
}

}  // namespace

BbaMatrix::BbaMatrix(std::size_t n, std::vector<MassFunction> cells) : n_(n), cells_(std::move(cells)) {
  if (n_ == 0) throw Error(ErrorKind::DegenerateUniverse, "BBA matrix needs at least one object");
  if (cells_.size() != n_ * n_) {
    throw Error(ErrorKind::DimensionMismatch, "expected " + std::to_string(n_ * n_) + " cells, got " +
                                                  std::to_string(cells_.size()));
  }
  const auto tie = MassFunction::certain(focal::kEquiv);
  for (std::size_t i = 0; i < n_; ++i) {
    if (!close(at(i, i), tie)) {
      throw Error(ErrorKind::InconsistentMatrix, cell_name(i, i) + " must put all mass on the tie state");
    }
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (!close(at(j, i), at(i, j).mirrored())) {
        throw Error(ErrorKind::InconsistentMatrix,
                    cell_name(j, i) + " is not the mirror of " + cell_name(i, j));
      }
    }
  }
}

const MassFunction& BbaMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) throw Error(ErrorKind::IndexOutOfRange, cell_name(i, j) + " out of range");
  return cells_[i * n_ + j];
}

Eigen::MatrixXd BbaMatrix::flattened() const {
  const auto block = static_cast<Eigen::Index>(kFocalCount);
  const auto n = static_cast<Eigen::Index>(n_);
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(block * n, block * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const auto& m = cells_[static_cast<std::size_t>(i * n + j)].masses();
      for (Eigen::Index k = 0; k < block; ++k) out(i * block + k, j * block + k) = m[static_cast<std::size_t>(k)];
    }
  }
  return out;
}

BbaMatrix build_bba_matrix(const WeakOrder& ppo) {
  const auto n = ppo.universe_size();
  std::vector<MassFunction> cells;
  cells.reserve(n * n);
  for (ObjectIndex i = 0; i < n; ++i) {
    for (ObjectIndex j = 0; j < n; ++j) cells.push_back(bba_from_relation(relation(ppo, i, j)));
  }
  return BbaMatrix(n, std::move(cells));
}

double bba_matrix_frobenius(const BbaMatrix& a, const BbaMatrix& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::DimensionMismatch, "BBA matrices of size " + std::to_string(a.size()) + " and " +
                                                  std::to_string(b.size()));
  }
  double s = 0.0;
  for (std::size_t c = 0; c < a.cells().size(); ++c) {
    const auto& x = a.cells()[c].masses();
    const auto& y = b.cells()[c].masses();
    for (std::size_t k = 0; k < kFocalCount; ++k) s += (x[k] - y[k]) * (x[k] - y[k]);
  }
  return std::sqrt(s);
}

// ---------------------------------------------------------------------------
// Direct method

namespace {

double direct_max(std::size_t n) {
  if (n < 2) throw Error(ErrorKind::DegenerateUniverse, "distance needs at least two objects");
  const auto chain = WeakOrder::chain(n);
  return bba_matrix_frobenius(build_bba_matrix(chain), build_bba_matrix(reverse(chain)));
}

void check_same_universe(const WeakOrder& a, const WeakOrder& b) {
  if (a.universe_size() != b.universe_size()) {
    throw Error(ErrorKind::DimensionMismatch, "preferences over universes of size " +
                                                  std::to_string(a.universe_size()) + " and " +
                                                  std::to_string(b.universe_size()));
  }
}

}  // namespace

DistanceReport direct_distance_general(const BbaMatrix& b1, const BbaMatrix& b2) {
  DistanceReport report{Method::Direct};
  report.raw = bba_matrix_frobenius(b1, b2);
  report.max = direct_max(b1.size());
  report.normalized = report.raw / report.max;
  return report;
}

DistanceReport direct_distance(const WeakOrder& ppo1, const WeakOrder& ppo2) {
  check_same_universe(ppo1, ppo2);
  return direct_distance_general(build_bba_matrix(ppo1), build_bba_matrix(ppo2));
}

// ---------------------------------------------------------------------------
// BBA metrics

double jousselme_distance(const MassFunction& m1, const MassFunction& m2) {
  std::array<double, kFocalCount> diff{};
  for (std::size_t k = 0; k < kFocalCount; ++k) diff[k] = m1.masses()[k] - m2.masses()[k];
  double q = 0.0;
  for (unsigned a = 1; a < kFocalCount; ++a) {
    for (unsigned b = 1; b < kFocalCount; ++b) {
      const double jaccard =
          static_cast<double>(std::popcount(a & b)) / static_cast<double>(std::popcount(a | b));
      q += diff[a] * jaccard * diff[b];
    }
  }
  return std::sqrt(std::max(0.0, 0.5 * q));
}

double belief_interval_distance(const MassFunction& m1, const MassFunction& m2) {
  // 1 / 2^(|frame| - 1)
  constexpr double kNormalization = 0.25;
  double s = 0.0;
  for (FocalSet a = 1; a < kFocalCount; ++a) {
    const auto i1 = belief_interval(m1, a);
    const auto i2 = belief_interval(m2, a);
    const double mid = 0.5 * (i1.bel + i1.pl) - 0.5 * (i2.bel + i2.pl);
    const double half = 0.5 * (i1.pl - i1.bel) - 0.5 * (i2.pl - i2.bel);
    s += mid * mid + half * half / 3.0;
  }
  return std::sqrt(kNormalization * s);
}

double bba_distance(const MassFunction& m1, const MassFunction& m2, BbaMetric metric) {
  return metric == BbaMetric::Jousselme ? jousselme_distance(m1, m2) : belief_interval_distance(m1, m2);
}

// ---------------------------------------------------------------------------
// Indirect methods

Eigen::MatrixXd indirect_psm(const WeakOrder& ppo, BbaMetric metric) {
  const auto bba = build_bba_matrix(ppo);
  const auto reference = MassFunction::certain(focal::kSucc);
  const auto n = static_cast<Eigen::Index>(bba.size());
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      m(i, j) = bba_distance(bba.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)), reference, metric);
    }
  }
  return m;
}

DistanceReport indirect_distance(const WeakOrder& ppo1, const WeakOrder& ppo2, BbaMetric metric) {
  check_same_universe(ppo1, ppo2);
  const auto n = ppo1.universe_size();
  if (n < 2) throw Error(ErrorKind::DegenerateUniverse, "distance needs at least two objects");
  const auto chain = WeakOrder::chain(n);

  DistanceReport report{metric == BbaMetric::Jousselme ? Method::IndirectJousselme : Method::IndirectBeliefInterval};
  report.raw = frobenius_distance(indirect_psm(ppo1, metric), indirect_psm(ppo2, metric));
  report.max = frobenius_distance(indirect_psm(chain, metric), indirect_psm(reverse(chain), metric));
  report.normalized = report.raw / report.max;
  return report;
}

}  // namespace prefdist
