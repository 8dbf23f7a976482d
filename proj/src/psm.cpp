#include "prefdist/psm.hpp"

#include <cmath>
#include <string>

#include "prefdist/error.hpp"

namespace prefdist {

std::string_view to_string(PsmConvention conv) {
  return conv == PsmConvention::Signed ? "signed" : "unit";
}

double psm_score(PairRelation rel, PsmConvention conv) {
  switch (rel) {
    case PairRelation::Succ: return 1.0;
    case PairRelation::Prec: return conv == PsmConvention::Signed ? -1.0 : 0.0;
    case PairRelation::Equiv: return conv == PsmConvention::Signed ? 0.0 : 0.5;
    case PairRelation::Unknown: break;
  }
  throw Error(ErrorKind::NotTotal, "unknown relation has no preference score");
}

PreferenceScoreMatrix build_psm(const WeakOrder& tpo, PsmConvention conv) {
  if (!tpo.is_total()) {
    throw Error(ErrorKind::NotTotal, "preference-score matrix needs a total order, got one mentioning " +
                                         std::to_string(tpo.mentioned_count()) + " of " +
                                         std::to_string(tpo.universe_size()) + " objects");
  }
  const auto n = static_cast<Eigen::Index>(tpo.universe_size());
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      m(i, j) = psm_score(relation(tpo, static_cast<ObjectIndex>(i), static_cast<ObjectIndex>(j)), conv);
    }
  }
  return {std::move(m), conv};
}

double frobenius_distance(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "matrices of shape " + std::to_string(a.rows()) + "x" +
                                                  std::to_string(a.cols()) + " and " + std::to_string(b.rows()) +
                                                  "x" + std::to_string(b.cols()));
  }
  return (a - b).norm();
}

double frobenius_distance(const PreferenceScoreMatrix& a, const PreferenceScoreMatrix& b) {
  if (a.convention != b.convention) {
    throw Error(ErrorKind::ConventionMismatch, "cannot compare a " + std::string(to_string(a.convention)) +
                                                   " matrix with a " + std::string(to_string(b.convention)) +
                                                   " matrix");
  }
  return frobenius_distance(a.entries, b.entries);
}

double max_psm_distance(std::size_t n, PsmConvention conv) {
  if (n < 2) {
    throw Error(ErrorKind::DegenerateUniverse, "fewer than two objects have maximum distance 0");
  }
  const auto chain = WeakOrder::chain(n);
  return frobenius_distance(build_psm(chain, conv), build_psm(reverse(chain), conv));
}

double normalized_distance(const WeakOrder& tpo1, const WeakOrder& tpo2, PsmConvention conv) {
  if (tpo1.universe_size() != tpo2.universe_size()) {
    throw Error(ErrorKind::DimensionMismatch, "orders over universes of different size");
  }
  const auto raw = frobenius_distance(build_psm(tpo1, conv), build_psm(tpo2, conv));
  return raw / max_psm_distance(tpo1.universe_size(), conv);
}

}  // namespace prefdist
