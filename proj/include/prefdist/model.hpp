#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace prefdist {

using ObjectIndex = std::size_t;

/// Ordered, duplicate-free list of object labels. Index i is object x_{i+1}
/// in display.
class ObjectUniverse {
 public:
  explicit ObjectUniverse(std::vector<std::string> labels);

  /// Default labels X1..Xn.
  static ObjectUniverse numbered(std::size_t n);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(ObjectIndex i) const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<ObjectIndex> index_of(std::string_view label) const;

  bool operator==(const ObjectUniverse&) const = default;

 private:
  std::vector<std::string> labels_;
};

enum class PairRelation { Succ, Prec, Equiv, Unknown };

std::string_view to_string(PairRelation rel);

/// Sequence of disjoint tie-classes over a subset of {0..N-1}, most preferred
/// class first. Covering all N indices makes it a total ordering (TPO);
/// otherwise it is partial (PPO). Always stored canonically: each class sorted
/// ascending, class sequence untouched.
class WeakOrder {
 public:
  using TieClass = std::vector<ObjectIndex>;

  WeakOrder(std::vector<TieClass> classes, std::size_t universe_size);

  /// Builds a total order from a rank vector (rank 0 = most preferred). The
  /// ranks used must be exactly {0..k-1} for some k.
  static WeakOrder from_ranks(std::span<const std::size_t> ranks);

  /// The order mentioning no object at all.
  static WeakOrder empty(std::size_t universe_size) { return WeakOrder({}, universe_size); }

  /// x_1 > x_2 > ... > x_n.
  static WeakOrder chain(std::size_t n);

  const std::vector<TieClass>& classes() const noexcept { return classes_; }
  std::size_t universe_size() const noexcept { return universe_size_; }

  bool is_total() const noexcept { return mentioned_count_ == universe_size_; }
  bool mentions(ObjectIndex i) const { return i < universe_size_ && rank_[i] != kUnranked; }
  std::size_t mentioned_count() const noexcept { return mentioned_count_; }
  /// Mentioned indices, ascending.
  std::vector<ObjectIndex> mentioned() const;
  /// Position of the class holding i, if mentioned.
  std::optional<std::size_t> class_of(ObjectIndex i) const;

  bool operator==(const WeakOrder& other) const {
    return universe_size_ == other.universe_size_ && classes_ == other.classes_;
  }

 private:
  static constexpr std::size_t kUnranked = static_cast<std::size_t>(-1);

  std::vector<TieClass> classes_;
  std::size_t universe_size_;
  std::vector<std::size_t> rank_;
  std::size_t mentioned_count_ = 0;
};

/// Relation of x_i to x_j. Unknown when either object is unmentioned; i == j
/// is always Equiv.
PairRelation relation(const WeakOrder& order, ObjectIndex i, ObjectIndex j);

WeakOrder reverse(const WeakOrder& order);

/// Keeps only the objects in `subset`, dropping classes that become empty.
/// Every index of `subset` must be mentioned by `order`.
WeakOrder restrict(const WeakOrder& order, std::span<const ObjectIndex> subset);

/// Parses `A > (B = C) > D`. Whitespace is insignificant; a tie group needs
/// at least two members.
WeakOrder parse_preference(std::string_view text, const ObjectUniverse& universe);

/// Canonical text form, e.g. `A > (B = C) > D`. The empty order renders as "".
std::string render(const WeakOrder& order, const ObjectUniverse& universe);

}  // namespace prefdist
