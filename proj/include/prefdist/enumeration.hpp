#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <vector>

#include "prefdist/model.hpp"

namespace prefdist {

/// Largest universe enumerated unless the caller raises the cap. 8 objects
/// already give 545,835 weak orders.
inline constexpr std::size_t kDefaultEnumerationCap = 8;

/// Number of weak orders of n objects (ordered Bell / Fubini number).
std::uint64_t fubini_number(std::size_t n);

/// Lazily yields every weak order of n objects exactly once.
///
/// Orders are produced as rank vectors r (r[i] = position of x_i's class,
/// 0 = most preferred) whose value set is {0..k-1} for some k, in
/// lexicographic order of r. The sequence therefore starts with the all-tied
/// order and is identical across runs and platforms.
class WeakOrderStream {
 public:
  explicit WeakOrderStream(std::size_t n, std::size_t cap = kDefaultEnumerationCap);

  std::size_t object_count() const noexcept { return n_; }

  /// Next order, or nullopt once exhausted.
  std::optional<WeakOrder> next();

  /// Remaining orders materialized.
  std::vector<WeakOrder> collect();

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = WeakOrder;
    using difference_type = std::ptrdiff_t;
    using pointer = const WeakOrder*;
    using reference = const WeakOrder&;

    iterator() = default;
    explicit iterator(WeakOrderStream* stream) : stream_(stream) { ++*this; }

    reference operator*() const { return *current_; }
    pointer operator->() const { return &*current_; }
    iterator& operator++() {
      current_ = stream_->next();
      if (!current_) stream_ = nullptr;
      return *this;
    }
    void operator++(int) { ++*this; }
    bool operator==(const iterator& other) const { return stream_ == other.stream_; }

   private:
    WeakOrderStream* stream_ = nullptr;
    std::optional<WeakOrder> current_;
  };

  iterator begin() { return iterator(this); }
  iterator end() { return iterator(); }

 private:
  bool advance();
  bool feasible(std::size_t filled) const;
  bool complete_from(std::size_t position);

  std::size_t n_;
  std::vector<std::size_t> ranks_;
  std::vector<std::size_t> counts_;
  bool started_ = false;
  bool done_ = false;
};

WeakOrderStream enumerate_weak_orders(std::size_t n, std::size_t cap = kDefaultEnumerationCap);

/// The total orders agreeing with a (partial) order on every object it
/// mentions.
struct CompatibleSet {
  WeakOrder ppo;
  std::vector<WeakOrder> ctpos;

  std::size_t count() const noexcept { return ctpos.size(); }
};

/// True when restricting `tpo` to the objects of `ppo` gives back `ppo`.
bool is_compatible(const WeakOrder& tpo, const WeakOrder& ppo);

CompatibleSet compatible_tpos(const WeakOrder& ppo, std::size_t cap = kDefaultEnumerationCap);

}  // namespace prefdist
