#include "prefdist/enumeration.hpp"

#include <string>

#include "prefdist/error.hpp"

namespace prefdist {

std::uint64_t fubini_number(std::size_t n) {
  // sum_k k! * S(n, k), with Stirling numbers of the second kind built row by row.
  std::vector<std::uint64_t> stirling(n + 1, 0);
  stirling[0] = 1;
  for (std::size_t row = 1; row <= n; ++row) {
    for (std::size_t k = row; k >= 1; --k) stirling[k] = k * stirling[k] + stirling[k - 1];
    stirling[0] = 0;
  }
  std::uint64_t total = 0;
  std::uint64_t factorial = 1;
  for (std::size_t k = 0; k <= n; ++k) {
    if (k > 0) factorial *= k;
    total += factorial * stirling[k];
  }
  return total;
}

WeakOrderStream::WeakOrderStream(std::size_t n, std::size_t cap) : n_(n), ranks_(n, 0), counts_(n, 0) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "enumeration needs at least one object");
  if (n > cap) {
    throw Error(ErrorKind::CapExceeded, "enumerating " + std::to_string(n) + " objects exceeds the cap of " +
                                            std::to_string(cap) + " (" + std::to_string(fubini_number(n)) +
                                            " orders)");
  }
}

// A prefix of `filled` ranks can still be completed iff the gaps below its
// largest rank fit in the positions left.
bool WeakOrderStream::feasible(std::size_t filled) const {
  std::size_t top = 0;
  bool any = false;
  for (std::size_t v = 0; v < n_; ++v) {
    if (counts_[v] > 0) {
      top = v;
      any = true;
    }
  }
  if (!any) return true;
  std::size_t missing = 0;
  for (std::size_t v = 0; v < top; ++v) missing += counts_[v] == 0 ? 1 : 0;
  return missing <= n_ - filled;
}

// Lexicographically smallest valid completion of positions [position, n).
bool WeakOrderStream::complete_from(std::size_t position) {
  for (std::size_t q = position; q < n_; ++q) {
    bool placed = false;
    for (std::size_t v = 0; v < n_ && !placed; ++v) {
      ranks_[q] = v;
      ++counts_[v];
      if (feasible(q + 1)) {
        placed = true;
      } else {
        --counts_[v];
      }
    }
    if (!placed) return false;
  }
  return true;
}

bool WeakOrderStream::advance() {
  if (!started_) {
    started_ = true;
    return complete_from(0);
  }
  for (std::size_t p = n_; p-- > 0;) {
    --counts_[ranks_[p]];
    for (std::size_t v = ranks_[p] + 1; v < n_; ++v) {
      ranks_[p] = v;
      ++counts_[v];
      if (feasible(p + 1) && complete_from(p + 1)) return true;
      --counts_[v];
    }
  }
  return false;
}

std::optional<WeakOrder> WeakOrderStream::next() {
  if (done_) return std::nullopt;
  if (!advance()) {
    done_ = true;
    return std::nullopt;
  }
  return WeakOrder::from_ranks(ranks_);
}

std::vector<WeakOrder> WeakOrderStream::collect() {
  std::vector<WeakOrder> out;
  while (auto order = next()) out.push_back(std::move(*order));
  return out;
}

WeakOrderStream enumerate_weak_orders(std::size_t n, std::size_t cap) { return WeakOrderStream(n, cap); }

bool is_compatible(const WeakOrder& tpo, const WeakOrder& ppo) {
  if (tpo.universe_size() != ppo.universe_size()) {
    throw Error(ErrorKind::DimensionMismatch, "orders over universes of different size");
  }
  if (!tpo.is_total()) throw Error(ErrorKind::NotTotal, "compatibility is tested against total orders");
  const auto subset = ppo.mentioned();
  return restrict(tpo, subset) == ppo;
}

CompatibleSet compatible_tpos(const WeakOrder& ppo, std::size_t cap) {
  CompatibleSet result{ppo, {}};
  auto stream = enumerate_weak_orders(ppo.universe_size(), cap);
  for (const auto& tpo : stream) {
    if (is_compatible(tpo, ppo)) result.ctpos.push_back(tpo);
  }
  return result;
}

}  // namespace prefdist
