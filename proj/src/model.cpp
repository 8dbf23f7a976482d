#include "prefdist/model.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include "prefdist/error.hpp"

namespace prefdist {

std::string_view to_string(PairRelation rel) {
  switch (rel) {
    case PairRelation::Succ: return "succ";
    case PairRelation::Prec: return "prec";
    case PairRelation::Equiv: return "equiv";
    case PairRelation::Unknown: return "unknown";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// ObjectUniverse

ObjectUniverse::ObjectUniverse(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) {
    throw Error(ErrorKind::InvalidArgument, "object universe must contain at least one object");
  }
  std::unordered_set<std::string> seen;
  for (const auto& label : labels_) {
    if (label.empty()) {
      throw Error(ErrorKind::InvalidArgument, "object labels must be non-empty");
    }
    if (!seen.insert(label).second) {
      throw Error(ErrorKind::DuplicateObject, "object label '" + label + "' appears twice");
    }
  }
}

ObjectUniverse ObjectUniverse::numbered(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("X" + std::to_string(i));
  return ObjectUniverse(std::move(labels));
}

const std::string& ObjectUniverse::label(ObjectIndex i) const {
  if (i >= labels_.size()) {
    throw Error(ErrorKind::IndexOutOfRange, "object index " + std::to_string(i) + " out of range");
  }
  return labels_[i];
}

std::optional<ObjectIndex> ObjectUniverse::index_of(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<ObjectIndex>(it - labels_.begin());
}

// ---------------------------------------------------------------------------
// WeakOrder

WeakOrder::WeakOrder(std::vector<TieClass> classes, std::size_t universe_size)
    : classes_(std::move(classes)), universe_size_(universe_size), rank_(universe_size, kUnranked) {
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    auto& tie = classes_[c];
    if (tie.empty()) {
      throw Error(ErrorKind::InvalidArgument, "tie-class " + std::to_string(c) + " is empty");
    }
    std::sort(tie.begin(), tie.end());
    for (ObjectIndex i : tie) {
      if (i >= universe_size_) {
        throw Error(ErrorKind::IndexOutOfRange,
                    "object index " + std::to_string(i) + " outside universe of size " +
                        std::to_string(universe_size_));
      }
      if (rank_[i] != kUnranked) {
        throw Error(ErrorKind::DuplicateObject,
                    "object index " + std::to_string(i) + " appears in more than one place");
      }
      rank_[i] = c;
      ++mentioned_count_;
    }
  }
}

WeakOrder WeakOrder::from_ranks(std::span<const std::size_t> ranks) {
  std::size_t k = 0;
  for (auto r : ranks) k = std::max(k, r + 1);
  std::vector<TieClass> classes(k);
  for (std::size_t i = 0; i < ranks.size(); ++i) classes[ranks[i]].push_back(i);
  return WeakOrder(std::move(classes), ranks.size());
}

WeakOrder WeakOrder::chain(std::size_t n) {
  std::vector<TieClass> classes;
  classes.reserve(n);
  for (std::size_t i = 0; i < n; ++i) classes.push_back({i});
  return WeakOrder(std::move(classes), n);
}

std::vector<ObjectIndex> WeakOrder::mentioned() const {
  std::vector<ObjectIndex> out;
  out.reserve(mentioned_count_);
  for (ObjectIndex i = 0; i < universe_size_; ++i) {
    if (rank_[i] != kUnranked) out.push_back(i);
  }
  return out;
}

std::optional<std::size_t> WeakOrder::class_of(ObjectIndex i) const {
  if (!mentions(i)) return std::nullopt;
  return rank_[i];
}

// ---------------------------------------------------------------------------
// Operations

PairRelation relation(const WeakOrder& order, ObjectIndex i, ObjectIndex j) {
  const auto n = order.universe_size();
  if (i >= n || j >= n) {
    throw Error(ErrorKind::IndexOutOfRange, "pair (" + std::to_string(i) + ", " + std::to_string(j) +
                                                ") outside universe of size " + std::to_string(n));
  }
  if (i == j) return PairRelation::Equiv;
  auto ci = order.class_of(i);
  auto cj = order.class_of(j);
  if (!ci || !cj) return PairRelation::Unknown;
  if (*ci == *cj) return PairRelation::Equiv;
  return *ci < *cj ? PairRelation::Succ : PairRelation::Prec;
}

WeakOrder reverse(const WeakOrder& order) {
  std::vector<WeakOrder::TieClass> classes(order.classes().rbegin(), order.classes().rend());
  return WeakOrder(std::move(classes), order.universe_size());
}

WeakOrder restrict(const WeakOrder& order, std::span<const ObjectIndex> subset) {
  std::vector<bool> keep(order.universe_size(), false);
  for (ObjectIndex i : subset) {
    if (!order.mentions(i)) {
      throw Error(ErrorKind::SubsetNotMentioned,
                  "object index " + std::to_string(i) + " is not mentioned by the order");
    }
    keep[i] = true;
  }
  std::vector<WeakOrder::TieClass> classes;
  for (const auto& tie : order.classes()) {
    WeakOrder::TieClass kept;
    std::copy_if(tie.begin(), tie.end(), std::back_inserter(kept), [&](ObjectIndex i) { return keep[i]; });
    if (!kept.empty()) classes.push_back(std::move(kept));
  }
  return WeakOrder(std::move(classes), order.universe_size());
}

namespace {

class PreferenceParser {
 public:
  PreferenceParser(std::string_view text, const ObjectUniverse& universe)
      : text_(text), universe_(universe), seen_(universe.size(), false) {}

  WeakOrder parse() {
    skip_space();
    if (at_end()) throw Error(ErrorKind::EmptyExpression, "preference expression is empty");
    std::vector<WeakOrder::TieClass> classes;
    classes.push_back(group());
    skip_space();
    while (!at_end()) {
      expect('>');
      classes.push_back(group());
      skip_space();
    }
    return WeakOrder(std::move(classes), universe_.size());
  }

 private:
  WeakOrder::TieClass group() {
    skip_space();
    if (peek() != '(') return {ident()};
    ++pos_;
    WeakOrder::TieClass tie{ident()};
    skip_space();
    if (peek() != '=') fail("expected '=' inside tie group");
    while (peek() == '=') {
      ++pos_;
      tie.push_back(ident());
      skip_space();
    }
    expect(')');
    return tie;
  }

  ObjectIndex ident() {
    skip_space();
    const std::size_t start = pos_;
    while (!at_end() && is_ident_char(text_[pos_])) ++pos_;
    if (pos_ == start) fail("expected object name");
    const auto name = text_.substr(start, pos_ - start);
    auto index = universe_.index_of(name);
    if (!index) throw Error(ErrorKind::UnknownObject, "object '" + std::string(name) + "' is not in the universe");
    if (seen_[*index]) {
      throw Error(ErrorKind::DuplicateObject, "object '" + std::string(name) + "' is mentioned twice");
    }
    seen_[*index] = true;
    return *index;
  }

  void expect(char c) {
    skip_space();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    std::string found = at_end() ? "end of input" : "'" + std::string(1, text_[pos_]) + "'";
    throw Error(ErrorKind::SyntaxError, msg + " at offset " + std::to_string(pos_) + ", found " + found);
  }

  static bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  std::string_view text_;
  const ObjectUniverse& universe_;
  std::vector<bool> seen_;
  std::size_t pos_ = 0;
};

}  // namespace

WeakOrder parse_preference(std::string_view text, const ObjectUniverse& universe) {
  return PreferenceParser(text, universe).parse();
}

std::string render(const WeakOrder& order, const ObjectUniverse& universe) {
  if (order.universe_size() != universe.size()) {
    throw Error(ErrorKind::DimensionMismatch, "order and universe sizes differ");
  }
  std::string out;
  for (const auto& tie : order.classes()) {
    if (!out.empty()) out += " > ";
    if (tie.size() == 1) {
      out += universe.label(tie.front());
      continue;
    }
    out += '(';
    for (std::size_t k = 0; k < tie.size(); ++k) {
      if (k) out += " = ";
      out += universe.label(tie[k]);
    }
    out += ')';
  }
  return out;
}

}  // namespace prefdist
