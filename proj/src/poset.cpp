#include "posetpart/poset.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include "posetpart/error.hpp"

namespace posetpart {

namespace {

void check_labels(const std::vector<std::string>& labels) {
  if (labels.size() > kMaxElements) {
    throw Error(ErrorCode::too_large, "poset with " + std::to_string(labels.size()) +
                                          " elements exceeds the limit of " +
                                          std::to_string(kMaxElements));
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& label : labels) {
    if (label.empty() ||
        std::any_of(label.begin(), label.end(), [](unsigned char c) { return std::isspace(c); })) {
      throw Error(ErrorCode::syntax_error, "label '" + label + "' is not a token");
    }
    if (!seen.insert(label).second) {
      throw Error(ErrorCode::duplicate_label, "label '" + label + "' appears twice");
    }
  }
}

}  // namespace

Poset::Poset(std::vector<std::string> labels, Relation leq)
    : labels_(std::move(labels)), leq_(std::move(leq)), cover_(transitive_reduction(leq_)) {}

Poset Poset::from_cover_indices(std::vector<std::string> labels,
                                const std::vector<std::pair<std::size_t, std::size_t>>& covers) {
  check_labels(labels);
  Relation leq = reflexive_transitive_closure(Relation::from_pairs(labels.size(), covers));
  if (!is_antisymmetric(leq)) {
    throw Error(ErrorCode::cycle_detected, "the cover pairs contain a cycle");
  }
  return Poset(std::move(labels), std::move(leq));
}

Poset Poset::from_covers(std::vector<std::string> labels,
                         const std::vector<std::pair<std::string, std::string>>& covers) {
  check_labels(labels);
  auto find = [&labels](const std::string& label) {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) {
      throw Error(ErrorCode::unknown_label, "no element labelled '" + label + "'");
    }
    return static_cast<std::size_t>(it - labels.begin());
  };
  std::vector<std::pair<std::size_t, std::size_t>> indices;
  indices.reserve(covers.size());
  for (const auto& [lo, hi] : covers) indices.emplace_back(find(lo), find(hi));
  return from_cover_indices(std::move(labels), indices);
}

Poset Poset::from_order(std::vector<std::string> labels, Relation leq) {
  check_labels(labels);
  if (leq.size() != labels.size()) {
    throw Error(ErrorCode::size_mismatch, "order relation does not match the label count");
  }
  if (!is_partial_order(leq)) {
    throw Error(ErrorCode::not_a_partial_order, "relation is not a partial order");
  }
  return Poset(std::move(labels), std::move(leq));
}

std::optional<std::size_t> Poset::index_of(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::size_t Poset::require_index(std::string_view label) const {
  if (auto i = index_of(label)) return *i;
  throw Error(ErrorCode::unknown_label, "no element labelled '" + std::string(label) + "'");
}

ElementSet Poset::up_set(ElementSet s) const {
  ElementSet out;
  for (std::size_t i : s) out |= leq_.row(i);
  return out;
}

ElementSet Poset::down_set(ElementSet s) const {
  ElementSet out;
  for (std::size_t p = 0; p < size(); ++p) {
    if (leq_.row(p).intersects(s)) out.insert(p);
  }
  return out;
}

ElementSet up_down_set(const Poset& poset, ElementSet s, Direction direction) {
  return direction == Direction::up ? poset.up_set(s) : poset.down_set(s);
}

namespace {

std::vector<std::string> numbered_labels(std::string_view prefix, std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::string(prefix) + std::to_string(i));
  return labels;
}

}  // namespace

Poset generate(Shape shape, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::zero_size, "generated posets need at least one element");
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  if (shape == Shape::chain) {
    for (std::size_t i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
  }
  return Poset::from_cover_indices(numbered_labels("e", n), covers);
}

const std::vector<Poset>& all_labelled_posets(std::size_t n) {
  if (n > kMaxLabelledPosetSize) {
    throw Error(ErrorCode::bound_exceeded, "labelled posets are listed up to " +
                                               std::to_string(kMaxLabelledPosetSize) +
                                               " elements");
  }
  static const auto table = [] {
    std::vector<std::vector<Poset>> sizes(kMaxLabelledPosetSize + 1);
    for (std::size_t k = 0; k < sizes.size(); ++k) {
      const auto labels = numbered_labels("q", k);
      for_each_closed_extension(Relation::identity(k), ExtensionKind::partial_order,
                                [&](const Relation& leq) {
                                  sizes[k].push_back(Poset::from_order(labels, leq));
                                });
    }
    return sizes;
  }();
  return table[n];
}

}  // namespace posetpart
