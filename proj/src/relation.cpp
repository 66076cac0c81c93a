#include "posetpart/relation.hpp"

#include <cassert>

#include "posetpart/error.hpp"

namespace posetpart {

Relation::Relation(std::size_t n) : rows_(n) {
  if (n > kMaxElements) {
    throw Error(ErrorCode::too_large,
                "relation on " + std::to_string(n) + " elements exceeds the limit of " +
                    std::to_string(kMaxElements));
  }
}

Relation Relation::identity(std::size_t n) {
  Relation r(n);
  for (std::size_t i = 0; i < n; ++i) r.set(i, i);
  return r;
}

Relation Relation::full(std::size_t n) {
  Relation r(n);
  for (auto& row : r.rows_) row = ElementSet::all(n);
  return r;
}

Relation Relation::from_pairs(std::size_t n,
                              const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  Relation r(n);
  for (auto [i, j] : pairs) {
    if (i >= n || j >= n) {
      throw Error(ErrorCode::size_mismatch, "pair index out of range");
    }
    r.set(i, j);
  }
  return r;
}

void Relation::set(std::size_t i, std::size_t j, bool value) {
  if (value) {
    rows_[i].insert(j);
  } else {
    rows_[i].erase(j);
  }
}

ElementSet Relation::column(std::size_t j) const {
  ElementSet col;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].contains(j)) col.insert(i);
  }
  return col;
}

std::vector<std::pair<std::size_t, std::size_t>> Relation::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (std::size_t j : rows_[i]) out.emplace_back(i, j);
  }
  return out;
}

std::size_t Relation::pair_count() const {
  std::size_t count = 0;
  for (auto row : rows_) count += row.size();
  return count;
}

Relation Relation::transposed() const {
  Relation t(size());
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j : rows_[i]) t.set(j, i);
  }
  return t;
}

Relation& Relation::operator|=(const Relation& other) {
  assert(size() == other.size());
  for (std::size_t i = 0; i < size(); ++i) rows_[i] |= other.rows_[i];
  return *this;
}

Relation operator-(const Relation& a, const Relation& b) {
  assert(a.size() == b.size());
  Relation out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.rows_[i] = a.rows_[i] - b.rows_[i];
  return out;
}

bool Relation::is_subset_of(const Relation& other) const {
  if (size() != other.size()) return false;
  for (std::size_t i = 0; i < size(); ++i) {
    if (!rows_[i].is_subset_of(other.rows_[i])) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const Relation& a, const Relation& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::uint64_t diff = a.rows_[i].bits() ^ b.rows_[i].bits();
    if (diff == 0) continue;
    const std::uint64_t lowest = diff & (~diff + 1);
    return (a.rows_[i].bits() & lowest) != 0 ? std::strong_ordering::greater
                                             : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

bool is_reflexive(const Relation& r) {
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (!r(i, i)) return false;
  }
  return true;
}

bool is_symmetric(const Relation& r) { return r == r.transposed(); }

bool is_antisymmetric(const Relation& r) {
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j : r.row(i)) {
      if (j != i && r(j, i)) return false;
    }
  }
  return true;
}

bool is_transitive(const Relation& r) {
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t k : r.row(i)) {
      if (!r.row(k).is_subset_of(r.row(i))) return false;
    }
  }
  return true;
}

bool is_partial_order(const Relation& r) {
  return is_reflexive(r) && is_antisymmetric(r) && is_transitive(r);
}

Relation transitive_closure(const Relation& r) {
  // Warshall over bit rows.
  Relation c = r;
  const std::size_t n = r.size();
  for (std::size_t k = 0; k < n; ++k) {
    const ElementSet through = c.row(k);
    for (std::size_t i = 0; i < n; ++i) {
      if (c(i, k)) {
        for (std::size_t j : through) c.set(i, j);
      }
    }
  }
  return c;
}

Relation reflexive_transitive_closure(const Relation& r) {
  return transitive_closure(r | Relation::identity(r.size()));
}

Relation transitive_reduction(const Relation& order) {
  const std::size_t n = order.size();
  Relation cover(n);
  for (std::size_t i = 0; i < n; ++i) {
    const ElementSet above = order.row(i) - ElementSet::singleton(i);
    for (std::size_t j : above) {
      bool between = false;
      for (std::size_t k : above) {
        if (k != j && order(k, j)) {
          between = true;
          break;
        }
      }
      if (!between) cover.set(i, j);
    }
  }
  return cover;
}

namespace {

class ExtensionSearch {
 public:
  ExtensionSearch(const Relation& base, ExtensionKind kind,
                  const std::function<void(const Relation&)>& visit)
      : kind_(kind), visit_(visit), current_(reflexive_transitive_closure(base)) {
    const std::size_t n = base.size();
    decided_ = current_;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!current_(i, j)) free_.emplace_back(i, j);
      }
    }
  }

  void run() {
    if (kind_ == ExtensionKind::partial_order && !is_antisymmetric(current_)) return;
    descend(0);
  }

 private:
  // (i, j) fixed absent: no decided path i -> k -> j may exist.
  bool absent_ok(std::size_t i, std::size_t j) const {
    for (std::size_t k : current_.row(i)) {
      if (current_(k, j)) return false;
    }
    return true;
  }

  // (i, j) fixed present: every decided successor of j and every decided
  // predecessor of i must not have been fixed absent against it.
  bool present_ok(std::size_t i, std::size_t j) const {
    if (kind_ == ExtensionKind::partial_order && current_(j, i)) return false;
    for (std::size_t k : current_.row(j)) {
      if (k != j && decided_(i, k) && !current_(i, k)) return false;
    }
    for (std::size_t k = 0; k < current_.size(); ++k) {
      if (k != i && current_(k, i) && decided_(k, j) && !current_(k, j)) return false;
    }
    return true;
  }

  void descend(std::size_t depth) {
    if (depth == free_.size()) {
      assert(is_transitive(current_));
      visit_(current_);
      return;
    }
    const auto [i, j] = free_[depth];
    decided_.set(i, j);
    if (absent_ok(i, j)) descend(depth + 1);
    if (present_ok(i, j)) {
      current_.set(i, j);
      descend(depth + 1);
      current_.set(i, j, false);
    }
    decided_.set(i, j, false);
  }

  ExtensionKind kind_;
  const std::function<void(const Relation&)>& visit_;
  Relation current_;
  Relation decided_;
  std::vector<std::pair<std::size_t, std::size_t>> free_;
};

}  // namespace

void for_each_closed_extension(const Relation& base, ExtensionKind kind,
                               const std::function<void(const Relation&)>& visit) {
  ExtensionSearch(base, kind, visit).run();
}

}  // namespace posetpart
