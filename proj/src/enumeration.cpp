#include "posetpart/enumeration.hpp"

#include <algorithm>
#include <iterator>
#include <set>

#include "posetpart/error.hpp"
#include "posetpart/partition.hpp"
#include "posetpart/poset_map.hpp"
#include "posetpart/quasiorder.hpp"

namespace posetpart {

std::string_view to_string(PartitionKind kind) {
  switch (kind) {
    case PartitionKind::monotone: return "monotone";
    case PartitionKind::regular: return "regular";
    case PartitionKind::open: return "open";
  }
  return "?";
}

std::string_view to_string(Route route) {
  switch (route) {
    case Route::blocks: return "blocks";
    case Route::quasiorders: return "quasiorders";
    case Route::fibres: return "fibres";
  }
  return "?";
}

namespace {

using ItemSet = std::set<OrderedPartition>;

void require_within(const Poset& poset, std::size_t bound, std::string_view what) {
  if (poset.size() > bound) {
    throw Error(ErrorCode::bound_exceeded, std::string(what) + " is limited to " +
                                               std::to_string(bound) + " elements");
  }
}

void grow(std::vector<std::size_t>& tags, std::size_t next, std::size_t used,
          const std::function<void(const SetPartition&)>& visit) {
  if (next == tags.size()) {
    visit(SetPartition::from_tags(tags));
    return;
  }
  for (std::size_t b = 0; b <= used; ++b) {
    tags[next] = b;
    grow(tags, next + 1, std::max(used, b + 1), visit);
  }
}

ItemSet via_blocks(const Poset& poset, PartitionKind kind) {
  ItemSet items;
  for_each_set_partition(poset.size(), [&](const SetPartition& support) {
    switch (kind) {
      case PartitionKind::monotone:
        for_each_monotone_order(poset, support, [&](const Relation& order) {
          items.emplace(support, order);
        });
        break;
      case PartitionKind::regular:
        if (auto order = regular_order(poset, support)) items.emplace(support, std::move(*order));
        break;
      case PartitionKind::open:
        if (auto order = open_order(poset, support)) items.emplace(support, std::move(*order));
        break;
    }
  });
  return items;
}

ItemSet via_quasiorders(const Poset& poset, PartitionKind kind) {
  ItemSet items;
  for_each_extending_quasiorder(poset, [&](const Quasiorder& q) {
    const bool keep = kind == PartitionKind::monotone  ? true
                      : kind == PartitionKind::regular ? satisfies_regularity_condition(q, poset)
                                                       : satisfies_openness_condition(q, poset);
    if (keep) items.insert(induced_poset_of_classes(q));
  });
  return items;
}

bool preserves_order(const Poset& dom, const Poset& cod, const std::vector<std::size_t>& a) {
  for (auto [x, y] : dom.order().pairs()) {
    if (!cod.leq(a[x], a[y])) return false;
  }
  return true;
}

bool onto(const std::vector<std::size_t>& a, std::size_t k) {
  ElementSet hit;
  for (std::size_t y : a) hit.insert(y);
  return hit == ElementSet::all(k);
}

// One pass over all surjections serves the three kinds.
std::array<ItemSet, 3> via_fibres_all(const Poset& poset, std::size_t codomain_bound) {
  require_within(poset, kMaxFibreRouteSize, "the fibres route");
  if (codomain_bound > kMaxLabelledPosetSize) {
    throw Error(ErrorCode::bound_exceeded, "fibre-route codomains are limited to " +
                                               std::to_string(kMaxLabelledPosetSize) +
                                               " elements");
  }
  std::array<ItemSet, 3> items;
  // No surjection reaches a codomain larger than the domain.
  const std::size_t top = std::min(codomain_bound, poset.size());
  for (std::size_t k = 0; k <= top; ++k) {
    for (const Poset& target : all_labelled_posets(k)) {
      for_each_assignment(poset.size(), k, [&](const std::vector<std::size_t>& a) {
        if (!onto(a, k) || !preserves_order(poset, target, a)) return;
        const PosetMap f(poset, target, a);
        OrderedPartition fibres = fibre_partition(f);
        if (is_open_map(f)) items[2].insert(fibres);
        if (is_fibre_coherent(f)) items[1].insert(fibres);
        items[0].insert(std::move(fibres));
      });
    }
  }
  return items;
}

EnumerationReport make_report(const Poset& poset, PartitionKind kind, Route route,
                              const ItemSet& items) {
  return EnumerationReport{poset, kind, route, {items.begin(), items.end()}};
}

}  // namespace

void for_each_set_partition(std::size_t n, const std::function<void(const SetPartition&)>& visit) {
  std::vector<std::size_t> tags(n, 0);
  grow(tags, 0, 0, visit);
}

std::vector<SetPartition> enumerate_set_partitions(const Poset& poset, std::size_t bound) {
  require_within(poset, bound, "set partition enumeration");
  std::vector<SetPartition> out;
  for_each_set_partition(poset.size(), [&out](const SetPartition& p) { out.push_back(p); });
  return out;
}

EnumerationReport enumerate_partitions(const Poset& poset, PartitionKind kind, Route route,
                                       std::optional<std::size_t> bound) {
  switch (route) {
    case Route::blocks:
      require_within(poset,
                     bound.value_or(kind == PartitionKind::monotone ? kDefaultMonotoneBound
                                                                    : kDefaultRegularOpenBound),
                     "block enumeration");
      return make_report(poset, kind, route, via_blocks(poset, kind));
    case Route::quasiorders:
      require_within(poset, bound.value_or(kDefaultQuasiorderBound), "quasiorder enumeration");
      return make_report(poset, kind, route, via_quasiorders(poset, kind));
    case Route::fibres:
      return enumerate_partitions_via_fibres(poset, kind, poset.size());
  }
  throw Error(ErrorCode::internal_invariant_violation, "unknown route");
}

EnumerationReport enumerate_partitions_via_fibres(const Poset& poset, PartitionKind kind,
                                                  std::size_t codomain_bound) {
  auto all = via_fibres_all(poset, codomain_bound);
  return make_report(poset, kind, Route::fibres, all[static_cast<std::size_t>(kind)]);
}

std::size_t count(const Poset& poset, PartitionKind kind) {
  return enumerate_partitions(poset, kind, Route::blocks).count();
}

namespace {

std::optional<Discrepancy> compare(PartitionKind kind, const ItemSet& a, Route route_a,
                                   const ItemSet& b, Route route_b) {
  std::vector<OrderedPartition> only_a;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(only_a));
  if (!only_a.empty()) return Discrepancy{kind, only_a.front(), route_a, route_b};
  std::vector<OrderedPartition> only_b;
  std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(only_b));
  if (!only_b.empty()) return Discrepancy{kind, only_b.front(), route_b, route_a};
  return std::nullopt;
}

}  // namespace

CrossCheckReport cross_check(const Poset& poset, std::size_t codomain_bound) {
  CrossCheckReport report{poset, {}, true, std::nullopt};
  const auto fibres = via_fibres_all(poset, codomain_bound);
  for (PartitionKind kind : kAllKinds) {
    const auto index = static_cast<std::size_t>(kind);
    require_within(poset,
                   kind == PartitionKind::monotone ? kDefaultMonotoneBound
                                                   : kDefaultRegularOpenBound,
                   "block enumeration");
    const ItemSet blocks = via_blocks(poset, kind);
    const ItemSet quasi = via_quasiorders(poset, kind);
    report.counts[index] = RouteCounts{blocks.size(), quasi.size(), fibres[index].size()};
    auto mismatch = compare(kind, blocks, Route::blocks, quasi, Route::quasiorders);
    if (!mismatch) mismatch = compare(kind, blocks, Route::blocks, fibres[index], Route::fibres);
    if (mismatch && report.agreement) {
      report.agreement = false;
      report.first_discrepancy = std::move(mismatch);
    }
  }
  return report;
}

}  // namespace posetpart
