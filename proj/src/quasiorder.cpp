#include "posetpart/quasiorder.hpp"

#include "posetpart/error.hpp"

namespace posetpart {

bool is_quasiorder(const Relation& r) { return is_reflexive(r) && is_transitive(r); }

Quasiorder::Quasiorder(Relation rel) : rel_(std::move(rel)) {
  if (!is_quasiorder(rel_)) {
    throw Error(ErrorCode::not_a_quasiorder, "relation is not reflexive and transitive");
  }
}

SetPartition equivalence_classes(const Quasiorder& q) {
  const Relation& r = q.relation();
  const Relation back = r.transposed();
  std::vector<ElementSet> blocks;
  ElementSet assigned;
  for (std::size_t x = 0; x < q.size(); ++x) {
    if (assigned.contains(x)) continue;
    const ElementSet cls = r.row(x) & back.row(x);
    blocks.push_back(cls);
    assigned |= cls;
  }
  return SetPartition::from_blocks(q.size(), std::move(blocks));
}

OrderedPartition induced_poset_of_classes(const Quasiorder& q) {
  SetPartition classes = equivalence_classes(q);
  const std::size_t k = classes.block_count();
  Relation order(k);
  // Representatives suffice: x <~ y transfers across mutual pairs.
  for (std::size_t b = 0; b < k; ++b) {
    const std::size_t x = classes.block(b).min();
    for (std::size_t c = 0; c < k; ++c) {
      if (q(x, classes.block(c).min())) order.set(b, c);
    }
  }
  return OrderedPartition(std::move(classes), std::move(order));
}

bool extends_order(const Quasiorder& q, const Poset& poset) {
  return q.size() == poset.size() && poset.order().is_subset_of(q.relation());
}

namespace {

void require_extension(const Quasiorder& q, const Poset& poset) {
  if (!extends_order(q, poset)) {
    throw Error(ErrorCode::not_an_extension, "quasiorder does not extend the poset order");
  }
}

}  // namespace

Relation rho_set(const Quasiorder& q, const Poset& poset) {
  require_extension(q, poset);
  const Relation& r = q.relation();
  return r - r.transposed() - poset.order();
}

bool satisfies_regularity_condition(const Quasiorder& q, const Poset& poset) {
  const Relation rho = rho_set(q, poset);
  return transitive_closure(q.relation() - rho) == q.relation();
}

bool satisfies_openness_condition(const Quasiorder& q, const Poset& poset) {
  require_extension(q, poset);
  const Relation& r = q.relation();
  const Relation back = r.transposed();
  for (std::size_t p = 0; p < q.size(); ++p) {
    const ElementSet equivalent = r.row(p) & back.row(p);
    for (std::size_t target : r.row(p)) {
      if (!equivalent.intersects(poset.order().column(target))) return false;
    }
  }
  return true;
}

void for_each_extending_quasiorder(const Poset& poset,
                                   const std::function<void(const Quasiorder&)>& visit,
                                   std::size_t bound) {
  if (poset.size() > bound) {
    throw Error(ErrorCode::bound_exceeded, "quasiorder enumeration is limited to " +
                                               std::to_string(bound) + " elements");
  }
  for_each_closed_extension(poset.order(), ExtensionKind::quasiorder,
                            [&](const Relation& r) { visit(Quasiorder(r)); });
}

std::vector<Quasiorder> enumerate_extending_quasiorders(const Poset& poset, std::size_t bound) {
  std::vector<Quasiorder> out;
  for_each_extending_quasiorder(poset, [&](const Quasiorder& q) { out.push_back(q); }, bound);
  return out;
}

}  // namespace posetpart
