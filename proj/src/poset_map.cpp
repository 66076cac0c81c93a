#include "posetpart/poset_map.hpp"

#include <algorithm>

#include "posetpart/error.hpp"

namespace posetpart {

PosetMap::PosetMap(Poset dom, Poset cod, std::vector<std::size_t> assignment)
    : dom_(std::move(dom)), cod_(std::move(cod)), assignment_(std::move(assignment)) {
  if (assignment_.size() != dom_.size()) {
    throw Error(ErrorCode::size_mismatch, "assignment does not cover the domain");
  }
  for (std::size_t y : assignment_) {
    if (y >= cod_.size()) throw Error(ErrorCode::size_mismatch, "image outside the codomain");
  }
}

PosetMap make_map(const Poset& dom, const Poset& cod,
                  const std::vector<std::pair<std::string, std::string>>& sends) {
  std::vector<std::optional<std::size_t>> images(dom.size());
  for (const auto& [from, to] : sends) {
    const std::size_t x = dom.require_index(from);
    const std::size_t y = cod.require_index(to);
    if (images[x] && *images[x] != y) {
      throw Error(ErrorCode::conflicting_assignment, "'" + from + "' is sent to two points");
    }
    images[x] = y;
  }
  std::vector<std::size_t> assignment;
  assignment.reserve(dom.size());
  for (std::size_t x = 0; x < dom.size(); ++x) {
    if (!images[x]) {
      throw Error(ErrorCode::missing_assignment, "'" + dom.label(x) + "' has no image");
    }
    assignment.push_back(*images[x]);
  }
  return PosetMap(dom, cod, std::move(assignment));
}

PosetMap identity_map(const Poset& poset) {
  std::vector<std::size_t> assignment(poset.size());
  for (std::size_t i = 0; i < assignment.size(); ++i) assignment[i] = i;
  return PosetMap(poset, poset, std::move(assignment));
}

void for_each_assignment(std::size_t domain_size, std::size_t codomain_size,
                         const std::function<void(const std::vector<std::size_t>&)>& visit) {
  if (codomain_size == 0) {
    if (domain_size == 0) visit({});
    return;
  }
  std::vector<std::size_t> digits(domain_size, 0);
  while (true) {
    visit(digits);
    std::size_t pos = domain_size;
    while (pos > 0 && ++digits[pos - 1] == codomain_size) digits[--pos] = 0;
    if (pos == 0) return;
  }
}

PosetMap compose(const PosetMap& outer, const PosetMap& inner) {
  if (!(inner.cod() == outer.dom())) {
    throw Error(ErrorCode::size_mismatch, "maps are not composable");
  }
  std::vector<std::size_t> assignment(inner.dom().size());
  for (std::size_t x = 0; x < assignment.size(); ++x) assignment[x] = outer(inner(x));
  return PosetMap(inner.dom(), outer.cod(), std::move(assignment));
}

bool is_order_preserving(const PosetMap& f) {
  for (auto [x, y] : f.dom().order().pairs()) {
    if (!f.cod().leq(f(x), f(y))) return false;
  }
  return true;
}

namespace {

ElementSet image(const PosetMap& f) {
  ElementSet out;
  for (std::size_t y : f.assignment()) out.insert(y);
  return out;
}

void require_order_preserving(const PosetMap& f) {
  if (!is_order_preserving(f)) {
    throw Error(ErrorCode::not_order_preserving, "map is not order-preserving");
  }
}

void require_surjective(const PosetMap& f) {
  if (!is_surjective(f)) throw Error(ErrorCode::not_surjective, "map is not surjective");
}

std::string block_label(const Poset& poset, ElementSet block) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i : block) {
    if (!first) out += ',';
    out += poset.label(i);
    first = false;
  }
  return out + "}";
}

}  // namespace

bool is_surjective(const PosetMap& f) { return image(f) == f.cod().carrier(); }

bool is_injective(const PosetMap& f) { return image(f).size() == f.dom().size(); }

bool is_order_reflecting(const PosetMap& f) {
  for (std::size_t x = 0; x < f.dom().size(); ++x) {
    for (std::size_t y = 0; y < f.dom().size(); ++y) {
      if (f.cod().leq(f(x), f(y)) && !f.dom().leq(x, y)) return false;
    }
  }
  return true;
}

SetPartition fibre_support(const PosetMap& f) {
  return SetPartition::from_tags(f.assignment());
}

OrderedPartition fibre_partition(const PosetMap& f) {
  require_order_preserving(f);
  require_surjective(f);
  SetPartition fibres = fibre_support(f);
  // Fibre b is the preimage of the image of its smallest member.
  std::vector<std::size_t> point_of(fibres.block_count());
  for (std::size_t b = 0; b < point_of.size(); ++b) point_of[b] = f(fibres.block(b).min());
  Relation order(fibres.block_count());
  for (std::size_t b = 0; b < point_of.size(); ++b) {
    for (std::size_t c = 0; c < point_of.size(); ++c) {
      if (f.cod().leq(point_of[b], point_of[c])) order.set(b, c);
    }
  }
  return OrderedPartition(std::move(fibres), std::move(order));
}

bool is_fibre_coherent(const PosetMap& f) {
  const Quasiorder q = blockwise_quasiorder(f.dom(), fibre_support(f));
  for (std::size_t p1 = 0; p1 < f.dom().size(); ++p1) {
    for (std::size_t p2 = 0; p2 < f.dom().size(); ++p2) {
      if (f.cod().leq(f(p1), f(p2)) != q(p1, p2)) return false;
    }
  }
  return true;
}

bool is_open_map(const PosetMap& f) {
  require_order_preserving(f);
  for (std::size_t u = 0; u < f.dom().size(); ++u) {
    ElementSet reachable;
    for (std::size_t v : f.dom().down_set(ElementSet::singleton(u))) reachable.insert(f(v));
    if (reachable != f.cod().down_set(ElementSet::singleton(f(u)))) return false;
  }
  return true;
}

KernelPair kernel_pair(const PosetMap& f) {
  const Poset& dom = f.dom();
  std::vector<std::pair<std::size_t, std::size_t>> elements;
  for (std::size_t r1 = 0; r1 < dom.size(); ++r1) {
    for (std::size_t r2 = 0; r2 < dom.size(); ++r2) {
      if (f(r1) == f(r2)) elements.emplace_back(r1, r2);
    }
  }
  if (elements.size() > kMaxElements) {
    throw Error(ErrorCode::too_large, "kernel pair exceeds the element limit");
  }
  std::vector<std::string> labels;
  Relation order(elements.size());
  for (std::size_t a = 0; a < elements.size(); ++a) {
    const auto [r1, r2] = elements[a];
    labels.push_back("(" + dom.label(r1) + "," + dom.label(r2) + ")");
    for (std::size_t b = 0; b < elements.size(); ++b) {
      const auto [s1, s2] = elements[b];
      if (dom.leq(r1, s1) && dom.leq(r2, s2)) order.set(a, b);
    }
  }
  Poset object = Poset::from_order(std::move(labels), std::move(order));
  std::vector<std::size_t> firsts;
  std::vector<std::size_t> seconds;
  for (auto [r1, r2] : elements) {
    firsts.push_back(r1);
    seconds.push_back(r2);
  }
  PosetMap first(object, dom, std::move(firsts));
  PosetMap second(object, dom, std::move(seconds));
  return KernelPair{std::move(object), std::move(first), std::move(second)};
}

namespace {

Factorisation through_fibres(const PosetMap& f) {
  const Poset& dom = f.dom();
  const SetPartition fibres = fibre_support(f);
  // Fibres of an order-preserving map never merge across blocks.
  if (!is_blockwise_antisymmetric(dom, fibres)) {
    throw Error(ErrorCode::internal_invariant_violation,
                "fibres of an order-preserving map break blockwise antisymmetry");
  }
  Relation order = *regular_order(dom, fibres);
  std::vector<std::string> labels;
  std::vector<std::size_t> to_cod;
  for (ElementSet block : fibres.blocks()) {
    labels.push_back(block_label(dom, block));
    to_cod.push_back(f(block.min()));
  }
  Poset mid = Poset::from_order(std::move(labels), std::move(order));
  PosetMap first(dom, mid, fibres.block_indices());
  PosetMap second(mid, f.cod(), std::move(to_cod));
  return Factorisation{FactorisationSystem::regular_epi_mono, std::move(mid), std::move(first),
                       std::move(second)};
}

Factorisation through_image(const PosetMap& f) {
  const Poset& cod = f.cod();
  const std::vector<std::size_t> points = image(f).to_vector();
  std::vector<std::string> labels;
  Relation order(points.size());
  for (std::size_t a = 0; a < points.size(); ++a) {
    labels.push_back(cod.label(points[a]));
    for (std::size_t b = 0; b < points.size(); ++b) {
      if (cod.leq(points[a], points[b])) order.set(a, b);
    }
  }
  Poset mid = Poset::from_order(std::move(labels), std::move(order));
  std::vector<std::size_t> corestriction;
  for (std::size_t y : f.assignment()) {
    corestriction.push_back(static_cast<std::size_t>(
        std::lower_bound(points.begin(), points.end(), y) - points.begin()));
  }
  PosetMap first(f.dom(), mid, std::move(corestriction));
  PosetMap second(mid, cod, points);
  return Factorisation{FactorisationSystem::epi_regular_mono, std::move(mid), std::move(first),
                       std::move(second)};
}

bool preserves_order(const Poset& dom, const Poset& cod, const std::vector<std::size_t>& a) {
  for (auto [x, y] : dom.order().pairs()) {
    if (!cod.leq(a[x], a[y])) return false;
  }
  return true;
}

}  // namespace

Factorisation factorize(const PosetMap& f, FactorisationSystem system) {
  require_order_preserving(f);
  return system == FactorisationSystem::regular_epi_mono ? through_fibres(f) : through_image(f);
}

OracleVerdict regular_epi_oracle(const PosetMap& f, std::size_t codomain_bound) {
  if (codomain_bound > kMaxOracleBound) {
    throw Error(ErrorCode::bound_exceeded,
                "oracle codomains are limited to " + std::to_string(kMaxOracleBound) + " elements");
  }
  if (f.dom().size() > 6 || f.cod().size() > 6) {
    throw Error(ErrorCode::bound_exceeded, "oracle maps are limited to 6-element posets");
  }
  require_order_preserving(f);
  require_surjective(f);

  const KernelPair kp = kernel_pair(f);
  const Poset& dom = f.dom();
  const Poset& cod = f.cod();
  bool found = false;
  for (std::size_t k = 1; k <= codomain_bound && !found; ++k) {
    for (const Poset& target : all_labelled_posets(k)) {
      for_each_assignment(dom.size(), k, [&](const std::vector<std::size_t>& e) {
        if (found || !preserves_order(dom, target, e)) return;
        for (std::size_t r = 0; r < kp.object.size(); ++r) {
          if (e[kp.first(r)] != e[kp.second(r)]) return;
        }
        std::size_t factorings = 0;
        for_each_assignment(cod.size(), k, [&](const std::vector<std::size_t>& psi) {
          if (!preserves_order(cod, target, psi)) return;
          for (std::size_t x = 0; x < dom.size(); ++x) {
            if (psi[f(x)] != e[x]) return;
          }
          ++factorings;
        });
        if (factorings != 1) found = true;
      });
      if (found) break;
    }
  }
  return found ? OracleVerdict::counterexample_found
               : OracleVerdict::no_counterexample_up_to_bound;
}

}  // namespace posetpart
