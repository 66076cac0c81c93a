#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "posetpart/partition.hpp"
#include "posetpart/poset.hpp"
#include "posetpart/set_partition.hpp"

namespace posetpart {

// A function between the carriers of two posets. No structural property is
// implied by construction.
class PosetMap {
 public:
  // Throws SizeMismatch when the assignment does not cover the domain or
  // names a point outside the codomain.
  PosetMap(Poset dom, Poset cod, std::vector<std::size_t> assignment);

  const Poset& dom() const { return dom_; }
  const Poset& cod() const { return cod_; }
  const std::vector<std::size_t>& assignment() const { return assignment_; }
  std::size_t operator()(std::size_t x) const { return assignment_[x]; }

  friend bool operator==(const PosetMap&, const PosetMap&) = default;

 private:
  Poset dom_;
  Poset cod_;
  std::vector<std::size_t> assignment_;
};

// Builds a map from (domain label, codomain label) pairs. Throws
// UnknownLabel, MissingAssignment, ConflictingAssignment.
PosetMap make_map(const Poset& dom, const Poset& cod,
                  const std::vector<std::pair<std::string, std::string>>& sends);

PosetMap identity_map(const Poset& poset);

// Visits every function {0..domain_size-1} -> {0..codomain_size-1} as an
// assignment vector, in lexicographic order.
void for_each_assignment(std::size_t domain_size, std::size_t codomain_size,
                         const std::function<void(const std::vector<std::size_t>&)>& visit);

// outer after inner. Throws SizeMismatch unless inner.cod() == outer.dom().
PosetMap compose(const PosetMap& outer, const PosetMap& inner);

bool is_order_preserving(const PosetMap& f);
bool is_surjective(const PosetMap& f);
bool is_injective(const PosetMap& f);
// f(x) <= f(y) implies x <= y.
bool is_order_reflecting(const PosetMap& f);

// Partition of the domain into the nonempty fibres f^-1(q), q in f(P).
SetPartition fibre_support(const PosetMap& f);

// The fibres ordered as their images are. Throws NotOrderPreserving,
// NotSurjective.
OrderedPartition fibre_partition(const PosetMap& f);

// f(p1) <= f(p2) iff p1 is blockwise under p2 w.r.t. the fibres over f(P).
bool is_fibre_coherent(const PosetMap& f);

// Whenever f(u) >= v', some v <= u has f(v) = v'. Throws NotOrderPreserving.
bool is_open_map(const PosetMap& f);

struct KernelPair {
  Poset object;  // {(r1, r2) | f(r1) = f(r2)} with the componentwise order
  PosetMap first;
  PosetMap second;
};

// Elements are labelled "(r1,r2)" and listed in lexicographic index order.
KernelPair kernel_pair(const PosetMap& f);

enum class FactorisationSystem { regular_epi_mono, epi_regular_mono };

struct Factorisation {
  FactorisationSystem system;
  Poset mid;
  PosetMap first;   // dom -> mid
  PosetMap second;  // mid -> cod
};

// regular_epi_mono: through the fibres of f ordered by the blockwise
// quasiorder (labels "{a,b}"). epi_regular_mono: through the image f(P) with
// the order restricted from the codomain. Throws NotOrderPreserving.
Factorisation factorize(const PosetMap& f, FactorisationSystem system);

enum class OracleVerdict { counterexample_found, no_counterexample_up_to_bound };

inline constexpr std::size_t kMaxOracleBound = 4;

// Bounded search for a failure of the regular epimorphism universal property,
// using the kernel pair of f as the parallel pair: every poset Q' with at most
// `codomain_bound` elements and every order-preserving e' : dom -> Q' that
// coequalises the projections must factor as psi . f for exactly one
// order-preserving psi. Throws NotOrderPreserving, NotSurjective,
// BoundExceeded.
OracleVerdict regular_epi_oracle(const PosetMap& f, std::size_t codomain_bound);

}  // namespace posetpart
