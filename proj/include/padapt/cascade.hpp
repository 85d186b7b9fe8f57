#ifndef PADAPT_CASCADE_HPP
#define PADAPT_CASCADE_HPP

#include <string>
#include <vector>

#include "padapt/rootsys.hpp"

namespace padapt {

// One node of a Kostant cascade: the highest root beta of an irreducible
// subsystem, a link to the node it was peeled from, and the subsystem itself.
struct CascadeNode {
  RootId beta;
  int parent;                    // index into the cascade vector, -1 at the top
  std::vector<RootId> subsystem; // positive roots of the subsystem beta tops
  int component;                 // tag of the original irreducible component
};

// A set of roots with centre gamma such that every other member has a unique
// partner summing to gamma.  The invariant is checked at construction.
struct HeisenbergSet {
  RootId centre;
  std::vector<RootId> members;

  HeisenbergSet(const RootSystem& rs, RootId centre, std::vector<RootId> members);
};

// Kostant cascade of a (possibly reducible) set of positive roots closed
// under root addition.  Recursively peels the highest root of each
// irreducible component; output order is deterministic (components by
// smallest root, children after parents).
std::vector<CascadeNode> kostant_cascade(const RootSystem& rs,
                                         const std::vector<RootId>& positive);

// true iff node a is <= node b in the cascade partial order (a an ancestor
// of b or equal).
bool cascade_le(const std::vector<CascadeNode>& cascade, int a, int b);

// H_beta = { alpha in the node's subsystem | (alpha, beta) > 0 }: the largest
// Heisenberg set with centre beta inside the ambient positive set.
HeisenbergSet largest_heisenberg(const RootSystem& rs,
                                 const std::vector<CascadeNode>& cascade,
                                 int node);

// Finds the cascade node whose centre is beta; throws if beta is not a
// cascade root.
int cascade_node_of(const RootSystem& rs, const std::vector<CascadeNode>& cascade,
                    RootId beta);

// Brute-force verification of the cascade/Heisenberg decomposition laws over
// a whole root system: partition, pair-sum locality, cross-set sums, in-set
// sums.  Failures are report entries, not exceptions.
struct CascadeCheckReport {
  bool partition_ok = false;
  bool pair_sum_ok = false;     // gamma+delta in beta_pi => both in H_beta
  bool cross_sum_ok = false;    // sums across H-sets land per the order
  bool in_set_sum_ok = false;   // sums inside one H-set hit the centre
  std::vector<std::string> failures;
  bool all_ok() const {
    return partition_ok && pair_sum_ok && cross_sum_ok && in_set_sum_ok;
  }
};

CascadeCheckReport cascade_lemma_check(const RootSystem& rs);

// Convenience views used by the adapted-pair recipes.
// beta0: cascade roots that are not simple; beta_cap_simple: those that are.
std::vector<RootId> cascade_beta0(const RootSystem& rs,
                                  const std::vector<CascadeNode>& cascade);
std::vector<RootId> cascade_cap_simple(const RootSystem& rs,
                                       const std::vector<CascadeNode>& cascade);

}  // namespace padapt

#endif
