#include "padapt/cascade.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace padapt {

HeisenbergSet::HeisenbergSet(const RootSystem& rs, RootId c, std::vector<RootId> m)
    : centre(c), members(std::move(m)) {
  std::set<RootId> in(members.begin(), members.end());
  if (!in.count(centre))
    throw std::invalid_argument("Heisenberg set must contain its centre");
  if (in.size() != members.size())
    throw std::invalid_argument("Heisenberg set has repeated members");
  for (RootId a : members) {
    if (a == centre) continue;
    int partners = 0;
    for (RootId b : members) {
      if (b == centre) continue;
      auto s = rs.add_roots(a, b);
      if (s && *s == centre) ++partners;
    }
    if (partners != 1) {
      std::ostringstream os;
      os << "Heisenberg invariant fails at " << rs.root_str(a) << " (centre "
         << rs.root_str(centre) << "): " << partners << " partners";
      throw std::invalid_argument(os.str());
    }
  }
}

namespace {

// Splits a set of roots into irreducible components by inner-product
// connectivity.
std::vector<std::vector<RootId>> components(const RootSystem& rs,
                                            const std::vector<RootId>& roots) {
  std::vector<std::vector<RootId>> comps;
  std::vector<char> used(roots.size(), 0);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    std::vector<std::size_t> stack{i};
    used[i] = 1;
    std::vector<RootId> comp;
    while (!stack.empty()) {
      std::size_t k = stack.back();
      stack.pop_back();
      comp.push_back(roots[k]);
      for (std::size_t j = 0; j < roots.size(); ++j) {
        if (used[j]) continue;
        if (rs.root_inner(roots[k], roots[j]) != 0) {
          used[j] = 1;
          stack.push_back(j);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  std::sort(comps.begin(), comps.end());
  return comps;
}

// The highest root of an irreducible positive set: the unique member that
// cannot be increased by adding another member.
RootId highest_root(const RootSystem& rs, const std::vector<RootId>& comp) {
  std::set<RootId> in(comp.begin(), comp.end());
  std::vector<RootId> maxima;
  for (RootId a : comp) {
    bool maximal = true;
    for (RootId b : comp) {
      auto s = rs.add_roots(a, b);
      if (s && in.count(*s)) {
        maximal = false;
        break;
      }
    }
    if (maximal) maxima.push_back(a);
  }
  if (maxima.size() != 1)
    throw std::logic_error("irreducible component without a unique highest root");
  return maxima[0];
}

void peel(const RootSystem& rs, const std::vector<RootId>& positive, int parent,
          int component, std::vector<CascadeNode>& out) {
  for (const auto& comp : components(rs, positive)) {
    RootId beta = highest_root(rs, comp);
    int tag = (parent < 0) ? static_cast<int>(out.size()) : component;
    out.push_back(CascadeNode{beta, parent, comp, tag});
    int self = static_cast<int>(out.size()) - 1;
    std::vector<RootId> orth;
    for (RootId a : comp)
      if (rs.root_inner(a, beta) == 0) orth.push_back(a);
    if (!orth.empty()) peel(rs, orth, self, out[self].component, out);
  }
}

}  // namespace

std::vector<CascadeNode> kostant_cascade(const RootSystem& rs,
                                         const std::vector<RootId>& positive) {
  for (RootId a : positive)
    if (!rs.is_positive(a))
      throw std::invalid_argument("kostant_cascade expects positive roots");
  std::vector<CascadeNode> out;
  peel(rs, positive, -1, -1, out);
  return out;
}

bool cascade_le(const std::vector<CascadeNode>& cascade, int a, int b) {
  while (b >= 0) {
    if (a == b) return true;
    b = cascade[b].parent;
  }
  return false;
}

HeisenbergSet largest_heisenberg(const RootSystem& rs,
                                 const std::vector<CascadeNode>& cascade, int node) {
  const CascadeNode& k = cascade[node];
  std::vector<RootId> members;
  for (RootId a : k.subsystem)
    if (rs.root_inner(a, k.beta) > 0) members.push_back(a);
  return HeisenbergSet(rs, k.beta, std::move(members));
}

int cascade_node_of(const RootSystem& rs, const std::vector<CascadeNode>& cascade,
                    RootId beta) {
  for (std::size_t i = 0; i < cascade.size(); ++i)
    if (cascade[i].beta == beta) return static_cast<int>(i);
  throw std::invalid_argument("not a cascade root: " + rs.root_str(beta));
}

CascadeCheckReport cascade_lemma_check(const RootSystem& rs) {
  CascadeCheckReport rep;
  auto pos = rs.positive_roots();
  auto cascade = kostant_cascade(rs, pos);
  const int m = static_cast<int>(cascade.size());

  std::vector<HeisenbergSet> hs;
  hs.reserve(m);
  for (int i = 0; i < m; ++i) hs.push_back(largest_heisenberg(rs, cascade, i));

  // owner[root] = cascade node whose H-set contains it.
  std::vector<int> owner(rs.num_positive(), -1);
  rep.partition_ok = true;
  for (int i = 0; i < m; ++i)
    for (RootId a : hs[i].members) {
      if (owner[a] != -1) {
        rep.partition_ok = false;
        rep.failures.push_back("root in two H-sets: " + rs.root_str(a));
      }
      owner[a] = i;
    }
  for (RootId a : pos)
    if (owner[a] == -1) {
      rep.partition_ok = false;
      rep.failures.push_back("root in no H-set: " + rs.root_str(a));
    }

  std::set<RootId> beta_set;
  for (const auto& nd : cascade) beta_set.insert(nd.beta);

  rep.pair_sum_ok = true;
  rep.cross_sum_ok = true;
  rep.in_set_sum_ok = true;
  for (RootId a : pos) {
    for (RootId b : pos) {
      auto s = rs.add_roots(a, b);
      if (!s || !rs.is_positive(*s)) continue;
      if (beta_set.count(*s)) {
        int nb = owner[*s];
        if (!(owner[a] == nb && owner[b] == nb && a != cascade[nb].beta &&
              b != cascade[nb].beta)) {
          rep.pair_sum_ok = false;
          rep.failures.push_back("pair-sum law fails: " + rs.root_str(a) + " + " +
                                 rs.root_str(b));
        }
      }
      {
        int ka = owner[a], kb = owner[b], km = owner[*s];
        bool ok = (cascade_le(cascade, ka, kb) && km == ka) ||
                  (cascade_le(cascade, kb, ka) && km == kb);
        if (!ok) {
          rep.cross_sum_ok = false;
          rep.failures.push_back("cross-sum law fails: " + rs.root_str(a) + " + " +
                                 rs.root_str(b));
        }
      }
      if (owner[a] == owner[b] && *s != cascade[owner[a]].beta) {
        rep.in_set_sum_ok = false;
        rep.failures.push_back("in-set sum misses centre: " + rs.root_str(a) +
                               " + " + rs.root_str(b));
      }
    }
  }
  return rep;
}

std::vector<RootId> cascade_beta0(const RootSystem& rs,
                                  const std::vector<CascadeNode>& cascade) {
  std::set<RootId> simple(rs.simple_roots().begin(), rs.simple_roots().end());
  std::vector<RootId> out;
  for (const auto& nd : cascade)
    if (!simple.count(nd.beta)) out.push_back(nd.beta);
  return out;
}

std::vector<RootId> cascade_cap_simple(const RootSystem& rs,
                                       const std::vector<CascadeNode>& cascade) {
  std::set<RootId> simple(rs.simple_roots().begin(), rs.simple_roots().end());
  std::vector<RootId> out;
  for (const auto& nd : cascade)
    if (simple.count(nd.beta)) out.push_back(nd.beta);
  return out;
}

}  // namespace padapt
