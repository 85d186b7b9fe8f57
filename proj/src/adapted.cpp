#include "padapt/adapted.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "padapt/linalg.hpp"

namespace padapt {

namespace {

// Root construction with 1-based epsilon indices.
struct Builder {
  const RootSystem& rs;

  std::vector<int> coords(std::initializer_list<std::pair<int, int>> terms) const {
    std::vector<int> v(rs.rank(), 0);
    for (auto [i, c] : terms) v[i - 1] += c;
    return v;
  }
  RootId rt(std::initializer_list<std::pair<int, int>> terms) const {
    return rs.root_id(coords(terms));
  }
  RootId sum(int i, int j) const { return rt({{i, 1}, {j, 1}}); }     // e_i + e_j
  RootId diff(int i, int j) const { return rt({{i, 1}, {j, -1}}); }   // e_i - e_j
  RootId shrt(int i) const { return rt({{i, 1}}); }                   // e_i (type B)
  RootId lng(int i) const { return rt({{i, 2}}); }                    // 2 e_i (type C)
};

// Sorting helper: cascade lists in the positional order used by the
// constructions (leading epsilon coordinate, then lexicographic).
void sort_by_leading(const RootSystem& rs, std::vector<RootId>& ids) {
  std::sort(ids.begin(), ids.end(), [&rs](RootId a, RootId b) {
    const auto& ra = rs.root(a);
    const auto& rb = rs.root(b);
    auto lead = [](const std::vector<int>& r) {
      for (std::size_t i = 0; i < r.size(); ++i)
        if (r[i] != 0) return i;
      return r.size();
    };
    auto la = lead(ra), lb = lead(rb);
    if (la != lb) return la < lb;
    return ra < rb;
  });
}

std::vector<RootId> negate_all(const RootSystem& rs, std::vector<RootId> ids) {
  for (auto& id : ids) id = rs.negate(id);
  return ids;
}

struct CascadeData {
  std::vector<CascadeNode> nodes;
  std::vector<RootId> beta0;       // non-simple cascade roots, positional order
  std::vector<RootId> cap_simple;  // simple cascade roots, positional order

  int node_of(const RootSystem& rs, RootId beta) const {
    return cascade_node_of(rs, nodes, beta);
  }
  HeisenbergSet h_of(const RootSystem& rs, RootId beta) const {
    return largest_heisenberg(rs, nodes, node_of(rs, beta));
  }
};

CascadeData cascade_data(const RootSystem& rs, const std::vector<RootId>& positive) {
  CascadeData cd;
  cd.nodes = kostant_cascade(rs, positive);
  cd.beta0 = cascade_beta0(rs, cd.nodes);
  cd.cap_simple = cascade_cap_simple(rs, cd.nodes);
  sort_by_leading(rs, cd.beta0);
  sort_by_leading(rs, cd.cap_simple);
  return cd;
}

HeisenbergSet negated_heisenberg(const RootSystem& rs, const HeisenbergSet& h) {
  std::vector<RootId> members;
  members.reserve(h.members.size());
  for (RootId a : h.members) members.push_back(rs.negate(a));
  return HeisenbergSet(rs, rs.negate(h.centre), std::move(members));
}

void enforce_supports(const AdaptedCandidate& c, const TruncatedParabolic& p) {
  const auto& rs = p.roots();
  auto dual_side = [&](RootId a) { return p.is_dual_root(a); };
  auto neg_side = [&](RootId a) {
    return !rs.is_positive(a) && p.is_dual_root(a);  // Delta^-_{pi'}
  };
  std::size_t k = 0;
  for (RootId g : c.S_plus) {
    if (!rs.is_positive(g))
      throw std::invalid_argument("S+ root not positive: " + rs.root_str(g));
    for (RootId a : c.heisenberg[k].members)
      if (!rs.is_positive(a))
        throw std::invalid_argument("Heisenberg set of " + rs.root_str(g) +
                                    " leaves Delta^+ at " + rs.root_str(a));
    ++k;
  }
  for (RootId g : c.S_minus) {
    if (!neg_side(g))
      throw std::invalid_argument("S- root not in Delta^-_{pi'}: " + rs.root_str(g));
    for (RootId a : c.heisenberg[k].members)
      if (!neg_side(a))
        throw std::invalid_argument("Heisenberg set of " + rs.root_str(g) +
                                    " leaves Delta^-_{pi'} at " + rs.root_str(a));
    ++k;
  }
  for (RootId a : c.T)
    if (!dual_side(a))
      throw std::invalid_argument("T root outside Delta^+ u Delta^-_{pi'}: " +
                                  rs.root_str(a));
  for (RootId a : c.T_star)
    if (!dual_side(a))
      throw std::invalid_argument("T* root outside Delta^+ u Delta^-_{pi'}: " +
                                  rs.root_str(a));
  // Pairwise disjointness of the Gamma's, T and T*.
  std::set<RootId> seen;
  auto add_all = [&seen, &rs](const std::vector<RootId>& v, const char* what) {
    for (RootId a : v)
      if (!seen.insert(a).second)
        throw std::invalid_argument(std::string("overlapping ") + what + " at " +
                                    rs.root_str(a));
  };
  for (const auto& h : c.heisenberg) add_all(h.members, "Heisenberg sets");
  add_all(c.T, "T");
  add_all(c.T_star, "T*");
}

// ---- Named constructions ------------------------------------------------

// Cascade recipe shared by the s-odd cases and the even p_l case: S u T is
// the cascade of g together with the opposite of the cascade of g'.
AdaptedCandidate cascade_recipe(const ParabolicCase& pc, const TruncatedParabolic& p) {
  const auto& rs = p.roots();
  const int n = rs.rank();
  auto cg = cascade_data(rs, rs.positive_roots());
  auto cp = cascade_data(rs, p.delta_plus_pi_prime());

  AdaptedCandidate c;
  c.S_plus = cg.beta0;
  std::vector<RootId> t_plus = cg.cap_simple;
  std::vector<RootId> s_minus_pos = cp.beta0;      // to be negated
  std::vector<RootId> t_minus_pos = cp.cap_simple; // to be negated

  if (pc.kind == CaseKind::PSL && pc.family == Family::D) {
    const int reach = pc.s + 2 * pc.ell;
    RootId alpha_n = rs.simple_roots()[n - 1];
    if (reach <= n - 2 && n % 2 == 0) {
      // alpha_n moves from the simple part of the g-cascade into S.
      std::erase(t_plus, alpha_n);
      c.S_plus.push_back(alpha_n);
    } else if (reach <= n - 2 && n % 2 == 1) {
      std::erase(t_minus_pos, alpha_n);
      s_minus_pos.push_back(alpha_n);
    }
  }
  sort_by_leading(rs, c.S_plus);
  sort_by_leading(rs, s_minus_pos);
  c.S_minus = negate_all(rs, s_minus_pos);
  c.T = t_plus;
  for (RootId a : negate_all(rs, t_minus_pos)) c.T.push_back(a);

  for (RootId g : c.S_plus) c.heisenberg.push_back(cg.h_of(rs, g));
  for (RootId g : c.S_minus)
    c.heisenberg.push_back(negated_heisenberg(rs, cp.h_of(rs, rs.negate(g))));
  return c;
}

// Cases with s even and two deleted roots (types B and D): deformed
// Heisenberg sets around epsilon_s and a nonempty T*.  The skip parameter
// drops the first cascade elements of the negative side; the failing
// three-deletion variant uses it with 1.
AdaptedCandidate even_recipe_impl(Family family, int s, const TruncatedParabolic& p,
                                  int skip_minus_cascade) {
  const auto& rs = p.roots();
  const bool isB = family == Family::B;
  const int n = rs.rank();
  Builder b{rs};
  auto cg = cascade_data(rs, rs.positive_roots());
  auto cp = cascade_data(rs, p.delta_plus_pi_prime());

  AdaptedCandidate c;
  // S+ with one Heisenberg set per entry, built in step.
  auto push_plus = [&](RootId g, HeisenbergSet hs) {
    c.S_plus.push_back(g);
    c.heisenberg.push_back(std::move(hs));
  };

  for (int i = 1; i <= s / 2 - 1; ++i)
    push_plus(b.sum(2 * i - 1, 2 * i), cg.h_of(rs, b.sum(2 * i - 1, 2 * i)));

  if (isB) {
    push_plus(b.shrt(s), HeisenbergSet(rs, b.shrt(s), {b.shrt(s)}));
  } else {
    push_plus(b.diff(s, n), HeisenbergSet(rs, b.diff(s, n), {b.diff(s, n)}));
    push_plus(b.sum(s, n), HeisenbergSet(rs, b.sum(s, n), {b.sum(s, n)}));
  }

  {
    RootId g = b.sum(s - 1, s + 1);
    std::vector<RootId> mem{g};
    for (int t = s + 2; t <= n; ++t) {
      mem.push_back(b.sum(s - 1, t));
      mem.push_back(b.diff(s - 1, t));
      mem.push_back(b.diff(s + 1, t));
      mem.push_back(b.sum(s + 1, t));
    }
    if (isB) {
      mem.push_back(b.shrt(s - 1));
      mem.push_back(b.shrt(s + 1));
    }
    mem.push_back(b.diff(s - 1, s));
    mem.push_back(b.sum(s, s + 1));
    push_plus(g, HeisenbergSet(rs, g, std::move(mem)));
  }

  const int jmax_plus = isB ? (n - 1) / 2 : (n - 2) / 2;
  for (int j = s / 2 + 1; j <= jmax_plus; ++j) {
    RootId g = b.sum(2 * j, 2 * j + 1);
    std::vector<RootId> mem{g};
    if (isB) {
      mem.push_back(b.shrt(2 * j));
      mem.push_back(b.shrt(2 * j + 1));
    }
    for (int k = 2 * j + 2; k <= n; ++k) {
      mem.push_back(b.sum(2 * j, k));
      mem.push_back(b.diff(2 * j, k));
      mem.push_back(b.diff(2 * j + 1, k));
      mem.push_back(b.sum(2 * j + 1, k));
    }
    push_plus(g, HeisenbergSet(rs, g, std::move(mem)));
  }

  auto push_minus = [&](RootId g, HeisenbergSet hs) {
    c.S_minus.push_back(g);
    c.heisenberg.push_back(std::move(hs));
  };
  for (int i = 1; i <= s / 2 - 1; ++i) {
    RootId g = b.diff(s - i, i);  // e_{s-i} - e_i, a negative root
    std::vector<RootId> mem{g};
    for (int j = i + 1; j <= s - i - 1; ++j) {
      mem.push_back(b.diff(s - i, j));
      mem.push_back(b.diff(j, i));
    }
    push_minus(g, HeisenbergSet(rs, g, std::move(mem)));
  }
  const int jmax_minus = isB ? n / 2 : (n - 1) / 2;
  for (int j = s / 2 + 2 + skip_minus_cascade; j <= jmax_minus; ++j) {
    RootId beta = b.sum(2 * j - 1, 2 * j);
    push_minus(rs.negate(beta), negated_heisenberg(rs, cp.h_of(rs, beta)));
  }

  c.T.push_back(b.sum(s - 1, s));
  c.T.push_back(b.diff(s - 1, s + 1));
  c.T.push_back(b.sum(s, s + 2));
  for (int i = 1; i <= s / 2 - 1; ++i) c.T.push_back(b.diff(2 * i - 1, 2 * i));
  for (int j = 1; j <= (n - s - 1) / 2; ++j) c.T.push_back(b.diff(s + 2 * j, s + 2 * j + 1));
  for (int k = 1; k <= (n - s) / 2; ++k) c.T.push_back(b.diff(s + 2 * k, s + 2 * k - 1));

  if (isB) {
    for (int i = 1; i <= n; ++i)
      if (i != s) c.T_star.push_back(b.diff(s, i));
    for (int j = s + 3; j <= n; ++j) c.T_star.push_back(b.sum(s, j));
    c.T_star.push_back(n % 2 == 0 ? b.shrt(n) : rs.negate(b.shrt(n)));
  } else {
    for (int i = 1; i <= n - 1; ++i)
      if (i != s) c.T_star.push_back(b.diff(s, i));
    for (int j = s + 3; j <= n - 1; ++j) c.T_star.push_back(b.sum(s, j));
    RootId alpha_n = rs.simple_roots()[n - 1];
    c.T_star.push_back(n % 2 == 1 ? alpha_n : rs.negate(alpha_n));
  }
  return c;
}

AdaptedCandidate even_recipe(const ParabolicCase& pc, const TruncatedParabolic& p) {
  return even_recipe_impl(pc.family, pc.s, p, 0);
}

// Type C: deformed cascade elements gamma_i = e_i + e_{i+1}.
AdaptedCandidate c_recipe(const ParabolicCase& pc, const TruncatedParabolic& p) {
  const auto& rs = p.roots();
  Builder b{rs};
  const int n = rs.rank();
  const int s = pc.s, ell = pc.ell;
  auto cg = cascade_data(rs, rs.positive_roots());
  auto cp = cascade_data(rs, p.delta_plus_pi_prime());

  AdaptedCandidate c;
  // Gamma for a deformed element gamma_i: H_{beta_i} minus its centre,
  // together with the whole H_{beta_{i+1}}.
  auto deformed_plus = [&](int i) {
    RootId g = b.sum(i, i + 1);
    auto h1 = cg.h_of(rs, b.lng(i));
    auto h2 = cg.h_of(rs, b.lng(i + 1));
    std::vector<RootId> mem;
    for (RootId a : h1.members)
      if (a != h1.centre) mem.push_back(a);
    mem.insert(mem.end(), h2.members.begin(), h2.members.end());
    c.S_plus.push_back(g);
    c.heisenberg.push_back(HeisenbergSet(rs, g, std::move(mem)));
  };

  if (s % 2 == 1) {
    for (int i = 1; i <= n / 2; ++i) deformed_plus(2 * i - 1);
  } else {
    const int t = s / 4;
    for (int i = 1; i <= t; ++i) deformed_plus(2 * i - 1);
    {
      RootId g = b.lng(2 * t + 1);
      c.S_plus.push_back(g);
      c.heisenberg.push_back(cg.h_of(rs, g));
    }
    for (int j = t + 1; j <= (n - 1) / 2; ++j) deformed_plus(2 * j);
  }

  // Negative side: cascade roots of the A component, then deformed elements
  // of the C component of pi'.
  auto deformed_minus = [&](int i) {
    RootId g = rs.negate(b.sum(i, i + 1));
    auto h1 = cp.h_of(rs, b.lng(i));
    auto h2 = cp.h_of(rs, b.lng(i + 1));
    std::vector<RootId> mem;
    for (RootId a : h1.members)
      if (a != h1.centre) mem.push_back(rs.negate(a));
    for (RootId a : h2.members) mem.push_back(rs.negate(a));
    c.S_minus.push_back(g);
    c.heisenberg.push_back(HeisenbergSet(rs, g, std::move(mem)));
  };

  const int amax = s % 2 == 1 ? (s - 1) / 2 : (s - 2) / 2;
  for (int i = 1; i <= amax; ++i) {
    RootId beta = b.diff(i, s + 1 - i);
    c.S_minus.push_back(rs.negate(beta));
    c.heisenberg.push_back(negated_heisenberg(rs, cp.h_of(rs, beta)));
  }
  if (s % 2 == 1) {
    for (int j = (s + 2 * ell + 1) / 2; j <= (n - 1) / 2; ++j) deformed_minus(2 * j);
  } else {
    for (int j = (s + 2 * ell) / 2; j <= (n - 2) / 2; ++j) deformed_minus(2 * j + 1);
  }

  if (s % 2 == 1) {
    for (int i = 1; i <= (n + 1) / 2; ++i) c.T.push_back(b.lng(2 * i - 1));
  } else {
    const int t = s / 4;
    for (int i = 1; i <= t; ++i) c.T.push_back(b.lng(2 * i - 1));
    for (int j = t + 1; j <= n / 2; ++j) c.T.push_back(b.lng(2 * j));
    c.T.push_back(rs.negate(b.diff(s / 2, s / 2 + 1)));  // -alpha_{s/2}
  }
  for (int i = 1; i <= ell; ++i)
    c.T.push_back(rs.negate(b.diff(s + 2 * i - 1, s + 2 * i)));
  for (int j = 1; j <= (n + 1 - s) / 2 - ell; ++j)
    c.T.push_back(rs.negate(b.lng(s + 2 * ell + 2 * j - 1)));
  return c;
}

// D_n odd, deletion {alpha_{n-1}, alpha_n}.
AdaptedCandidate p0_recipe(const TruncatedParabolic& p) {
  const auto& rs = p.roots();
  Builder b{rs};
  const int n = rs.rank();
  auto cg = cascade_data(rs, rs.positive_roots());
  auto cp = cascade_data(rs, p.delta_plus_pi_prime());

  AdaptedCandidate c;
  for (int i = 1; i <= (n - 3) / 2; ++i) {
    RootId g = b.sum(2 * i - 1, 2 * i);
    c.S_plus.push_back(g);
    c.heisenberg.push_back(cg.h_of(rs, g));
  }
  {
    RootId g = b.sum(n - 2, n);
    c.S_plus.push_back(g);
    c.heisenberg.push_back(
        HeisenbergSet(rs, g, {g, b.diff(n - 2, n - 1), b.sum(n - 1, n)}));
  }
  {
    RootId g = b.diff(n - 2, n);
    c.S_plus.push_back(g);
    c.heisenberg.push_back(HeisenbergSet(rs, g, {g}));
  }
  {
    RootId beta = b.diff(1, n - 1);
    c.S_minus.push_back(rs.negate(beta));
    c.heisenberg.push_back(negated_heisenberg(rs, cp.h_of(rs, beta)));
  }
  for (int i = 2; i <= (n - 3) / 2; ++i) {
    RootId g = b.diff(n - i - 1, i);  // negative root
    std::vector<RootId> mem{g};
    for (int j = i + 1; j <= n - i - 2; ++j) {
      mem.push_back(b.diff(n - i - 1, j));
      mem.push_back(b.diff(j, i));
    }
    c.S_minus.push_back(g);
    c.heisenberg.push_back(HeisenbergSet(rs, g, std::move(mem)));
  }

  c.T.push_back(b.diff(n - 2, 2));
  c.T.push_back(b.sum(n - 2, n - 1));
  c.T.push_back(b.diff(n - 1, n));
  for (int i = 1; i <= (n - 3) / 2; ++i) c.T.push_back(b.diff(2 * i - 1, 2 * i));
  for (int i = 3; i <= n - 3; ++i) c.T_star.push_back(b.diff(n - 2, i));
  return c;
}

// D_n odd, deletion {alpha_{n-3}, alpha_{n-1}, alpha_n}.
AdaptedCandidate p1_recipe(const TruncatedParabolic& p) {
  const auto& rs = p.roots();
  Builder b{rs};
  const int n = rs.rank();
  auto cg = cascade_data(rs, rs.positive_roots());

  AdaptedCandidate c;
  for (int i = 1; i <= (n - 5) / 2; ++i) {
    RootId g = b.sum(2 * i - 1, 2 * i);
    c.S_plus.push_back(g);
    c.heisenberg.push_back(cg.h_of(rs, g));
  }
  {
    RootId g = b.sum(n - 4, n - 2);
    std::vector<RootId> mem{g,
                            b.sum(n - 4, n - 1),
                            b.diff(n - 2, n - 1),
                            b.sum(n - 4, n),
                            b.diff(n - 2, n),
                            b.diff(n - 4, n - 1),
                            b.sum(n - 2, n - 1),
                            b.diff(n - 4, n),
                            b.sum(n - 2, n),
                            b.diff(n - 4, n - 3),
                            b.sum(n - 2, n - 3)};
    c.S_plus.push_back(g);
    c.heisenberg.push_back(HeisenbergSet(rs, g, std::move(mem)));
  }
  {
    RootId g = b.sum(n - 3, n);
    c.S_plus.push_back(g);
    c.heisenberg.push_back(
        HeisenbergSet(rs, g, {g, b.diff(n - 3, n - 1), b.sum(n - 1, n)}));
  }
  {
    RootId g = b.diff(n - 3, n);
    c.S_plus.push_back(g);
    c.heisenberg.push_back(HeisenbergSet(rs, g, {g}));
  }
  for (int k = 1; k <= (n - 5) / 2; ++k) {
    RootId g = b.diff(n - 3 - k, k);  // negative root
    std::vector<RootId> mem{g};
    for (int j = k + 1; j <= n - 4 - k; ++j) {
      mem.push_back(b.diff(n - 3 - k, j));
      mem.push_back(b.diff(j, k));
    }
    c.S_minus.push_back(g);
    c.heisenberg.push_back(HeisenbergSet(rs, g, std::move(mem)));
  }

  for (int i = 1; i <= (n - 5) / 2; ++i) c.T.push_back(b.diff(2 * i - 1, 2 * i));
  c.T.push_back(b.sum(n - 4, n - 3));
  c.T.push_back(b.diff(n - 4, n - 2));
  c.T.push_back(b.sum(n - 3, n - 1));
  c.T.push_back(b.diff(n - 1, n));
  c.T.push_back(b.diff(n - 1, n - 2));
  for (int k = 1; k <= n - 2; ++k)
    if (k != n - 3) c.T_star.push_back(b.diff(n - 3, k));
  return c;
}

// D_n odd, q_{s,l}: cascade sets with one deformation at the fork.
AdaptedCandidate q_recipe(const TruncatedParabolic& p) {
  const auto& rs = p.roots();
  Builder b{rs};
  const int n = rs.rank();
  auto cg = cascade_data(rs, rs.positive_roots());
  auto cp = cascade_data(rs, p.delta_plus_pi_prime());

  AdaptedCandidate c;
  for (int i = 1; i <= (n - 3) / 2; ++i) {
    RootId g = b.sum(2 * i - 1, 2 * i);
    c.S_plus.push_back(g);
    c.heisenberg.push_back(cg.h_of(rs, g));
  }
  {
    RootId g = b.sum(n - 2, n);
    c.S_plus.push_back(g);
    c.heisenberg.push_back(
        HeisenbergSet(rs, g, {g, b.diff(n - 2, n - 1), b.sum(n - 1, n)}));
  }
  for (RootId beta : cp.beta0) {
    c.S_minus.push_back(rs.negate(beta));
    c.heisenberg.push_back(negated_heisenberg(rs, cp.h_of(rs, beta)));
  }

  c.T.push_back(b.sum(n - 2, n - 1));
  c.T.push_back(b.diff(n - 2, n));
  c.T.push_back(b.diff(n - 1, n));
  for (int i = 1; i <= (n - 3) / 2; ++i) c.T.push_back(b.diff(2 * i - 1, 2 * i));
  for (RootId a : cp.cap_simple) c.T.push_back(rs.negate(a));
  return c;
}

}  // namespace

AdaptedCandidate construct_candidate(const ParabolicCase& pc,
                                     const TruncatedParabolic& p) {
  AdaptedCandidate c;
  switch (pc.recipe) {
    case Recipe::B_odd:
    case Recipe::D_odd:
    case Recipe::D_pl_even:
      c = cascade_recipe(pc, p);
      break;
    case Recipe::B_even:
    case Recipe::D_even:
      c = even_recipe(pc, p);
      break;
    case Recipe::C_all:
      c = c_recipe(pc, p);
      break;
    case Recipe::D_p0_odd:
      c = p0_recipe(p);
      break;
    case Recipe::D_p1_odd:
      c = p1_recipe(p);
      break;
    case Recipe::D_q_odd:
      c = q_recipe(p);
      break;
    case Recipe::None:
      throw std::invalid_argument("no adapted-pair recipe for " + pc.label());
  }
  enforce_supports(c, p);
  return c;
}

AdaptedCandidate construct_notwork_variant(Family family, int n, int s,
                                           const TruncatedParabolic& p) {
  if (family != Family::B)
    throw std::invalid_argument("failing variants are defined for type B");
  const auto& rs = p.roots();
  AdaptedCandidate c;
  if (s % 2 == 0) {
    // Deletion {s, s+2, s+4}: the two-deletion construction without the
    // element -e_{s+3}-e_{s+4}, whose Heisenberg set is no longer available.
    if (n < 6 || s < 2 || s + 4 > n)
      throw std::invalid_argument("variant requires even s with s+4 <= n, n >= 6");
    if (p.deleted() != std::set<int>{s, s + 2, s + 4})
      throw std::invalid_argument("variant expects deletion {s, s+2, s+4}");
    // The two-deletion sets without -e_{s+3}-e_{s+4}.
    c = even_recipe_impl(family, s, p, 1);
  } else {
    // Deletion {s, s+4}: the plain cascade set, whose restriction to
    // h_Lambda is singular.
    if (s < 1 || s + 4 > n)
      throw std::invalid_argument("variant requires s+4 <= n");
    if (p.deleted() != std::set<int>{s, s + 4})
      throw std::invalid_argument("variant expects deletion {s, s+4}");
    auto cg = cascade_data(rs, rs.positive_roots());
    auto cp = cascade_data(rs, p.delta_plus_pi_prime());
    c.S_plus = cg.beta0;
    for (RootId g : c.S_plus) c.heisenberg.push_back(cg.h_of(rs, g));
    for (RootId beta : cp.beta0) {
      c.S_minus.push_back(rs.negate(beta));
      c.heisenberg.push_back(negated_heisenberg(rs, cp.h_of(rs, beta)));
    }
  }
  enforce_supports(c, p);
  return c;
}

CartanElt solve_h(const AdaptedCandidate& c, const TruncatedParabolic& p) {
  const auto& rs = p.roots();
  auto S = c.S();
  const std::size_t k = p.h_basis().size();
  if (S.size() != k)
    throw std::invalid_argument("S does not have dim h_Lambda elements");
  Mat m(k, RatVec(k));
  for (std::size_t u = 0; u < k; ++u) {
    WeightVec w(rs.rank());
    for (int i = 0; i < rs.rank(); ++i) w[i] = rs.root(S[u])[i];
    for (std::size_t v = 0; v < k; ++v) m[u][v] = RootSystem::pairing(w, p.h_basis()[v]);
  }
  auto sol = solve(m, RatVec(k, Rat(-1)));
  if (!sol) throw std::invalid_argument("restriction of S to h_Lambda is singular");
  CartanElt h = zero_vec(rs.rank());
  for (std::size_t v = 0; v < k; ++v)
    if ((*sol)[v] != 0) h = add(h, scale((*sol)[v], p.h_basis()[v]));
  return h;
}

std::string ConditionReport::first_failure() const {
  if (!i_ok) return "condition (i)";
  if (!ii_ok) return "condition (ii)";
  if (!iii_ok) return "condition (iii)";
  if (!iv_ok) return "condition (iv)";
  if (!v_ok) return "condition (v)";
  if (!vi_ok) return "condition (vi)";
  return "";
}

namespace {

// Column coordinates of a dual-model element.
struct DualIndexer {
  const TruncatedParabolic& p;
  std::vector<int> slot;  // root id -> column, -1 otherwise
  int nroots;

  explicit DualIndexer(const TruncatedParabolic& tp) : p(tp) {
    slot.assign(tp.roots().num_roots(), -1);
    nroots = static_cast<int>(tp.dual_roots().size());
    for (int k = 0; k < nroots; ++k) slot[tp.dual_roots()[k]] = k;
  }
  int ncols() const { return nroots + p.dim_h(); }
  RatVec row_of(const LieElt& z) const {
    RatVec v(ncols(), Rat(0));
    for (const auto& [rid, c] : z.root_part) {
      if (slot[rid] < 0) throw std::logic_error("element not in the dual model");
      v[slot[rid]] = c;
    }
    if (!is_zero_vec(z.cartan_part)) {
      auto coords = p.expand_h_lambda(z.cartan_part);
      if (!coords) throw std::logic_error("Cartan part outside h_Lambda");
      for (int k = 0; k < p.dim_h(); ++k) v[nroots + k] = (*coords)[k];
    }
    return v;
  }
  RatVec indicator(RootId rid) const {
    RatVec v(ncols(), Rat(0));
    if (slot[rid] < 0) throw std::logic_error("root not in the dual model");
    v[slot[rid]] = 1;
    return v;
  }
};

LieElt build_y(const AdaptedCandidate& c, const MatrixRealization& real,
               const std::vector<Rat>* coeffs) {
  auto S = c.S();
  LieElt y(real.roots().rank());
  for (std::size_t k = 0; k < S.size(); ++k)
    y.add_root(S[k], coeffs ? (*coeffs)[k] : Rat(1));
  return y;
}

// Echelon of ad p_Lambda(y) in dual-model coordinates.
Echelon ad_y_echelon(const AdaptedCandidate& c, const TruncatedParabolic& p,
                     const MatrixRealization& real, const DualIndexer& ix,
                     const std::vector<Rat>* coeffs) {
  LieElt y = build_y(c, real, coeffs);
  Echelon ech(ix.ncols());
  for (RootId a : p.algebra_roots())
    ech.insert(ix.row_of(coadjoint(p, real, real.root_elt(a), y)));
  for (const auto& t : p.h_basis())
    ech.insert(ix.row_of(coadjoint(p, real, real.cartan_elt(t), y)));
  return ech;
}

}  // namespace

ConditionReport check_conditions(const AdaptedCandidate& c, const TruncatedParabolic& p,
                                 const MatrixRealization& real) {
  const auto& rs = p.roots();
  ConditionReport rep;

  // (i) restriction of S to h_Lambda is a basis.
  {
    auto S = c.S();
    const std::size_t k = p.h_basis().size();
    rep.i_det = 0;
    if (S.size() == k) {
      Mat m(k, RatVec(k));
      for (std::size_t u = 0; u < k; ++u) {
        WeightVec w(rs.rank());
        for (int i = 0; i < rs.rank(); ++i) w[i] = rs.root(S[u])[i];
        for (std::size_t v = 0; v < k; ++v)
          m[u][v] = RootSystem::pairing(w, p.h_basis()[v]);
      }
      rep.i_det = determinant(m);
    }
    rep.i_ok = rep.i_det != 0;
  }

  // Membership maps for the sum-scan conditions.
  auto S = c.S();
  std::set<RootId> s_set(S.begin(), S.end());
  const std::size_t nplus = c.S_plus.size();
  std::map<RootId, std::size_t> in_gamma0;  // root -> index of its Gamma
  for (std::size_t k = 0; k < c.heisenberg.size(); ++k)
    for (RootId a : c.heisenberg[k].members)
      if (a != c.heisenberg[k].centre) in_gamma0[a] = k;

  auto scan = [&](bool plus_side, std::vector<std::string>& witnesses) {
    bool ok = true;
    for (const auto& [alpha, ka] : in_gamma0) {
      if ((ka < nplus) != plus_side) continue;
      for (const auto& [beta, kb] : in_gamma0) {
        if ((kb < nplus) != plus_side) continue;
        auto sum = rs.add_roots(alpha, beta);
        if (!sum || !s_set.count(*sum)) continue;
        bool fine = (kb == ka) && (*sum == c.heisenberg[ka].centre);
        if (!fine) {
          ok = false;
          witnesses.push_back(rs.root_str(alpha) + " + " + rs.root_str(beta) +
                              " = " + rs.root_str(*sum));
        }
      }
    }
    return ok;
  };
  rep.ii_ok = scan(true, rep.ii_witnesses);
  rep.iii_ok = scan(false, rep.iii_witnesses);

  // (iv) exact partition of Delta^+ u Delta^-_{pi'}.
  {
    rep.iv_ok = true;
    std::map<RootId, int> count;
    for (const auto& h : c.heisenberg)
      for (RootId a : h.members) count[a]++;
    for (RootId a : c.T) count[a]++;
    for (RootId a : c.T_star) count[a]++;
    for (RootId a : p.dual_roots()) {
      auto it = count.find(a);
      int k = (it == count.end()) ? 0 : it->second;
      if (k != 1) {
        rep.iv_ok = false;
        rep.iv_witnesses.push_back(rs.root_str(a) + (k == 0 ? " uncovered" : " covered twice"));
      }
    }
    for (const auto& [a, k] : count)
      if (!p.is_dual_root(a)) {
        rep.iv_ok = false;
        rep.iv_witnesses.push_back(rs.root_str(a) + " outside the dual model");
      }
  }

  // (v) membership of every T* root vector in ad p_Lambda(y) + g_T.
  {
    DualIndexer ix(p);
    Echelon ech = ad_y_echelon(c, p, real, ix, nullptr);
    for (RootId t : c.T) ech.insert(ix.indicator(t));
    rep.v_ok = true;
    for (RootId a : c.T_star)
      if (!ech.contains(ix.indicator(a))) {
        rep.v_ok = false;
        rep.v_witnesses.push_back(a);
      }
  }

  // (vi) |T| = ind p_Lambda.
  rep.T_size = static_cast<int>(c.T.size());
  rep.index = index_by_orbits(p);
  rep.vi_ok = rep.T_size == rep.index;
  return rep;
}

RegularityResult verify_regularity_direct(const AdaptedCandidate& c,
                                          const TruncatedParabolic& p,
                                          const MatrixRealization& real,
                                          const std::vector<Rat>* coeffs) {
  DualIndexer ix(p);
  RegularityResult res;
  res.dim = p.dim();
  res.expected_rank = res.dim - static_cast<int>(c.T.size());
  Echelon ech = ad_y_echelon(c, p, real, ix, coeffs);
  res.rank = static_cast<int>(ech.rank());
  for (RootId t : c.T) ech.insert(ix.indicator(t));
  res.complement_spans = static_cast<int>(ech.rank()) == res.dim;
  res.verdict = (res.rank == res.expected_rank) && res.complement_spans;
  return res;
}

std::vector<Rat> random_scaling(std::size_t size, unsigned long seed) {
  // Deterministic positive rationals with small numerators/denominators.
  unsigned long long state = seed * 0x9E3779B97F4A7C15ull + 0xD1B54A32D192ED03ull;
  auto next = [&state]() {
    state += 0x9E3779B97F4A7C15ull;
    unsigned long long z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  };
  std::vector<Rat> out;
  out.reserve(size);
  for (std::size_t k = 0; k < size; ++k) {
    long num = static_cast<long>(next() % 97ull) + 1;
    long den = static_cast<long>(next() % 23ull) + 1;
    out.push_back(rat(num, den));
  }
  return out;
}

AdaptedCandidate mutated_candidate(const AdaptedCandidate& c, const RootSystem& rs) {
  AdaptedCandidate out = c;
  auto S = c.S();
  std::size_t best = 0;
  for (std::size_t k = 1; k < S.size(); ++k)
    if (rs.root(S[k]) < rs.root(S[best])) best = k;
  out.heisenberg.erase(out.heisenberg.begin() + best);
  if (best < c.S_plus.size())
    out.S_plus.erase(out.S_plus.begin() + best);
  else
    out.S_minus.erase(out.S_minus.begin() + (best - c.S_plus.size()));
  return out;
}

int SpectrumTables::prime_at(const Rat& lambda) const {
  for (const auto& [l, m] : m_prime)
    if (l == lambda) return m;
  return 0;
}
int SpectrumTables::algebra_at(const Rat& lambda) const {
  for (const auto& [l, m] : m_algebra)
    if (l == lambda) return m;
  return 0;
}
int SpectrumTables::dual_at(const Rat& lambda) const {
  for (const auto& [l, m] : m_dual)
    if (l == lambda) return m;
  return 0;
}

SpectrumTables adh_spectrum(const AdaptedCandidate& c, const TruncatedParabolic& p) {
  if (!c.h) throw std::invalid_argument("spectrum requires a solved h");
  const auto& rs = p.roots();
  const CartanElt& h = *c.h;

  auto value = [&](RootId a) {
    Rat v(0);
    const auto& r = rs.root(a);
    for (int i = 0; i < rs.rank(); ++i)
      if (r[i]) v += Rat(r[i]) * h[i];
    return v;
  };

  std::map<Rat, int> prime, algebra, dual;
  for (RootId a : p.algebra_roots()) algebra[value(a)]++;
  for (RootId a : p.dual_roots()) dual[value(a)]++;
  algebra[Rat(0)] += p.dim_h();
  dual[Rat(0)] += p.dim_h();

  for (const auto& hs : c.heisenberg)
    for (RootId a : hs.members) prime[value(a)]++;  // O and S together
  for (RootId a : c.T_star) prime[value(a)]++;
  prime[Rat(0)] += p.dim_h();

  SpectrumTables out;
  out.m_prime.assign(prime.begin(), prime.end());
  out.m_algebra.assign(algebra.begin(), algebra.end());
  out.m_dual.assign(dual.begin(), dual.end());
  out.mult_ok = true;
  for (const auto& [lambda, m] : prime)
    if (m > out.algebra_at(lambda + 1)) out.mult_ok = false;
  return out;
}

}  // namespace padapt
