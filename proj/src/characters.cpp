#include "padapt/characters.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "padapt/linalg.hpp"

namespace padapt {

WeightMultiset canonical(WeightMultiset m) {
  std::sort(m.begin(), m.end());
  return m;
}

std::string orbit_label(const std::vector<int>& orbit) {
  std::ostringstream os;
  os << "{";
  for (std::size_t k = 0; k < orbit.size(); ++k)
    os << (k ? "," : "") << "a" << orbit[k];
  os << "}";
  return os.str();
}

namespace {

bool nat_member_search(const std::vector<RatVec>& gens, RatVec d, int bound) {
  std::size_t idx = d.size();
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (d[k] < 0) return false;
    if (d[k] > 0 && idx == d.size()) idx = k;
  }
  if (idx == d.size()) return true;
  for (const auto& g : gens) {
    if (g[idx] == 0) continue;
    RatVec rem = d;
    bool feasible = true;
    for (int mult = 1; mult <= bound && feasible; ++mult) {
      feasible = true;
      for (std::size_t k = 0; k < rem.size(); ++k) {
        rem[k] -= g[k];
        if (rem[k] < 0) feasible = false;
      }
      if (feasible && nat_member_search(gens, rem, bound)) return true;
    }
  }
  return false;
}

}  // namespace

BoundsContext::BoundsContext(const TruncatedParabolic& p) : p_(&p) {
  const auto& rs = p.roots();
  const auto& spec = rs.spec();
  const int n = rs.rank();
  i_ = involution_i(p);
  j_ = involution_j(spec);
  orbits_ = ij_orbits(p);

  // Fundamental weights of the Levi: solve against the pi' Cartan matrix.
  {
    std::vector<int> idx(p.pi_prime().begin(), p.pi_prime().end());
    const std::size_t k = idx.size();
    Mat cartan(k, RatVec(k));
    for (std::size_t a = 0; a < k; ++a) {
      CartanElt cor = rs.coroot(rs.simple_roots()[idx[a] - 1]);
      for (std::size_t b = 0; b < k; ++b) {
        const auto& beta = rs.root(rs.simple_roots()[idx[b] - 1]);
        WeightVec bw(n);
        for (int t = 0; t < n; ++t) bw[t] = beta[t];
        cartan[a][b] = RootSystem::pairing(bw, cor);
      }
    }
    for (std::size_t g = 0; g < k; ++g) {
      RatVec e(k, Rat(0));
      e[g] = 1;
      auto c = solve(cartan, e);
      if (!c) throw std::logic_error("pi' Cartan matrix singular");
      WeightVec w = zero_vec(n);
      for (std::size_t b = 0; b < k; ++b) {
        const auto& beta = rs.root(rs.simple_roots()[idx[b] - 1]);
        for (int t = 0; t < n; ++t) w[t] += (*c)[b] * Rat(beta[t]);
      }
      levi_weights_[idx[g]] = std::move(w);
    }
  }

  // Components of pi' in diagram order: consecutive indices are adjacent
  // except across the D fork, where alpha_n attaches to alpha_{n-2}.
  {
    std::set<int> left(p.pi_prime().begin(), p.pi_prime().end());
    auto adjacent = [&spec](int a, int b) {
      if (a > b) std::swap(a, b);
      if (spec.family == Family::D) {
        if (a == spec.n - 1 && b == spec.n) return false;
        if (a == spec.n - 2 && b == spec.n) return true;
        return b == a + 1 && b <= spec.n - 1;
      }
      return b == a + 1;
    };
    while (!left.empty()) {
      std::vector<int> comp{*left.begin()};
      left.erase(left.begin());
      bool grew = true;
      while (grew) {
        grew = false;
        for (auto it = left.begin(); it != left.end(); ++it) {
          bool touches = false;
          for (int x : comp)
            if (adjacent(x, *it)) touches = true;
          if (touches) {
            comp.push_back(*it);
            left.erase(it);
            grew = true;
            break;
          }
        }
      }
      std::sort(comp.begin(), comp.end());
      const int r = static_cast<int>(comp.size());
      char type = 'A';
      if (spec.family == Family::D && r >= 3 && comp[r - 1] == n && comp[r - 2] == n - 1)
        type = 'D';
      else if ((spec.family == Family::B || spec.family == Family::C) &&
               comp[r - 1] == n)
        type = family_letter(spec.family);
      for (int pos = 1; pos <= r; ++pos) comp_[comp[pos - 1]] = Comp{type, r, pos};
    }
  }

  // Semigroup generators, ambient side.
  {
    std::set<RatVec> gens;
    for (int k = 1; k <= n; ++k) {
      Level lv = ambient_level(k);
      RatVec g(n, Rat(0));
      if (lv.fundamental) {
        g[k - 1] = 1;
      } else {
        g[k - 1] += 1;
        g[lv.iota - 1] += 1;
      }
      gens.insert(g);
    }
    ambient_gens_.assign(gens.begin(), gens.end());
  }
  // Semigroup generators, Levi side.
  {
    std::set<std::map<int, Rat>> gens;
    for (int gamma : p.pi_prime()) {
      Level lv = levi_level(gamma);
      std::map<int, Rat> g;
      if (lv.fundamental) {
        g[gamma] = 1;
      } else {
        g[gamma] += 1;
        g[lv.iota] += 1;
      }
      gens.insert(g);
    }
    levi_gens_.assign(gens.begin(), gens.end());
  }
}

const WeightVec& BoundsContext::levi_weight(int gamma) const {
  auto it = levi_weights_.find(gamma);
  if (it == levi_weights_.end())
    throw std::invalid_argument("levi_weight: index not in pi'");
  return it->second;
}

WeightVec BoundsContext::delta_weight(int orbit) const {
  const auto& rs = p_->roots();
  const auto& gamma_set = orbits_.orbits[orbit];
  WeightVec w = zero_vec(rs.rank());
  for (int g : gamma_set) {
    w = sub(w, rs.fundamental_weight(g - 1));
    w = sub(w, rs.fundamental_weight(j_[g] - 1));
  }
  for (int g : gamma_set) {
    if (!p_->in_pi_prime(g)) continue;
    w = add(w, levi_weight(g));
    w = add(w, levi_weight(i_[g]));
  }
  return w;
}

BoundsContext::Level BoundsContext::ambient_level(int k) const {
  const auto& spec = p_->roots().spec();
  const int n = spec.n;
  Level lv;
  lv.iota = j_[k];
  switch (spec.family) {
    case Family::B:
      if (k < n && k % 2 == 0) {
        lv.fundamental = true;
        lv.degree = k / 2;
      } else if (k < n) {
        lv.degree = k + 1;
      } else {
        lv.degree = (n + 1) / 2;
      }
      break;
    case Family::C:
      lv.degree = k;
      break;
    case Family::D:
      if (k <= n - 2 && k % 2 == 0) {
        lv.fundamental = true;
        lv.degree = k / 2;
      } else if (k <= n - 2) {
        lv.degree = k + 1;
      } else {
        lv.degree = n / 2;
      }
      break;
  }
  return lv;
}

BoundsContext::Level BoundsContext::levi_level(int gamma) const {
  auto it = comp_.find(gamma);
  if (it == comp_.end()) throw std::invalid_argument("levi_level: index not in pi'");
  const Comp& c = it->second;
  Level lv;
  lv.iota = i_[gamma];
  switch (c.type) {
    case 'A':
      lv.degree = std::min(c.pos, c.size + 1 - c.pos);
      break;
    case 'B':
      if (c.pos < c.size && c.pos % 2 == 0) {
        lv.fundamental = true;
        lv.degree = c.pos / 2;
      } else if (c.pos < c.size) {
        lv.degree = c.pos + 1;
      } else {
        lv.degree = (c.size + 1) / 2;
      }
      break;
    case 'C':
      lv.degree = c.pos;
      break;
    case 'D':
      if (c.pos <= c.size - 2 && c.pos % 2 == 0) {
        lv.fundamental = true;
        lv.degree = c.pos / 2;
      } else if (c.pos <= c.size - 2) {
        lv.degree = c.pos + 1;
      } else {
        lv.degree = c.size / 2;
      }
      break;
  }
  return lv;
}

bool BoundsContext::ambient_semigroup_member(const RatVec& fund) const {
  for (const auto& x : fund)
    if (!is_integer(x)) return false;
  return nat_member_search(ambient_gens_, fund, kWeightSemigroupSearchBound);
}

bool BoundsContext::levi_semigroup_member(const std::map<int, Rat>& by_index) const {
  // Flatten to vectors over the pi' indices.
  std::vector<int> idx(p_->pi_prime().begin(), p_->pi_prime().end());
  auto flatten = [&idx](const std::map<int, Rat>& m) {
    RatVec v(idx.size(), Rat(0));
    for (std::size_t k = 0; k < idx.size(); ++k) {
      auto it = m.find(idx[k]);
      if (it != m.end()) v[k] = it->second;
    }
    return v;
  };
  RatVec d = flatten(by_index);
  for (const auto& x : d)
    if (!is_integer(x)) return false;
  std::vector<RatVec> gens;
  gens.reserve(levi_gens_.size());
  for (const auto& g : levi_gens_) gens.push_back(flatten(g));
  return nat_member_search(gens, d, kWeightSemigroupSearchBound);
}

Rat BoundsContext::epsilon_gamma(int orbit) const {
  if (!orbits_.j_stable[orbit]) return Rat(1);
  const auto& gamma_set = orbits_.orbits[orbit];
  RatVec d(p_->roots().rank(), Rat(0));
  for (int g : gamma_set) d[g - 1] += 1;
  if (!ambient_semigroup_member(d)) return Rat(1);
  std::map<int, Rat> dp;
  for (int g : gamma_set)
    if (p_->in_pi_prime(g)) dp[g] += 1;
  if (!levi_semigroup_member(dp)) return Rat(1);
  return Rat(1, 2);
}

std::vector<GeneratorDatum> BoundsContext::generator_degree(int orbit) const {
  if (epsilon_gamma(orbit) != 1)
    throw std::invalid_argument(
        "generator degrees by orbit need epsilon = 1; use the improved bound");
  const auto& rs = p_->roots();
  const auto& gamma_set = orbits_.orbits[orbit];
  WeightVec delta = delta_weight(orbit);
  RatVec fund = rs.to_fundamental(delta);

  if (orbits_.j_stable[orbit]) {
    int degree = 0;
    for (int g : gamma_set) {
      Level lv = ambient_level(g);
      degree += lv.fundamental ? 2 * lv.degree : lv.degree;
    }
    for (int g : gamma_set) {
      if (!p_->in_pi_prime(g)) continue;
      Level lv = levi_level(g);
      degree += lv.fundamental ? 2 * lv.degree : lv.degree;
    }
    return {GeneratorDatum{orbit_label(gamma_set), delta, fund, degree}};
  }

  // Split orbit: a singleton deleted root moved by i.  The pair of
  // generators shares the weight; the orbit containing alpha_{n-1} carries
  // the lower degree.
  if (gamma_set.size() != 1 || p_->in_pi_prime(gamma_set[0]))
    throw std::logic_error("unexpected non-j-stable orbit shape");
  const int a = gamma_set[0];
  if (i_[a] == a) throw std::logic_error("split orbit with i fixing the root");
  Level lv = ambient_level(a);
  int base = lv.degree;
  int degree = (a == p_->roots().rank() - 1) ? base : base + 1;
  return {GeneratorDatum{orbit_label(gamma_set), delta, fund, degree}};
}

WeightMultiset BoundsContext::lower_bound() const {
  const auto& rs = p_->roots();
  WeightMultiset m;
  for (std::size_t k = 0; k < orbits_.orbits.size(); ++k)
    m.push_back(rs.to_fundamental(delta_weight(static_cast<int>(k))));
  return canonical(std::move(m));
}

WeightMultiset BoundsContext::upper_bound() const {
  const auto& rs = p_->roots();
  WeightMultiset m;
  for (std::size_t k = 0; k < orbits_.orbits.size(); ++k) {
    RatVec f = rs.to_fundamental(delta_weight(static_cast<int>(k)));
    Rat eps = epsilon_gamma(static_cast<int>(k));
    if (eps != 1)
      for (auto& x : f) x *= eps;
    m.push_back(std::move(f));
  }
  return canonical(std::move(m));
}

int BoundsContext::epsilon_half_count() const {
  int c = 0;
  for (std::size_t k = 0; k < orbits_.orbits.size(); ++k)
    if (epsilon_gamma(static_cast<int>(k)) != 1) ++c;
  return c;
}

ImprovedBound BoundsContext::improved_upper_bound(const AdaptedCandidate& c) const {
  const auto& rs = p_->roots();
  auto S = c.S();
  const std::size_t k = p_->h_basis().size();
  if (S.size() != k)
    throw std::invalid_argument("improved bound needs |S| = dim h_Lambda");

  Mat m(k, RatVec(k));
  for (std::size_t v = 0; v < k; ++v)
    for (std::size_t u = 0; u < k; ++u) {
      WeightVec w(rs.rank());
      for (int t = 0; t < rs.rank(); ++t) w[t] = rs.root(S[u])[t];
      m[v][u] = RootSystem::pairing(w, p_->h_basis()[v]);
    }

  ImprovedBound out;
  out.all_coeffs_natural = true;
  for (RootId gamma : c.T) {
    RatVec rhs(k);
    WeightVec gw(rs.rank());
    for (int t = 0; t < rs.rank(); ++t) gw[t] = rs.root(gamma)[t];
    for (std::size_t v = 0; v < k; ++v)
      rhs[v] = -RootSystem::pairing(gw, p_->h_basis()[v]);
    auto coeffs = solve(m, rhs);
    if (!coeffs)
      throw std::invalid_argument("improved bound: restriction of S singular");

    ImprovedBoundRow row;
    row.gamma = gamma;
    row.s_coeffs = *coeffs;
    WeightVec total = gw;
    Rat size(0);
    row.coeffs_natural = true;
    for (std::size_t u = 0; u < k; ++u) {
      const Rat& cu = (*coeffs)[u];
      size += cu;
      if (cu != 0) {
        WeightVec su(rs.rank());
        for (int t = 0; t < rs.rank(); ++t) su[t] = rs.root(S[u])[t];
        total = add(total, scale(cu, su));
      }
      if (!is_integer(cu) || cu < 0) row.coeffs_natural = false;
    }
    if (!row.coeffs_natural) out.all_coeffs_natural = false;
    row.weight = scale(Rat(-1), total);
    if (!is_integer(size))
      throw std::logic_error("non-integral coefficient sum in the improved bound");
    row.degree = 1 + static_cast<int>(size.get_num().get_si());
    out.multiset.push_back(rs.to_fundamental(row.weight));
    out.rows.push_back(std::move(row));
  }
  out.multiset = canonical(std::move(out.multiset));
  return out;
}

Verdict BoundsContext::weierstrass_verdict(bool adapted_pair_ok,
                                           const ImprovedBound* ib) const {
  Verdict v;
  if (!adapted_pair_ok) return v;
  if (epsilon_half_count() == 0) {
    v.exists = true;
    v.route = Route::A;
    return v;
  }
  if (ib && canonical(ib->multiset) == lower_bound()) {
    v.exists = true;
    v.route = Route::B;
  }
  return v;
}

std::vector<GeneratorDatum> BoundsContext::weight_degree_table(
    Route route, const ImprovedBound* ib) const {
  const auto& rs = p_->roots();
  std::vector<GeneratorDatum> rows;
  if (route == Route::A) {
    for (std::size_t k = 0; k < orbits_.orbits.size(); ++k) {
      auto data = generator_degree(static_cast<int>(k));
      rows.insert(rows.end(), data.begin(), data.end());
    }
    return rows;
  }
  if (route == Route::B) {
    if (!ib) throw std::invalid_argument("route B table needs the improved bound");
    for (const auto& row : ib->rows)
      rows.push_back(GeneratorDatum{rs.root_str(row.gamma), row.weight,
                                    rs.to_fundamental(row.weight), row.degree});
    return rows;
  }
  throw std::invalid_argument("no table for an inconclusive case");
}

BoundsContext::DegreeSum BoundsContext::degree_sum_check(Route route,
                                                         const ImprovedBound* ib) const {
  DegreeSum out;
  out.magic = magic_number(*p_);
  out.sum = 0;
  for (const auto& row : weight_degree_table(route, ib)) out.sum += row.degree;
  out.equal = out.sum == out.magic;
  return out;
}

}  // namespace padapt
