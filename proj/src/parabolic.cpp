#include "padapt/parabolic.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "padapt/linalg.hpp"

namespace padapt {

namespace {

std::set<int> progression(int s, int ell) {
  std::set<int> out;
  for (int k = 0; k <= ell; ++k) out.insert(s + 2 * k);
  return out;
}

[[noreturn]] void reject(const std::string& what) {
  throw std::invalid_argument(what);
}

}  // namespace

std::string recipe_name(Recipe c) {
  switch (c) {
    case Recipe::None: return "none";
    case Recipe::B_odd: return "B s odd";
    case Recipe::D_odd: return "D s odd";
    case Recipe::B_even: return "B s even l=1";
    case Recipe::D_even: return "D s even l=1";
    case Recipe::C_all: return "C";
    case Recipe::D_pl_even: return "D even p_l";
    case Recipe::D_p0_odd: return "D odd p_0";
    case Recipe::D_p1_odd: return "D odd p_1";
    case Recipe::D_q_odd: return "D odd q_{s,l}";
  }
  return "?";
}

std::string ParabolicCase::label() const {
  std::ostringstream os;
  os << family_letter(family) << n << " ";
  switch (kind) {
    case CaseKind::PSL: os << "p_{" << s << "," << ell << "}"; break;
    case CaseKind::PL: os << "p_" << ell; break;
    case CaseKind::QSL: os << "q_{" << s << "," << ell << "}"; break;
    case CaseKind::RAW: {
      os << "raw{";
      bool first = true;
      for (int d : deleted) {
        if (!first) os << ",";
        os << d;
        first = false;
      }
      os << "}";
      break;
    }
  }
  return os.str();
}

ParabolicCase make_psl(Family family, int n, int s, int ell) {
  RootSystemSpec{family, n}.validate();
  ParabolicCase pc;
  pc.family = family;
  pc.n = n;
  pc.kind = CaseKind::PSL;
  pc.s = s;
  pc.ell = ell;
  if (s < 1 || ell < 0 || s + 2 * ell > n)
    reject("p_{s,l} requires 1 <= s and s+2l <= n");
  switch (family) {
    case Family::B:
      if (s % 2 == 1) {
        if (ell < 1) reject("B with s odd requires l >= 1 (l=0 is out of scope)");
        pc.recipe = Recipe::B_odd;
      } else {
        if (ell != 1) reject("B with s even requires l = 1");
        if (n < 4) reject("B with s even requires n >= 4");
        if (s > n - 2) reject("B with s even requires s <= n-2");
        pc.recipe = Recipe::B_even;
      }
      break;
    case Family::C:
      if (n < 3) reject("C requires n >= 3");
      if (ell < 1) reject("C requires l >= 1 (l=0 is out of scope)");
      pc.recipe = Recipe::C_all;
      break;
    case Family::D:
      if (s % 2 == 1) {
        if (ell < 1) reject("D with s odd requires l >= 1 (l=0 is out of scope)");
        pc.recipe = Recipe::D_odd;
      } else {
        if (ell != 1) reject("D with s even requires l = 1");
        if (n < 6) reject("D with s even requires n >= 6");
        if (s > n - 4) reject("D with s even requires s <= n-4");
        pc.recipe = Recipe::D_even;
      }
      break;
  }
  pc.deleted = progression(s, ell);
  // Symmetric D sub-case: when alpha_{n-1} is deleted but alpha_n is not,
  // apply the diagram swap so that alpha_n is the deleted fork root.
  if (family == Family::D && pc.deleted.count(n - 1) && !pc.deleted.count(n)) {
    pc.deleted.erase(n - 1);
    pc.deleted.insert(n);
    pc.canonicalized = true;
  }
  return pc;
}

ParabolicCase make_pl(int n, int ell) {
  RootSystemSpec{Family::D, n}.validate();
  ParabolicCase pc;
  pc.family = Family::D;
  pc.n = n;
  pc.kind = CaseKind::PL;
  pc.ell = ell;
  if (ell < 0 || 2 * ell > n - 2) reject("p_l requires 0 <= l <= (n-2)/2");
  if (n % 2 == 0) {
    pc.recipe = Recipe::D_pl_even;
  } else {
    if (n < 5) reject("p_l with n odd requires n >= 5");
    if (ell == 0)
      pc.recipe = Recipe::D_p0_odd;
    else if (ell == 1)
      pc.recipe = Recipe::D_p1_odd;
    else
      reject("p_l with n odd requires l <= 1");
  }
  for (int k = 0; k <= ell; ++k) pc.deleted.insert(n - 1 - 2 * k);
  pc.deleted.insert(n);
  return pc;
}

ParabolicCase make_qsl(int n, int s, int ell) {
  RootSystemSpec{Family::D, n}.validate();
  ParabolicCase pc;
  pc.family = Family::D;
  pc.n = n;
  pc.kind = CaseKind::QSL;
  pc.s = s;
  pc.ell = ell;
  if (n % 2 == 0 || n < 5) reject("q_{s,l} requires n odd, n >= 5");
  if (s % 2 == 0) reject("q_{s,l} requires s odd");
  if (s < 1 || ell < 0 || s + 2 * ell > n - 2) reject("q_{s,l} requires s+2l <= n-2");
  pc.recipe = Recipe::D_q_odd;
  pc.deleted = progression(s, ell);
  pc.deleted.insert(n - 1);
  pc.deleted.insert(n);
  return pc;
}

ParabolicCase make_raw(Family family, int n, std::set<int> deleted) {
  RootSystemSpec{family, n}.validate();
  for (int d : deleted)
    if (d < 1 || d > n) reject("deleted index out of range");
  ParabolicCase pc;
  pc.family = family;
  pc.n = n;
  pc.kind = CaseKind::RAW;
  pc.deleted = deleted;

  // Recognize the named shapes so the raw entry point can run full recipes.
  auto try_named = [&](const ParabolicCase& named) {
    if (named.deleted == pc.deleted) {
      pc.kind = named.kind;
      pc.s = named.s;
      pc.ell = named.ell;
      pc.recipe = named.recipe;
      pc.canonicalized = named.canonicalized;
      return true;
    }
    return false;
  };
  if (deleted.empty()) return pc;
  const int lo = *deleted.begin();
  const int sz = static_cast<int>(deleted.size());
  try {
    if (try_named(make_psl(family, n, lo, sz - 1))) return pc;
  } catch (const std::invalid_argument&) {
  }
  if (family == Family::D) {
    // Non-canonical PSL form with alpha_{n-1} as the last deleted root.
    if (deleted.count(n - 1) && !deleted.count(n)) {
      std::set<int> swapped = deleted;
      swapped.erase(n - 1);
      swapped.insert(n);
      ParabolicCase alt = make_raw(family, n, swapped);
      if (alt.kind == CaseKind::PSL) {
        alt.canonicalized = true;
        return alt;
      }
    }
    try {
      if (try_named(make_pl(n, sz - 2))) return pc;
    } catch (const std::invalid_argument&) {
    }
    if (deleted.count(n - 1) && deleted.count(n) && sz >= 3) {
      try {
        if (try_named(make_qsl(n, lo, sz - 3))) return pc;
      } catch (const std::invalid_argument&) {
      }
    }
  }
  return pc;
}

TruncatedParabolic::TruncatedParabolic(RootSystemPtr rs, std::set<int> pi_prime)
    : rs_(std::move(rs)), pi_prime_(std::move(pi_prime)) {
  const int n = rs_->rank();
  for (int i = 1; i <= n; ++i)
    if (!pi_prime_.count(i)) deleted_.insert(i);

  for (RootId id = 0; id < rs_->num_roots(); ++id) {
    const auto& sc = rs_->simple_coords(id);
    bool in_span = true;
    for (int i = 0; i < n; ++i)
      if (sc[i] != 0 && !pi_prime_.count(i + 1)) in_span = false;
    if (in_span && rs_->is_positive(id)) dp_pi_prime_.push_back(id);
  }

  alg_mask_.assign(rs_->num_roots(), 0);
  dual_mask_.assign(rs_->num_roots(), 0);
  for (RootId id = 0; id < rs_->num_positive(); ++id) {
    dual_mask_[id] = 1;                       // Delta^+
    alg_mask_[rs_->negate(id)] = 1;           // Delta^-
  }
  for (RootId id : dp_pi_prime_) {
    alg_mask_[id] = 1;                        // Delta^+_{pi'}
    dual_mask_[rs_->negate(id)] = 1;          // Delta^-_{pi'}
  }
  for (RootId id = 0; id < rs_->num_roots(); ++id) {
    if (alg_mask_[id]) algebra_roots_.push_back(id);
    if (dual_mask_[id]) dual_roots_.push_back(id);
  }

  for (int i : pi_prime_) h_basis_.push_back(rs_->coroot(rs_->simple_roots()[i - 1]));
  if (rs_->spec().family == Family::D && n % 2 == 1 && !pi_prime_.count(n - 1) &&
      !pi_prime_.count(n)) {
    // The extra line alpha_n^vee - alpha_{n-1}^vee = 2 e_n.
    CartanElt extra = zero_vec(n);
    extra[n - 1] = 2;
    h_basis_.push_back(extra);
    has_fork_line_ = true;
  }

  dim_ = static_cast<int>(algebra_roots_.size() + h_basis_.size());

  // Inverse Gram for projections/expansions.
  const std::size_t k = h_basis_.size();
  Mat gram(k, RatVec(k));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) gram[a][b] = dot(h_basis_[a], h_basis_[b]);
  gram_inv_.assign(k, RatVec(k, Rat(0)));
  for (std::size_t c = 0; c < k; ++c) {
    RatVec e(k, Rat(0));
    e[c] = 1;
    auto col = solve(gram, e);
    if (!col) throw std::logic_error("singular h_Lambda Gram matrix");
    for (std::size_t r = 0; r < k; ++r) gram_inv_[r][c] = (*col)[r];
  }
}

CartanElt TruncatedParabolic::project_h_lambda(const CartanElt& v) const {
  const std::size_t k = h_basis_.size();
  RatVec rhs(k);
  for (std::size_t a = 0; a < k; ++a) rhs[a] = dot(h_basis_[a], v);
  CartanElt out = zero_vec(rs_->rank());
  for (std::size_t a = 0; a < k; ++a) {
    Rat c(0);
    for (std::size_t b = 0; b < k; ++b) c += gram_inv_[a][b] * rhs[b];
    if (c != 0) out = add(out, scale(c, h_basis_[a]));
  }
  return out;
}

std::optional<RatVec> TruncatedParabolic::expand_h_lambda(const CartanElt& v) const {
  const std::size_t k = h_basis_.size();
  RatVec rhs(k);
  for (std::size_t a = 0; a < k; ++a) rhs[a] = dot(h_basis_[a], v);
  RatVec c(k, Rat(0));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) c[a] += gram_inv_[a][b] * rhs[b];
  CartanElt rec = zero_vec(rs_->rank());
  for (std::size_t a = 0; a < k; ++a)
    if (c[a] != 0) rec = add(rec, scale(c[a], h_basis_[a]));
  if (rec != v) return std::nullopt;
  return c;
}

TruncatedParabolic build_truncation(const ParabolicCase& pc, RootSystemPtr rs) {
  if (rs->spec().family != pc.family || rs->rank() != pc.n)
    throw std::invalid_argument("root system does not match the case");
  std::set<int> pi_prime;
  for (int i = 1; i <= pc.n; ++i)
    if (!pc.deleted.count(i)) pi_prime.insert(i);
  return TruncatedParabolic(rs, std::move(pi_prime));
}

std::vector<int> involution_j(const RootSystemSpec& spec) {
  std::vector<int> j(spec.n + 1);
  for (int i = 1; i <= spec.n; ++i) j[i] = i;
  if (spec.family == Family::D && spec.n % 2 == 1) {
    j[spec.n - 1] = spec.n;
    j[spec.n] = spec.n - 1;
  }
  return j;
}

namespace {

// Dynkin-diagram adjacency on simple-root indices.
bool adjacent(const RootSystemSpec& spec, int a, int b) {
  if (a > b) std::swap(a, b);
  if (spec.family == Family::D) {
    if (a == spec.n - 1 && b == spec.n) return false;
    if (a == spec.n - 2 && b == spec.n) return true;
    return b == a + 1 && b <= spec.n - 1;
  }
  return b == a + 1;
}

std::vector<std::vector<int>> diagram_components(const RootSystemSpec& spec,
                                                 const std::set<int>& pi_prime) {
  std::vector<std::vector<int>> comps;
  std::set<int> seen;
  for (int start : pi_prime) {
    if (seen.count(start)) continue;
    std::vector<int> stack{start}, comp;
    seen.insert(start);
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      for (int y : pi_prime)
        if (!seen.count(y) && adjacent(spec, x, y)) {
          seen.insert(y);
          stack.push_back(y);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  std::sort(comps.begin(), comps.end());
  return comps;
}

}  // namespace

std::vector<int> involution_i(const TruncatedParabolic& p) {
  const auto& spec = p.roots().spec();
  const int n = spec.n;
  const auto j = involution_j(spec);
  std::vector<int> i(n + 1);
  for (int a = 1; a <= n; ++a) i[a] = a;

  // -w_0' per connected component of pi'.
  for (const auto& comp : diagram_components(spec, p.pi_prime())) {
    const int r = static_cast<int>(comp.size());
    bool has_fork_pair = spec.family == Family::D &&
                         std::count(comp.begin(), comp.end(), n - 1) &&
                         std::count(comp.begin(), comp.end(), n);
    if (has_fork_pair) {
      if (r % 2 == 1) {
        i[n - 1] = n;
        i[n] = n - 1;
      }
      continue;
    }
    bool bc_tail = (spec.family == Family::B || spec.family == Family::C) &&
                   std::count(comp.begin(), comp.end(), n);
    if (bc_tail) continue;  // -w_0 of B_r / C_r is the identity
    if (r == 1) continue;
    // Type A chain: order along the diagram and reverse.
    std::vector<int> chain;
    int end = -1;
    for (int a : comp) {
      int deg = 0;
      for (int b : comp)
        if (b != a && adjacent(spec, a, b)) ++deg;
      if (deg <= 1 && end < 0) end = a;
    }
    chain.push_back(end);
    while (static_cast<int>(chain.size()) < r) {
      int last = chain.back();
      for (int b : comp) {
        if (std::count(chain.begin(), chain.end(), b)) continue;
        if (adjacent(spec, last, b)) {
          chain.push_back(b);
          break;
        }
      }
    }
    for (int k = 0; k < r; ++k) i[chain[k]] = chain[r - 1 - k];
  }

  // Deleted roots: iterate j(ij)^r until the image leaves pi'.
  for (int a : p.deleted()) {
    int x = j[a];
    int guard = 0;
    while (p.in_pi_prime(x)) {
      x = j[i[x]];
      if (++guard > n + 1)
        throw std::logic_error("involution iteration failed to terminate");
    }
    i[a] = x;
  }

  for (int a = 1; a <= n; ++a)
    if (i[i[a]] != a) throw std::logic_error("i is not an involution");
  return i;
}

OrbitSet ij_orbits(const TruncatedParabolic& p) {
  const int n = p.roots().rank();
  const auto j = involution_j(p.roots().spec());
  const auto i = involution_i(p);
  std::vector<int> ij(n + 1);
  for (int a = 1; a <= n; ++a) ij[a] = i[j[a]];

  OrbitSet out;
  std::vector<char> seen(n + 1, 0);
  for (int a = 1; a <= n; ++a) {
    if (seen[a]) continue;
    std::vector<int> orbit;
    int x = a;
    while (!seen[x]) {
      seen[x] = 1;
      orbit.push_back(x);
      x = ij[x];
    }
    std::sort(orbit.begin(), orbit.end());
    out.orbits.push_back(orbit);
  }
  std::sort(out.orbits.begin(), out.orbits.end());
  out.j_stable.resize(out.orbits.size());
  for (std::size_t k = 0; k < out.orbits.size(); ++k) {
    auto img = out.orbits[k];
    for (int& x : img) x = j[x];
    std::sort(img.begin(), img.end());
    out.j_stable[k] = (img == out.orbits[k]) ? 1 : 0;
  }
  return out;
}

int index_by_orbits(const TruncatedParabolic& p) {
  return static_cast<int>(ij_orbits(p).orbits.size());
}

namespace {

struct SplitMix {
  unsigned long long state;
  explicit SplitMix(unsigned long long seed) : state(seed) {}
  unsigned long long next() {
    state += 0x9E3779B97F4A7C15ull;
    unsigned long long z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  // Nonzero integer in [-10^4, 10^4].
  long small_int() {
    long v = static_cast<long>(next() % 20001ull) - 10000;
    return v == 0 ? 1 : v;
  }
};

}  // namespace

int index_oracle(const TruncatedParabolic& p, const MatrixRealization& real,
                 unsigned long seed) {
  const auto& rs = p.roots();
  const auto& alg = p.algebra_roots();
  const int nroots = static_cast<int>(alg.size());
  const int nh = p.dim_h();
  const int N = nroots + nh;

  // xi assigns a deterministic small integer to each basis vector of p_Lambda.
  SplitMix rng(seed);
  RatVec xi(N);
  for (int k = 0; k < N; ++k) xi[k] = Rat(rng.small_int());

  // Value of xi on an element of p_Lambda.
  std::vector<int> slot(rs.num_roots(), -1);
  for (int k = 0; k < nroots; ++k) slot[alg[k]] = k;
  auto xi_of = [&](const LieElt& z) {
    Rat v(0);
    for (const auto& [rid, c] : z.root_part) {
      if (slot[rid] < 0) throw std::logic_error("bracket left p_Lambda");
      v += c * xi[slot[rid]];
    }
    if (!is_zero_vec(z.cartan_part)) {
      auto coords = p.expand_h_lambda(z.cartan_part);
      if (!coords) throw std::logic_error("bracket Cartan part left h_Lambda");
      for (int k = 0; k < nh; ++k) v += (*coords)[k] * xi[nroots + k];
    }
    return v;
  };

  std::vector<LieElt> basis;
  basis.reserve(N);
  for (int k = 0; k < nroots; ++k) basis.push_back(real.root_elt(alg[k]));
  for (int k = 0; k < nh; ++k) basis.push_back(real.cartan_elt(p.h_basis()[k]));

  Mat a(N, RatVec(N, Rat(0)));
  for (int r = 0; r < N; ++r)
    for (int c = r + 1; c < N; ++c) {
      Rat v = xi_of(real.bracket(basis[r], basis[c]));
      a[r][c] = v;
      a[c][r] = -v;
    }
  return N - static_cast<int>(rank_of(std::move(a)));
}

Rat magic_number(const TruncatedParabolic& p) {
  Rat c = Rat(p.dim() + index_by_orbits(p)) / 2;
  if (!is_integer(c)) throw std::logic_error("magic number is not an integer");
  return c;
}

LieElt coadjoint(const TruncatedParabolic& p, const MatrixRealization& real,
                 const LieElt& x, const LieElt& y) {
  const auto& rs = p.roots();
  for (const auto& [rid, c] : x.root_part)
    if (!p.is_algebra_root(rid))
      throw std::invalid_argument("coadjoint: x not supported on p_Lambda at " +
                                  rs.root_str(rid));
  if (!is_zero_vec(x.cartan_part) && !p.expand_h_lambda(x.cartan_part))
    throw std::invalid_argument("coadjoint: Cartan part of x outside h_Lambda");
  for (const auto& [rid, c] : y.root_part)
    if (!p.is_dual_root(rid))
      throw std::invalid_argument("coadjoint: y not supported on the dual model at " +
                                  rs.root_str(rid));
  if (!is_zero_vec(y.cartan_part) && !p.expand_h_lambda(y.cartan_part))
    throw std::invalid_argument("coadjoint: Cartan part of y outside h_Lambda");

  LieElt z = real.bracket(x, y);
  LieElt out(rs.rank());
  for (const auto& [rid, c] : z.root_part)
    if (p.is_dual_root(rid)) out.add_root(rid, c);
  out.cartan_part = p.project_h_lambda(z.cartan_part);
  return out;
}

}  // namespace padapt
