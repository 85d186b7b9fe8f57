#include "padapt/rootsys.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "padapt/linalg.hpp"

namespace padapt {

char family_letter(Family f) {
  switch (f) {
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
  }
  return '?';
}

Family family_from_letter(char c) {
  switch (c) {
    case 'B': case 'b': return Family::B;
    case 'C': case 'c': return Family::C;
    case 'D': case 'd': return Family::D;
  }
  throw std::invalid_argument("unknown family letter");
}

void RootSystemSpec::validate() const {
  switch (family) {
    case Family::B:
      if (n < 2) throw std::invalid_argument("type B requires rank n >= 2");
      break;
    case Family::C:
      if (n < 2) throw std::invalid_argument("type C requires rank n >= 2");
      break;
    case Family::D:
      if (n < 4) throw std::invalid_argument("type D requires rank n >= 4");
      break;
  }
}

RootSystem::RootSystem(RootSystemSpec spec) : spec_(spec) {
  spec_.validate();
  const int n = spec_.n;

  auto vec = [n](std::initializer_list<std::pair<int, int>> entries) {
    std::vector<int> v(n, 0);
    for (auto [i, c] : entries) v[i] = c;
    return v;
  };

  // Positive roots first.
  std::vector<std::vector<int>> pos;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pos.push_back(vec({{i, 1}, {j, -1}}));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pos.push_back(vec({{i, 1}, {j, 1}}));
  if (spec_.family == Family::B)
    for (int i = 0; i < n; ++i) pos.push_back(vec({{i, 1}}));
  if (spec_.family == Family::C)
    for (int i = 0; i < n; ++i) pos.push_back(vec({{i, 2}}));

  num_positive_ = static_cast<int>(pos.size());
  roots_ = pos;
  for (const auto& r : pos) {
    std::vector<int> neg(r);
    for (auto& x : neg) x = -x;
    roots_.push_back(std::move(neg));
  }

  index_.reserve(roots_.size());
  for (RootId id = 0; id < static_cast<int>(roots_.size()); ++id)
    index_.emplace_back(roots_[id], id);
  std::sort(index_.begin(), index_.end());

  // Simple roots, Bourbaki order.
  for (int i = 0; i + 1 < n; ++i) simple_.push_back(root_id(vec({{i, 1}, {i + 1, -1}})));
  switch (spec_.family) {
    case Family::B: simple_.push_back(root_id(vec({{n - 1, 1}}))); break;
    case Family::C: simple_.push_back(root_id(vec({{n - 1, 2}}))); break;
    case Family::D: simple_.push_back(root_id(vec({{n - 2, 1}, {n - 1, 1}}))); break;
  }

  // Fundamental weights.
  fundamental_.resize(n);
  for (int i = 0; i < n; ++i) {
    WeightVec w = zero_vec(n);
    for (int k = 0; k <= i; ++k) w[k] = 1;
    fundamental_[i] = w;
  }
  if (spec_.family == Family::B) {
    for (auto& x : fundamental_[n - 1]) x /= 2;
  } else if (spec_.family == Family::D) {
    WeightVec half = zero_vec(n);
    for (int k = 0; k < n; ++k) half[k] = Rat(1, 2);
    WeightVec spin_minus(half);
    spin_minus[n - 1] = Rat(-1, 2);
    fundamental_[n - 2] = spin_minus;
    fundamental_[n - 1] = half;
  }

  // Expansions of roots over the simple roots.
  Mat m(n, RatVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[j][i] = roots_[simple_[i]][j];
  simple_coords_.resize(roots_.size());
  for (RootId id = 0; id < static_cast<int>(roots_.size()); ++id) {
    RatVec b(n);
    for (int j = 0; j < n; ++j) b[j] = roots_[id][j];
    auto c = solve(m, b);
    if (!c) throw std::logic_error("simple-root matrix singular");
    for (const auto& x : *c)
      if (!is_integer(x)) throw std::logic_error("non-integral simple-root expansion");
    simple_coords_[id] = std::move(*c);
  }
}

std::optional<RootId> RootSystem::find_root(const std::vector<int>& coords) const {
  auto it = std::lower_bound(index_.begin(), index_.end(),
                             std::make_pair(coords, RootId(-1)));
  if (it != index_.end() && it->first == coords) return it->second;
  return std::nullopt;
}

RootId RootSystem::root_id(const std::vector<int>& coords) const {
  auto id = find_root(coords);
  if (!id) {
    std::ostringstream os;
    os << "not a root of " << family_letter(spec_.family) << spec_.n << ": (";
    for (std::size_t i = 0; i < coords.size(); ++i)
      os << (i ? "," : "") << coords[i];
    os << ")";
    throw std::invalid_argument(os.str());
  }
  return *id;
}

std::optional<RootId> RootSystem::add_roots(RootId a, RootId b) const {
  std::vector<int> s(roots_[a]);
  for (std::size_t i = 0; i < s.size(); ++i) s[i] += roots_[b][i];
  return find_root(s);
}

std::vector<RootId> RootSystem::positive_roots() const {
  std::vector<RootId> out(num_positive_);
  for (int i = 0; i < num_positive_; ++i) out[i] = i;
  return out;
}

CartanElt RootSystem::coroot(RootId id) const {
  const auto& r = roots_[id];
  long norm = 0;
  for (int x : r) norm += long(x) * x;
  CartanElt h(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) h[i] = rat(2 * long(r[i]), norm);
  return h;
}

Rat RootSystem::pairing(const WeightVec& w, const CartanElt& h) {
  if (w.size() != h.size()) throw std::invalid_argument("pairing: rank mismatch");
  return dot(w, h);
}

RatVec RootSystem::to_fundamental(const WeightVec& w) const {
  // c_i = (w, alpha_i^vee); exact inverse of expansion over the
  // fundamental weights.
  RatVec c(rank());
  for (int i = 0; i < rank(); ++i) c[i] = pairing(w, coroot(simple_[i]));
  return c;
}

WeightVec RootSystem::from_fundamental(const RatVec& c) const {
  WeightVec w = zero_vec(rank());
  for (int i = 0; i < rank(); ++i)
    if (c[i] != 0) w = add(w, scale(c[i], fundamental_[i]));
  return w;
}

Rat RootSystem::root_inner(RootId a, RootId b) const {
  long s = 0;
  for (std::size_t i = 0; i < roots_[a].size(); ++i)
    s += long(roots_[a][i]) * roots_[b][i];
  return Rat(s);
}

std::string RootSystem::root_str(RootId id) const {
  const auto& r = roots_[id];
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] == 0) continue;
    if (r[i] > 0 && !first) os << "+";
    if (r[i] == -1)
      os << "-";
    else if (r[i] != 1)
      os << r[i];
    os << "e" << (i + 1);
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::string RootSystem::weight_str(const WeightVec& w) const {
  RatVec c = to_fundamental(w);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (c[i] > 0 && !first) os << "+";
    if (c[i] == -1)
      os << "-";
    else if (c[i] != 1)
      os << rat_str(c[i]);
    os << "w" << (i + 1);
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

RootSystemPtr make_root_system(Family family, int n) {
  return std::make_shared<const RootSystem>(RootSystemSpec{family, n});
}

}  // namespace padapt
