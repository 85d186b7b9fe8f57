#include "padapt/liealg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace padapt {

namespace {

// Sparse product helper: entries of a*b for sparse integer matrices.
std::map<std::pair<int, int>, long> sparse_mul(const SparseIntMat& a,
                                               const SparseIntMat& b) {
  std::map<std::pair<int, int>, long> out;
  for (auto [i, k, va] : a.entries)
    for (auto [k2, j, vb] : b.entries)
      if (k == k2) out[{i, j}] += va * vb;
  return out;
}

std::map<std::pair<int, int>, long> commutator(const SparseIntMat& a,
                                               const SparseIntMat& b) {
  auto ab = sparse_mul(a, b);
  auto ba = sparse_mul(b, a);
  for (auto& [pos, v] : ba) ab[pos] -= v;
  for (auto it = ab.begin(); it != ab.end();)
    it = (it->second == 0) ? ab.erase(it) : std::next(it);
  return ab;
}

}  // namespace

MatrixRealization::MatrixRealization(RootSystemPtr rs) : rs_(std::move(rs)) {
  const int n = rs_->rank();
  const Family fam = rs_->spec().family;
  m_ = (fam == Family::B) ? 2 * n + 1 : 2 * n;
  const int M = m_;
  auto mirror = [M](int i) { return M + 1 - i; };  // 1-based

  root_mats_.resize(rs_->num_roots());
  for (RootId id = 0; id < rs_->num_roots(); ++id) {
    const auto& r = rs_->root(id);
    int i = -1, j = -1;  // 1-based epsilon indices carrying the support
    for (int k = 0; k < n; ++k)
      if (r[k] != 0) {
        if (i < 0)
          i = k + 1;
        else
          j = k + 1;
      }
    SparseIntMat x;
    x.size = M;
    if (j < 0) {
      // Short/long roots on a single coordinate.
      int c = r[i - 1];
      if (fam == Family::B) {
        int mid = n + 1;
        if (c == 1)
          x.entries = {{i, mid, 1}, {mid, mirror(i), -1}};
        else
          x.entries = {{mid, i, 1}, {mirror(i), mid, -1}};
      } else {  // C, |c| == 2
        if (c == 2)
          x.entries = {{i, mirror(i), 1}};
        else
          x.entries = {{mirror(i), i, 1}};
      }
    } else {
      int ci = r[i - 1], cj = r[j - 1];
      if (ci == 1 && cj == -1) {
        x.entries = {{i, j, 1}, {mirror(j), mirror(i), -1}};
      } else if (ci == -1 && cj == 1) {
        x.entries = {{j, i, 1}, {mirror(i), mirror(j), -1}};
      } else if (ci == 1 && cj == 1) {
        long s = (fam == Family::C) ? 1 : -1;
        x.entries = {{i, mirror(j), 1}, {j, mirror(i), s}};
      } else {  // ci == -1 && cj == -1
        long s = (fam == Family::C) ? 1 : -1;
        x.entries = {{mirror(j), i, 1}, {mirror(i), j, s}};
      }
    }
    // 0-based storage.
    for (auto& [a, b, v] : x.entries) {
      --a;
      --b;
    }
    root_mats_[id] = std::move(x);
  }
  build_tables();
}

void MatrixRealization::build_tables() {
  const int n = rs_->rank();
  const int nr = rs_->num_roots();
  const int M = m_;

  // Diagonal weight of matrix position (i,j): eps-coordinates of E_ij under
  // the Cartan action, used both for validation and decomposition.
  auto pos_weight = [&](int i, int j) {
    std::vector<int> w(n, 0);
    auto coord = [&](int a, int& idx, int& sgn) {
      // 0-based row/col to diagonal coordinate: a < n -> +eps_a;
      // a >= M - n -> -eps_{M-1-a}; middle (B) -> none.
      if (a < n) {
        idx = a;
        sgn = 1;
      } else if (a >= M - n) {
        idx = M - 1 - a;
        sgn = -1;
      } else {
        idx = -1;
        sgn = 0;
      }
    };
    int ia, sa, ib, sb;
    coord(i, ia, sa);
    coord(j, ib, sb);
    if (sa) w[ia] += sa;
    if (sb) w[ib] -= sb;
    return w;
  };

  // Validate that each root matrix has the weight of its root.
  for (RootId id = 0; id < nr; ++id) {
    const auto& r = rs_->root(id);
    for (auto [i, j, v] : root_mats_[id].entries) {
      auto w = pos_weight(i, j);
      if (w != r) throw std::logic_error("root vector has wrong weight");
    }
  }

  // Position ownership for decomposition.
  std::map<std::pair<int, int>, std::pair<RootId, long>> owner;
  for (RootId id = 0; id < nr; ++id)
    for (auto [i, j, v] : root_mats_[id].entries) {
      auto [it, fresh] = owner.emplace(std::make_pair(i, j), std::make_pair(id, v));
      if (!fresh) throw std::logic_error("overlapping root-vector supports");
    }

  // Structure constants.
  table_.resize(static_cast<std::size_t>(nr) * nr);
  for (RootId a = 0; a < nr; ++a) {
    for (RootId b = 0; b < nr; ++b) {
      auto z = commutator(root_mats_[a], root_mats_[b]);
      RootBracket rb;
      if (z.empty()) {
        rb.coeff = 0;
      } else if (rs_->negate(a) == b) {
        rb.is_cartan = true;
        rb.cartan = zero_vec(n);
        for (auto [pos, v] : z) {
          auto [i, j] = pos;
          if (i != j) throw std::logic_error("[x_a, x_-a] not diagonal");
          if (i < n) rb.cartan[i] = Rat(v);
        }
        // Mirror consistency.
        for (auto [pos, v] : z) {
          auto [i, j] = pos;
          if (i >= M - n && Rat(-v) != rb.cartan[M - 1 - i])
            throw std::logic_error("asymmetric Cartan bracket");
          if (i >= n && i < M - n && v != 0)
            throw std::logic_error("middle diagonal entry in Cartan bracket");
        }
      } else {
        auto sum = rs_->add_roots(a, b);
        if (!sum) throw std::logic_error("unexpected nonzero bracket");
        auto first = z.begin();
        auto own = owner.find(first->first);
        if (own == owner.end() || own->second.first != *sum)
          throw std::logic_error("bracket support does not match root sum");
        long c = first->second / own->second.second;
        // Verify the full multiple.
        for (auto [i, j, v] : root_mats_[*sum].entries) {
          auto it = z.find({i, j});
          long zv = (it == z.end()) ? 0 : it->second;
          if (zv != c * v) throw std::logic_error("bracket not a root-vector multiple");
        }
        if (z.size() != root_mats_[*sum].entries.size())
          throw std::logic_error("bracket has extra support");
        rb.root = *sum;
        rb.coeff = c;
      }
      table_[static_cast<std::size_t>(a) * nr + b] = std::move(rb);
    }
  }

  // Trace pairs tr(x_a x_{-a}).
  trace_pairs_.assign(nr, Rat(0));
  for (RootId a = 0; a < nr; ++a) {
    auto p = sparse_mul(root_mats_[a], root_mats_[rs_->negate(a)]);
    Rat t(0);
    for (auto [pos, v] : p)
      if (pos.first == pos.second) t += v;
    trace_pairs_[a] = t;
    if (t == 0) throw std::logic_error("degenerate trace pair");
  }
  // tr(H_a H_b) = 2 sum a_i b_i in the antidiagonal realizations.
  cartan_trace_scale_ = 2;
}

LieElt MatrixRealization::bracket(const LieElt& a, const LieElt& b) const {
  const int n = rs_->rank();
  LieElt out(n);
  // Root-root terms.
  for (const auto& [ra, ca] : a.root_part) {
    for (const auto& [rb, cb] : b.root_part) {
      const RootBracket& t = bracket_roots(ra, rb);
      if (t.is_cartan) {
        Rat f = ca * cb;
        for (int i = 0; i < n; ++i) out.cartan_part[i] += f * t.cartan[i];
      } else if (t.coeff != 0) {
        out.add_root(t.root, ca * cb * t.coeff);
      }
    }
  }
  // Cartan-root terms: [H, x_r] = r(H) x_r.
  if (!is_zero_vec(a.cartan_part)) {
    for (const auto& [rb, cb] : b.root_part) {
      Rat w(0);
      const auto& r = rs_->root(rb);
      for (int i = 0; i < n; ++i)
        if (r[i]) w += Rat(r[i]) * a.cartan_part[i];
      if (w != 0) out.add_root(rb, w * cb);
    }
  }
  if (!is_zero_vec(b.cartan_part)) {
    for (const auto& [ra, ca] : a.root_part) {
      Rat w(0);
      const auto& r = rs_->root(ra);
      for (int i = 0; i < n; ++i)
        if (r[i]) w += Rat(r[i]) * b.cartan_part[i];
      if (w != 0) out.add_root(ra, -w * ca);
    }
  }
  return out;
}

Rat MatrixRealization::trace_form(const LieElt& a, const LieElt& b) const {
  Rat t(0);
  for (const auto& [ra, ca] : a.root_part) {
    auto it = b.root_part.find(rs_->negate(ra));
    if (it != b.root_part.end()) t += ca * it->second * trace_pairs_[ra];
  }
  t += trace_form_cartan(a.cartan_part, b.cartan_part);
  return t;
}

Rat MatrixRealization::trace_form_cartan(const CartanElt& a, const CartanElt& b) const {
  Rat t(0);
  for (std::size_t i = 0; i < a.size(); ++i) t += a[i] * b[i];
  return Rat(cartan_trace_scale_) * t;
}

RealizationPtr make_realization(RootSystemPtr rs) {
  return std::make_shared<const MatrixRealization>(std::move(rs));
}

}  // namespace padapt
