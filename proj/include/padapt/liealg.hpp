#ifndef PADAPT_LIEALG_HPP
#define PADAPT_LIEALG_HPP

#include <map>
#include <memory>
#include <vector>

#include "padapt/rootsys.hpp"

namespace padapt {

// A sparse integer matrix: list of (row, col, value), zero-based indices.
struct SparseIntMat {
  int size = 0;
  std::vector<std::tuple<int, int, long>> entries;
};

// Element of g: sparse root part plus a Cartan part in epsilon coordinates.
// Absent keys mean zero; equality is coefficient-wise.
struct LieElt {
  std::map<RootId, Rat> root_part;
  CartanElt cartan_part;

  explicit LieElt(int rank) : cartan_part(zero_vec(rank)) {}
  void add_root(RootId id, const Rat& c) {
    auto [it, fresh] = root_part.emplace(id, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) root_part.erase(it);
    } else if (it->second == 0) {
      root_part.erase(it);
    }
  }
  bool is_zero() const { return root_part.empty() && is_zero_vec(cartan_part); }
  bool operator==(const LieElt&) const = default;
};

// Result of bracketing two root vectors.
struct RootBracket {
  // Exactly one of the following is populated.
  bool is_cartan = false;
  RootId root = -1;   // valid when !is_cartan and coeff != 0
  long coeff = 0;     // multiple of x_root
  CartanElt cartan;   // valid when is_cartan
};

// Matrix realization of so_{2n+1}, sp_{2n} or so_{2n} preserving the
// antidiagonal form, so that positive root vectors are strictly upper
// triangular with integer entries.  Immutable after construction.
class MatrixRealization {
 public:
  explicit MatrixRealization(RootSystemPtr rs);

  const RootSystem& roots() const { return *rs_; }
  RootSystemPtr roots_ptr() const { return rs_; }
  int matrix_size() const { return m_; }

  const SparseIntMat& root_vector(RootId id) const { return root_mats_[id]; }

  // [x_a, x_b] as a structure-constant lookup.
  const RootBracket& bracket_roots(RootId a, RootId b) const {
    return table_[a * rs_->num_roots() + b];
  }

  // tr(x_a x_{-a}) on the defining representation.
  const Rat& trace_pair(RootId a) const { return trace_pairs_[a]; }

  LieElt bracket(const LieElt& a, const LieElt& b) const;
  Rat trace_form(const LieElt& a, const LieElt& b) const;

  // Trace form restricted to the Cartan: tr(H_a H_b) for Cartan elements in
  // epsilon coordinates.
  Rat trace_form_cartan(const CartanElt& a, const CartanElt& b) const;

  LieElt root_elt(RootId id) const {
    LieElt e(rs_->rank());
    e.add_root(id, Rat(1));
    return e;
  }
  LieElt cartan_elt(const CartanElt& h) const {
    LieElt e(rs_->rank());
    e.cartan_part = h;
    return e;
  }

 private:
  void build_tables();
  RootSystemPtr rs_;
  int m_ = 0;
  std::vector<SparseIntMat> root_mats_;
  std::vector<RootBracket> table_;
  std::vector<Rat> trace_pairs_;
  long cartan_trace_scale_ = 0;  // tr(H_i H_j) = scale * delta_ij
};

using RealizationPtr = std::shared_ptr<const MatrixRealization>;

RealizationPtr make_realization(RootSystemPtr rs);

}  // namespace padapt

#endif
