#ifndef PADAPT_PARABOLIC_HPP
#define PADAPT_PARABOLIC_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "padapt/liealg.hpp"
#include "padapt/rootsys.hpp"

namespace padapt {

enum class CaseKind { PSL, PL, QSL, RAW };

// The named constructions, by family and parameter shape.
enum class Recipe {
  None,
  B_odd,    // B_n, s odd, l >= 1
  D_odd,    // D_n, s odd, l >= 1
  B_even,   // B_n, s even, l = 1
  D_even,   // D_n, s even, l = 1
  C_all,    // C_n, l >= 1
  D_pl_even,  // D_n even, p_l
  D_p0_odd,   // D_n odd, p_0
  D_p1_odd,   // D_n odd, p_1
  D_q_odd,    // D_n odd, q_{s,l}, s odd
};

std::string recipe_name(Recipe c);

// A parabolic instance: which simple roots are deleted from pi.
// Simple-root indices are 1-based throughout (alpha_1..alpha_n).
struct ParabolicCase {
  Family family;
  int n = 0;
  CaseKind kind = CaseKind::RAW;
  int s = 0;    // meaningful for PSL/QSL
  int ell = 0;  // meaningful for PSL/PL/QSL
  std::set<int> deleted;
  bool canonicalized = false;  // D diagram swap applied to the deletion set
  Recipe recipe = Recipe::None;

  std::string label() const;
};

// Factories validate the parameter bounds of the named families and throw
// std::invalid_argument citing the violated bound.
ParabolicCase make_psl(Family family, int n, int s, int ell);
ParabolicCase make_pl(int n, int ell);                 // type D
ParabolicCase make_qsl(int n, int s, int ell);         // type D
ParabolicCase make_raw(Family family, int n, std::set<int> deleted);

// The truncated parabolic p_Lambda = n^- + h_Lambda + n^+_{pi'} together
// with the concrete model of its dual, n + h_Lambda + n^-_{pi'}.
class TruncatedParabolic {
 public:
  TruncatedParabolic(RootSystemPtr rs, std::set<int> pi_prime);

  const RootSystem& roots() const { return *rs_; }
  RootSystemPtr roots_ptr() const { return rs_; }
  const std::set<int>& pi_prime() const { return pi_prime_; }
  const std::set<int>& deleted() const { return deleted_; }

  bool in_pi_prime(int simple_index) const { return pi_prime_.count(simple_index) > 0; }

  // Positive roots lying in the span of pi'.
  const std::vector<RootId>& delta_plus_pi_prime() const { return dp_pi_prime_; }

  // Root sets of the algebra and of the dual model.
  const std::vector<RootId>& algebra_roots() const { return algebra_roots_; }
  const std::vector<RootId>& dual_roots() const { return dual_roots_; }
  bool is_algebra_root(RootId id) const { return alg_mask_[id] != 0; }
  bool is_dual_root(RootId id) const { return dual_mask_[id] != 0; }

  // Basis of h_Lambda: coroots of pi' in index order, plus the extra
  // vector on the D-odd fork line when both fork roots are deleted.
  const std::vector<CartanElt>& h_basis() const { return h_basis_; }
  bool has_fork_line() const { return has_fork_line_; }
  int dim_h() const { return static_cast<int>(h_basis_.size()); }
  int dim() const { return dim_; }

  // Orthogonal projection of a Cartan element onto h_Lambda (with respect to
  // the invariant form, which on the Cartan is a multiple of the dot product).
  CartanElt project_h_lambda(const CartanElt& v) const;

  // Coordinates in the h_basis; nullopt when v is outside h_Lambda.
  std::optional<RatVec> expand_h_lambda(const CartanElt& v) const;

 private:
  RootSystemPtr rs_;
  std::set<int> pi_prime_;
  std::set<int> deleted_;
  std::vector<RootId> dp_pi_prime_;
  std::vector<RootId> algebra_roots_;
  std::vector<RootId> dual_roots_;
  std::vector<char> alg_mask_, dual_mask_;
  std::vector<CartanElt> h_basis_;
  std::vector<RatVec> gram_inv_;  // inverse Gram of h_basis under dot
  bool has_fork_line_ = false;
  int dim_ = 0;
};

TruncatedParabolic build_truncation(const ParabolicCase& pc, RootSystemPtr rs);

// j = -w_0 as a permutation of simple-root indices (1-based).
std::vector<int> involution_j(const RootSystemSpec& spec);

// The composite involution i: reversal per A-component of pi', identity on
// B/C/D-even components, fork swap on D-odd components, and the iterated
// j(ij)^r rule on deleted roots.
std::vector<int> involution_i(const TruncatedParabolic& p);

struct OrbitSet {
  // Each orbit is a sorted list of simple-root indices; orbits sorted by
  // their smallest member.
  std::vector<std::vector<int>> orbits;
  std::vector<char> j_stable;
};

OrbitSet ij_orbits(const TruncatedParabolic& p);

int index_by_orbits(const TruncatedParabolic& p);

// Generic-corank oracle: corank over Q of xi([.,.]) on a basis of p_Lambda
// for a deterministic pseudo-random integral functional xi derived from the
// seed.  Entry magnitudes are bounded by 10^4.
int index_oracle(const TruncatedParabolic& p, const MatrixRealization& real,
                 unsigned long seed);

// (dim + ind)/2; throws std::logic_error if not an integer.
Rat magic_number(const TruncatedParabolic& p);

// Coadjoint action on the dual model: bracket followed by projection onto
// n + h_Lambda + n^-_{pi'} along the orthogonal complement of p_Lambda.
// x must be supported on the algebra roots and h_Lambda, y on the dual side;
// violations are rejected naming the offending root.
LieElt coadjoint(const TruncatedParabolic& p, const MatrixRealization& real,
                 const LieElt& x, const LieElt& y);

}  // namespace padapt

#endif
