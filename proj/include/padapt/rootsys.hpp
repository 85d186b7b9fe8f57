#ifndef PADAPT_ROOTSYS_HPP
#define PADAPT_ROOTSYS_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "padapt/rational.hpp"

namespace padapt {

enum class Family { B, C, D };

char family_letter(Family f);
Family family_from_letter(char c);

struct RootSystemSpec {
  Family family;
  int n;

  // Throws std::invalid_argument if the rank is out of range for the family
  // (B, C need n >= 2; D needs n >= 4).
  void validate() const;
};

// Roots are interned: a RootId indexes into the system's root table.
using RootId = int;

// A Cartan element h is stored by its epsilon-coordinates c_i = eps_i(h).
using CartanElt = RatVec;

// A weight, in epsilon coordinates.
using WeightVec = RatVec;

// Root systems of types B_n, C_n, D_n in epsilon coordinates, with coroots,
// fundamental weights and the standard invariant pairing.  Immutable after
// construction; safe for unrestricted concurrent reads.
class RootSystem {
 public:
  explicit RootSystem(RootSystemSpec spec);

  const RootSystemSpec& spec() const { return spec_; }
  int rank() const { return spec_.n; }

  int num_roots() const { return static_cast<int>(roots_.size()); }
  int num_positive() const { return num_positive_; }

  // Positive roots come first (ids 0..num_positive-1), then their negatives.
  const std::vector<int>& root(RootId id) const { return roots_[id]; }
  bool is_positive(RootId id) const { return id < num_positive_; }
  RootId negate(RootId id) const {
    return id < num_positive_ ? id + num_positive_ : id - num_positive_;
  }

  std::optional<RootId> find_root(const std::vector<int>& coords) const;
  RootId root_id(const std::vector<int>& coords) const;  // throws if not a root

  // Sum of two roots when the sum is again a root.
  std::optional<RootId> add_roots(RootId a, RootId b) const;

  // Simple roots alpha_1..alpha_n in Bourbaki order (ids).
  const std::vector<RootId>& simple_roots() const { return simple_; }
  std::vector<RootId> positive_roots() const;

  // Coroot of a root: 2*alpha/(alpha,alpha) read as a Cartan element.
  CartanElt coroot(RootId id) const;

  // Fundamental weights in epsilon coordinates.
  const WeightVec& fundamental_weight(int i) const { return fundamental_[i]; }

  // gamma(H^-1(gamma')) = (gamma, gamma'): the plain dot product.
  static Rat pairing(const WeightVec& w, const CartanElt& h);

  // Coordinates of w in the basis of fundamental weights (exact).
  RatVec to_fundamental(const WeightVec& w) const;
  WeightVec from_fundamental(const RatVec& c) const;

  // Expansion of a root in the simple-root basis (integer coefficients).
  const std::vector<Rat>& simple_coords(RootId id) const { return simple_coords_[id]; }

  // Scalar product (alpha, beta) of two roots.
  Rat root_inner(RootId a, RootId b) const;

  // Printing: "e1+e3", "-e5-e6", "2e1".
  std::string root_str(RootId id) const;
  // Printing in fundamental coordinates: "-2w4", "-w2-w4", "0".
  std::string weight_str(const WeightVec& w) const;

 private:
  RootSystemSpec spec_;
  int num_positive_ = 0;
  std::vector<std::vector<int>> roots_;
  std::vector<RootId> simple_;
  std::vector<WeightVec> fundamental_;
  std::vector<RatVec> simple_coords_;
  // Dense lookup from packed coordinates to id.
  std::vector<std::pair<std::vector<int>, RootId>> index_;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

RootSystemPtr make_root_system(Family family, int n);

}  // namespace padapt

#endif
