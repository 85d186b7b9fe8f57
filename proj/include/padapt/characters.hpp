#ifndef PADAPT_CHARACTERS_HPP
#define PADAPT_CHARACTERS_HPP

#include <map>
#include <string>
#include <vector>

#include "padapt/adapted.hpp"
#include "padapt/parabolic.hpp"

namespace padapt {

// Coefficient bound of the exhaustive semigroup-membership search.
inline constexpr int kWeightSemigroupSearchBound = 4;

// A formal character, represented by the multiset of exponents of its
// factors (1 - e^lambda)^{-1}, each exponent in fundamental coordinates.
// Canonically sorted, so equality is multiset equality.
using WeightMultiset = std::vector<RatVec>;

WeightMultiset canonical(WeightMultiset m);

struct GeneratorDatum {
  std::string label;   // orbit or T-root
  WeightVec weight;    // epsilon coordinates
  RatVec fund;         // fundamental coordinates
  int degree = 0;
};

struct ImprovedBoundRow {
  RootId gamma;
  RatVec s_coeffs;     // coefficients of s(gamma) over S
  WeightVec weight;    // -(gamma + s(gamma)), epsilon coordinates
  int degree = 0;      // 1 + |s(gamma)|
  bool coeffs_natural = false;
};

struct ImprovedBound {
  WeightMultiset multiset;
  std::vector<ImprovedBoundRow> rows;
  bool all_coeffs_natural = false;
};

enum class Route { A, B, Inconclusive };

struct Verdict {
  bool exists = false;
  Route route = Route::Inconclusive;
};

// Character-side data of one truncated parabolic: involutions, orbits,
// Levi fundamental weights, weight-semigroup generators and level degrees.
class BoundsContext {
 public:
  explicit BoundsContext(const TruncatedParabolic& p);

  const TruncatedParabolic& trunc() const { return *p_; }
  const OrbitSet& orbits() const { return orbits_; }
  int involution_i_of(int a) const { return i_[a]; }
  int involution_j_of(int a) const { return j_[a]; }

  // Fundamental weight of the Levi with respect to pi' (epsilon coords).
  const WeightVec& levi_weight(int gamma) const;

  // delta_Gamma for the k-th orbit, epsilon coordinates.
  WeightVec delta_weight(int orbit) const;

  // Membership of a dominant weight in the semigroup generated by the
  // invariant-weight generators of the ambient Borel (d given in ambient
  // fundamental coordinates) or of the Levi (coordinates indexed by pi').
  bool ambient_semigroup_member(const RatVec& fund) const;
  bool levi_semigroup_member(const std::map<int, Rat>& by_index) const;

  // epsilon_Gamma: 1 or 1/2.
  Rat epsilon_gamma(int orbit) const;

  // Degrees per orbit (one row, or two for the split fork orbits).
  // Throws when called on an orbit with epsilon 1/2.
  std::vector<GeneratorDatum> generator_degree(int orbit) const;

  WeightMultiset lower_bound() const;
  WeightMultiset upper_bound() const;
  int epsilon_half_count() const;

  ImprovedBound improved_upper_bound(const AdaptedCandidate& c) const;

  // Route A when all epsilon are 1; route B when the improved bound equals
  // the lower bound; requires a verified adapted pair either way.
  Verdict weierstrass_verdict(bool adapted_pair_ok, const ImprovedBound* ib) const;

  // Weight/degree table: per orbit on route A, per T-root on route B.
  std::vector<GeneratorDatum> weight_degree_table(Route route,
                                                  const ImprovedBound* ib) const;

  struct DegreeSum {
    Rat sum;
    Rat magic;
    bool equal = false;
  };
  DegreeSum degree_sum_check(Route route, const ImprovedBound* ib) const;

 private:
  struct Level {
    bool fundamental = false;
    int degree = 0;
    int iota = 0;  // partner index under the relevant involution
  };
  Level ambient_level(int k) const;
  Level levi_level(int gamma) const;

  const TruncatedParabolic* p_;
  std::vector<int> i_, j_;
  OrbitSet orbits_;
  std::map<int, WeightVec> levi_weights_;
  // Component data per pi' index: type letter, size, position in chain.
  struct Comp {
    char type;
    int size;
    int pos;
  };
  std::map<int, Comp> comp_;
  std::vector<RatVec> ambient_gens_;            // fundamental coordinates
  std::vector<std::map<int, Rat>> levi_gens_;   // pi'-indexed coordinates
};

std::string orbit_label(const std::vector<int>& orbit);

}  // namespace padapt

#endif
