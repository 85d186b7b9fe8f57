#ifndef PADAPT_ADAPTED_HPP
#define PADAPT_ADAPTED_HPP

#include <optional>
#include <string>
#include <vector>

#include "padapt/cascade.hpp"
#include "padapt/parabolic.hpp"

namespace padapt {

// The data of a candidate adapted pair: the centre set S with one Heisenberg
// set per element, the complement sets T and T*, and the solved semisimple
// element once available.
struct AdaptedCandidate {
  std::vector<RootId> S_plus, S_minus;
  // Aligned with S_plus followed by S_minus.
  std::vector<HeisenbergSet> heisenberg;
  std::vector<RootId> T, T_star;
  std::optional<CartanElt> h;

  std::vector<RootId> S() const {
    std::vector<RootId> s(S_plus);
    s.insert(s.end(), S_minus.begin(), S_minus.end());
    return s;
  }
};

// Builds the candidate for the named construction attached to the case.
// Throws std::invalid_argument for raw cases without a recipe.  Every
// Heisenberg set is validated at construction; basic support and
// disjointness invariants are enforced here, the partition law is left to
// check_conditions.
AdaptedCandidate construct_candidate(const ParabolicCase& pc,
                                     const TruncatedParabolic& p);

// The deliberately failing variants used as falsification tests:
//   s even: deletion {s, s+2, s+4} with the two-deletion sets minus the one
//           element that leaves the negative root system (fails only the
//           membership condition (v));
//   s odd:  deletion {s, s+4} with S taken from the two cascades (the
//           restriction of S to h_Lambda is singular).
AdaptedCandidate construct_notwork_variant(Family family, int n, int s,
                                           const TruncatedParabolic& p);

// Unique h in h_Lambda with gamma(h) = -1 for all gamma in S.
// Throws std::invalid_argument when the restriction matrix is singular.
CartanElt solve_h(const AdaptedCandidate& c, const TruncatedParabolic& p);

struct ConditionReport {
  bool i_ok = false;
  Rat i_det;  // 0 when not square or singular
  bool ii_ok = false, iii_ok = false, iv_ok = false, v_ok = false, vi_ok = false;
  std::vector<std::string> ii_witnesses, iii_witnesses, iv_witnesses;
  std::vector<RootId> v_witnesses;  // T* roots outside ad p(y) + g_T
  int T_size = 0;
  int index = 0;
  bool all_ok() const { return i_ok && ii_ok && iii_ok && iv_ok && v_ok && vi_ok; }
  std::string first_failure() const;
};

ConditionReport check_conditions(const AdaptedCandidate& c, const TruncatedParabolic& p,
                                 const MatrixRealization& real);

struct RegularityResult {
  int rank = 0;           // rank of ad p_Lambda(y)
  int expected_rank = 0;  // dim - |T|
  int dim = 0;
  bool complement_spans = false;  // rank with g_T adjoined reaches dim
  bool verdict = false;
};

// Direct check that ad p_Lambda(y) + g_T = p_Lambda^* with g_T of the right
// dimension, independent of the sufficient conditions above.  Optional
// coefficients rescale the summands of y (for the torus-invariance tests).
RegularityResult verify_regularity_direct(const AdaptedCandidate& c,
                                          const TruncatedParabolic& p,
                                          const MatrixRealization& real,
                                          const std::vector<Rat>* coeffs = nullptr);

// Deterministic positive rational coefficients for scaling tests.
std::vector<Rat> random_scaling(std::size_t size, unsigned long seed);

// Candidate with the lexicographically first S-root removed (and its
// Heisenberg set); used as a negative control.
AdaptedCandidate mutated_candidate(const AdaptedCandidate& c, const RootSystem& rs);

struct SpectrumTables {
  // Multiplicities of ad h eigenvalues: on r = h_Lambda + g_O + g_S + g_T*,
  // on p_Lambda, and on the dual model.
  std::vector<std::pair<Rat, int>> m_prime, m_algebra, m_dual;
  bool mult_ok = false;  // m'_lambda <= m_{lambda+1} throughout

  int prime_at(const Rat& lambda) const;
  int algebra_at(const Rat& lambda) const;
  int dual_at(const Rat& lambda) const;
};

SpectrumTables adh_spectrum(const AdaptedCandidate& c, const TruncatedParabolic& p);

}  // namespace padapt

#endif
