#ifndef PADAPT_CERTIFICATE_HPP
#define PADAPT_CERTIFICATE_HPP

#include <optional>
#include <string>
#include <vector>

#include "padapt/characters.hpp"

namespace padapt {

// Everything the command line reports about one case, assembled by a single
// pipeline run.  Serialization is schema-stable: fixed key order, fixed
// seeds, rationals as "p/q" strings.
struct Certificate {
  ParabolicCase pc;
  bool has_recipe = false;
  bool variant = false;

  // Index data.
  std::vector<std::vector<int>> orbits;
  int index_orbits = 0;
  std::vector<unsigned long> oracle_seeds;
  std::vector<int> oracle_values;
  int index_oracle_min = 0;
  bool index_agree = false;
  int dim = 0;
  int dim_h = 0;
  Rat magic;

  // Bounds data (computable without a candidate).
  WeightMultiset lower, upper;
  int epsilon_half = 0;

  // Candidate data, when a recipe applies.
  std::optional<AdaptedCandidate> cand;
  std::optional<ConditionReport> conds;
  std::optional<RegularityResult> reg;
  std::optional<CartanElt> h;
  std::optional<RatVec> h_coords;  // over the h_Lambda basis
  std::optional<SpectrumTables> spectrum;
  std::optional<ImprovedBound> improved;
  Verdict verdict;
  std::vector<GeneratorDatum> table;
  std::optional<BoundsContext::DegreeSum> degree_sum;

  bool candidate_ok() const {
    return conds && conds->all_ok() && reg && reg->verdict;
  }
  // Process exit status: 0 on success, 1 on verification failure.
  bool passed() const;
};

struct CertificateOptions {
  bool run_oracle = true;
  std::vector<unsigned long> seeds{1, 2, 3};
  bool variant = false;  // the deliberately failing constructions
};

Certificate build_certificate(const ParabolicCase& pc,
                              const CertificateOptions& opts = {});

std::string to_json(const Certificate& cert);
std::string to_text(const Certificate& cert);
std::string table_tsv(const Certificate& cert);

// Grid sweep over every legal named case with rank at most max_n.
struct GridEntry {
  ParabolicCase pc;
  bool ok = false;
  std::string failure;
};

struct GridOptions {
  int max_n = 8;
  int oracle_max_n = 0;     // run the index oracle up to this rank (0 = off)
  int scaling_max_n = 0;    // torus-scaling checks up to this rank (0 = off)
  bool parallel = true;
};

std::vector<ParabolicCase> enumerate_cases(int max_n);
std::vector<GridEntry> run_grid(const GridOptions& opts);

}  // namespace padapt

#endif
