// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
#include <chrono>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

#include "padapt/cascade.hpp"
#include "padapt/certificate.hpp"

using namespace padapt;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& what, bool ok,
            const std::string& detail = "") {
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << criterion << ": "
            << what;
  if (!detail.empty()) std::cout << " -- " << detail;
  std::cout << std::endl;
  if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

RatVec fund(int n, std::initializer_list<std::pair<int, long>> terms) {
  RatVec v(n, Rat(0));
  for (const auto& [i, c] : terms) v[i - 1] += Rat(c);
  return v;
}

struct PipelineRun {
  RootSystemPtr rs;
  TruncatedParabolic trunc;
  RealizationPtr real;
  AdaptedCandidate cand;
  SpectrumTables spectrum;

  explicit PipelineRun(const ParabolicCase& pc)
      : rs(make_root_system(pc.family, pc.n)),
        trunc(build_truncation(pc, rs)),
        real(make_realization(rs)),
        cand(construct_candidate(pc, trunc)) {
    cand.h = solve_h(cand, trunc);
    spectrum = adh_spectrum(cand, trunc);
  }
};

// Criteria 1 and 2: the two worked examples, exact h and full multiplicity
// tables, within the stated runtimes.
void criterion_worked_example(int number, const ParabolicCase& pc,
                              const RatVec& h_expect, int lo, int hi,
                              const std::vector<int>& m_prime,
                              const std::vector<int>& m_dual, double budget) {
  auto t0 = std::chrono::steady_clock::now();
  std::ostringstream detail;
  bool ok = true;
  try {
    PipelineRun run(pc);
    if (*run.cand.h != h_expect) {
      ok = false;
      detail << "h differs; ";
    }
    for (int lambda = lo; lambda <= hi; ++lambda) {
      if (run.spectrum.prime_at(Rat(lambda)) != m_prime[lambda - lo] ||
          run.spectrum.dual_at(Rat(lambda)) != m_dual[lambda - lo]) {
        ok = false;
        detail << "multiplicity mismatch at lambda=" << lambda << "; ";
      }
    }
  } catch (const std::exception& e) {
    ok = false;
    detail << e.what();
  }
  double dt = seconds_since(t0);
  if (dt >= budget) {
    ok = false;
    detail << "runtime " << dt << "s over budget";
  }
  std::ostringstream what;
  what << pc.label() << " reproduction (h, multiplicity tables, < " << budget
       << "s; took " << dt << "s)";
  report(number, what.str(), ok, detail.str());
}

}  // namespace

int main() {
  // ---- 1, 2: worked examples -------------------------------------------
  criterion_worked_example(
      1, make_raw(Family::B, 6, {2, 4}), rat_vec({1, -1, -2, 2, -3, 4}), -7, 7,
      {1, 1, 2, 3, 4, 4, 5, 5, 4, 4, 3, 2, 1, 1, 0},
      {1, 1, 2, 3, 4, 4, 5, 6, 5, 4, 4, 3, 2, 1, 1}, 1.0);
  criterion_worked_example(
      2, make_raw(Family::D, 9, {1, 3, 5, 8, 9}),
      rat_vec({0, -1, 1, -2, 2, -3, 7, -4, -8}), -12, 15,
      {1, 2, 2, 2, 2, 3, 3, 3, 3, 4, 5, 7, 7, 5, 4, 3, 3, 3, 3, 2, 2, 2, 2, 1, 0, 0,
       0, 0},
      {1, 2, 2, 2, 2, 3, 3, 3, 3, 4, 5, 7, 7, 6, 5, 5, 5, 4, 3, 2, 2, 2, 2, 1, 0, 0,
       0, 1},
      2.0);

  // ---- 3: full grid at n <= 10 ------------------------------------------
  {
    bool ok = true;
    std::ostringstream detail;
    double worst = 0;
    for (const auto& pc : enumerate_cases(10)) {
      auto t0 = std::chrono::steady_clock::now();
      try {
        PipelineRun run(pc);
        ConditionReport conds = check_conditions(run.cand, run.trunc, *run.real);
        RegularityResult reg = verify_regularity_direct(run.cand, run.trunc, *run.real);
        int ind = index_by_orbits(run.trunc);
        bool case_ok = conds.all_ok() && reg.verdict &&
                       reg.rank == run.trunc.dim() - ind;
        if (!case_ok) {
          ok = false;
          detail << pc.label() << " fails "
                 << (conds.all_ok() ? "regularity" : conds.first_failure()) << "; ";
        }
      } catch (const std::exception& e) {
        ok = false;
        detail << pc.label() << ": " << e.what() << "; ";
      }
      double dt = seconds_since(t0);
      worst = std::max(worst, dt);
      if (dt >= 10.0) {
        ok = false;
        detail << pc.label() << " took " << dt << "s; ";
      }
    }
    std::ostringstream what;
    what << "grid n <= 10: conditions (i)-(vi) and direct regularity rank "
            "(slowest case "
         << worst << "s)";
    report(3, what.str(), ok, detail.str());
  }

  // ---- 4: index oracle and closed forms at n <= 8 ------------------------
  {
    bool ok = true;
    std::ostringstream detail;
    for (const auto& pc : enumerate_cases(8)) {
      auto rs = make_root_system(pc.family, pc.n);
      TruncatedParabolic trunc = build_truncation(pc, rs);
      auto real = make_realization(rs);
      int ind = index_by_orbits(trunc);
      for (unsigned long seed : {1ul, 2ul, 3ul}) {
        if (index_oracle(trunc, *real, seed) != ind) {
          ok = false;
          detail << pc.label() << " oracle seed " << seed << " disagrees; ";
        }
      }
      int closed = -1;
      const int n = pc.n, s = pc.s, ell = pc.ell;
      switch (pc.recipe) {
        case Recipe::B_odd: closed = n - (s - 1) / 2; break;
        case Recipe::D_odd: closed = n - (s + 1) / 2; break;
        case Recipe::B_even:
        case Recipe::D_even: closed = n - s / 2 + 1; break;
        case Recipe::C_all:
          closed = (s % 2 == 1) ? n - (s - 1) / 2 : n - s / 2 + 1;
          break;
        case Recipe::D_pl_even: closed = (n + 2 + 2 * ell) / 2; break;
        case Recipe::D_p0_odd: closed = (n + 3) / 2; break;
        case Recipe::D_p1_odd: closed = (n + 5) / 2; break;
        case Recipe::D_q_odd: closed = (n - 3) / 2 + ell + 3; break;
        case Recipe::None: break;
      }
      if (closed != ind) {
        ok = false;
        detail << pc.label() << " closed form " << closed << " != " << ind << "; ";
      }
    }
    report(4, "index = corank oracle (3 seeds) = closed forms, n <= 8", ok,
           detail.str());
  }

  // ---- 5: bounds verdicts at n <= 10 --------------------------------------
  {
    bool ok = true;
    std::ostringstream detail;
    for (const auto& pc : enumerate_cases(10)) {
      auto rs = make_root_system(pc.family, pc.n);
      TruncatedParabolic trunc = build_truncation(pc, rs);
      BoundsContext bc(trunc);
      bool route_a = pc.recipe == Recipe::B_odd || pc.recipe == Recipe::D_odd ||
                     pc.recipe == Recipe::C_all ||
                     pc.recipe == Recipe::D_pl_even ||
                     pc.recipe == Recipe::D_q_odd;
      if (route_a) {
        if (bc.epsilon_half_count() != 0) {
          ok = false;
          detail << pc.label() << " has epsilon 1/2; ";
        }
      } else {
        AdaptedCandidate cand = construct_candidate(pc, trunc);
        ImprovedBound ib = bc.improved_upper_bound(cand);
        if (canonical(ib.multiset) != bc.lower_bound()) {
          ok = false;
          detail << pc.label() << " improved bound differs from lower bound; ";
        }
      }
    }
    report(5, "route-A epsilon = 1 and route-B bound coincidence, n <= 10", ok,
           detail.str());
  }

  // ---- 6: printed weight/degree tables ------------------------------------
  {
    struct Expected {
      ParabolicCase pc;
      std::vector<std::pair<RatVec, int>> rows;
    };
    std::vector<Expected> tables;
    tables.push_back({make_psl(Family::B, 7, 3, 1),
                      {{fund(7, {{3, -2}}), 6},
                       {fund(7, {{3, -2}}), 4},
                       {fund(7, {{3, -1}, {5, -1}}), 5},
                       {fund(7, {{5, -2}}), 6},
                       {fund(7, {{5, -2}}), 8},
                       {fund(7, {{5, -1}}), 5}}});
    tables.push_back({make_psl(Family::B, 5, 1, 2),
                      {{fund(5, {{1, -2}}), 2},
                       {fund(5, {{3, -2}}), 4},
                       {fund(5, {{1, -1}, {3, -1}}), 3},
                       {fund(5, {{3, -1}, {5, -2}}), 5},
                       {fund(5, {{5, -2}}), 3}}});
    tables.push_back({make_psl(Family::D, 8, 3, 1),
                      {{fund(8, {{3, -2}}), 6},
                       {fund(8, {{3, -2}}), 4},
                       {fund(8, {{3, -1}, {5, -1}}), 5},
                       {fund(8, {{5, -2}}), 6},
                       {fund(8, {{5, -2}}), 8},
                       {fund(8, {{5, -2}}), 10}}});
    tables.push_back({make_psl(Family::C, 6, 1, 1),
                      {{fund(6, {{1, -2}}), 1},
                       {fund(6, {{1, -1}, {3, -1}}), 3},
                       {fund(6, {{3, -2}}), 3},
                       {fund(6, {{3, -2}}), 5},
                       {fund(6, {{3, -2}}), 7},
                       {fund(6, {{3, -2}}), 9}}});
    tables.push_back({make_psl(Family::C, 6, 2, 1),
                      {{fund(6, {{2, -1}}), 2},
                       {fund(6, {{2, -2}}), 2},
                       {fund(6, {{2, -1}, {4, -1}}), 4},
                       {fund(6, {{4, -2}}), 4},
                       {fund(6, {{4, -2}}), 6},
                       {fund(6, {{4, -2}}), 8}}});
    tables.push_back({make_psl(Family::B, 6, 2, 1),
                      {{fund(6, {{2, -2}}), 4},
                       {fund(6, {{2, -1}}), 1},
                       {fund(6, {{4, -1}}), 2},
                       {fund(6, {{4, -2}}), 8},
                       {fund(6, {{4, -2}}), 6},
                       {fund(6, {{2, -1}, {4, -1}}), 5}}});
    tables.push_back({make_psl(Family::D, 8, 2, 1),
                      {{fund(8, {{2, -2}}), 4},
                       {fund(8, {{2, -1}}), 1},
                       {fund(8, {{4, -1}}), 2},
                       {fund(8, {{4, -1}}), 6},
                       {fund(8, {{4, -2}}), 6},
                       {fund(8, {{4, -2}}), 10},
                       {fund(8, {{4, -2}}), 8},
                       {fund(8, {{2, -1}, {4, -1}}), 5}}});
    tables.push_back({make_pl(8, 0),
                      {{fund(8, {{7, -2}, {8, -2}}), 10},
                       {fund(8, {{7, -2}, {8, -2}}), 12},
                       {fund(8, {{7, -2}, {8, -2}}), 14},
                       {fund(8, {{7, -2}}), 4},
                       {fund(8, {{8, -2}}), 4}}});
    tables.push_back({make_pl(8, 1),
                      {{fund(8, {{5, -2}}), 8},
                       {fund(8, {{5, -2}}), 10},
                       {fund(8, {{5, -2}}), 6},
                       {fund(8, {{5, -1}, {7, -1}, {8, -1}}), 7},
                       {fund(8, {{7, -2}}), 4},
                       {fund(8, {{8, -2}}), 4}}});
    tables.push_back({make_pl(9, 0),
                      {{fund(9, {{8, -2}, {9, -2}}), 12},
                       {fund(9, {{8, -2}, {9, -2}}), 16},
                       {fund(9, {{8, -2}, {9, -2}}), 14},
                       {fund(9, {{8, -1}, {9, -1}}), 6},
                       {fund(9, {{8, -1}, {9, -1}}), 4},
                       {fund(9, {{8, -1}, {9, -1}}), 5}}});
    tables.push_back({make_pl(9, 1),
                      {{fund(9, {{6, -2}}), 10},
                       {fund(9, {{6, -2}}), 12},
                       {fund(9, {{6, -1}}), 3},
                       {fund(9, {{6, -2}}), 8},
                       {fund(9, {{8, -1}, {9, -1}}), 4},
                       {fund(9, {{8, -1}, {9, -1}}), 5},
                       {fund(9, {{6, -1}, {8, -1}, {9, -1}}), 9}}});
    tables.push_back({make_qsl(9, 1, 2),
                      {{fund(9, {{1, -2}}), 2},
                       {fund(9, {{1, -1}, {3, -1}}), 3},
                       {fund(9, {{3, -2}}), 4},
                       {fund(9, {{3, -1}, {5, -1}}), 5},
                       {fund(9, {{5, -2}}), 6},
                       {fund(9, {{5, -2}, {8, -2}, {9, -2}}), 16},
                       {fund(9, {{8, -1}, {9, -1}}), 4},
                       {fund(9, {{8, -1}, {9, -1}}), 5}}});

    bool ok = true;
    std::ostringstream detail;
    for (const auto& expected : tables) {
      try {
        CertificateOptions opts;
        opts.run_oracle = false;
        Certificate cert = build_certificate(expected.pc, opts);
        if (!cert.verdict.exists) {
          ok = false;
          detail << expected.pc.label() << " not verified; ";
          continue;
        }
        std::multiset<std::pair<std::vector<std::string>, int>> got, want;
        auto key = [](const RatVec& f, int deg) {
          std::vector<std::string> s;
          for (const auto& x : f) s.push_back(rat_str(x));
          return std::make_pair(s, deg);
        };
        for (const auto& row : cert.table) got.insert(key(row.fund, row.degree));
        for (const auto& [f, deg] : expected.rows) want.insert(key(f, deg));
        if (got != want) {
          ok = false;
          detail << expected.pc.label() << " table differs; ";
        }
      } catch (const std::exception& e) {
        ok = false;
        detail << expected.pc.label() << ": " << e.what() << "; ";
      }
    }
    report(6, "weight/degree tables of the twelve named instances", ok,
           detail.str());
  }

  // ---- 7: degree sums across the verified grid ----------------------------
  {
    bool ok = true;
    std::ostringstream detail;
    for (const auto& pc : enumerate_cases(10)) {
      try {
        auto rs = make_root_system(pc.family, pc.n);
        TruncatedParabolic trunc = build_truncation(pc, rs);
        BoundsContext bc(trunc);
        AdaptedCandidate cand = construct_candidate(pc, trunc);
        cand.h = solve_h(cand, trunc);
        ImprovedBound ib = bc.improved_upper_bound(cand);
        Verdict v = bc.weierstrass_verdict(true, &ib);
        if (!v.exists) {
          ok = false;
          detail << pc.label() << " inconclusive; ";
          continue;
        }
        auto ds = bc.degree_sum_check(v.route, &ib);
        if (!ds.equal) {
          ok = false;
          detail << pc.label() << " sum " << rat_str(ds.sum) << " != magic "
                 << rat_str(ds.magic) << "; ";
        }
      } catch (const std::exception& e) {
        ok = false;
        detail << pc.label() << ": " << e.what() << "; ";
      }
    }
    report(7, "degree sum equals the magic number for every verified case", ok,
           detail.str());
  }

  // ---- 8: cascade suite ----------------------------------------------------
  {
    bool ok = true;
    std::ostringstream detail;
    for (auto fam : {Family::B, Family::C, Family::D}) {
      for (int n = (fam == Family::D ? 4 : 2); n <= 6; ++n) {
        auto rep = cascade_lemma_check(*make_root_system(fam, n));
        if (!rep.all_ok()) {
          ok = false;
          detail << family_letter(fam) << n << " fails; ";
        }
      }
    }
    report(8, "cascade decomposition laws, exhaustive for n <= 6", ok, detail.str());
  }

  // ---- 9: negative tests ---------------------------------------------------
  {
    bool ok = true;
    std::ostringstream detail;
    try {
      auto rs = make_root_system(Family::B, 8);
      TruncatedParabolic trunc =
          build_truncation(make_raw(Family::B, 8, {2, 4, 6}), rs);
      auto real = make_realization(rs);
      AdaptedCandidate cand = construct_notwork_variant(Family::B, 8, 2, trunc);
      ConditionReport rep = check_conditions(cand, trunc, *real);
      bool exactly_v =
          rep.i_ok && rep.ii_ok && rep.iii_ok && rep.iv_ok && !rep.v_ok && rep.vi_ok;
      std::set<std::vector<int>> witnesses;
      for (RootId id : rep.v_witnesses) witnesses.insert(rs->root(id));
      std::set<std::vector<int>> expect = {{0, 1, 0, 0, 1, 0, 0, 0},
                                           {0, 1, 0, 0, 0, 1, 0, 0}};
      if (!exactly_v) {
        ok = false;
        detail << "variant does not fail exactly at (v); ";
      }
      if (witnesses != expect) {
        ok = false;
        detail << "witnesses differ from e2+e5, e2+e6; ";
      }
    } catch (const std::exception& e) {
      ok = false;
      detail << "variant: " << e.what() << "; ";
    }
    try {
      auto rs = make_root_system(Family::B, 6);
      TruncatedParabolic trunc = build_truncation(make_raw(Family::B, 6, {1, 5}), rs);
      auto real = make_realization(rs);
      AdaptedCandidate cand = construct_notwork_variant(Family::B, 6, 1, trunc);
      ConditionReport rep = check_conditions(cand, trunc, *real);
      if (rep.i_ok || rep.i_det != 0) {
        ok = false;
        detail << "cascade set should restrict singularly; ";
      }
    } catch (const std::exception& e) {
      ok = false;
      detail << "singular variant: " << e.what() << "; ";
    }
    report(9, "failing variants: condition (v) witnesses and singular restriction",
           ok, detail.str());
  }

  // ---- 10: property suite ----------------------------------------------------
  {
    bool ok = true;
    std::ostringstream detail;
    for (const auto& pc : enumerate_cases(8)) {
      try {
        auto rs = make_root_system(pc.family, pc.n);
        TruncatedParabolic trunc = build_truncation(pc, rs);
        auto real = make_realization(rs);
        BoundsContext bc(trunc);
        AdaptedCandidate cand = construct_candidate(pc, trunc);
        cand.h = solve_h(cand, trunc);
        for (unsigned long seed : {21ul, 22ul, 23ul}) {
          auto coeffs = random_scaling(cand.S().size(), seed);
          if (!verify_regularity_direct(cand, trunc, *real, &coeffs).verdict) {
            ok = false;
            detail << pc.label() << " scaling " << seed << " breaks regularity; ";
          }
        }
        ImprovedBound ib = bc.improved_upper_bound(cand);
        for (const auto& row : ib.rows) {
          WeightVec w(rs->rank());
          for (int t = 0; t < rs->rank(); ++t) w[t] = rs->root(row.gamma)[t];
          if (Rat(row.degree) != RootSystem::pairing(w, *cand.h) + 1) {
            ok = false;
            detail << pc.label() << " degree identity fails; ";
          }
        }
        for (const auto& f : bc.lower_bound()) {
          WeightVec w = rs->from_fundamental(f);
          for (const auto& t : trunc.h_basis())
            if (RootSystem::pairing(w, t) != 0) {
              ok = false;
              detail << pc.label() << " bound weight off h_Lambda; ";
            }
        }
      } catch (const std::exception& e) {
        ok = false;
        detail << pc.label() << ": " << e.what() << "; ";
      }
    }
    report(10,
           "torus-scaling invariance, ad h degree identity, bound weights "
           "vanish on h_Lambda (n <= 8)",
           ok, detail.str());
  }

  if (g_failures) {
    std::cout << g_failures << " criterion(s) failed" << std::endl;
    return 1;
  }
  std::cout << "all criteria passed" << std::endl;
  return 0;
}
