#include <doctest.h>

#include <set>
#include "padapt/certificate.hpp"
#include "padapt/characters.hpp"

using namespace padapt;

namespace {

struct Fixture {
  RootSystemPtr rs;
  TruncatedParabolic trunc;
  BoundsContext bc;
  ParabolicCase pc;

  explicit Fixture(ParabolicCase c)
      : rs(make_root_system(c.family, c.n)),
        trunc(build_truncation(c, rs)),
        bc(trunc),
        pc(c) {}

  int orbit_of(std::vector<int> members) const {
    for (std::size_t k = 0; k < bc.orbits().orbits.size(); ++k)
      if (bc.orbits().orbits[k] == members) return static_cast<int>(k);
    throw std::logic_error("orbit not found");
  }
};

RatVec fund(int n, std::initializer_list<std::pair<int, Rat>> terms) {
  RatVec v(n, Rat(0));
  for (const auto& [i, c] : terms) v[i - 1] += c;
  return v;
}

}  // namespace

TEST_CASE("delta weights") {
  {
    // C_6, s = 2: the singleton {alpha_{s/2}} has weight -w_s.
    Fixture f(make_psl(Family::C, 6, 2, 1));
    WeightVec d = f.bc.delta_weight(f.orbit_of({1}));
    CHECK(f.rs->to_fundamental(d) == fund(6, {{2, Rat(-1)}}));
  }
  {
    // D_9 p_0: paired orbits have weight -2(w_8 + w_9).
    Fixture f(make_pl(9, 0));
    WeightVec d = f.bc.delta_weight(f.orbit_of({2, 6}));
    CHECK(f.rs->to_fundamental(d) == fund(9, {{8, Rat(-2)}, {9, Rat(-2)}}));
  }
  {
    // B_6, s = 2: the singleton {alpha_3} has weight -(w_2 + w_4).
    Fixture f(make_raw(Family::B, 6, {2, 4}));
    WeightVec d = f.bc.delta_weight(f.orbit_of({3}));
    CHECK(f.rs->to_fundamental(d) == fund(6, {{2, Rat(-1)}, {4, Rat(-1)}}));
    // Every delta vanishes on h_Lambda; checked here for the h_Lambda basis.
    for (std::size_t k = 0; k < f.bc.orbits().orbits.size(); ++k)
      for (const auto& t : f.trunc.h_basis())
        CHECK(RootSystem::pairing(f.bc.delta_weight(static_cast<int>(k)), t) == 0);
  }
}

TEST_CASE("weight semigroup membership") {
  Fixture f(make_raw(Family::B, 6, {2, 4}));
  CHECK(f.bc.ambient_semigroup_member(fund(6, {{2, Rat(1)}})));
  CHECK(!f.bc.ambient_semigroup_member(fund(6, {{2, Rat(1)}, {3, Rat(1)}})));
  CHECK(f.bc.ambient_semigroup_member(fund(6, {{1, Rat(2)}})));
  CHECK(!f.bc.ambient_semigroup_member(fund(6, {{6, Rat(1)}})));
  CHECK(f.bc.levi_semigroup_member({}));  // 0 is a member

  Fixture d(make_pl(8, 0));
  CHECK(!d.bc.ambient_semigroup_member(fund(8, {{7, Rat(1)}})));
  CHECK(d.bc.ambient_semigroup_member(fund(8, {{7, Rat(2)}})));
  CHECK(!d.bc.ambient_semigroup_member(fund(8, {{7, Rat(1)}, {8, Rat(1)}})));

  Fixture d9(make_pl(9, 0));
  CHECK(d9.bc.ambient_semigroup_member(fund(9, {{8, Rat(1)}, {9, Rat(1)}})));
  CHECK(!d9.bc.ambient_semigroup_member(fund(9, {{8, Rat(1)}})));
}

TEST_CASE("epsilon values") {
  {
    // s odd: every orbit has epsilon 1.
    Fixture f(make_psl(Family::B, 7, 3, 1));
    CHECK(f.bc.epsilon_half_count() == 0);
  }
  {
    // D_9 p_1: the orbit {alpha_{n-3}} has epsilon 1/2, and the literal
    // rule also assigns 1/2 to the even pair {alpha_2, alpha_4}.
    Fixture f(make_pl(9, 1));
    CHECK(f.bc.epsilon_gamma(f.orbit_of({6})) == Rat(1, 2));
    CHECK(f.bc.epsilon_gamma(f.orbit_of({2, 4})) == Rat(1, 2));
    CHECK(f.bc.epsilon_half_count() == 2);
  }
  {
    // D_9 q_{1,2}: all epsilon are 1.
    Fixture f(make_qsl(9, 1, 2));
    CHECK(f.bc.epsilon_half_count() == 0);
  }
  {
    // B_6 {2,4}: the literal rule yields 1/2 for both deleted-root orbits.
    Fixture f(make_raw(Family::B, 6, {2, 4}));
    CHECK(f.bc.epsilon_gamma(f.orbit_of({2})) == Rat(1, 2));
    CHECK(f.bc.epsilon_gamma(f.orbit_of({4})) == Rat(1, 2));
    CHECK(f.bc.epsilon_half_count() == 2);
  }
}

TEST_CASE("bounds for the worked B6 case") {
  Fixture f(make_raw(Family::B, 6, {2, 4}));
  WeightMultiset lower = f.bc.lower_bound();
  WeightMultiset expect = canonical({fund(6, {{2, Rat(-2)}}),
                                     fund(6, {{2, Rat(-1)}}),
                                     fund(6, {{4, Rat(-2)}}),
                                     fund(6, {{4, Rat(-2)}}),
                                     fund(6, {{4, Rat(-1)}}),
                                     fund(6, {{2, Rat(-1)}, {4, Rat(-1)}})});
  CHECK(lower == expect);
  CHECK(f.bc.upper_bound() != lower);

  // The improved bound does coincide with the lower bound.
  AdaptedCandidate c = construct_candidate(f.pc, f.trunc);
  ImprovedBound ib = f.bc.improved_upper_bound(c);
  CHECK(canonical(ib.multiset) == lower);
  CHECK(ib.all_coeffs_natural);
  Verdict v = f.bc.weierstrass_verdict(true, &ib);
  CHECK(v.exists);
  CHECK(v.route == Route::B);

  auto ds = f.bc.degree_sum_check(v.route, &ib);
  CHECK(ds.magic == 26);
  CHECK(ds.sum == 26);
  std::multiset<int> degrees;
  for (const auto& row : f.bc.weight_degree_table(v.route, &ib))
    degrees.insert(row.degree);
  CHECK(degrees == std::multiset<int>{4, 1, 2, 8, 6, 5});
}

TEST_CASE("bounds for D9 p_0") {
  Fixture f(make_pl(9, 0));
  WeightMultiset lower = f.bc.lower_bound();
  WeightMultiset expect;
  for (int k = 0; k < 3; ++k) expect.push_back(fund(9, {{8, Rat(-2)}, {9, Rat(-2)}}));
  for (int k = 0; k < 3; ++k) expect.push_back(fund(9, {{8, Rat(-1)}, {9, Rat(-1)}}));
  CHECK(lower == canonical(expect));
  CHECK(f.bc.epsilon_half_count() > 0);

  AdaptedCandidate c = construct_candidate(f.pc, f.trunc);
  ImprovedBound ib = f.bc.improved_upper_bound(c);
  CHECK(canonical(ib.multiset) == lower);
}

TEST_CASE("route A tables") {
  {
    // C_6 p_{1,1}: six rows with the published degrees.
    Fixture f(make_psl(Family::C, 6, 1, 1));
    CHECK(f.bc.epsilon_half_count() == 0);
    AdaptedCandidate c = construct_candidate(f.pc, f.trunc);
    auto table = f.bc.weight_degree_table(Route::A, nullptr);
    REQUIRE(table.size() == 6);
    std::multiset<std::pair<std::string, int>> got, expect;
    for (const auto& row : table)
      got.insert({f.rs->weight_str(row.weight), row.degree});
    expect = {{"-2w1", 1}, {"-w1-w3", 3}, {"-2w3", 3},
              {"-2w3", 5}, {"-2w3", 7},   {"-2w3", 9}};
    CHECK(got == expect);
    auto ds = f.bc.degree_sum_check(Route::A, nullptr);
    CHECK(ds.equal);
    CHECK(ds.sum == 28);
  }
  {
    // Split orbits in D_9 q_{1,2}: the fork orbits carry degrees 4 and 5.
    Fixture f(make_qsl(9, 1, 2));
    auto d8 = f.bc.generator_degree(f.orbit_of({8}));
    auto d9 = f.bc.generator_degree(f.orbit_of({9}));
    REQUIRE(d8.size() == 1);
    REQUIRE(d9.size() == 1);
    CHECK(d8[0].degree == 4);
    CHECK(d9[0].degree == 5);
    CHECK(d8[0].fund == d9[0].fund);
    CHECK(f.rs->weight_str(d8[0].weight) == "-w8-w9");
  }
  {
    // Canonicalized D branch with the deletion reaching n-1: the paired
    // orbit next to the fork.
    Fixture f(make_psl(Family::D, 8, 5, 1));
    auto rows = f.bc.generator_degree(f.orbit_of({6, 7}));
    REQUIRE(rows.size() == 1);
    CHECK(f.rs->to_fundamental(rows[0].weight) ==
          fund(8, {{5, Rat(-2)}, {8, Rat(-2)}}));
    CHECK(rows[0].degree == 12);
  }
  {
    // generator_degree refuses the epsilon = 1/2 regime.
    Fixture f(make_raw(Family::B, 6, {2, 4}));
    CHECK_THROWS_AS(f.bc.generator_degree(f.orbit_of({2})), std::invalid_argument);
  }
}

TEST_CASE("bounds coincide exactly when every epsilon is 1") {
  for (const auto& pc : enumerate_cases(6)) {
    Fixture f(pc);
    CHECK((f.bc.lower_bound() == f.bc.upper_bound()) ==
          (f.bc.epsilon_half_count() == 0));
  }
}

TEST_CASE("degree sum equals the magic number across a sweep") {
  for (const auto& pc : enumerate_cases(6)) {
    INFO(pc.label());
    Fixture f(pc);
    AdaptedCandidate c = construct_candidate(pc, f.trunc);
    c.h = solve_h(c, f.trunc);
    ImprovedBound ib = f.bc.improved_upper_bound(c);
    Verdict v = f.bc.weierstrass_verdict(true, &ib);
    REQUIRE(v.exists);
    auto ds = f.bc.degree_sum_check(v.route, &ib);
    CHECK(ds.equal);
    // Route B degrees tie to the ad h eigenvalues; weights vanish on
    // h_Lambda either way.
    for (const auto& row : ib.rows) {
      WeightVec w(f.rs->rank());
      for (int t = 0; t < f.rs->rank(); ++t) w[t] = f.rs->root(row.gamma)[t];
      CHECK(Rat(row.degree) == RootSystem::pairing(w, *c.h) + 1);
    }
    for (const auto& fw : f.bc.lower_bound()) {
      WeightVec w = f.rs->from_fundamental(fw);
      for (const auto& t : f.trunc.h_basis()) CHECK(RootSystem::pairing(w, t) == 0);
    }
    CHECK(f.bc.lower_bound().size() == static_cast<std::size_t>(index_by_orbits(f.trunc)));
    // On route A the T-side multiset agrees with the orbit multiset.
    if (v.route == Route::A)
      CHECK(canonical(ib.multiset) == f.bc.lower_bound());
  }
}
