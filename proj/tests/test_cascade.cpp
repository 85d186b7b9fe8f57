#include <doctest.h>

#include <set>

#include "padapt/cascade.hpp"
#include "padapt/linalg.hpp"
#include "padapt/parabolic.hpp"

using namespace padapt;

namespace {

std::set<std::vector<int>> coords_of(const RootSystem& rs,
                                     const std::vector<RootId>& ids) {
  std::set<std::vector<int>> out;
  for (RootId id : ids) out.insert(rs.root(id));
  return out;
}

}  // namespace

TEST_CASE("cascade of B4") {
  auto rs = make_root_system(Family::B, 4);
  auto cascade = kostant_cascade(*rs, rs->positive_roots());
  CHECK(coords_of(*rs, cascade_beta0(*rs, cascade)) ==
        std::set<std::vector<int>>{{1, 1, 0, 0}, {0, 0, 1, 1}});
  CHECK(coords_of(*rs, cascade_cap_simple(*rs, cascade)) ==
        std::set<std::vector<int>>{{1, -1, 0, 0}, {0, 0, 1, -1}});
}

TEST_CASE("cascade of C3 is a chain of long roots") {
  auto rs = make_root_system(Family::C, 3);
  auto cascade = kostant_cascade(*rs, rs->positive_roots());
  REQUIRE(cascade.size() == 3);
  CHECK(coords_of(*rs, {cascade[0].beta, cascade[1].beta, cascade[2].beta}) ==
        std::set<std::vector<int>>{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}});
  // Total order: each node is an ancestor of the next.
  int chain = 0;
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      if (a != b && cascade_le(cascade, static_cast<int>(a), static_cast<int>(b)))
        ++chain;
  CHECK(chain == 3);
}

TEST_CASE("cascade of an A-type subsystem") {
  // Positive roots of the A_{s-1} component span for s = 6 inside B_7.
  auto rs = make_root_system(Family::B, 7);
  const int s = 6;
  std::vector<RootId> sub;
  for (int i = 1; i <= s; ++i)
    for (int j = i + 1; j <= s; ++j) {
      std::vector<int> c(7, 0);
      c[i - 1] = 1;
      c[j - 1] = -1;
      sub.push_back(rs->root_id(c));
    }
  auto cascade = kostant_cascade(*rs, sub);
  std::set<std::vector<int>> expect;
  for (int i = 1; i <= s / 2; ++i) {
    std::vector<int> c(7, 0);
    c[i - 1] = 1;
    c[s - i] = -1;  // eps_i - eps_{s+1-i}
    expect.insert(c);
  }
  std::set<std::vector<int>> got;
  for (const auto& nd : cascade) got.insert(rs->root(nd.beta));
  CHECK(got == expect);
}

TEST_CASE("largest Heisenberg sets") {
  auto rs = make_root_system(Family::B, 2);
  auto cascade = kostant_cascade(*rs, rs->positive_roots());
  int node = cascade_node_of(*rs, cascade, rs->root_id({1, 1}));
  auto h = largest_heisenberg(*rs, cascade, node);
  CHECK(coords_of(*rs, h.members) ==
        std::set<std::vector<int>>{{1, 1}, {1, 0}, {0, 1}});

  // H_alpha = {alpha} for simple cascade roots.
  int a1 = cascade_node_of(*rs, cascade, rs->root_id({1, -1}));
  CHECK(largest_heisenberg(*rs, cascade, a1).members.size() == 1);
}

TEST_CASE("Heisenberg set of the Levi B2 block in B6") {
  auto rs = make_root_system(Family::B, 6);
  TruncatedParabolic p = build_truncation(make_raw(Family::B, 6, {2, 4}), rs);
  auto cascade = kostant_cascade(*rs, p.delta_plus_pi_prime());
  int node = cascade_node_of(*rs, cascade, rs->root_id({0, 0, 0, 0, 1, 1}));
  auto h = largest_heisenberg(*rs, cascade, node);
  CHECK(coords_of(*rs, h.members) ==
        std::set<std::vector<int>>{{0, 0, 0, 0, 1, 1},
                                   {0, 0, 0, 0, 1, 0},
                                   {0, 0, 0, 0, 0, 1}});
}

TEST_CASE("Heisenberg invariant is checked at construction") {
  auto rs = make_root_system(Family::B, 3);
  // eps_1 - eps_2 has no partner summing to eps_1 + eps_2 in this set.
  CHECK_THROWS_AS(HeisenbergSet(*rs, rs->root_id({1, 1, 0}),
                                {rs->root_id({1, 1, 0}), rs->root_id({1, -1, 0})}),
                  std::invalid_argument);
}

TEST_CASE("cascade laws hold exhaustively") {
  for (auto [fam, n] : {std::pair{Family::B, 4}, {Family::D, 6}, {Family::C, 5}}) {
    auto rs = make_root_system(fam, n);
    auto rep = cascade_lemma_check(*rs);
    INFO(family_letter(fam) << n);
    CHECK(rep.partition_ok);
    CHECK(rep.pair_sum_ok);
    CHECK(rep.cross_sum_ok);
    CHECK(rep.in_set_sum_ok);
  }
}

TEST_CASE("covering and strong orthogonality up to rank 8") {
  for (auto fam : {Family::B, Family::C, Family::D}) {
    for (int n = (fam == Family::D ? 4 : 2); n <= 8; ++n) {
      auto rs = make_root_system(fam, n);
      auto cascade = kostant_cascade(*rs, rs->positive_roots());
      std::size_t total = 0;
      for (std::size_t k = 0; k < cascade.size(); ++k)
        total += largest_heisenberg(*rs, cascade, static_cast<int>(k)).members.size();
      CHECK(total == static_cast<std::size_t>(rs->num_positive()));
      for (const auto& a : cascade)
        for (const auto& b : cascade) {
          if (a.beta == b.beta) continue;
          CHECK(!rs->add_roots(a.beta, b.beta).has_value());
          CHECK(!rs->add_roots(a.beta, rs->negate(b.beta)).has_value());
        }
    }
  }
}

TEST_CASE("A-block restriction matrix is lower triangular with -1 diagonal") {
  // The ordered pairing of the A_{s-1} cascade against the interleaved
  // coroot basis, for both parities of s.
  for (int s = 3; s <= 12; ++s) {
    const int n = s + 1;
    auto rs = make_root_system(Family::B, n);
    const int m = (s - 1) / 2;
    Mat a(m, RatVec(m));
    for (int i = 1; i <= m; ++i) {
      WeightVec beta = zero_vec(n);
      beta[i - 1] = 1;
      beta[s - i] = -1;  // beta'_i = eps_i - eps_{s+1-i}
      for (int j = 1; j <= m; ++j) {
        int idx = (j % 2 == 1) ? j : s - j;  // alpha_j^vee or alpha_{s-j}^vee
        a[i - 1][j - 1] = -RootSystem::pairing(beta, rs->coroot(rs->simple_roots()[idx - 1]));
      }
    }
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        INFO("s=" << s << " entry " << i << "," << j);
        if (j > i)
          CHECK(a[i][j] == 0);
        else if (j == i)
          CHECK(a[i][j] == -1);
      }
  }
}
