#include <doctest.h>

#include "padapt/linalg.hpp"

using namespace padapt;

namespace {

Mat random_matrix(std::size_t rows, std::size_t cols, unsigned long seed) {
  unsigned long long state = seed;
  auto next = [&state]() {
    state += 0x9E3779B97F4A7C15ull;
    unsigned long long z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  };
  Mat m(rows, RatVec(cols));
  for (auto& row : m)
    for (auto& x : row)
      x = Rat(static_cast<long>(next() % 19ull) - 9, static_cast<long>(next() % 5ull) + 1);
  return m;
}

}  // namespace

TEST_CASE("rank and determinant basics") {
  Mat m = {rat_vec({1, 2}), rat_vec({2, 4})};
  CHECK(rank_of(m) == 1);
  CHECK(determinant(m) == 0);

  Mat id3 = {rat_vec({1, 0, 0}), rat_vec({0, 1, 0}), rat_vec({0, 0, 1})};
  CHECK(determinant(id3) == 1);
  CHECK(rank_of(id3) == 3);

  Mat a = {rat_vec({2, 1}), rat_vec({1, 1})};
  CHECK(determinant(a) == 1);
  auto x = solve(a, rat_vec({3, 2}));
  REQUIRE(x.has_value());
  CHECK((*x)[0] == 1);
  CHECK((*x)[1] == 1);
}

TEST_CASE("serial and omp echelon agree") {
  for (unsigned long seed : {1ul, 2ul, 3ul, 4ul}) {
    Mat a = random_matrix(40, 40, seed);
    Mat b = a;
    std::size_t r1 = echelon_serial(a);
    std::size_t r2 = echelon_omp(b);
    CHECK(r1 == r2);
    CHECK(a == b);
  }
  // Rank-deficient input.
  Mat a = random_matrix(30, 20, 9);
  for (std::size_t k = 0; k < 10; ++k) a.push_back(a[k]);
  Mat b = a;
  CHECK(echelon_serial(a) == echelon_omp(b));
  CHECK(a == b);
}

TEST_CASE("incremental echelon matches batch rank") {
  Mat a = random_matrix(25, 30, 42);
  for (std::size_t k = 0; k < 5; ++k) a.push_back(a[k]);  // duplicates
  Echelon ech(30);
  for (const auto& row : a) ech.insert(row);
  CHECK(ech.rank() == rank_of(a));
  CHECK(ech.contains(a[3]));
  RatVec combo = add(a[0], scale(Rat(7, 3), a[1]));
  CHECK(ech.contains(combo));
}

TEST_CASE("coordinates recovers expansions and rejects outsiders") {
  std::vector<RatVec> basis = {rat_vec({1, 0, 1}), rat_vec({0, 1, 1})};
  RatVec v = add(scale(Rat(2), basis[0]), scale(Rat(-3), basis[1]));
  auto c = coordinates(basis, v);
  REQUIRE(c.has_value());
  CHECK((*c)[0] == 2);
  CHECK((*c)[1] == -3);
  CHECK(!coordinates(basis, rat_vec({1, 0, 0})).has_value());
}
