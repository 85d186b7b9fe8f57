// Compares the serial and OpenMP echelon kernels on the regularity matrix of
// a mid-size case and on dense random matrices.
#include <omp.h>

#include <chrono>
#include <iostream>

#include "padapt/adapted.hpp"
#include "padapt/certificate.hpp"
#include "padapt/linalg.hpp"

using namespace padapt;

namespace {

Mat random_matrix(std::size_t n, unsigned long seed) {
  unsigned long long state = seed;
  auto next = [&state]() {
    state += 0x9E3779B97F4A7C15ull;
    unsigned long long z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  };
  Mat m(n, RatVec(n));
  for (auto& row : m)
    for (auto& x : row) x = Rat(static_cast<long>(next() % 2001ull) - 1000);
  return m;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                   t0)
      .count();
}

}  // namespace

int main(int argc, char** argv) {
  std::size_t size = argc > 1 ? std::stoul(argv[1]) : 160;
  std::cout << "threads: " << omp_get_max_threads() << "\n";

  {
    Mat a = random_matrix(size, 7);
    Mat b = a;
    auto t0 = std::chrono::steady_clock::now();
    std::size_t r1 = echelon_serial(a);
    double serial = ms_since(t0);
    t0 = std::chrono::steady_clock::now();
    std::size_t r2 = echelon_omp(b);
    double parallel = ms_since(t0);
    std::cout << "random " << size << "x" << size << ": serial " << serial
              << " ms, omp " << parallel << " ms, rank " << r1 << "/" << r2
              << (r1 == r2 ? "" : " MISMATCH") << "\n";
  }

  // A real workload: the index-oracle matrix of a rank-8 case.
  {
    ParabolicCase pc = make_psl(Family::B, 8, 3, 2);
    auto rs = make_root_system(pc.family, pc.n);
    TruncatedParabolic trunc = build_truncation(pc, rs);
    auto real = make_realization(rs);
    auto t0 = std::chrono::steady_clock::now();
    int ind = index_oracle(trunc, *real, 1);
    std::cout << pc.label() << " oracle corank " << ind << " in " << ms_since(t0)
              << " ms (dim " << trunc.dim() << ")\n";
  }
  return 0;
}
