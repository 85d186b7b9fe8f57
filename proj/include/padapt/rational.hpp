#ifndef PADAPT_RATIONAL_HPP
#define PADAPT_RATIONAL_HPP

#include <gmpxx.h>
#include <string>
#include <vector>

namespace padapt {

// All arithmetic in the library is exact; no floating point anywhere.
using Rat = mpq_class;
using RatVec = std::vector<Rat>;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// "p" for integers, "p/q" otherwise.
inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline RatVec rat_vec(std::initializer_list<long> xs) {
  RatVec v;
  v.reserve(xs.size());
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline RatVec zero_vec(std::size_t n) { return RatVec(n, Rat(0)); }

inline bool is_zero_vec(const RatVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

inline RatVec add(const RatVec& a, const RatVec& b) {
  RatVec c(a);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
  return c;
}

inline RatVec sub(const RatVec& a, const RatVec& b) {
  RatVec c(a);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b[i];
  return c;
}

inline RatVec scale(const Rat& s, const RatVec& a) {
  RatVec c(a);
  for (auto& x : c) x *= s;
  return c;
}

inline Rat dot(const RatVec& a, const RatVec& b) {
  Rat s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace padapt

#endif
