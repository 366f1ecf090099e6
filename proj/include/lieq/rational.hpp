#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace lieq {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rat& q) { return q.get_str(); }
inline std::string to_string(const Int& z) { return z.get_str(); }

using QVec = std::vector<Rat>;

inline bool is_zero_vec(const QVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

// v += c*w
inline void add_scaled(QVec& v, const Rat& c, const QVec& w) {
  for (size_t i = 0; i < v.size(); ++i) v[i] += c * w[i];
}

}  // namespace lieq
