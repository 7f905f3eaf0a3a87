#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace cutplane {

using Vec = std::vector<double>;

inline double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

inline bool is_zero(const Vec& a) {
  for (double x : a)
    if (x != 0.0) return false;
  return true;
}

// Divides by the norm; the caller must rule out the zero vector.
Vec normalized(const Vec& a);

Vec scaled(const Vec& a, double s);
Vec sum(const Vec& a, const Vec& b);
void add_in_place(Vec& a, const Vec& b);
void axpy_in_place(Vec& a, double t, const Vec& b);  // a += t*b

// Strict elementwise lexicographic order, used as a deterministic tie-break.
bool lex_less(const Vec& a, const Vec& b);

bool all_finite(const Vec& a);

}  // namespace cutplane
