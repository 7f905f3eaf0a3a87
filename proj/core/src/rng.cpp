#include "cutplane/rng.hpp"

#include <cmath>

namespace cutplane {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t substream_seed(std::uint64_t root, std::uint64_t index) {
  return mix64(root ^ mix64(index + 1));
}

double Rng::gaussian() {
  // u1 in (0, 1] keeps the log finite.
  double u1 = 1.0 - uniform01();
  double u2 = uniform01();
  constexpr double two_pi = 6.283185307179586476925286766559;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
}

Vec Rng::gaussian_vec(std::size_t d) {
  Vec v(d);
  for (std::size_t i = 0; i < d; ++i) v[i] = gaussian();
  return v;
}

Vec Rng::unit_sphere(std::size_t d) {
  for (;;) {
    Vec v = gaussian_vec(d);
    double n = norm(v);
    if (n > 1e-12) {
      for (auto& x : v) x /= n;
      return v;
    }
  }
}

}  // namespace cutplane
