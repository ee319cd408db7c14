#ifndef ESCHORB_TEST_SUPPORT_HPP
#define ESCHORB_TEST_SUPPORT_HPP

#include <random>

#include "eschorb/families.hpp"
#include "eschorb/params.hpp"

namespace testing {

using namespace eschorb;

inline TorusParams wallach() { return TorusParams::of({1, 0, -1}, {0, 0, 0}, {0, 1, -1}, {0, 0, 0}); }
inline TorusParams interlocked_pair() {
  return TorusParams::of({-6, -5, -2}, {-4, -3, -6}, {1, -3, 1}, {2, -2, -1});
}
inline TorusParams separated_pair() {
  return TorusParams::of({2, 3, 5}, {1, 2, 7}, {3, -3, 0}, {1, -1, 0});
}
// smooth sphere S11 with Z3
inline TorusParams sphere_z3() { return smooth_sphere_1(0, -2).params; }

inline long uniform(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

// Random triples with matching sums; the last entry of p and a absorbs the difference.
inline TorusParams random_params(std::mt19937_64& rng, long bound) {
  for (;;) {
    std::array<long, 3> p, q, a, b;
    for (int i = 0; i < 3; ++i) {
      p[i] = uniform(rng, -bound, bound);
      q[i] = uniform(rng, -bound, bound);
      a[i] = uniform(rng, -bound, bound);
      b[i] = uniform(rng, -bound, bound);
    }
    p[2] = q[0] + q[1] + q[2] - p[0] - p[1];
    a[2] = b[0] + b[1] + b[2] - a[0] - a[1];
    if (std::labs(p[2]) > bound || std::labs(a[2]) > bound) continue;
    return TorusParams::of(p, q, a, b);
  }
}

inline TorusParams random_almost_free(std::mt19937_64& rng, long bound) {
  for (;;) {
    auto t = random_params(rng, bound);
    if (is_almost_free(t)) return t;
  }
}

}  // namespace testing

// readable failure messages; only when included from a doctest file
#ifdef DOCTEST_VERSION
namespace doctest {
template <>
struct StringMaker<eschorb::AbelianGroup> {
  static String convert(const eschorb::AbelianGroup& g) { return g.to_string().c_str(); }
};
template <>
struct StringMaker<eschorb::TorusParams> {
  static String convert(const eschorb::TorusParams& t) { return t.to_string().c_str(); }
};
}  // namespace doctest
#endif

#endif
