#include <doctest.h>

#include <random>

#include "eschorb/error.hpp"
#include "eschorb/intlinalg.hpp"

using namespace eschorb;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

IntMatrix diag(const std::vector<Integer>& d, std::size_t r, std::size_t c) {
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

}  // namespace

TEST_CASE("gcd helpers") {
  CHECK(gcd_list({}) == 0);
  CHECK(gcd_list({Integer(-4), Integer(6)}) == 2);
  CHECK(gcd_list({Integer(0), Integer(-7)}) == 7);
  auto b = ext_gcd(Integer(240), Integer(46));
  CHECK(b.g == 2);
  CHECK(240 * b.x + 46 * b.y == b.g);
  auto z = ext_gcd(Integer(0), Integer(-5));
  CHECK(z.g == 5);
  CHECK(-5 * z.y == 5);
}

TEST_CASE("determinant") {
  CHECK(determinant(IntMatrix{{2, 1}, {7, 4}}) == 1);
  CHECK(determinant(IntMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == 0);
  CHECK(determinant(IntMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 5}}) == -5);
  CHECK(determinant(IntMatrix(0, 0)) == 1);
}

TEST_CASE("abelian group canonical form") {
  auto g = AbelianGroup::from_cyclic_orders(1, {Integer(4), Integer(6), Integer(1), Integer(-1)});
  CHECK(g.free_rank() == 1);
  CHECK(g.torsion() == std::vector<Integer>{2, 12});
  CHECK(g.to_string() == "Z + Z/2 + Z/12");
  CHECK(g.label() == "Z^1xZ2xZ12");
  CHECK(AbelianGroup::from_cyclic_orders(0, {Integer(2), Integer(3)}) ==
        AbelianGroup::from_cyclic_orders(0, {Integer(6)}));
  CHECK(AbelianGroup::from_cyclic_orders(0, {Integer(0), Integer(3)}) ==
        AbelianGroup::from_cyclic_orders(1, {Integer(3)}));
  CHECK(AbelianGroup::trivial().to_string() == "0");
  CHECK(AbelianGroup::trivial().label() == "1");
  CHECK(AbelianGroup::free(2).to_string() == "Z^2");
  CHECK(AbelianGroup::from_cyclic_orders(0, {Integer(2), Integer(2)}).torsion_order() == 4);
  // equal order, different structure
  CHECK_FALSE(AbelianGroup::from_cyclic_orders(0, {Integer(2), Integer(2)}) ==
              AbelianGroup::from_cyclic_orders(0, {Integer(4)}));
}

TEST_CASE("smith normal form small cases") {
  auto s = smith_normal_form(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  CHECK(s.diagonal == std::vector<Integer>{2, 6, 12});
  CHECK(smith_diagonal(IntMatrix{{0, 0}, {0, 0}}) == std::vector<Integer>{0, 0});
  CHECK(smith_diagonal(IntMatrix{{-3}}) == std::vector<Integer>{3});
  CHECK(smith_diagonal(IntMatrix(3, 0)).empty());
}

TEST_CASE("smith normal form against minor gcds") {
  std::mt19937_64 rng(20240611);
  for (int iter = 0; iter < 1000; ++iter) {
    std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    // sprinkle in low-rank inputs
    long bound = iter % 7 == 0 ? 2 : 20;
    IntMatrix m = random_matrix(rng, r, c, bound);
    if (iter % 11 == 0 && r > 1)
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = 3 * m(0, j);
    auto s = smith_normal_form(m);
    REQUIRE(s.diagonal.size() == std::min(r, c));
    CHECK(s.left * m * s.right == diag(s.diagonal, r, c));
    CHECK(abs(determinant(s.left)) == 1);
    CHECK(abs(determinant(s.right)) == 1);
    Integer prefix = 1;
    for (std::size_t k = 0; k < s.diagonal.size(); ++k) {
      CHECK(s.diagonal[k] >= 0);
      if (k + 1 < s.diagonal.size() && s.diagonal[k] != 0)
        CHECK(s.diagonal[k + 1] % s.diagonal[k] == 0);
      prefix *= s.diagonal[k];
      CHECK(prefix == minor_gcd(m, k + 1));
    }
    CHECK(smith_diagonal(m) == s.diagonal);
  }
}

TEST_CASE("minor_gcd limits") {
  CHECK_THROWS_AS(minor_gcd(IntMatrix(11, 2), 1), Error);
  CHECK_THROWS_AS(minor_gcd(IntMatrix{{1, 2}}, 2), Error);
  CHECK_THROWS_AS(minor_gcd(IntMatrix{{1, 2}}, 0), Error);
  CHECK(minor_gcd(IntMatrix{{4, 6}, {2, 8}}, 1) == 2);
  CHECK(minor_gcd(IntMatrix{{4, 6}, {2, 8}}, 2) == 20);
}

TEST_CASE("cokernel") {
  CHECK(cokernel(IntMatrix(3, 0)) == AbelianGroup::free(3));
  CHECK(cokernel(IntMatrix{{2, 0}, {0, 3}}) == AbelianGroup::from_cyclic_orders(0, {Integer(6)}));
  CHECK(cokernel(IntMatrix{{1}, {1}, {1}}) == AbelianGroup::free(2));
  CHECK(cokernel(IntMatrix{{2}, {4}}) ==
        AbelianGroup::from_cyclic_orders(1, {Integer(2)}));
}
