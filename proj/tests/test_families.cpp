#include <doctest.h>

#include "eschorb/cohomology.hpp"
#include "eschorb/curvature.hpp"
#include "eschorb/error.hpp"
#include "eschorb/families.hpp"
#include "eschorb/singular.hpp"

using namespace eschorb;

namespace {

AbelianGroup Z(long k) { return AbelianGroup::from_cyclic_orders(0, {Integer(k)}); }

void expect_side_condition(void (*fn)()) {
  try {
    fn();
    FAIL("expected SideConditionViolated");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SideConditionViolated);
  }
}

bool all_pass(const FamilyFixture& f, std::size_t max_degree = 12) {
  auto r = verify_fixture(f, max_degree);
  return r.valid && r.all_pass();
}

}  // namespace

TEST_CASE("single point family examples") {
  auto f = cor_nonnegact_1(1, 0);
  CHECK(f.params == TorusParams::of({1, -1, -1}, {-1, 0, 0}, {1, 1, -1}, {0, 1, 0}));
  CHECK(*f.predictions.l_id == 1);
  CHECK(*f.predictions.l_23 == 3);
  CHECK(*f.predictions.n11 == 1);
  CHECK(*f.predictions.single_point_order == 3);
  CHECK(all_pass(f));

  auto c3 = cor_nonnegact_3(1, 1, 1);
  CHECK(c3.params == TorusParams::of({1, -2, 0}, {-1, 0, 0}, {-2, 1, -1}, {0, 0, -2}));
  CHECK(*c3.predictions.l_id == -2);
  CHECK(*c3.predictions.l_23 == 2);
  CHECK(*c3.predictions.n11 == 2);
  CHECK(all_pass(c3));

  auto eq = cor_nonnegact_1(3, 3);
  CHECK(*eq.predictions.l_id == 2);
  CHECK(*eq.predictions.l_23 == 2);
  auto g = singular_graph(eq.params);
  CHECK(g.singular_vertices() == std::vector<Vertex>{Vertex::Id, Vertex::T23});
  CHECK(parity_census(g).both_parities());

  expect_side_condition([] { cor_nonnegact_2(1, 1, 1, 0); });
  expect_side_condition([] { cor_nonnegact_2(-1, -2, 2, 0); });
  expect_side_condition([] { cor_nonnegact_3(0, 1, 1); });
  expect_side_condition([] { cor_nonnegact_3(1, 1, 3); });
  expect_side_condition([] { cor_nonnegact_4(2, 1, 1, 1); });
  expect_side_condition([] { cor_nonnegact_4(1, 0, 1, -1); });
}

TEST_CASE("curvature claim is gated only on nondegenerate singular sets") {
  // b2 = b3: the singular set is a smooth Z2 sphere and the space is positively curved
  auto eq = verify_fixture(cor_nonnegact_1(2, 2));
  CHECK(eq.all_pass());
  bool flagged_curvature = false;
  for (const auto& c : eq.checks)
    if (c.name == "curvature") {
      CHECK_FALSE(c.gating);
      flagged_curvature = !c.pass;
    }
  CHECK(flagged_curvature);
  // b2 - b3 = 1 stays gated
  for (const auto& c : verify_fixture(cor_nonnegact_1(1, 0)).checks)
    if (c.name == "curvature") CHECK(c.gating);
}

TEST_CASE("smooth sphere family examples") {
  auto f1 = smooth_sphere_1(0, -2);
  CHECK(*f1.predictions.smooth_sphere_order == 3);
  CHECK(*f1.predictions.pattern == CohomologyPattern::BranchOne);
  CHECK(*f1.predictions.curvature == CurvaturePrediction::Positive);
  CHECK(all_pass(f1));

  auto f3 = smooth_sphere_3(0, 5);
  CHECK(*f3.predictions.smooth_sphere_order == 4);
  CHECK(*f3.predictions.pattern == CohomologyPattern::BranchTwo);
  CHECK(all_pass(f3));

  auto f5 = smooth_sphere_5(1);
  CHECK(*f5.predictions.smooth_sphere_order == 2);
  CHECK(*f5.predictions.curvature == CurvaturePrediction::NotPositive);
  CHECK(admits_positive_curvature(f5.params).cls == CurvatureClass::NotPositive);
  CHECK(all_pass(f5));

  expect_side_condition([] { smooth_sphere_2(1, 1, 2, 2); });
  expect_side_condition([] { smooth_sphere_6(1, 0, 1); });
  expect_side_condition([] { smooth_sphere_6(2, 0, 2); });
}

TEST_CASE("two singular points example") {
  auto f = example_two_singular(3, 0, 1);
  CHECK(f.params == TorusParams::of({1, -1, -1}, {-1, 0, 0}, {3, 1, -1}, {0, 0, 3}));
  CHECK(all_pass(f, 16));
  CHECK(cohomology_profile(f.params).stable->group == Z(5));

  auto sq = example_two_singular(1, 0, -1);
  auto prof = cohomology_profile(sq.params);
  REQUIRE(prof.stable);
  CHECK(prof.stable->group.torsion_order() == 1);
  CHECK(all_pass(sq));

  auto degenerate = example_two_singular(0, 0, 1);
  auto r = verify_fixture(degenerate);
  CHECK((!r.valid || r.all_pass()));
  if (!r.valid) CHECK_FALSE(r.skip_reason.empty());

  expect_side_condition([] { example_two_singular(2, 0, 1); });
  expect_side_condition([] { example_two_singular(-2, 0, 1); });
  expect_side_condition([] { example_two_singular(3, 0, 0); });
}

TEST_CASE("family grids") {
  for (const char* family : {"cor-nonnegact", "smooth-sphere", "example-two-singular"}) {
    CAPTURE(family);
    GridFilter filter;
    filter.range = 4;
    auto grid = family_grid(family, filter);
    CHECK(grid.size() > 20);
    std::size_t valid = 0;
    for (const auto& f : grid) {
      auto r = verify_fixture(f);
      CHECK_MESSAGE(r.all_pass(), f.label);
      valid += r.valid;
    }
    CHECK(valid > 0);
  }
  CHECK_FALSE(known_family("nope"));
  CHECK_THROWS_AS(family_grid("nope", {}), Error);

  GridFilter only3;
  only3.case_no = 3;
  only3.range = 2;
  for (const auto& f : family_grid("smooth-sphere", only3)) CHECK(f.family_case == 3);

  GridFilter pinned;
  pinned.k = 3;
  pinned.l = 1;
  for (const auto& f : family_grid("example-two-singular", pinned)) {
    auto r = verify_fixture(f);
    CHECK(r.all_pass());
    CHECK(cohomology_profile(f.params, 16).stable->group == Z(5));
  }
}
