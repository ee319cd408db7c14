#include <doctest.h>

#include "eschorb/curvature.hpp"
#include "eschorb/error.hpp"
#include "support.hpp"

using namespace eschorb;
using testing::interlocked_pair;
using testing::separated_pair;
using testing::wallach;

namespace {

PlanePoint pt(long x, long y) { return {Integer(x), Integer(y)}; }

PlanePoint sum(const Triangle& t) {
  return {t[0].x + t[1].x + t[2].x, t[0].y + t[1].y + t[2].y};
}

// Brute force on a 1/64 grid: is some point of segment AB (parameter s/64)
// equal to a point of the triangle with barycentric weights (e1,e2,e3)/64?
bool sampled_hit(const PlanePoint& A, const PlanePoint& B, const Triangle& T) {
  const long n = 64;
  long ax = A.x.get_si(), ay = A.y.get_si(), bx = B.x.get_si(), by = B.y.get_si();
  long px[3], py[3];
  for (int k = 0; k < 3; ++k) {
    px[k] = T[k].x.get_si();
    py[k] = T[k].y.get_si();
  }
  for (long s = 0; s <= n; ++s) {
    long x = ax * (n - s) + bx * s, y = ay * (n - s) + by * s;
    for (long e1 = 0; e1 <= n; ++e1)
      for (long e2 = 0; e1 + e2 <= n; ++e2) {
        long e3 = n - e1 - e2;
        if (px[0] * e1 + px[1] * e2 + px[2] * e3 == x && py[0] * e1 + py[1] * e2 + py[2] * e3 == y)
          return true;
      }
  }
  return false;
}

bool every_edge_hits(const Triangle& moving, const Triangle& fixed) {
  for (auto [i, j] : kTriangleEdges)
    if (!sampled_hit(moving[i - 1], moving[j - 1], fixed)) return false;
  return true;
}

}  // namespace

TEST_CASE("triangle coordinates") {
  auto t1 = triangles(interlocked_pair());
  CHECK(t1.P == Triangle{pt(-6, 1), pt(-5, -3), pt(-2, 1)});
  CHECK(t1.Q == Triangle{pt(-4, 2), pt(-3, -2), pt(-6, -1)});
  CHECK(sum(t1.P) == pt(-13, -1));
  CHECK(sum(t1.Q) == pt(-13, -1));
  auto t2 = triangles(separated_pair());
  CHECK(t2.P == Triangle{pt(2, 3), pt(3, -3), pt(5, 0)});
  CHECK(t2.Q == Triangle{pt(1, 1), pt(2, -1), pt(7, 0)});
  CHECK(sum(t2.P) == pt(10, 0));
  auto tw = triangles(wallach());
  for (const auto& q : tw.Q) CHECK(q == pt(0, 0));
}

TEST_CASE("orientation and intersection predicates") {
  CHECK(orient(pt(0, 0), pt(1, 0), pt(0, 1)) == 1);
  CHECK(orient(pt(0, 0), pt(0, 1), pt(1, 0)) == -1);
  CHECK(orient(pt(0, 0), pt(2, 2), pt(5, 5)) == 0);
  // huge coordinates stay exact
  PlanePoint big{Integer("1000000000000000000000"), Integer("1000000000000000000001")};
  CHECK(orient(pt(0, 0), big, {big.x * 2, big.y * 2}) == 0);
  CHECK(orient(pt(0, 0), big, {big.x * 2, big.y * 2 + 1}) == 1);

  Triangle tri{pt(0, 0), pt(4, 0), pt(0, 4)};
  CHECK(point_in_hull(pt(1, 1), tri));
  CHECK(point_in_hull(pt(2, 2), tri));  // boundary counts
  CHECK_FALSE(point_in_hull(pt(3, 3), tri));
  CHECK(segment_intersects_triangle(pt(1, 1), pt(1, 1), tri));
  CHECK(segment_intersects_triangle(pt(-1, 2), pt(5, 2), tri));
  CHECK(segment_intersects_triangle(pt(4, 0), pt(6, 0), tri));  // touches a vertex
  CHECK_FALSE(segment_intersects_triangle(pt(3, 3), pt(5, 1), tri));
  CHECK(segments_intersect(pt(0, 0), pt(2, 2), pt(0, 2), pt(2, 0)));
  CHECK(segments_intersect(pt(0, 0), pt(2, 0), pt(2, 0), pt(3, 0)));
  CHECK_FALSE(segments_intersect(pt(0, 0), pt(1, 0), pt(2, 0), pt(3, 0)));

  // degenerate hulls
  Triangle seg{pt(0, 0), pt(2, 2), pt(4, 4)};
  CHECK(point_in_hull(pt(3, 3), seg));
  CHECK_FALSE(point_in_hull(pt(3, 2), seg));
  CHECK(segment_intersects_triangle(pt(0, 4), pt(4, 0), seg));
  CHECK_FALSE(segment_intersects_triangle(pt(5, 0), pt(6, 0), seg));
  Triangle dot{pt(1, 1), pt(1, 1), pt(1, 1)};
  CHECK(point_in_hull(pt(1, 1), dot));
  CHECK(segment_intersects_triangle(pt(0, 0), pt(2, 2), dot));
  CHECK_FALSE(segment_intersects_triangle(pt(0, 0), pt(2, 3), dot));

  auto f2 = triangles(separated_pair());
  CHECK_FALSE(segment_intersects_triangle(f2.Q[0], f2.Q[1], f2.P));
  auto f1 = triangles(interlocked_pair());
  for (auto [i, j] : kTriangleEdges) {
    CHECK(segment_intersects_triangle(f1.Q[i - 1], f1.Q[j - 1], f1.P));
    CHECK(segment_intersects_triangle(f1.P[i - 1], f1.P[j - 1], f1.Q));
  }
}

TEST_CASE("curvature verdicts on anchors") {
  auto w2 = positive_given_orientation(separated_pair());
  REQUIRE(w2);
  CHECK(*w2 == TriangleEdge{Side::Q, 1, 2});
  CHECK(triangle_edge_name(*w2) == "Q1Q2");
  CHECK_FALSE(positive_given_orientation(wallach()));

  // these coordinates are not an almost free action; only the triangles are decided
  CHECK_FALSE(is_almost_free(interlocked_pair()));
  CHECK_THROWS_AS(positive_given_orientation(interlocked_pair()), Error);
  CHECK_THROWS_AS(admits_positive_curvature(interlocked_pair()), Error);
  auto tp1 = triangles(interlocked_pair());
  CHECK_FALSE(first_missing_edge(tp1.Q, Side::Q, tp1.P));
  CHECK_FALSE(first_missing_edge(tp1.P, Side::P, tp1.Q));
  auto v1 = triangle_verdict(tp1);
  CHECK(v1.cls == CurvatureClass::NotPositive);
  CHECK_FALSE(v1.witness);
  CHECK(triangle_projection_verdict(tp1) == CurvatureClass::NotPositive);
  auto v2 = admits_positive_curvature(separated_pair());
  CHECK(v2.cls == CurvatureClass::PositiveAsGiven);
  CHECK(v2.witness == TriangleEdge{Side::Q, 1, 2});
  auto vw = admits_positive_curvature(wallach());
  CHECK(vw.cls == CurvatureClass::PositiveAfterSwap);
  REQUIRE(vw.witness);
  CHECK(vw.witness->side == Side::P);
  CHECK(admits_positive_curvature(cor_nonnegact_3(1, 1, 1).params).cls == CurvatureClass::NotPositive);

  CHECK(separating_axis_check(separated_pair()));
  CHECK(separating_axis_decision(separated_pair()) == CurvatureClass::PositiveAsGiven);
  CHECK(triangle_verdict(triangles(separated_pair())) == v2);

  for (auto c : {CurvatureClass::PositiveAsGiven, CurvatureClass::PositiveAfterSwap,
                 CurvatureClass::NotPositive})
    CHECK(parse_curvature_class(curvature_class_name(c)) == c);
  CHECK_FALSE(parse_curvature_class("maybe"));
}

TEST_CASE("projection and segment decisions agree on random samples") {
  std::mt19937_64 rng(1234);
  for (int iter = 0; iter < 10000; ++iter) {
    auto t = testing::random_almost_free(rng, 8);
    REQUIRE_MESSAGE(separating_axis_check(t), t.to_string());
  }
}

TEST_CASE("swap exchanges the positive flavours") {
  std::mt19937_64 rng(77);
  for (int iter = 0; iter < 2000; ++iter) {
    auto t = testing::random_almost_free(rng, 6);
    auto a = admits_positive_curvature(t).cls;
    auto b = admits_positive_curvature(apply_equivalence(t, OpSwap{})).cls;
    if (a == CurvatureClass::NotPositive) {
      CHECK(b == CurvatureClass::NotPositive);
    } else if (a == CurvatureClass::PositiveAfterSwap) {
      CHECK(b == CurvatureClass::PositiveAsGiven);
    } else {
      CHECK(b != CurvatureClass::NotPositive);
    }
  }
}

TEST_CASE("midpoint of Q1Q2 stays in the hull when Q3 does") {
  std::mt19937_64 rng(42);
  int used = 0;
  for (int iter = 0; iter < 20000; ++iter) {
    auto t = testing::random_params(rng, 6);
    auto tp = triangles(t);
    if (!point_in_hull(tp.Q[2], tp.P)) continue;
    ++used;
    Triangle twice;
    for (int k = 0; k < 3; ++k) twice[k] = {2 * tp.P[k].x, 2 * tp.P[k].y};
    PlanePoint mid2{tp.Q[0].x + tp.Q[1].x, tp.Q[0].y + tp.Q[1].y};
    CHECK_MESSAGE(point_in_hull(mid2, twice), t.to_string());
  }
  CHECK(used > 500);
}

TEST_CASE("degenerate triangle dichotomy") {
  std::mt19937_64 rng(8);
  int used = 0;
  for (int iter = 0; iter < 20000 && used < 1500; ++iter) {
    auto t = testing::random_params(rng, 6);
    // make Q2 = Q3 (or P2 = P3 on odd iterations) keeping the sums
    auto p = t.p(), q = t.q(), a = t.a(), b = t.b();
    auto& x = iter % 2 ? p : q;
    auto& y = iter % 2 ? a : b;
    Integer dx = x[1] - x[2], dy = y[1] - y[2];
    x[2] += dx;
    x[0] -= dx;
    y[2] += dy;
    y[0] -= dy;
    auto d = TorusParams::make(p, q, a, b);
    if (!is_almost_free(d)) continue;
    ++used;
    CHECK_MESSAGE(admits_positive_curvature(d).positive(), d.to_string());
  }
  CHECK(used >= 1000);
}

TEST_CASE("rational sampling never contradicts the exact decision") {
  std::mt19937_64 rng(2718);
  int sampled_not_positive = 0;
  for (int iter = 0; iter < 120; ++iter) {
    auto t = testing::random_almost_free(rng, 3);
    auto tp = triangles(t);
    for (auto [i, j] : kTriangleEdges) {
      if (sampled_hit(tp.Q[i - 1], tp.Q[j - 1], tp.P))
        CHECK(segment_intersects_triangle(tp.Q[i - 1], tp.Q[j - 1], tp.P));
    }
    bool blocked = every_edge_hits(tp.Q, tp.P) && every_edge_hits(tp.P, tp.Q);
    if (blocked) {
      ++sampled_not_positive;
      CHECK_MESSAGE(admits_positive_curvature(t).cls == CurvatureClass::NotPositive, t.to_string());
    }
  }
  CHECK(sampled_not_positive > 0);
}

TEST_CASE("reduction to cohomogeneity two") {
  auto check_reduced = [](const TorusParams& t) {
    auto r = reduce_to_cohomogeneity_two(t);
    CHECK(apply_all(t, r.steps) == r.params);
    CHECK(interval_condition(r.params));
    const auto &p = r.params.p(), &q = r.params.q();
    bool two_equal = p[0] == p[1] || p[0] == p[2] || p[1] == p[2] || q[0] == q[1] ||
                     q[0] == q[2] || q[1] == q[2];
    CHECK(two_equal);
    CHECK(admits_positive_curvature(r.params).positive());
  };
  check_reduced(separated_pair());
  check_reduced(testing::sphere_z3());
  check_reduced(wallach());
  CHECK_THROWS_AS(reduce_to_cohomogeneity_two(cor_nonnegact_3(1, 1, 1).params), Error);

  std::mt19937_64 rng(31);
  int positives = 0;
  for (int iter = 0; iter < 3000; ++iter) {
    auto t = testing::random_almost_free(rng, 6);
    if (!admits_positive_curvature(t).positive()) continue;
    ++positives;
    check_reduced(t);
  }
  CHECK(positives > 1000);
}

TEST_CASE("svg export") {
  auto svg = export_svg(separated_pair());
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("id=\"delta_p\"") != std::string::npos);
  CHECK(svg.find("id=\"delta_q\"") != std::string::npos);
  CHECK(svg.find("<line id=\"witness\" class=\"Q1Q2\" x1=\"1\" y1=\"-1\" x2=\"2\" y2=\"1\"") !=
        std::string::npos);
  CHECK(export_svg(interlocked_pair()).find("witness") == std::string::npos);
  CHECK(export_svg(cor_nonnegact_3(1, 1, 1).params).find("witness") == std::string::npos);
}
