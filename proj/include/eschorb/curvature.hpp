#ifndef ESCHORB_CURVATURE_HPP
#define ESCHORB_CURVATURE_HPP

#include <array>
#include <optional>
#include <string>

#include "eschorb/params.hpp"

namespace eschorb {

struct PlanePoint {
  Integer x, y;
  bool operator==(const PlanePoint&) const = default;
};
using Triangle = std::array<PlanePoint, 3>;

// P_i = (p_i, a_i), Q_i = (q_i, b_i); both triangles share their centroid.
struct TrianglePair {
  Triangle P, Q;
};
TrianglePair triangles(const TorusParams& t);

int orient(const PlanePoint& a, const PlanePoint& b, const PlanePoint& c);

// Closed semantics throughout: touching counts.
bool point_in_hull(const PlanePoint& x, const Triangle& tri);
bool segments_intersect(const PlanePoint& a, const PlanePoint& b, const PlanePoint& c,
                        const PlanePoint& d);
bool segment_intersects_triangle(const PlanePoint& a, const PlanePoint& b, const Triangle& tri);

enum class Side { P, Q };

// Edge (i,j) of the triangle on the given side, 1 <= i < j <= 3.
struct TriangleEdge {
  Side side;
  int i, j;
  bool operator==(const TriangleEdge&) const = default;
};
inline constexpr std::array<std::array<int, 2>, 3> kTriangleEdges = {{{1, 2}, {1, 3}, {2, 3}}};
std::string triangle_edge_name(const TriangleEdge& e);  // "Q1Q2"

// First edge of Delta_Q missing Delta_P.
std::optional<TriangleEdge> positive_given_orientation(const TorusParams& t);

enum class CurvatureClass { PositiveAsGiven, PositiveAfterSwap, NotPositive };
std::string curvature_class_name(CurvatureClass c);
std::optional<CurvatureClass> parse_curvature_class(const std::string& s);

struct CurvatureVerdict {
  CurvatureClass cls = CurvatureClass::NotPositive;
  // A Q-edge for PositiveAsGiven, a P-edge for PositiveAfterSwap.
  std::optional<TriangleEdge> witness;
  bool positive() const { return cls != CurvatureClass::NotPositive; }
  bool operator==(const CurvatureVerdict&) const = default;
};
CurvatureVerdict admits_positive_curvature(const TorusParams& t);

// Same decisions on bare triangles; no almost-freeness needed, so they also
// apply to pictures whose coordinates do not define an orbifold.
std::optional<TriangleEdge> first_missing_edge(const Triangle& moving, Side side, const Triangle& fixed);
CurvatureVerdict triangle_verdict(const TrianglePair& tp);
CurvatureClass triangle_projection_verdict(const TrianglePair& tp);

// Projection decision: an axis normal to an edge of either triangle along
// which no vertex of the moving triangle lands in the other's interval.
struct SeparatingAxis {
  TriangleEdge edge;  // the edge whose normal is the axis
};
std::optional<SeparatingAxis> separating_axis_given_orientation(const TorusParams& t);
CurvatureClass separating_axis_decision(const TorusParams& t);
bool separating_axis_check(const TorusParams& t);

// GL(2,Z) change making the separating edge vertical; the result has two
// equal q-entries (or p-entries) and its q-values avoid [min p, max p].
Reparametrization reduce_to_cohomogeneity_two(const TorusParams& t);
bool interval_condition(const TorusParams& t);

std::string export_svg(const TorusParams& t);

}  // namespace eschorb

#endif
