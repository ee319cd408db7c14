#include "eschorb/curvature.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace eschorb {

TrianglePair triangles(const TorusParams& t) {
  TrianglePair tp;
  for (int i = 0; i < 3; ++i) {
    tp.P[i] = {t.p()[i], t.a()[i]};
    tp.Q[i] = {t.q()[i], t.b()[i]};
  }
  return tp;
}

int orient(const PlanePoint& a, const PlanePoint& b, const PlanePoint& c) {
  Integer d = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return sgn(d);
}

namespace {

bool on_segment(const PlanePoint& x, const PlanePoint& a, const PlanePoint& b) {
  if (orient(a, b, x) != 0) return false;
  return std::min(a.x, b.x) <= x.x && x.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= x.y && x.y <= std::max(a.y, b.y);
}

}  // namespace

bool segments_intersect(const PlanePoint& a, const PlanePoint& b, const PlanePoint& c,
                        const PlanePoint& d) {
  int o1 = orient(a, b, c), o2 = orient(a, b, d), o3 = orient(c, d, a), o4 = orient(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  return on_segment(c, a, b) || on_segment(d, a, b) || on_segment(a, c, d) || on_segment(b, c, d);
}

bool point_in_hull(const PlanePoint& x, const Triangle& tri) {
  if (orient(tri[0], tri[1], tri[2]) != 0) {
    int o1 = orient(tri[0], tri[1], x), o2 = orient(tri[1], tri[2], x), o3 = orient(tri[2], tri[0], x);
    return (o1 >= 0 && o2 >= 0 && o3 >= 0) || (o1 <= 0 && o2 <= 0 && o3 <= 0);
  }
  // hull is a segment or a point: the union of the pairwise segments
  return on_segment(x, tri[0], tri[1]) || on_segment(x, tri[0], tri[2]) ||
         on_segment(x, tri[1], tri[2]);
}

bool segment_intersects_triangle(const PlanePoint& a, const PlanePoint& b, const Triangle& tri) {
  if (point_in_hull(a, tri) || point_in_hull(b, tri)) return true;
  for (auto [i, j] : kTriangleEdges)
    if (segments_intersect(a, b, tri[i - 1], tri[j - 1])) return true;
  return false;
}

std::string triangle_edge_name(const TriangleEdge& e) {
  const char* s = e.side == Side::P ? "P" : "Q";
  return std::string(s) + std::to_string(e.i) + s + std::to_string(e.j);
}

std::optional<TriangleEdge> first_missing_edge(const Triangle& moving, Side side, const Triangle& fixed) {
  for (auto [i, j] : kTriangleEdges)
    if (!segment_intersects_triangle(moving[i - 1], moving[j - 1], fixed))
      return TriangleEdge{side, i, j};
  return std::nullopt;
}

std::optional<TriangleEdge> positive_given_orientation(const TorusParams& t) {
  require_almost_free(t);
  auto tp = triangles(t);
  return first_missing_edge(tp.Q, Side::Q, tp.P);
}

std::string curvature_class_name(CurvatureClass c) {
  switch (c) {
    case CurvatureClass::PositiveAsGiven: return "PositiveAsGiven";
    case CurvatureClass::PositiveAfterSwap: return "PositiveAfterSwap";
    case CurvatureClass::NotPositive: return "NotPositive";
  }
  return "?";
}

std::optional<CurvatureClass> parse_curvature_class(const std::string& s) {
  for (auto c : {CurvatureClass::PositiveAsGiven, CurvatureClass::PositiveAfterSwap,
                 CurvatureClass::NotPositive})
    if (curvature_class_name(c) == s) return c;
  return std::nullopt;
}

CurvatureVerdict triangle_verdict(const TrianglePair& tp) {
  if (auto w = first_missing_edge(tp.Q, Side::Q, tp.P)) return {CurvatureClass::PositiveAsGiven, w};
  // swapping (p,a) with (q,b) swaps the triangles
  if (auto w = first_missing_edge(tp.P, Side::P, tp.Q)) return {CurvatureClass::PositiveAfterSwap, w};
  return {CurvatureClass::NotPositive, std::nullopt};
}

CurvatureVerdict admits_positive_curvature(const TorusParams& t) {
  require_almost_free(t);
  return triangle_verdict(triangles(t));
}

namespace {

// Axis normal to an edge of either triangle such that no vertex of `moving`
// projects into the projection interval of `fixed`. Edges of `moving` are
// tried first.
std::optional<SeparatingAxis> find_axis(const Triangle& fixed, Side fixed_side,
                                        const Triangle& moving, Side moving_side) {
  for (int pass = 0; pass < 2; ++pass) {
    const Triangle& src = pass == 0 ? moving : fixed;
    Side side = pass == 0 ? moving_side : fixed_side;
    for (auto [i, j] : kTriangleEdges) {
      Integer dx = src[j - 1].x - src[i - 1].x, dy = src[j - 1].y - src[i - 1].y;
      if (dx == 0 && dy == 0) continue;
      auto proj = [&](const PlanePoint& z) -> Integer { return dx * z.y - dy * z.x; };
      Integer lo = proj(fixed[0]), hi = lo;
      for (int k = 1; k < 3; ++k) {
        Integer v = proj(fixed[k]);
        if (v < lo) lo = v;
        if (v > hi) hi = v;
      }
      bool separated = true;
      for (const auto& z : moving) {
        Integer v = proj(z);
        if (lo <= v && v <= hi) {
          separated = false;
          break;
        }
      }
      if (separated) return SeparatingAxis{TriangleEdge{side, i, j}};
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<SeparatingAxis> separating_axis_given_orientation(const TorusParams& t) {
  require_almost_free(t);
  auto tp = triangles(t);
  return find_axis(tp.P, Side::P, tp.Q, Side::Q);
}

CurvatureClass separating_axis_decision(const TorusParams& t) {
  require_almost_free(t);
  return triangle_projection_verdict(triangles(t));
}

CurvatureClass triangle_projection_verdict(const TrianglePair& tp) {
  if (find_axis(tp.P, Side::P, tp.Q, Side::Q)) return CurvatureClass::PositiveAsGiven;
  if (find_axis(tp.Q, Side::Q, tp.P, Side::P)) return CurvatureClass::PositiveAfterSwap;
  return CurvatureClass::NotPositive;
}

bool separating_axis_check(const TorusParams& t) {
  return separating_axis_decision(t) == admits_positive_curvature(t).cls;
}

bool interval_condition(const TorusParams& t) {
  const Triple& p = t.p();
  Integer lo = std::min({p[0], p[1], p[2]}), hi = std::max({p[0], p[1], p[2]});
  for (const auto& q : t.q())
    if (lo <= q && q <= hi) return false;
  return true;
}

Reparametrization reduce_to_cohomogeneity_two(const TorusParams& t) {
  auto verdict = admits_positive_curvature(t);
  if (!verdict.positive())
    throw Error(ErrorKind::NoWitness, "no positively curved orientation for " + t.to_string());
  Reparametrization r{t, {}};
  if (verdict.cls == CurvatureClass::PositiveAfterSwap) {
    r.params = apply_equivalence(r.params, OpSwap{});
    r.steps.push_back(OpSwap{});
  }
  auto axis = separating_axis_given_orientation(r.params);
  if (!axis)
    throw Error(ErrorKind::NoWitness, "no separating edge found for " + r.params.to_string());

  auto tp = triangles(r.params);
  const Triangle& tri = axis->edge.side == Side::P ? tp.P : tp.Q;
  const PlanePoint &X = tri[axis->edge.j - 1], &Y = tri[axis->edge.i - 1];
  Integer v1 = X.x - Y.x, v2 = X.y - Y.y;
  Integer g = gcd_list({v1, v2});
  v1 /= g;
  v2 /= g;
  if (v2 < 0 || (v2 == 0 && v1 < 0)) {
    v1 = -v1;
    v2 = -v2;
  }
  // m*v1 + n*v2 = 1
  Bezout bz = ext_gcd(v1, v2);
  OpGl2 A{v2, -v1, bz.x, bz.y};
  if (!(A.a11 == 1 && A.a12 == 0 && A.a21 == 0 && A.a22 == 1)) {
    r.params = apply_equivalence(r.params, A);
    r.steps.push_back(A);
  }
  if (!interval_condition(r.params))
    throw Error(ErrorKind::NoWitness, "reduction failed the interval condition for " + t.to_string());
  return r;
}

std::string export_svg(const TorusParams& t) {
  auto tp = triangles(t);
  std::optional<CurvatureVerdict> verdict;
  if (is_almost_free(t)) verdict = admits_positive_curvature(t);

  Integer minx = tp.P[0].x, maxx = minx, miny = tp.P[0].y, maxy = miny;
  for (const auto* tri : {&tp.P, &tp.Q})
    for (const auto& z : *tri) {
      minx = std::min(minx, z.x);
      maxx = std::max(maxx, z.x);
      miny = std::min(miny, z.y);
      maxy = std::max(maxy, z.y);
    }
  // y axis points up: plot (x, -y)
  Integer w = maxx - minx + 2, h = maxy - miny + 2;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"480\" height=\"480\" viewBox=\""
     << (minx - 1) << " " << (-maxy - 1) << " " << w << " " << h
     << "\" preserveAspectRatio=\"xMidYMid meet\">\n";
  os << "  <title>" << t.to_string() << "</title>\n";
  auto poly = [&](const Triangle& tri, const char* id, const char* stroke, const char* fill) {
    os << "  <polygon id=\"" << id << "\" points=\"";
    for (int k = 0; k < 3; ++k) os << (k ? " " : "") << tri[k].x << "," << -tri[k].y;
    os << "\" fill=\"" << fill << "\" fill-opacity=\"0.25\" stroke=\"" << stroke
       << "\" stroke-width=\"2\" vector-effect=\"non-scaling-stroke\"/>\n";
  };
  poly(tp.P, "delta_p", "#2166ac", "#92c5de");
  poly(tp.Q, "delta_q", "#b2182b", "#f4a582");
  auto dots = [&](const Triangle& tri, const char* name, const char* color) {
    for (int k = 0; k < 3; ++k)
      os << "  <circle id=\"" << name << k + 1 << "\" cx=\"" << tri[k].x << "\" cy=\"" << -tri[k].y
         << "\" r=\"0.08\" fill=\"" << color << "\"/>\n";
  };
  dots(tp.P, "P", "#2166ac");
  dots(tp.Q, "Q", "#b2182b");
  if (verdict && verdict->witness) {
    const auto& e = *verdict->witness;
    const Triangle& tri = e.side == Side::P ? tp.P : tp.Q;
    const auto &A = tri[e.i - 1], &B = tri[e.j - 1];
    os << "  <line id=\"witness\" class=\"" << triangle_edge_name(e) << "\" x1=\"" << A.x
       << "\" y1=\"" << -A.y << "\" x2=\"" << B.x << "\" y2=\"" << -B.y
       << "\" stroke=\"#d6604d\" stroke-width=\"5\" vector-effect=\"non-scaling-stroke\"/>\n";
  }
  os << "  <desc>" << (verdict ? curvature_class_name(verdict->cls) : std::string("NotAlmostFree"))
     << "</desc>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace eschorb
