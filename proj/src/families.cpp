#include "eschorb/families.hpp"

#include <algorithm>
#include <sstream>
#include <string_view>

namespace eschorb {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw Error(ErrorKind::SideConditionViolated, what);
}

Integer exact_div(const Integer& n, const Integer& d, const std::string& what) {
  require(d != 0 && mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()), what);
  return n / d;
}

std::string join_label(std::initializer_list<std::pair<const char*, long>> kv) {
  std::ostringstream os;
  bool first = true;
  for (auto [k, v] : kv) {
    os << (first ? "" : ",") << k << "=" << v;
    first = false;
  }
  return os.str();
}

AbelianGroup cyclic(const Integer& k) { return AbelianGroup::from_cyclic_orders(0, {k}); }

void set_pattern(Predictions& pr, CohomologyPattern p, const Integer& k, long l = 0) {
  pr.pattern = p;
  Integer g = gcd_list({Integer(2), k});
  switch (p) {
    case CohomologyPattern::BranchOne:
      pr.h6 = AbelianGroup::from_cyclic_orders(1, {k});
      pr.stable = AbelianGroup::from_cyclic_orders(0, {k, k});
      break;
    case CohomologyPattern::BranchTwo:
      pr.h6 = AbelianGroup::from_cyclic_orders(1, {g});
      pr.stable = AbelianGroup::from_cyclic_orders(0, {g, k * k / g});
      break;
    case CohomologyPattern::Teardrop:
      pr.stable = cyclic(k);
      break;
    case CohomologyPattern::TwoSingular: {
      Integer order = abs(k * k - Integer((1 + l) * (1 + l)));
      pr.stable = AbelianGroup::from_cyclic_orders(0, {g, order / g});
      break;
    }
  }
}

FamilyFixture make_fixture(const char* family, int case_no, std::string label, TorusParams t) {
  return FamilyFixture{family, case_no, std::move(label), std::move(t), {}, {},
                       std::string_view(family) == "cor-nonnegact"};
}

}  // namespace

std::string pattern_name(CohomologyPattern p) {
  switch (p) {
    case CohomologyPattern::BranchOne: return "branch-one";
    case CohomologyPattern::BranchTwo: return "branch-two";
    case CohomologyPattern::Teardrop: return "teardrop";
    case CohomologyPattern::TwoSingular: return "two-singular";
  }
  return "?";
}

FamilyFixture cor_nonnegact_1(long b2, long b3) {
  auto t = TorusParams::of({1, -1, -1}, {-1, 0, 0}, {b2 + b3, 1, -1}, {0, b2, b3});
  auto f = make_fixture("cor-nonnegact", 1, join_label({{"b2", b2}, {"b3", b3}}), t);
  auto& pr = f.predictions;
  pr.l_id = 2 + b3 - b2;
  pr.l_23 = 2 + b2 - b3;
  pr.n11 = gcd_list({Integer(2), Integer(b2 - b3)});
  pr.curvature = CurvaturePrediction::NotPositive;
  long d = std::labs(b2 - b3);
  if (d == 1 || d == 3) {
    pr.single_point_order = d + 2;
    set_pattern(pr, CohomologyPattern::Teardrop, d + 2);
  }
  return f;
}

FamilyFixture cor_nonnegact_2(long x, long y, long l, long b2) {
  require(l == 1 || l == -1, "l must be +-1");
  require((x == -1 && y == -2 * l) || (x == -2 && y == -l), "(x,y) must be (-1,-2l) or (-2,-l)");
  Integer a1 = exact_div(Integer(b2 * (x - 2) + y + 1 - l), Integer(x - 1), "x-1 must divide a1");
  Integer a3 = exact_div(Integer((b2 - 1) * x - l), Integer(x - 1), "x-1 must divide a3");
  auto t = TorusParams::make(triple(1, x - 1, -1), triple(x - 1, 0, 0), {a1, Integer(1), a3},
                             triple(0, b2, b2 - y));
  auto f = make_fixture("cor-nonnegact", 2,
                        join_label({{"x", x}, {"y", y}, {"l", l}, {"b2", b2}}), t);
  auto& pr = f.predictions;
  pr.l_id = 1 + l - x - y;
  pr.l_23 = 1 - l + y - x;
  pr.n11 = 1;
  pr.curvature = CurvaturePrediction::NotPositive;
  // printed alternatives kept for comparison
  f.cross_check.l_23 = 1 + l + y - x;
  if (l == -1 && x == -2 && y == 1) f.cross_check.single_point_order = 3;
  return f;
}

FamilyFixture cor_nonnegact_3(long c, long a2, long x) {
  require(c != 0 && a2 != 0, "c and a2 must be nonzero");
  require(x == 1 || x == -1 || x == 2 || x == -2, "x must be +-1 or +-2");
  Integer X(x), C(c), A2(a2);
  Integer a1 = exact_div(-2 * C * A2, X, "x must divide 2*c*a2");
  Integer bb2 = exact_div(-C * A2 + 1, X, "x must divide -c*a2+1");
  Integer bb3 = exact_div(-C * A2 - 1, X, "x must divide -c*a2-1");
  Integer two_c_x = exact_div(2 * C, X, "x must divide 2c");
  auto t = TorusParams::make(triple(c, -x - c, x - c), triple(-c, 0, 0), {a1, A2, -A2},
                             {Integer(0), bb2, bb3});
  auto f = make_fixture("cor-nonnegact", 3, join_label({{"c", c}, {"a2", a2}, {"x", x}}), t);
  auto& pr = f.predictions;
  pr.l_id = -two_c_x;
  pr.l_23 = two_c_x;
  pr.n11 = gcd_list({Integer(2), two_c_x});
  pr.curvature = CurvaturePrediction::NotPositive;
  return f;
}

FamilyFixture cor_nonnegact_4(long a1, long a2, long x, long l) {
  require(x == 1 || x == -1, "x must be +-1");
  require(l == 1 || l == -1, "l must be +-1");
  require(!(l == 1 && a1 == 2 * a2), "(l,a1) = (1,2a2) excluded");
  require(!(l == -1 && std::labs(x * a1) == 1), "(l,x*a1) = (-1,+-1) excluded");
  auto t = TorusParams::make(triple(0, l * x, x), triple(x * (l + 1), 0, 0),
                             triple(a1, a2, a1 - a2), triple(0, a1 + x, a1 - x));
  auto f = make_fixture("cor-nonnegact", 4,
                        join_label({{"a1", a1}, {"a2", a2}, {"x", x}, {"l", l}}), t);
  auto& pr = f.predictions;
  long w = a1 - (l + 1) * a2;
  pr.l_id = x * w + 1 + l;
  pr.l_23 = x * w - (1 + l);
  pr.n11 = gcd_list({Integer(2), Integer(w)});
  pr.curvature = CurvaturePrediction::NotPositive;
  long d = std::labs(a1 - 2 * a2);
  if (l == 1 && (d == 1 || d == 3)) {
    pr.single_point_order = d + 2;
    set_pattern(pr, CohomologyPattern::Teardrop, d + 2);
  }
  return f;
}

namespace {

FamilyFixture sphere_fixture(int case_no, std::string label, TorusParams t, const Integer& k) {
  auto f = make_fixture("smooth-sphere", case_no, std::move(label), std::move(t));
  auto& pr = f.predictions;
  pr.smooth_sphere_order = abs(k);
  pr.curvature = case_no <= 4 ? CurvaturePrediction::Positive : CurvaturePrediction::NotPositive;
  set_pattern(pr, (case_no == 3 || case_no == 4) ? CohomologyPattern::BranchTwo
                                                 : CohomologyPattern::BranchOne,
              abs(k));
  return f;
}

}  // namespace

FamilyFixture smooth_sphere_1(long s, long u) {
  auto t = TorusParams::of({0, 1, -1}, {0, 0, 0}, {u - 1, s, u + 1 - s}, {0, u, u});
  return sphere_fixture(1, join_label({{"u", u}, {"s", s}}), t, Integer(1 - u));
}

FamilyFixture smooth_sphere_2(long m, long r, long c, long e) {
  require(c != 0, "c must be nonzero");
  Integer w = exact_div(Integer(e * m + 1), Integer(c), "c must divide e*m+1");
  Integer M(m), R(r);
  auto t = TorusParams::make(triple(c, c * r - e, e), triple(c * (r + 1), 0, 0),
                             {M * R, M + w, M * (R + 1) - w}, {Integer(0), M * (R + 1), M * (R + 1)});
  return sphere_fixture(2, join_label({{"m", m}, {"r", r}, {"c", c}, {"e", e}}), t, R);
}

FamilyFixture smooth_sphere_3(long s, long u) {
  auto t = TorusParams::of({0, 1, 1}, {2, 0, 0}, {u + 1, s, u - 1 - s}, {0, u, u});
  return sphere_fixture(3, join_label({{"u", u}, {"s", s}}), t, Integer(u - 2 * s - 1));
}

FamilyFixture smooth_sphere_4(long r, long c, long e, long m) {
  require(c != 0, "c must be nonzero");
  Integer w = exact_div(Integer(1 - e * m), Integer(c), "c must divide 1-e*m");
  Integer M(m), R(r);
  Integer b = 2 * w + M * (R - 1);
  auto t = TorusParams::make(triple(c, e - c * r, e), triple(2 * e + c * (1 - r), 0, 0),
                             {2 * w + M * R, w - M, w + M * (R - 1)}, {Integer(0), b, b});
  return sphere_fixture(4, join_label({{"r", r}, {"c", c}, {"e", e}, {"m", m}}), t, R);
}

FamilyFixture smooth_sphere_5(long a2) {
  auto t = TorusParams::of({1, -2, 0}, {-1, 0, 0}, {-2 * a2, a2, -a2}, {0, -a2 + 1, -a2 - 1});
  return sphere_fixture(5, join_label({{"a2", a2}}), t, Integer(2));
}

FamilyFixture smooth_sphere_6(long a1, long a2, long x) {
  require(x == 1 || x == -1, "|x| must be 1");
  require(a1 == 2 || a1 == -2, "|a1| must be 2");
  auto t = TorusParams::of({0, -x, x}, {0, 0, 0}, {a1, a2, a1 - a2}, {0, a1 + x, a1 - x});
  return sphere_fixture(6, join_label({{"a1", a1}, {"a2", a2}, {"x", x}}), t, Integer(2));
}

FamilyFixture example_two_singular(long k, long u, long l) {
  require(l == 1 || l == -1, "l must be +-1");
  require(k != 2 && k != -2, "k must not be +-2");
  auto t = TorusParams::of({1, -1, -1}, {-1, 0, 0}, {l - 1 + 2 * u + k, 1, -l}, {0, u, u + k});
  auto f = make_fixture("example-two-singular", 0, join_label({{"k", k}, {"u", u}, {"l", l}}), t);
  auto& pr = f.predictions;
  pr.endpoint_orders = std::array<Integer, 2>{Integer(std::labs(1 + k + l)), Integer(std::labs(1 - k + l))};
  pr.curvature = (l == 1 && k != 0) ? CurvaturePrediction::NotPositive : CurvaturePrediction::Positive;
  set_pattern(pr, CohomologyPattern::TwoSingular, Integer(k), l);
  return f;
}

bool FixtureReport::all_pass() const {
  if (!valid) return true;
  return std::all_of(checks.begin(), checks.end(),
                     [](const PredictionCheck& c) { return !c.gating || c.pass; });
}

std::size_t FixtureReport::flagged() const {
  return std::count_if(checks.begin(), checks.end(),
                       [](const PredictionCheck& c) { return !c.gating && !c.pass; });
}

namespace {

struct Context {
  const TorusParams& t;
  std::size_t max_degree;
  std::optional<SingularGraph> graph;
  std::optional<std::string> graph_error;
  std::optional<CohomologyProfile> profile;

  const SingularGraph* sgraph() {
    if (!graph && !graph_error) {
      try {
        graph = singular_graph(t);
      } catch (const Error& e) {
        graph_error = error_kind_name(e.kind());
      }
    }
    return graph ? &*graph : nullptr;
  }
  const CohomologyProfile& prof() {
    if (!profile) profile = cohomology_profile(t, max_degree);
    return *profile;
  }
};

std::string describe_sigma(const SingularGraph& g) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (Vertex v : g.singular_vertices()) {
    os << (first ? "" : ",") << vertex_name(v) << ":" << g.at(v).isotropy.group.label();
    first = false;
  }
  for (EdgeId e : g.singular_edges()) {
    const auto& r = g.at(e);
    os << (first ? "" : ",") << edge_name(e) << ":" << r.isotropy.group.label() << " "
       << edge_class_name(r.cls);
    first = false;
  }
  os << "}";
  return os.str();
}

void evaluate(const Predictions& pr, bool gating, Context& ctx, std::vector<PredictionCheck>& out) {
  auto add = [&](std::string name, std::string predicted, std::string computed, bool pass) {
    out.push_back({std::move(name), std::move(predicted), std::move(computed), pass, gating});
  };
  auto abs_check = [&](const char* name, const std::optional<Integer>& p, const Integer& n) {
    if (p) add(name, Integer(abs(*p)).get_str(), n.get_str(), abs(*p) == n);
  };
  const TorusParams& t = ctx.t;
  abs_check("|l_Id|", pr.l_id, vertex_isotropy(t, Vertex::Id).n);
  abs_check("|l_(23)|", pr.l_23, vertex_isotropy(t, Vertex::T23).n);
  abs_check("N11", pr.n11, edge_isotropy(t, {1, 1}).n);

  if (pr.single_point_order || pr.smooth_sphere_order) {
    const SingularGraph* g = ctx.sgraph();
    std::string computed = g ? describe_sigma(*g) : *ctx.graph_error;
    if (pr.single_point_order) {
      const Integer& k = *pr.single_point_order;
      bool pass = g && g->singular_vertices().size() == 1 && g->singular_edges().empty() &&
                  g->at(g->singular_vertices()[0]).isotropy.group == cyclic(k);
      add("single point", "one vertex with Z" + k.get_str(), computed, pass);
    }
    if (pr.smooth_sphere_order) {
      const Integer& k = *pr.smooth_sphere_order;
      bool pass = false;
      std::string predicted;
      if (k == 1) {
        predicted = "{}";
        pass = g && g->sigma_empty();
      } else {
        predicted = "S11 SmoothSphere Z" + k.get_str();
        auto sv = g ? g->singular_vertices() : std::vector<Vertex>{};
        auto se = g ? g->singular_edges() : std::vector<EdgeId>{};
        pass = g && sv == std::vector<Vertex>{Vertex::Id, Vertex::T23} && se.size() == 1 &&
               se[0] == EdgeId{1, 1} && g->at(se[0]).cls == EdgeClass::SmoothSphere &&
               g->at(se[0]).isotropy.group == cyclic(k);
      }
      add("singular set", predicted, computed, pass);
    }
  }
  if (pr.endpoint_orders) {
    Integer nid = vertex_isotropy(t, Vertex::Id).n, n23 = vertex_isotropy(t, Vertex::T23).n;
    auto want = *pr.endpoint_orders;
    bool others = true;
    for (Vertex v : {Vertex::T12, Vertex::T13, Vertex::C123, Vertex::C132})
      others = others && vertex_isotropy(t, v).n == 1;
    bool pass = others && ((nid == want[0] && n23 == want[1]) || (nid == want[1] && n23 == want[0]));
    add("endpoint orders", want[0].get_str() + "," + want[1].get_str(),
        nid.get_str() + "," + n23.get_str() + (others ? "" : " (other vertices singular)"), pass);
  }
  if (pr.curvature) {
    auto v = admits_positive_curvature(t);
    bool want = *pr.curvature == CurvaturePrediction::Positive;
    add("curvature", want ? "Positive" : "NotPositive", curvature_class_name(v.cls),
        v.positive() == want);
  }
  if (pr.h6) {
    const auto& h = ctx.prof().groups.at(6);
    add("H6", pr.h6->to_string(), h.to_string(), h == *pr.h6);
  }
  if (pr.stable) {
    const auto& p = ctx.prof();
    std::string computed = p.stable ? p.stable->group.to_string() + " from " +
                                          std::to_string(p.stable->onset)
                                    : "unstable";
    bool pass = p.stable && p.stable->group == *pr.stable && p.stable->onset <= 8;
    add("stable", pr.stable->to_string() + (pr.pattern ? " (" + pattern_name(*pr.pattern) + ")" : ""),
        computed, pass);
  }
}

// empty, or exactly one smooth sphere
bool outside_curvature_scope(Context& ctx) {
  const SingularGraph* g = ctx.sgraph();
  if (!g) return false;
  if (g->sigma_empty()) return true;
  auto se = g->singular_edges();
  return se.size() == 1 && g->at(se[0]).cls == EdgeClass::SmoothSphere;
}

}  // namespace

FixtureReport verify_fixture(const FamilyFixture& f, std::size_t max_degree) {
  FixtureReport r{f, false, {}, {}};
  if (!is_almost_free(f.params)) {
    r.skip_reason = "not almost free";
    return r;
  }
  r.valid = true;
  Context ctx{f.params, max_degree, {}, {}, {}};
  Predictions gated = f.predictions, extra = f.cross_check;
  if (f.curvature_needs_sigma && gated.curvature && outside_curvature_scope(ctx)) {
    extra.curvature = gated.curvature;
    gated.curvature.reset();
  }
  evaluate(gated, true, ctx, r.checks);
  evaluate(extra, false, ctx, r.checks);
  return r;
}

bool known_family(const std::string& family) {
  return family == "cor-nonnegact" || family == "smooth-sphere" || family == "example-two-singular";
}

std::vector<FamilyFixture> family_grid(const std::string& family, const GridFilter& filter) {
  if (!known_family(family)) throw Error(ErrorKind::Parse, "unknown family '" + family + "'");
  const long R = filter.range;
  std::vector<FamilyFixture> out;
  auto want = [&](int c) { return filter.case_no == 0 || filter.case_no == c; };
  auto attempt = [&](auto&& make) {
    try {
      out.push_back(make());
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SideConditionViolated) throw;
    }
  };
  if (family == "cor-nonnegact") {
    if (want(1))
      for (long b2 = -R; b2 <= R; ++b2)
        for (long b3 = -R; b3 <= R; ++b3) attempt([&] { return cor_nonnegact_1(b2, b3); });
    if (want(2))
      for (long l : {1L, -1L})
        for (auto [x, y] : {std::pair<long, long>{-1, -2 * l}, {-2, -l}})
          for (long b2 = -R; b2 <= R; ++b2) attempt([&] { return cor_nonnegact_2(x, y, l, b2); });
    if (want(3))
      for (long x : {1L, -1L, 2L, -2L})
        for (long c = -R; c <= R; ++c)
          for (long a2 = -R; a2 <= R; ++a2) attempt([&] { return cor_nonnegact_3(c, a2, x); });
    if (want(4))
      for (long x : {1L, -1L})
        for (long l : {1L, -1L})
          for (long a1 = -R; a1 <= R; ++a1)
            for (long a2 = -R; a2 <= R; ++a2) attempt([&] { return cor_nonnegact_4(a1, a2, x, l); });
  } else if (family == "smooth-sphere") {
    if (want(1))
      for (long u = -R; u <= R; ++u)
        for (long s = -R; s <= R; ++s) attempt([&] { return smooth_sphere_1(s, u); });
    if (want(2))
      for (long m = -R; m <= R; ++m)
        for (long r = -R; r <= R; ++r)
          for (long c = -R; c <= R; ++c)
            for (long e = -R; e <= R; ++e) attempt([&] { return smooth_sphere_2(m, r, c, e); });
    if (want(3))
      for (long u = -R; u <= R; ++u)
        for (long s = -R; s <= R; ++s) attempt([&] { return smooth_sphere_3(s, u); });
    if (want(4))
      for (long r = -R; r <= R; ++r)
        for (long c = -R; c <= R; ++c)
          for (long e = -R; e <= R; ++e)
            for (long m = -R; m <= R; ++m) attempt([&] { return smooth_sphere_4(r, c, e, m); });
    if (want(5))
      for (long a2 = -R; a2 <= R; ++a2) attempt([&] { return smooth_sphere_5(a2); });
    if (want(6))
      for (long x : {1L, -1L})
        for (long a1 : {2L, -2L})
          for (long a2 = -R; a2 <= R; ++a2) attempt([&] { return smooth_sphere_6(a1, a2, x); });
  } else {
    auto span = [&](const std::optional<long>& pin) {
      std::vector<long> v;
      if (pin) return std::vector<long>{*pin};
      for (long x = -R; x <= R; ++x) v.push_back(x);
      return v;
    };
    std::vector<long> ls = filter.l ? std::vector<long>{*filter.l} : std::vector<long>{1, -1};
    for (long l : ls)
      for (long k : span(filter.k))
        for (long u : span(filter.u)) attempt([&] { return example_two_singular(k, u, l); });
  }
  return out;
}

}  // namespace eschorb
