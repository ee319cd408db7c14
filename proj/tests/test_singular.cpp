#include <doctest.h>

#include <cctype>

#include "eschorb/error.hpp"
#include "eschorb/singular.hpp"
#include "support.hpp"

using namespace eschorb;

namespace {

AbelianGroup Z(long k) { return AbelianGroup::from_cyclic_orders(0, {Integer(k)}); }

// Minimal recursive-descent checker for the undirected DOT subset:
// graph ID { (node|edge|attr stmt ;?)* }
class DotChecker {
 public:
  explicit DotChecker(const std::string& s) : s_(s) {}

  bool parse() {
    if (!keyword("graph")) return false;
    id();  // optional name
    if (!punct('{')) return false;
    while (!peek('}')) {
      if (at_end() || !statement()) return false;
      punct(';');
    }
    punct('}');
    skip();
    return at_end();
  }

 private:
  const std::string& s_;
  std::size_t i_ = 0;

  bool at_end() { return i_ >= s_.size(); }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool peek(char c) {
    skip();
    return !at_end() && s_[i_] == c;
  }
  bool punct(char c) {
    if (!peek(c)) return false;
    ++i_;
    return true;
  }
  bool keyword(const std::string& k) {
    skip();
    if (s_.compare(i_, k.size(), k) != 0) return false;
    i_ += k.size();
    return true;
  }
  bool id() {
    skip();
    if (at_end()) return false;
    if (s_[i_] == '"') {
      for (++i_; !at_end(); ++i_) {
        if (s_[i_] == '\\') ++i_;
        else if (s_[i_] == '"') {
          ++i_;
          return true;
        }
      }
      return false;
    }
    std::size_t start = i_;
    if (std::isalpha(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_') {
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
    } else {
      if (s_[i_] == '-') ++i_;
      while (!at_end() && (std::isdigit(static_cast<unsigned char>(s_[i_])) || s_[i_] == '.')) ++i_;
    }
    return i_ > start && !(i_ == start + 1 && s_[start] == '-');
  }
  bool attr_list() {
    if (!punct('[')) return true;
    while (!punct(']')) {
      if (!id() || !punct('=') || !id()) return false;
      if (!punct(',')) punct(';');
    }
    return true;
  }
  bool statement() {
    if (!id()) return false;
    skip();
    if (s_.compare(i_, 2, "--") == 0) {
      i_ += 2;
      if (!id()) return false;
    }
    return attr_list();
  }
};

}  // namespace

TEST_CASE("dot checker sanity") {
  CHECK(DotChecker("graph g { a -- b [x=\"y\", z=2.5]; }").parse());
  CHECK_FALSE(DotChecker("graph g { a -- [x=1] }").parse());
  CHECK_FALSE(DotChecker("graph g { a -- b ").parse());
}

TEST_CASE("edge classification") {
  CHECK(classify_edge(Z(1), Z(1), Z(1)) == EdgeClass::Regular);
  CHECK(classify_edge(Z(1), Z(3), Z(1)) == EdgeClass::IsolatedEndpointsOnly);
  CHECK(classify_edge(Z(3), Z(3), Z(3)) == EdgeClass::SmoothSphere);
  CHECK(classify_edge(Z(3), Z(6), Z(3)) == EdgeClass::Teardrop);
  CHECK(classify_edge(Z(3), Z(3), Z(9)) == EdgeClass::Teardrop);
  CHECK(classify_edge(Z(2), Z(4), Z(6)) == EdgeClass::Football);
  // equal order, different structure is not smooth
  auto z2z2 = AbelianGroup::from_cyclic_orders(0, {Integer(2), Integer(2)});
  CHECK(classify_edge(Z(2), z2z2, Z(2)) == EdgeClass::Teardrop);
  CHECK(classify_edge(z2z2, Z(4), Z(4)) == EdgeClass::Football);
}

TEST_CASE("wallach has empty singular set") {
  auto g = singular_graph(testing::wallach());
  CHECK(g.sigma_empty());
  CHECK(g.singular_vertices().empty());
  auto census = parity_census(g);
  CHECK(census.even_singular == 0);
  CHECK(census.odd_singular == 0);
  CHECK(containing_edge(g) == EdgeId{1, 1});
  auto dot = export_dot(g);
  CHECK(DotChecker(dot).parse());
  CHECK(dot.find("filled") == std::string::npos);
  CHECK(dot.find("red") == std::string::npos);
}

TEST_CASE("smooth sphere with Z3") {
  auto g = singular_graph(testing::sphere_z3());
  CHECK(g.singular_vertices() == std::vector<Vertex>{Vertex::Id, Vertex::T23});
  REQUIRE(g.singular_edges() == std::vector<EdgeId>{{1, 1}});
  CHECK(g.at(EdgeId{1, 1}).cls == EdgeClass::SmoothSphere);
  CHECK(g.at(EdgeId{1, 1}).isotropy.group == Z(3));
  CHECK(g.at(Vertex::Id).isotropy.group == Z(3));
  CHECK(g.at(Vertex::T23).isotropy.group == Z(3));
  auto census = parity_census(g);
  CHECK(census.even_singular == 1);
  CHECK(census.odd_singular == 1);
  CHECK(containing_edge(g) == EdgeId{1, 1});
  auto dot = export_dot(g);
  CHECK(DotChecker(dot).parse());
  CHECK(dot.find("v_id -- v_23 [label=\"S11: Z3\", class=\"SmoothSphere\", color=red") !=
        std::string::npos);
  CHECK(dot.find("v_id [label=\"Id\\nZ3\", style=filled") != std::string::npos);
}

TEST_CASE("single singular point") {
  auto g = singular_graph(cor_nonnegact_1(1, 0).params);
  CHECK(g.singular_vertices() == std::vector<Vertex>{Vertex::T23});
  CHECK(g.singular_edges().empty());
  CHECK(g.at(Vertex::T23).isotropy.group == Z(3));
  auto census = parity_census(g);
  CHECK(census.even_singular == 0);
  CHECK(census.odd_singular == 1);
  auto e = containing_edge(g);
  REQUIRE(e);
  auto ends = edge_endpoints(*e);
  CHECK((ends[0] == Vertex::T23 || ends[1] == Vertex::T23));
}

TEST_CASE("singular_graph preconditions") {
  auto doubled = TorusParams::of({2, 0, -2}, {0, 0, 0}, {0, 1, -1}, {0, 0, 0});
  try {
    singular_graph(doubled);
    FAIL("expected NotEffective");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotEffective);
  }
  try {
    singular_graph(TorusParams::of({1, 0, -1}, {1, 0, -1}, {0, 1, -1}, {0, 1, -1}));
    FAIL("expected NotAlmostFree");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAlmostFree);
  }
}

TEST_CASE("random graphs: grammar, incidence, cohomogeneity two smoothing") {
  std::mt19937_64 rng(99);
  int cohom2 = 0;
  for (int iter = 0; iter < 2000; ++iter) {
    auto t = testing::random_almost_free(rng, 5);
    if (iter % 2 == 0) {
      // force q2 = q3, b2 = b3
      auto q = t.q(), b = t.b();
      Integer dq = q[1] - q[2], db = b[1] - b[2];
      q[2] += dq;
      q[0] -= dq;
      b[2] += db;
      b[0] -= db;
      t = TorusParams::make(t.p(), q, t.a(), b);
      if (!is_almost_free(t)) continue;
    }
    if (!is_effective(t)) continue;
    auto g = singular_graph(t);
    CHECK(DotChecker(export_dot(g)).parse());
    for (const auto& e : g.edges) {
      auto ends = edge_endpoints(e.edge);
      CHECK(e.cls == classify_edge(e.isotropy.group, g.at(ends[0]).isotropy.group,
                                   g.at(ends[1]).isotropy.group));
    }
    if (t.q()[1] == t.q()[2] && t.b()[1] == t.b()[2]) {
      ++cohom2;
      for (const auto& e : g.edges)
        CHECK((e.cls != EdgeClass::Teardrop && e.cls != EdgeClass::Football));
    }
  }
  CHECK(cohom2 > 100);
}
