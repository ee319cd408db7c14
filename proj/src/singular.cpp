#include "eschorb/singular.hpp"

#include <algorithm>
#include <sstream>

namespace eschorb {

std::string edge_class_name(EdgeClass c) {
  switch (c) {
    case EdgeClass::Regular: return "Regular";
    case EdgeClass::SmoothSphere: return "SmoothSphere";
    case EdgeClass::Teardrop: return "Teardrop";
    case EdgeClass::Football: return "Football";
    case EdgeClass::IsolatedEndpointsOnly: return "IsolatedEndpointsOnly";
  }
  return "?";
}

EdgeClass classify_edge(const AbelianGroup& edge, const AbelianGroup& end1,
                        const AbelianGroup& end2) {
  if (edge.is_trivial())
    return end1.is_trivial() && end2.is_trivial() ? EdgeClass::Regular
                                                  : EdgeClass::IsolatedEndpointsOnly;
  int larger = (end1 == edge ? 0 : 1) + (end2 == edge ? 0 : 1);
  switch (larger) {
    case 0: return EdgeClass::SmoothSphere;
    case 1: return EdgeClass::Teardrop;
    default: return EdgeClass::Football;
  }
}

SingularGraph singular_graph(const TorusParams& t) {
  require_almost_free(t);
  if (!is_effective(t))
    throw Error(ErrorKind::NotEffective, "action has a nontrivial ineffective kernel: " + t.to_string());
  SingularGraph g;
  for (std::size_t k = 0; k < 6; ++k)
    g.vertices[k] = {kVertices[k], vertex_isotropy(t, kVertices[k])};
  auto edges = all_edges();
  for (std::size_t k = 0; k < 9; ++k) {
    auto iso = edge_isotropy(t, edges[k]);
    auto ends = edge_endpoints(edges[k]);
    g.edges[k] = {edges[k], iso,
                  classify_edge(iso.group, g.at(ends[0]).isotropy.group, g.at(ends[1]).isotropy.group)};
  }
  return g;
}

std::vector<Vertex> SingularGraph::singular_vertices() const {
  std::vector<Vertex> out;
  for (const auto& v : vertices)
    if (v.singular()) out.push_back(v.vertex);
  return out;
}

std::vector<EdgeId> SingularGraph::singular_edges() const {
  std::vector<EdgeId> out;
  for (const auto& e : edges)
    if (e.singular()) out.push_back(e.edge);
  return out;
}

bool SingularGraph::sigma_empty() const {
  return singular_vertices().empty() && singular_edges().empty();
}

const VertexRecord& SingularGraph::at(Vertex v) const {
  return vertices[static_cast<std::size_t>(v)];
}

const EdgeRecord& SingularGraph::at(EdgeId e) const {
  return edges[static_cast<std::size_t>((e.i - 1) * 3 + (e.j - 1))];
}

ParityCensus parity_census(const SingularGraph& g) {
  ParityCensus c;
  for (Vertex v : g.singular_vertices()) (parity(v) ? c.odd_singular : c.even_singular)++;
  return c;
}

std::optional<EdgeId> containing_edge(const SingularGraph& g) {
  auto sv = g.singular_vertices();
  auto se = g.singular_edges();
  for (EdgeId e : all_edges()) {
    auto ends = edge_endpoints(e);
    bool ok = std::all_of(sv.begin(), sv.end(),
                          [&](Vertex v) { return v == ends[0] || v == ends[1]; });
    ok = ok && std::all_of(se.begin(), se.end(), [&](EdgeId x) { return x == e; });
    if (ok) return e;
  }
  return std::nullopt;
}

namespace {

std::string node_id(Vertex v) {
  switch (v) {
    case Vertex::Id: return "v_id";
    case Vertex::T12: return "v_12";
    case Vertex::T13: return "v_13";
    case Vertex::T23: return "v_23";
    case Vertex::C123: return "v_123";
    case Vertex::C132: return "v_132";
  }
  return "v";
}

}  // namespace

std::string export_dot(const SingularGraph& g) {
  std::ostringstream os;
  os << "graph singular_set {\n";
  os << "  node [shape=circle, fontname=\"Helvetica\"];\n";
  for (const auto& v : g.vertices) {
    os << "  " << node_id(v.vertex) << " [label=\"" << vertex_name(v.vertex) << "\\n"
       << v.isotropy.group.label() << "\"";
    if (v.singular()) os << ", style=filled, fillcolor=\"#f4a582\"";
    os << ", parity=" << (parity(v.vertex) ? "odd" : "even") << "];\n";
  }
  for (const auto& e : g.edges) {
    auto ends = edge_endpoints(e.edge);
    os << "  " << node_id(ends[0]) << " -- " << node_id(ends[1]) << " [label=\""
       << edge_name(e.edge) << ": " << e.isotropy.group.label() << "\", class=\""
       << edge_class_name(e.cls) << "\"";
    if (e.singular()) os << ", color=red, penwidth=2.5";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace eschorb
