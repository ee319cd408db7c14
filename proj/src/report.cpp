#include "eschorb/report.hpp"

#include <chrono>
#include <limits>
#include <sstream>

using nlohmann::json;

namespace eschorb {

namespace {

bool same_isotropy(const IsotropyGroup& a, const IsotropyGroup& b) {
  return a.g == b.g && a.n == b.n && a.group == b.group;
}

bool same_graph(const SingularGraph& a, const SingularGraph& b) {
  for (std::size_t k = 0; k < 6; ++k)
    if (a.vertices[k].vertex != b.vertices[k].vertex ||
        !same_isotropy(a.vertices[k].isotropy, b.vertices[k].isotropy))
      return false;
  for (std::size_t k = 0; k < 9; ++k)
    if (!(a.edges[k].edge == b.edges[k].edge) || a.edges[k].cls != b.edges[k].cls ||
        !same_isotropy(a.edges[k].isotropy, b.edges[k].isotropy))
      return false;
  return true;
}

bool same_localization(const std::optional<LocalizationResult>& a,
                       const std::optional<LocalizationResult>& b) {
  if (a.has_value() != b.has_value()) return false;
  if (!a) return true;
  return a->edge == b->edge && a->holds == b->holds && a->first_mismatch == b->first_mismatch;
}

}  // namespace

bool AnalysisReport::operator==(const AnalysisReport& o) const {
  return params == o.params && same_isotropy(kernel, o.kernel) && almost_free == o.almost_free &&
         free == o.free && effective == o.effective && effective_params == o.effective_params &&
         same_graph(graph, o.graph) && containing_edge == o.containing_edge &&
         curvature == o.curvature && cohomology == o.cohomology &&
         same_localization(localization, o.localization) && elapsed_ms == o.elapsed_ms;
}

AnalysisReport analyze(const TorusParams& t, std::size_t max_degree) {
  auto start = std::chrono::steady_clock::now();
  require_almost_free(t);
  AnalysisReport r{t, ineffective_kernel(t), true, is_free(t), is_effective(t), {}, {}, {}, {}, {}, {}, 0};
  TorusParams eff = t;
  if (!r.effective) {
    eff = effectivize(t).params;
    r.effective_params = eff;
  }
  r.graph = singular_graph(eff);
  r.containing_edge = containing_edge(r.graph);
  r.curvature = admits_positive_curvature(t);
  r.cohomology = cohomology_profile(t, max_degree);
  if (r.effective && r.containing_edge) r.localization = localization_check_detailed(t, max_degree);
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

json integer_to_json(const Integer& x) {
  if (x.fits_slong_p()) return json(x.get_si());
  return json(x.get_str());
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer v;
    if (v.set_str(j.get<std::string>(), 10) == 0) return v;
  }
  throw Error(ErrorKind::Parse, "expected an integer, got " + j.dump());
}

json group_to_json(const AbelianGroup& g) {
  json tors = json::array();
  for (const auto& d : g.torsion()) tors.push_back(integer_to_json(d));
  return {{"free_rank", g.free_rank()}, {"torsion", tors}, {"text", g.to_string()}};
}

AbelianGroup group_from_json(const json& j) {
  std::vector<Integer> tors;
  for (const auto& d : j.at("torsion")) tors.push_back(integer_from_json(d));
  return AbelianGroup::from_cyclic_orders(j.at("free_rank").get<std::size_t>(), tors);
}

namespace {

json triple_json(const Triple& t) {
  return json::array({integer_to_json(t[0]), integer_to_json(t[1]), integer_to_json(t[2])});
}

Triple triple_from(const json& j) {
  if (!j.is_array() || j.size() != 3) throw Error(ErrorKind::Parse, "expected a triple");
  return {integer_from_json(j[0]), integer_from_json(j[1]), integer_from_json(j[2])};
}

json isotropy_json(const IsotropyGroup& g) {
  return {{"g", integer_to_json(g.g)}, {"n", integer_to_json(g.n)}, {"group", group_to_json(g.group)}};
}

IsotropyGroup isotropy_from(const json& j) {
  auto iso = make_isotropy(integer_from_json(j.at("g")), integer_from_json(j.at("n")));
  if (!(iso.group == group_from_json(j.at("group"))))
    throw Error(ErrorKind::Parse, "isotropy group inconsistent with g, n");
  return iso;
}

EdgeId edge_from_name(const std::string& s) {
  if (s.size() != 3 || s[0] != 'S' || s[1] < '1' || s[1] > '3' || s[2] < '1' || s[2] > '3')
    throw Error(ErrorKind::Parse, "bad edge name '" + s + "'");
  return {s[1] - '0', s[2] - '0'};
}

EdgeClass edge_class_from(const std::string& s) {
  for (auto c : {EdgeClass::Regular, EdgeClass::SmoothSphere, EdgeClass::Teardrop,
                 EdgeClass::Football, EdgeClass::IsolatedEndpointsOnly})
    if (edge_class_name(c) == s) return c;
  throw Error(ErrorKind::Parse, "bad edge class '" + s + "'");
}

json profile_json(const CohomologyProfile& p) {
  json groups = json::array();
  for (const auto& [d, g] : p.groups) groups.push_back({{"degree", d}, {"group", group_to_json(g)}});
  json stable = nullptr;
  if (p.stable) stable = {{"group", group_to_json(p.stable->group)}, {"onset", p.stable->onset}};
  return {{"groups", groups}, {"stable", stable}};
}

CohomologyProfile profile_from(const json& j) {
  CohomologyProfile p;
  for (const auto& e : j.at("groups"))
    p.groups[e.at("degree").get<std::size_t>()] = group_from_json(e.at("group"));
  if (!j.at("stable").is_null())
    p.stable = StableGroup{group_from_json(j["stable"].at("group")), j["stable"].at("onset").get<std::size_t>()};
  return p;
}

json edge_json(const TriangleEdge& e) {
  return {{"side", e.side == Side::P ? "P" : "Q"}, {"i", e.i}, {"j", e.j}, {"name", triangle_edge_name(e)}};
}

TriangleEdge edge_from(const json& j) {
  std::string side = j.at("side").get<std::string>();
  if (side != "P" && side != "Q") throw Error(ErrorKind::Parse, "bad triangle side");
  return {side == "P" ? Side::P : Side::Q, j.at("i").get<int>(), j.at("j").get<int>()};
}

}  // namespace

json params_to_json(const TorusParams& t) {
  return {{"p", triple_json(t.p())}, {"q", triple_json(t.q())}, {"a", triple_json(t.a())},
          {"b", triple_json(t.b())}};
}

TorusParams params_from_json(const json& j) {
  return TorusParams::make(triple_from(j.at("p")), triple_from(j.at("q")), triple_from(j.at("a")),
                           triple_from(j.at("b")));
}

json to_json(const AnalysisReport& r) {
  json verts = json::array(), edges = json::array();
  for (const auto& v : r.graph.vertices)
    verts.push_back({{"vertex", vertex_name(v.vertex)},
                     {"parity", parity(v.vertex) ? "odd" : "even"},
                     {"isotropy", isotropy_json(v.isotropy)},
                     {"singular", v.singular()}});
  for (const auto& e : r.graph.edges) {
    auto ends = edge_endpoints(e.edge);
    edges.push_back({{"edge", edge_name(e.edge)},
                     {"endpoints", {vertex_name(ends[0]), vertex_name(ends[1])}},
                     {"isotropy", isotropy_json(e.isotropy)},
                     {"class", edge_class_name(e.cls)},
                     {"singular", e.singular()}});
  }
  json j;
  j["schema"] = kSchemaVersion;
  j["kind"] = "analysis";
  j["params"] = params_to_json(r.params);
  j["kernel"] = isotropy_json(r.kernel);
  j["almost_free"] = r.almost_free;
  j["free"] = r.free;
  j["effective"] = r.effective;
  j["effective_params"] = r.effective_params ? params_to_json(*r.effective_params) : json(nullptr);
  j["singular_graph"] = {{"vertices", verts}, {"edges", edges}};
  j["containing_edge"] = r.containing_edge ? json(edge_name(*r.containing_edge)) : json(nullptr);
  j["curvature"] = {{"class", curvature_class_name(r.curvature.cls)},
                    {"witness", r.curvature.witness ? edge_json(*r.curvature.witness) : json(nullptr)}};
  j["cohomology"] = profile_json(r.cohomology);
  if (r.localization)
    j["localization"] = {{"edge", edge_name(r.localization->edge)},
                         {"holds", r.localization->holds},
                         {"first_mismatch", r.localization->first_mismatch
                                                ? json(*r.localization->first_mismatch)
                                                : json(nullptr)}};
  else
    j["localization"] = nullptr;
  j["timing"] = {{"elapsed_ms", r.elapsed_ms}};
  return j;
}

AnalysisReport report_from_json(const json& j) {
  if (j.value("schema", 0) != kSchemaVersion) throw Error(ErrorKind::Parse, "unsupported schema version");
  AnalysisReport r{params_from_json(j.at("params")), isotropy_from(j.at("kernel")), {}, {}, {}, {}, {}, {}, {}, {}, {}, 0};
  r.almost_free = j.at("almost_free").get<bool>();
  r.free = j.at("free").get<bool>();
  r.effective = j.at("effective").get<bool>();
  if (!j.at("effective_params").is_null()) r.effective_params = params_from_json(j["effective_params"]);
  const auto& verts = j.at("singular_graph").at("vertices");
  const auto& edges = j.at("singular_graph").at("edges");
  if (verts.size() != 6 || edges.size() != 9) throw Error(ErrorKind::Parse, "singular graph shape");
  for (std::size_t k = 0; k < 6; ++k) {
    auto v = parse_vertex(verts[k].at("vertex").get<std::string>());
    if (!v) throw Error(ErrorKind::Parse, "bad vertex name");
    r.graph.vertices[k] = {*v, isotropy_from(verts[k].at("isotropy"))};
  }
  for (std::size_t k = 0; k < 9; ++k)
    r.graph.edges[k] = {edge_from_name(edges[k].at("edge").get<std::string>()),
                        isotropy_from(edges[k].at("isotropy")),
                        edge_class_from(edges[k].at("class").get<std::string>())};
  if (!j.at("containing_edge").is_null())
    r.containing_edge = edge_from_name(j["containing_edge"].get<std::string>());
  auto cls = parse_curvature_class(j.at("curvature").at("class").get<std::string>());
  if (!cls) throw Error(ErrorKind::Parse, "bad curvature class");
  r.curvature.cls = *cls;
  if (!j["curvature"].at("witness").is_null()) r.curvature.witness = edge_from(j["curvature"]["witness"]);
  r.cohomology = profile_from(j.at("cohomology"));
  if (!j.at("localization").is_null()) {
    const auto& l = j["localization"];
    r.localization = LocalizationResult{edge_from_name(l.at("edge").get<std::string>()),
                                        l.at("holds").get<bool>(), std::nullopt};
    if (!l.at("first_mismatch").is_null()) r.localization->first_mismatch = l["first_mismatch"].get<std::size_t>();
  }
  r.elapsed_ms = j.at("timing").at("elapsed_ms").get<double>();
  return r;
}

std::string to_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << "params      " << r.params.to_string() << "\n";
  os << "action      " << (r.free ? "free" : "almost free") << ", "
     << (r.effective ? "effective" : "ineffective (kernel " + r.kernel.group.to_string() + ")") << "\n";
  if (r.effective_params) os << "effective   " << r.effective_params->to_string() << "\n";
  os << "vertices   ";
  for (const auto& v : r.graph.vertices)
    os << " " << vertex_name(v.vertex) << "[" << v.isotropy.group.label() << "]";
  os << "\n";
  auto sv = r.graph.singular_vertices();
  auto se = r.graph.singular_edges();
  os << "sigma       ";
  if (sv.empty() && se.empty()) os << "empty";
  for (Vertex v : sv) os << vertex_name(v) << ":" << r.graph.at(v).isotropy.group.label() << " ";
  for (EdgeId e : se)
    os << edge_name(e) << ":" << r.graph.at(e).isotropy.group.label() << "(" << edge_class_name(r.graph.at(e).cls) << ") ";
  os << "\n";
  if (r.containing_edge) os << "contained   in " << edge_name(*r.containing_edge) << "\n";
  os << "curvature   " << curvature_class_name(r.curvature.cls);
  if (r.curvature.witness) os << " witness " << triangle_edge_name(*r.curvature.witness);
  os << "\n";
  os << "cohomology ";
  for (const auto& [d, g] : r.cohomology.groups)
    if (d % 2 == 0) os << " H" << d << "=" << g.to_string() << ";";
  os << "\n";
  if (r.cohomology.stable)
    os << "stable      " << r.cohomology.stable->group.to_string() << " from degree " << r.cohomology.stable->onset
       << " (order " << r.cohomology.stable->group.torsion_order() << ")\n";
  if (r.localization)
    os << "localization " << (r.localization->holds ? "holds" : "FAILS") << " along " << edge_name(r.localization->edge)
       << "\n";
  return os.str();
}

}  // namespace eschorb
