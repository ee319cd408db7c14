#ifndef ESCHORB_SINGULAR_HPP
#define ESCHORB_SINGULAR_HPP

#include <array>
#include <string>
#include <vector>

#include "eschorb/params.hpp"

namespace eschorb {

enum class EdgeClass { Regular, SmoothSphere, Teardrop, Football, IsolatedEndpointsOnly };
std::string edge_class_name(EdgeClass c);

struct VertexRecord {
  Vertex vertex;
  IsotropyGroup isotropy;
  bool singular() const { return !isotropy.group.is_trivial(); }
};

struct EdgeRecord {
  EdgeId edge;
  IsotropyGroup isotropy;
  EdgeClass cls;
  // interior points of the sphere are singular
  bool singular() const { return !isotropy.group.is_trivial(); }
};

struct SingularGraph {
  std::array<VertexRecord, 6> vertices;
  std::array<EdgeRecord, 9> edges;

  std::vector<Vertex> singular_vertices() const;
  std::vector<EdgeId> singular_edges() const;
  bool sigma_empty() const;
  const VertexRecord& at(Vertex v) const;
  const EdgeRecord& at(EdgeId e) const;
};

// Requires an effective, almost free action.
SingularGraph singular_graph(const TorusParams& t);

EdgeClass classify_edge(const AbelianGroup& edge, const AbelianGroup& end1,
                        const AbelianGroup& end2);

struct ParityCensus {
  int even_singular = 0;
  int odd_singular = 0;
  bool both_parities() const { return even_singular > 0 && odd_singular > 0; }
};
ParityCensus parity_census(const SingularGraph& g);

// Smallest edge (in S11..S33 order) whose closed sphere contains every
// singular point, if any.
std::optional<EdgeId> containing_edge(const SingularGraph& g);

std::string export_dot(const SingularGraph& g);

}  // namespace eschorb

#endif
