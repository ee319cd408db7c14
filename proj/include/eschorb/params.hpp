#ifndef ESCHORB_PARAMS_HPP
#define ESCHORB_PARAMS_HPP

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "eschorb/error.hpp"
#include "eschorb/intlinalg.hpp"

namespace eschorb {

using Triple = std::array<Integer, 3>;

Triple triple(long x, long y, long z);
std::string triple_to_string(const Triple& t);  // "1,0,-1"
Triple parse_triple(const std::string& s);

// Four integer triples with sum(p) = sum(q) and sum(a) = sum(b).
class TorusParams {
 public:
  static TorusParams make(Triple p, Triple q, Triple a, Triple b);
  static TorusParams of(std::array<long, 3> p, std::array<long, 3> q, std::array<long, 3> a,
                        std::array<long, 3> b);
  // "p=1,0,-1;q=0,0,0;a=0,1,-1;b=0,0,0"
  static TorusParams parse(const std::string& s);

  const Triple& p() const { return p_; }
  const Triple& q() const { return q_; }
  const Triple& a() const { return a_; }
  const Triple& b() const { return b_; }

  std::string to_string() const;
  bool operator==(const TorusParams& o) const = default;

 private:
  TorusParams(Triple p, Triple q, Triple a, Triple b)
      : p_(std::move(p)), q_(std::move(q)), a_(std::move(a)), b_(std::move(b)) {}
  Triple p_, q_, a_, b_;
};

// The six torus-fixed vertices, labelled by permutations of {1,2,3}.
// (123) sends 1->2, 2->3, 3->1.
enum class Vertex { Id, T12, T13, T23, C123, C132 };
inline constexpr std::array<Vertex, 6> kVertices = {
    Vertex::Id, Vertex::T12, Vertex::T13, Vertex::T23, Vertex::C123, Vertex::C132};

std::array<int, 3> permutation(Vertex v);  // zero-based images
Vertex vertex_from_permutation(const std::array<int, 3>& images);
Vertex inverse(Vertex v);
Vertex compose(Vertex outer, Vertex inner);  // outer after inner
int parity(Vertex v);                        // 0 even, 1 odd
std::string vertex_name(Vertex v);           // "Id", "(12)", ..., "(132)"
std::optional<Vertex> parse_vertex(const std::string& s);

// Edge sphere S_ij, i and j in {1,2,3}. Its endpoints are the two vertices
// sigma with sigma(i) = j.
struct EdgeId {
  int i = 1, j = 1;
  bool operator==(const EdgeId&) const = default;
};
std::array<EdgeId, 9> all_edges();
std::array<Vertex, 2> edge_endpoints(EdgeId e);
std::string edge_name(EdgeId e);  // "S11"

// Local group Z_g + Z_{N/g}. N = 0 means the stabilizer is infinite; the
// group then carries a free summand (rank 2 if the whole block vanishes).
struct IsotropyGroup {
  Integer g, n;
  AbelianGroup group;
  bool finite() const { return n != 0; }
};
IsotropyGroup make_isotropy(const Integer& g, const Integer& n);

IsotropyGroup vertex_isotropy(const TorusParams& t, Vertex v);
IsotropyGroup edge_isotropy(const TorusParams& t, EdgeId e);
IsotropyGroup ineffective_kernel(const TorusParams& t);

bool is_almost_free(const TorusParams& t);
bool is_free(const TorusParams& t);
bool is_effective(const TorusParams& t);
void require_almost_free(const TorusParams& t);

struct OpSwap {
  bool operator==(const OpSwap&) const = default;
};
struct OpShift {
  Integer d, c;  // p,q += d ; a,b += c
  bool operator==(const OpShift&) const = default;
};
struct OpPermute {
  Vertex sigma, tau;  // p_i -> p_sigma(i), a likewise; q,b by tau
  bool operator==(const OpPermute&) const = default;
};
struct OpGl2 {
  Integer a11, a12, a21, a22;
  bool operator==(const OpGl2&) const = default;
};
struct OpScale {
  mpq_class mu, lambda;  // p,q *= mu ; a,b *= lambda
  bool operator==(const OpScale&) const = default;
};
using EquivalenceOp = std::variant<OpSwap, OpShift, OpPermute, OpGl2, OpScale>;

std::string op_to_string(const EquivalenceOp& op);
TorusParams apply_equivalence(const TorusParams& t, const EquivalenceOp& op);
TorusParams apply_all(const TorusParams& t, const std::vector<EquivalenceOp>& ops);

// Where an invariant at vertex v of t lives after applying op.
Vertex relabel_vertex(const EquivalenceOp& op, Vertex v);
EdgeId relabel_edge(const EquivalenceOp& op, EdgeId e);

struct Reparametrization {
  TorusParams params;
  std::vector<EquivalenceOp> steps;
};

// Brings t to q = (q1,0,0), b = (0,b2,b3).
Reparametrization normalize_cohomogeneity_form(const TorusParams& t);

bool is_normalized(const TorusParams& t);
// Signed closed forms for N_sigma on normalized parameters, indexed like
// kVertices.
std::array<Integer, 6> fast_l_sigma(const TorusParams& t);

// Divides out the ineffective kernel.
Reparametrization effectivize(const TorusParams& t);

}  // namespace eschorb

#endif
