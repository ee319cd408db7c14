#include "eschorb/params.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace eschorb {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\n");
  return s.substr(b, e - b + 1);
}

Integer parse_integer(const std::string& raw) {
  std::string s = trim(raw);
  if (!s.empty() && s[0] == '+') s = s.substr(1);
  Integer v;
  if (s.empty() || v.set_str(s, 10) != 0)
    throw Error(ErrorKind::Parse, "not an integer: '" + trim(raw) + "'");
  return v;
}

IsotropyGroup pair_group(const std::vector<Integer>& v, const std::vector<Integer>& w) {
  std::vector<Integer> all = v;
  all.insert(all.end(), w.begin(), w.end());
  Integer g = gcd_list(all);
  Integer n = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      Integer m = v[i] * w[j] - v[j] * w[i];
      mpz_gcd(n.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
    }
  return make_isotropy(g, n);
}

std::array<int, 2> complement(int k) {  // k zero-based
  std::array<int, 2> c{};
  int n = 0;
  for (int x = 0; x < 3; ++x)
    if (x != k) c[n++] = x;
  return c;
}

}  // namespace

Triple triple(long x, long y, long z) { return {Integer(x), Integer(y), Integer(z)}; }

std::string triple_to_string(const Triple& t) {
  return t[0].get_str() + "," + t[1].get_str() + "," + t[2].get_str();
}

Triple parse_triple(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (!s.empty() && s.back() == ',') parts.push_back("");
  if (parts.size() != 3)
    throw Error(ErrorKind::Parse, "expected three comma-separated integers, got '" + s + "'");
  return {parse_integer(parts[0]), parse_integer(parts[1]), parse_integer(parts[2])};
}

TorusParams TorusParams::make(Triple p, Triple q, Triple a, Triple b) {
  if (p[0] + p[1] + p[2] != q[0] + q[1] + q[2])
    throw Error(ErrorKind::SumMismatchP, "sum(p) != sum(q) for p=" + triple_to_string(p) +
                                             " q=" + triple_to_string(q));
  if (a[0] + a[1] + a[2] != b[0] + b[1] + b[2])
    throw Error(ErrorKind::SumMismatchA, "sum(a) != sum(b) for a=" + triple_to_string(a) +
                                             " b=" + triple_to_string(b));
  return TorusParams(std::move(p), std::move(q), std::move(a), std::move(b));
}

TorusParams TorusParams::of(std::array<long, 3> p, std::array<long, 3> q, std::array<long, 3> a,
                            std::array<long, 3> b) {
  return make(triple(p[0], p[1], p[2]), triple(q[0], q[1], q[2]), triple(a[0], a[1], a[2]),
              triple(b[0], b[1], b[2]));
}

TorusParams TorusParams::parse(const std::string& s) {
  std::map<std::string, Triple> fields;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ';')) {
    item = trim(item);
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::Parse, "expected key=value in '" + item + "'");
    std::string key = trim(item.substr(0, eq));
    if (key != "p" && key != "q" && key != "a" && key != "b")
      throw Error(ErrorKind::Parse, "unknown key '" + key + "'");
    if (fields.count(key)) throw Error(ErrorKind::Parse, "duplicate key '" + key + "'");
    fields[key] = parse_triple(item.substr(eq + 1));
  }
  for (const char* k : {"p", "q", "a", "b"})
    if (!fields.count(k)) throw Error(ErrorKind::Parse, std::string("missing key '") + k + "'");
  return make(fields["p"], fields["q"], fields["a"], fields["b"]);
}

std::string TorusParams::to_string() const {
  return "p=" + triple_to_string(p_) + ";q=" + triple_to_string(q_) +
         ";a=" + triple_to_string(a_) + ";b=" + triple_to_string(b_);
}

std::array<int, 3> permutation(Vertex v) {
  switch (v) {
    case Vertex::Id: return {0, 1, 2};
    case Vertex::T12: return {1, 0, 2};
    case Vertex::T13: return {2, 1, 0};
    case Vertex::T23: return {0, 2, 1};
    case Vertex::C123: return {1, 2, 0};
    case Vertex::C132: return {2, 0, 1};
  }
  return {0, 1, 2};
}

Vertex vertex_from_permutation(const std::array<int, 3>& images) {
  for (Vertex v : kVertices)
    if (permutation(v) == images) return v;
  throw Error(ErrorKind::OutOfRange, "not a permutation of {0,1,2}");
}

Vertex inverse(Vertex v) {
  auto s = permutation(v);
  std::array<int, 3> inv{};
  for (int i = 0; i < 3; ++i) inv[s[i]] = i;
  return vertex_from_permutation(inv);
}

Vertex compose(Vertex outer, Vertex inner) {
  auto o = permutation(outer), in = permutation(inner);
  return vertex_from_permutation({o[in[0]], o[in[1]], o[in[2]]});
}

int parity(Vertex v) {
  switch (v) {
    case Vertex::Id:
    case Vertex::C123:
    case Vertex::C132: return 0;
    default: return 1;
  }
}

std::string vertex_name(Vertex v) {
  switch (v) {
    case Vertex::Id: return "Id";
    case Vertex::T12: return "(12)";
    case Vertex::T13: return "(13)";
    case Vertex::T23: return "(23)";
    case Vertex::C123: return "(123)";
    case Vertex::C132: return "(132)";
  }
  return "?";
}

std::optional<Vertex> parse_vertex(const std::string& s) {
  for (Vertex v : kVertices)
    if (vertex_name(v) == s) return v;
  return std::nullopt;
}

std::array<EdgeId, 9> all_edges() {
  std::array<EdgeId, 9> e{};
  int n = 0;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) e[n++] = {i, j};
  return e;
}

std::array<Vertex, 2> edge_endpoints(EdgeId e) {
  std::array<Vertex, 2> out{};
  int n = 0;
  for (Vertex v : kVertices)
    if (permutation(v)[e.i - 1] == e.j - 1) out[n++] = v;
  return out;
}

std::string edge_name(EdgeId e) { return "S" + std::to_string(e.i) + std::to_string(e.j); }

IsotropyGroup make_isotropy(const Integer& g, const Integer& n) {
  IsotropyGroup r{abs(g), abs(n), {}};
  if (r.n != 0)
    r.group = AbelianGroup::from_cyclic_orders(0, {r.g, r.n / r.g});
  else if (r.g == 0)
    r.group = AbelianGroup::free(2);
  else
    r.group = AbelianGroup::from_cyclic_orders(1, {r.g});
  return r;
}

IsotropyGroup vertex_isotropy(const TorusParams& t, Vertex v) {
  auto s = permutation(v);
  std::vector<Integer> V{t.p()[0] - t.q()[s[0]], t.p()[1] - t.q()[s[1]]};
  std::vector<Integer> W{t.a()[0] - t.b()[s[0]], t.a()[1] - t.b()[s[1]]};
  return pair_group(V, W);
}

IsotropyGroup edge_isotropy(const TorusParams& t, EdgeId e) {
  if (e.i < 1 || e.i > 3 || e.j < 1 || e.j > 3) throw Error(ErrorKind::OutOfRange, "edge index");
  auto I = complement(e.i - 1), J = complement(e.j - 1);
  std::vector<Integer> V, W;
  for (int x : I)
    for (int y : J) {
      V.push_back(t.p()[x] - t.q()[y]);
      W.push_back(t.a()[x] - t.b()[y]);
    }
  return pair_group(V, W);
}

IsotropyGroup ineffective_kernel(const TorusParams& t) {
  std::vector<Integer> P, A;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) {
        P.push_back(t.p()[i] - t.q()[j]);
        A.push_back(t.a()[i] - t.b()[j]);
      }
  return pair_group(P, A);
}

bool is_almost_free(const TorusParams& t) {
  for (Vertex v : kVertices)
    if (!vertex_isotropy(t, v).finite()) return false;
  return true;
}

bool is_free(const TorusParams& t) {
  for (Vertex v : kVertices)
    if (vertex_isotropy(t, v).n != 1) return false;
  return true;
}

bool is_effective(const TorusParams& t) { return ineffective_kernel(t).group.is_trivial(); }

void require_almost_free(const TorusParams& t) {
  for (Vertex v : kVertices)
    if (!vertex_isotropy(t, v).finite())
      throw Error(ErrorKind::NotAlmostFree,
                  "action is not almost free (N at " + vertex_name(v) + " vanishes) for " + t.to_string());
}

std::string op_to_string(const EquivalenceOp& op) {
  struct V {
    std::string operator()(const OpSwap&) const { return "Swap"; }
    std::string operator()(const OpShift& s) const {
      return "Shift(" + s.d.get_str() + "," + s.c.get_str() + ")";
    }
    std::string operator()(const OpPermute& s) const {
      return "Permute(" + vertex_name(s.sigma) + "," + vertex_name(s.tau) + ")";
    }
    std::string operator()(const OpGl2& g) const {
      return "Gl2([" + g.a11.get_str() + " " + g.a12.get_str() + "; " + g.a21.get_str() + " " +
             g.a22.get_str() + "])";
    }
    std::string operator()(const OpScale& s) const {
      return "Scale(" + s.mu.get_str() + "," + s.lambda.get_str() + ")";
    }
  };
  return std::visit(V{}, op);
}

namespace {

Triple permuted(const Triple& x, Vertex s) {
  auto img = permutation(s);
  return {x[img[0]], x[img[1]], x[img[2]]};
}

Triple scaled(const Triple& x, const mpq_class& f) {
  Triple out;
  for (int i = 0; i < 3; ++i) {
    mpq_class v = f * x[i];
    v.canonicalize();
    if (v.get_den() != 1)
      throw Error(ErrorKind::NonIntegral, "scaling produces non-integral entry " + v.get_str());
    out[i] = v.get_num();
  }
  return out;
}

}  // namespace

TorusParams apply_equivalence(const TorusParams& t, const EquivalenceOp& op) {
  const Triple &p = t.p(), &q = t.q(), &a = t.a(), &b = t.b();
  if (std::holds_alternative<OpSwap>(op)) return TorusParams::make(q, p, b, a);
  if (auto* s = std::get_if<OpShift>(&op)) {
    Triple p2 = p, q2 = q, a2 = a, b2 = b;
    for (int i = 0; i < 3; ++i) {
      p2[i] += s->d;
      q2[i] += s->d;
      a2[i] += s->c;
      b2[i] += s->c;
    }
    return TorusParams::make(p2, q2, a2, b2);
  }
  if (auto* s = std::get_if<OpPermute>(&op))
    return TorusParams::make(permuted(p, s->sigma), permuted(q, s->tau), permuted(a, s->sigma),
                             permuted(b, s->tau));
  if (auto* g = std::get_if<OpGl2>(&op)) {
    Integer det = g->a11 * g->a22 - g->a12 * g->a21;
    if (abs(det) != 1)
      throw Error(ErrorKind::NonUnimodular, "Gl2 matrix has determinant " + det.get_str());
    Triple p2, q2, a2, b2;
    for (int i = 0; i < 3; ++i) {
      p2[i] = g->a11 * p[i] + g->a12 * a[i];
      a2[i] = g->a21 * p[i] + g->a22 * a[i];
      q2[i] = g->a11 * q[i] + g->a12 * b[i];
      b2[i] = g->a21 * q[i] + g->a22 * b[i];
    }
    return TorusParams::make(p2, q2, a2, b2);
  }
  const auto& s = std::get<OpScale>(op);
  if (s.mu == 0 || s.lambda == 0) throw Error(ErrorKind::OutOfRange, "scale factor must be nonzero");
  return TorusParams::make(scaled(p, s.mu), scaled(q, s.mu), scaled(a, s.lambda), scaled(b, s.lambda));
}

TorusParams apply_all(const TorusParams& t, const std::vector<EquivalenceOp>& ops) {
  TorusParams cur = t;
  for (const auto& op : ops) cur = apply_equivalence(cur, op);
  return cur;
}

Vertex relabel_vertex(const EquivalenceOp& op, Vertex v) {
  if (std::holds_alternative<OpSwap>(op)) return inverse(v);
  if (auto* s = std::get_if<OpPermute>(&op)) return compose(inverse(s->tau), compose(v, s->sigma));
  return v;
}

EdgeId relabel_edge(const EquivalenceOp& op, EdgeId e) {
  if (std::holds_alternative<OpSwap>(op)) return {e.j, e.i};
  if (auto* s = std::get_if<OpPermute>(&op)) {
    auto si = permutation(inverse(s->sigma)), ti = permutation(inverse(s->tau));
    return {si[e.i - 1] + 1, ti[e.j - 1] + 1};
  }
  return e;
}

Reparametrization normalize_cohomogeneity_form(const TorusParams& t) {
  Reparametrization r{t, {}};
  const Triple &q = t.q(), &b = t.b();
  if (q[1] != q[2]) {
    Integer dq = q[1] - q[2], db = b[1] - b[2];
    Integer g = gcd_list({dq, db});
    Integer alpha = dq / g, beta = -db / g;
    // r*beta - s*alpha = 1
    Bezout bz = ext_gcd(beta, alpha);
    OpGl2 A{beta, alpha, -bz.y, bz.x};
    r.params = apply_equivalence(r.params, A);
    r.steps.push_back(A);
  }
  OpShift sh{-r.params.q()[1], -r.params.b()[0]};
  if (sh.d != 0 || sh.c != 0) {
    r.params = apply_equivalence(r.params, sh);
    r.steps.push_back(sh);
  }
  return r;
}

bool is_normalized(const TorusParams& t) {
  return t.q()[1] == 0 && t.q()[2] == 0 && t.b()[0] == 0;
}

std::array<Integer, 6> fast_l_sigma(const TorusParams& t) {
  if (!is_normalized(t))
    throw Error(ErrorKind::NotNormalized, "expected q=(q1,0,0), b=(0,b2,b3), got " + t.to_string());
  const Integer &c = t.p()[0], &d = t.p()[1], &e = t.p()[2];
  const Integer &a1 = t.a()[0], &a2 = t.a()[1];
  const Integer &b2 = t.b()[1], &b3 = t.b()[2];
  std::array<Integer, 6> l;
  l[0] = -(d + e) * (a2 - b2) - d * a1;  // Id
  l[1] = c * a2 + (c + e) * (a1 - b2);   // (12)
  l[2] = c * (a2 - b2) - d * (a1 - b3);  // (13)
  l[3] = -(d + e) * (a2 - b3) - d * a1;  // (23)
  l[4] = c * (a2 - b3) - d * (a1 - b2);  // (123)
  l[5] = c * a2 + (c + e) * (a1 - b3);   // (132)
  return l;
}

Reparametrization effectivize(const TorusParams& t) {
  require_almost_free(t);
  Reparametrization r{t, {}};
  if (is_effective(t)) return r;

  IntMatrix M(6, 2);
  int row = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) {
        M(row, 0) = t.p()[i] - t.q()[j];
        M(row, 1) = t.a()[i] - t.b()[j];
        ++row;
      }
  SmithForm snf = smith_normal_form(M);
  const Integer &d1 = snf.diagonal[0], &d2 = snf.diagonal[1];
  if (d2 == 0) throw Error(ErrorKind::NotAlmostFree, "difference lattice has rank < 2");

  auto push = [&](const EquivalenceOp& op) {
    r.params = apply_equivalence(r.params, op);
    r.steps.push_back(op);
  };
  OpShift sh{-t.q()[0], -t.b()[0]};
  if (sh.d != 0 || sh.c != 0) push(sh);
  const IntMatrix& V = snf.right;
  OpGl2 A{V(0, 0), V(1, 0), V(0, 1), V(1, 1)};
  if (!(A.a11 == 1 && A.a12 == 0 && A.a21 == 0 && A.a22 == 1)) push(A);
  push(OpScale{mpq_class(1, d1), mpq_class(1, d2)});
  return r;
}

}  // namespace eschorb
