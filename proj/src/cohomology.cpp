#include "eschorb/cohomology.hpp"

#include <sstream>

namespace eschorb {

HomogeneousPoly2::HomogeneousPoly2(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(0);
}

HomogeneousPoly2 HomogeneousPoly2::linear(const Integer& s_coeff, const Integer& t_coeff) {
  return HomogeneousPoly2({s_coeff, t_coeff});
}

HomogeneousPoly2 HomogeneousPoly2::constant(const Integer& c) { return HomogeneousPoly2({c}); }

bool HomogeneousPoly2::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

HomogeneousPoly2 HomogeneousPoly2::operator+(const HomogeneousPoly2& o) const {
  if (degree() != o.degree()) throw Error(ErrorKind::OutOfRange, "adding forms of different degree");
  std::vector<Integer> c(coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeffs_[i] + o.coeffs_[i];
  return HomogeneousPoly2(std::move(c));
}

HomogeneousPoly2 HomogeneousPoly2::operator-(const HomogeneousPoly2& o) const {
  if (degree() != o.degree()) throw Error(ErrorKind::OutOfRange, "subtracting forms of different degree");
  std::vector<Integer> c(coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeffs_[i] - o.coeffs_[i];
  return HomogeneousPoly2(std::move(c));
}

HomogeneousPoly2 HomogeneousPoly2::operator*(const HomogeneousPoly2& o) const {
  std::vector<Integer> c(coeffs_.size() + o.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
  return HomogeneousPoly2(std::move(c));
}

std::string HomogeneousPoly2::to_string() const {
  std::ostringstream os;
  const std::size_t d = degree();
  bool first = true;
  for (std::size_t k = 0; k <= d; ++k) {
    const Integer& c = coeffs_[k];
    if (c == 0) continue;
    Integer a = abs(c);
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    bool mono = d > 0;
    if (a != 1 || !mono) os << a;
    std::size_t sp = d - k, tp = k;
    if (sp) os << "s" << (sp > 1 ? "^" + std::to_string(sp) : "");
    if (tp) os << "t" << (tp > 1 ? "^" + std::to_string(tp) : "");
  }
  if (first) os << "0";
  return os.str();
}

HomogeneousPoly2 elementary_symmetric(const std::vector<HomogeneousPoly2>& forms, std::size_t k) {
  // e_k via the recurrence over prefixes; e[j] has degree j
  std::vector<HomogeneousPoly2> e(k + 1);
  e[0] = HomogeneousPoly2::constant(1);
  for (std::size_t j = 1; j <= k; ++j) e[j] = HomogeneousPoly2(std::vector<Integer>(j + 1, Integer(0)));
  for (const auto& f : forms)
    for (std::size_t j = k; j >= 1; --j) e[j] = e[j] + e[j - 1] * f;
  return e[k];
}

namespace {

std::vector<HomogeneousPoly2> linear_forms(const Triple& x, const Triple& y,
                                           const std::vector<int>& idx) {
  std::vector<HomogeneousPoly2> out;
  for (int i : idx) out.push_back(HomogeneousPoly2::linear(x[i], y[i]));
  return out;
}

}  // namespace

RelationPair relation_polynomials(const TorusParams& t) {
  auto L = linear_forms(t.p(), t.a(), {0, 1, 2});
  auto R = linear_forms(t.q(), t.b(), {0, 1, 2});
  return {elementary_symmetric(L, 2) - elementary_symmetric(R, 2),
          elementary_symmetric(L, 3) - elementary_symmetric(R, 3)};
}

IntMatrix graded_relation_matrix(const std::vector<HomogeneousPoly2>& relations, std::size_t m) {
  std::size_t ncols = 0;
  for (const auto& r : relations)
    if (!r.is_zero() && r.degree() <= m) ncols += m - r.degree() + 1;
  IntMatrix M(m + 1, ncols);
  std::size_t col = 0;
  for (const auto& r : relations) {
    if (r.is_zero() || r.degree() > m) continue;
    const std::size_t d = r.degree();
    for (std::size_t alpha = m - d + 1; alpha-- > 0;) {
      const std::size_t beta = m - d - alpha;
      for (std::size_t k = 0; k <= d; ++k) M(beta + k, col) = r.coeff(k);
      ++col;
    }
  }
  return M;
}

AbelianGroup cohomology_group(const TorusParams& t, std::size_t degree) {
  require_almost_free(t);
  if (degree % 2) return AbelianGroup::trivial();
  auto rel = relation_polynomials(t);
  return cokernel(graded_relation_matrix({rel.r2, rel.r3}, degree / 2));
}

namespace {

CohomologyProfile profile_from_relations(const std::vector<HomogeneousPoly2>& rels,
                                         std::size_t max_degree, std::size_t window) {
  if (max_degree % 2 || max_degree < 8)
    throw Error(ErrorKind::OutOfRange, "max degree must be even and at least 8");
  if (window == 0) throw Error(ErrorKind::OutOfRange, "stable window must be positive");
  CohomologyProfile prof;
  for (std::size_t d = 0; d <= max_degree; ++d)
    prof.groups[d] = d % 2 ? AbelianGroup::trivial() : cokernel(graded_relation_matrix(rels, d / 2));
  std::size_t onset = max_degree;
  while (onset >= 2 && prof.groups[onset - 2] == prof.groups[max_degree]) onset -= 2;
  if ((max_degree - onset) / 2 + 1 >= window) prof.stable = StableGroup{prof.groups[max_degree], onset};
  return prof;
}

}  // namespace

CohomologyProfile cohomology_profile(const TorusParams& t, std::size_t max_degree,
                                     std::size_t window) {
  require_almost_free(t);
  auto rel = relation_polynomials(t);
  return profile_from_relations({rel.r2, rel.r3}, max_degree, window);
}

std::vector<HomogeneousPoly2> sphere_relations(const TorusParams& t, EdgeId e) {
  std::vector<int> I, J;
  for (int k = 0; k < 3; ++k) {
    if (k != e.i - 1) I.push_back(k);
    if (k != e.j - 1) J.push_back(k);
  }
  auto L = linear_forms(t.p(), t.a(), I);
  auto R = linear_forms(t.q(), t.b(), J);
  return {elementary_symmetric(L, 1) - elementary_symmetric(R, 1),
          elementary_symmetric(L, 2) - elementary_symmetric(R, 2)};
}

CohomologyProfile sphere_cohomology(const TorusParams& t, EdgeId e, std::size_t max_degree,
                                    std::size_t window) {
  for (Vertex v : edge_endpoints(e))
    if (!vertex_isotropy(t, v).finite())
      throw Error(ErrorKind::NotAlmostFree, "edge " + edge_name(e) + " has an endpoint with infinite stabilizer");
  return profile_from_relations(sphere_relations(t, e), max_degree, window);
}

LocalizationResult localization_check_detailed(const TorusParams& t, std::size_t max_degree) {
  auto g = singular_graph(t);
  auto edge = containing_edge(g);
  if (!edge) throw Error(ErrorKind::SigmaNotSingleEdge, "singular set is not contained in one edge sphere");
  auto E = cohomology_profile(t, max_degree);
  auto S = sphere_cohomology(t, *edge, max_degree);
  LocalizationResult res{*edge, true, std::nullopt};
  auto fail = [&](std::size_t d) {
    if (!res.first_mismatch || d < *res.first_mismatch) res.first_mismatch = d;
    res.holds = false;
  };
  if (!(E.groups[0] == AbelianGroup::free(1))) fail(0);
  if (!(E.groups[2] == AbelianGroup::free(2))) fail(2);
  if (!(E.groups[4] == AbelianGroup::free(2))) fail(4);
  for (std::size_t d = 1; d <= max_degree; d += 2)
    if (!E.groups[d].is_trivial()) fail(d);
  for (std::size_t d = 6; d <= max_degree; d += 2)
    if (!(E.groups[d] == S.groups[d - 4])) fail(d);
  return res;
}

bool localization_check(const TorusParams& t, std::size_t max_degree) {
  return localization_check_detailed(t, max_degree).holds;
}

}  // namespace eschorb
