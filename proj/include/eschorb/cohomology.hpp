#ifndef ESCHORB_COHOMOLOGY_HPP
#define ESCHORB_COHOMOLOGY_HPP

#include <map>
#include <optional>
#include <vector>

#include "eschorb/params.hpp"
#include "eschorb/singular.hpp"

namespace eschorb {

// Binary form c_0 s^d + c_1 s^{d-1} t + ... + c_d t^d.
class HomogeneousPoly2 {
 public:
  HomogeneousPoly2() : coeffs_{Integer(0)} {}
  explicit HomogeneousPoly2(std::vector<Integer> coeffs);
  static HomogeneousPoly2 linear(const Integer& s_coeff, const Integer& t_coeff);
  static HomogeneousPoly2 constant(const Integer& c);

  std::size_t degree() const { return coeffs_.size() - 1; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  const Integer& coeff(std::size_t t_power) const { return coeffs_[t_power]; }
  bool is_zero() const;

  HomogeneousPoly2 operator+(const HomogeneousPoly2& o) const;
  HomogeneousPoly2 operator-(const HomogeneousPoly2& o) const;
  HomogeneousPoly2 operator*(const HomogeneousPoly2& o) const;
  bool operator==(const HomogeneousPoly2&) const = default;

  std::string to_string() const;

 private:
  std::vector<Integer> coeffs_;
};

// k-th elementary symmetric polynomial of linear forms.
HomogeneousPoly2 elementary_symmetric(const std::vector<HomogeneousPoly2>& forms, std::size_t k);

struct RelationPair {
  HomogeneousPoly2 r2, r3;
};
RelationPair relation_polynomials(const TorusParams& t);

// Rows: s^m, s^{m-1}t, ..., t^m. Columns: s^alpha t^beta * r for each
// relation r (in order) and alpha descending. Zero relations add nothing.
IntMatrix graded_relation_matrix(const std::vector<HomogeneousPoly2>& relations, std::size_t m);

AbelianGroup cohomology_group(const TorusParams& t, std::size_t degree);

struct StableGroup {
  AbelianGroup group;
  std::size_t onset;
  bool operator==(const StableGroup&) const = default;
};

struct CohomologyProfile {
  std::map<std::size_t, AbelianGroup> groups;  // degrees 0..max
  std::optional<StableGroup> stable;
  bool operator==(const CohomologyProfile&) const = default;
};

inline constexpr std::size_t kDefaultMaxDegree = 24;
inline constexpr std::size_t kDefaultStableWindow = 3;

// The stable group is the value shared by every even degree from the onset
// through max_degree, provided that run spans at least `window` degrees.
CohomologyProfile cohomology_profile(const TorusParams& t,
                                     std::size_t max_degree = kDefaultMaxDegree,
                                     std::size_t window = kDefaultStableWindow);

// Relations sigma~_1, sigma~_2 of the edge sphere S_ij, restricted to the
// two coordinates complementary to i (for p,a) and j (for q,b).
std::vector<HomogeneousPoly2> sphere_relations(const TorusParams& t, EdgeId e);
CohomologyProfile sphere_cohomology(const TorusParams& t, EdgeId e,
                                    std::size_t max_degree = kDefaultMaxDegree,
                                    std::size_t window = kDefaultStableWindow);

struct LocalizationResult {
  EdgeId edge;
  bool holds;
  std::optional<std::size_t> first_mismatch;  // degree
};
LocalizationResult localization_check_detailed(const TorusParams& t,
                                               std::size_t max_degree = kDefaultMaxDegree);
bool localization_check(const TorusParams& t, std::size_t max_degree = kDefaultMaxDegree);

}  // namespace eschorb

#endif
