#ifndef ESCHORB_REPORT_HPP
#define ESCHORB_REPORT_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "eschorb/cohomology.hpp"
#include "eschorb/curvature.hpp"
#include "eschorb/singular.hpp"

namespace eschorb {

inline constexpr int kSchemaVersion = 1;

struct AnalysisReport {
  TorusParams params;
  IsotropyGroup kernel;
  bool almost_free = false, free = false, effective = false;
  // set when the kernel is nontrivial; the graph below then describes it
  std::optional<TorusParams> effective_params;
  SingularGraph graph;
  std::optional<EdgeId> containing_edge;
  CurvatureVerdict curvature;
  CohomologyProfile cohomology;
  std::optional<LocalizationResult> localization;
  double elapsed_ms = 0;

  bool operator==(const AnalysisReport& o) const;
};

// Requires an almost free action.
AnalysisReport analyze(const TorusParams& t, std::size_t max_degree = kDefaultMaxDegree);

nlohmann::json integer_to_json(const Integer& x);
Integer integer_from_json(const nlohmann::json& j);
nlohmann::json group_to_json(const AbelianGroup& g);
AbelianGroup group_from_json(const nlohmann::json& j);
nlohmann::json params_to_json(const TorusParams& t);
TorusParams params_from_json(const nlohmann::json& j);

nlohmann::json to_json(const AnalysisReport& r);
AnalysisReport report_from_json(const nlohmann::json& j);
std::string to_text(const AnalysisReport& r);

}  // namespace eschorb

#endif
