#ifndef ESCHORB_SCAN_HPP
#define ESCHORB_SCAN_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "eschorb/params.hpp"

namespace eschorb {

enum class Assertion { TheoremAParity, TheoremASmoothSphere, SatAgreement, Localization, Squares };
std::string assertion_name(Assertion a);
std::optional<Assertion> parse_assertion(const std::string& s);

struct ScanFilters {
  bool almost_free = false;
  bool effective = false;
  bool positive = false;
  bool sigma_nonempty = false;
  std::optional<int> sigma_size;  // number of singular vertices
  bool operator==(const ScanFilters&) const = default;
};
// "almost-free", "effective", "positive", "sigma-nonempty", "sigma-size=N"
void apply_filter(ScanFilters& f, const std::string& token);

struct ScanConfig {
  long bound = 3;
  bool raw = false;  // full box instead of canonical representatives
  ScanFilters filters;
  std::vector<Assertion> assertions = {Assertion::TheoremAParity, Assertion::TheoremASmoothSphere,
                                       Assertion::SatAgreement};
  std::size_t max_degree = 16;
  // extra uniformly sampled almost free instances
  std::size_t random_samples = 0;
  long random_bound = 8;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  std::size_t keep_examples = 5;
};
void validate(const ScanConfig& cfg);

struct Counterexample {
  Assertion assertion;
  TorusParams params;
  std::string detail;
};

struct ScanSummary {
  ScanConfig config;
  std::uint64_t enumerated = 0;
  std::uint64_t almost_free = 0;
  std::uint64_t effective = 0;
  std::uint64_t considered = 0;  // passed the filters
  std::map<std::string, std::uint64_t> verdicts;
  std::map<std::string, std::uint64_t> sigma_shapes;
  std::map<std::string, std::uint64_t> checked;  // per assertion
  std::uint64_t counterexample_count = 0;
  std::vector<Counterexample> counterexamples;  // capped
  // positively curved, effective, singular set = exactly three points
  std::uint64_t three_point_positive = 0;
  std::vector<TorusParams> three_point_examples;
  double elapsed_ms = 0;
};

// Canonical representatives: P1 = (0,0) is the lexicographic minimum of
// Delta_P, P2 <= P3 and Q1 <= Q2 <= Q3 lexicographically, entries in [-B,B].
std::vector<TorusParams> scan_slice(long bound, bool raw, std::size_t slice);
std::size_t scan_slice_count(long bound, bool raw);

ScanSummary run_scan(const ScanConfig& cfg);

nlohmann::json to_json(const ScanSummary& s);
ScanSummary scan_from_json(const nlohmann::json& j);
std::string to_text(const ScanSummary& s);

}  // namespace eschorb

#endif
