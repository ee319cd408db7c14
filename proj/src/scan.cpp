#include "eschorb/scan.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <sstream>
#include <thread>

#include "eschorb/cohomology.hpp"
#include "eschorb/curvature.hpp"
#include "eschorb/report.hpp"
#include "eschorb/singular.hpp"

using nlohmann::json;

namespace eschorb {

namespace {

constexpr std::size_t kMaxKeptCounterexamples = 100;
constexpr std::size_t kRandomChunk = 256;

}  // namespace

std::string assertion_name(Assertion a) {
  switch (a) {
    case Assertion::TheoremAParity: return "theoremA-parity";
    case Assertion::TheoremASmoothSphere: return "theoremA-smooth-sphere";
    case Assertion::SatAgreement: return "sat-agreement";
    case Assertion::Localization: return "localization";
    case Assertion::Squares: return "squares";
  }
  return "?";
}

std::optional<Assertion> parse_assertion(const std::string& s) {
  for (auto a : {Assertion::TheoremAParity, Assertion::TheoremASmoothSphere, Assertion::SatAgreement,
                 Assertion::Localization, Assertion::Squares})
    if (assertion_name(a) == s) return a;
  return std::nullopt;
}

void apply_filter(ScanFilters& f, const std::string& token) {
  if (token == "almost-free")
    f.almost_free = true;
  else if (token == "effective")
    f.effective = true;
  else if (token == "positive")
    f.positive = true;
  else if (token == "sigma-nonempty")
    f.sigma_nonempty = true;
  else if (token.rfind("sigma-size=", 0) == 0) {
    try {
      std::size_t used = 0;
      int n = std::stoi(token.substr(11), &used);
      if (used != token.size() - 11 || n < 0 || n > 6) throw std::invalid_argument("range");
      f.sigma_size = n;
    } catch (const std::exception&) {
      throw Error(ErrorKind::Parse, "bad filter '" + token + "'");
    }
  } else
    throw Error(ErrorKind::Parse, "unknown filter '" + token + "'");
}

void validate(const ScanConfig& cfg) {
  if (cfg.bound < 1) throw Error(ErrorKind::OutOfRange, "scan bound must be at least 1");
  if (cfg.bound > 64) throw Error(ErrorKind::OutOfRange, "scan bound above 64 is not supported");
  if (cfg.jobs < 1) throw Error(ErrorKind::OutOfRange, "jobs must be at least 1");
  if (cfg.max_degree % 2 || cfg.max_degree < 8) throw Error(ErrorKind::OutOfRange, "max degree must be even and >= 8");
  if (cfg.random_samples > 0 && cfg.random_bound < 1) throw Error(ErrorKind::OutOfRange, "random bound must be >= 1");
}

namespace {

struct Pt {
  long x, y;
  auto operator<=>(const Pt&) const = default;
};

std::vector<Pt> box_points(long B) {
  std::vector<Pt> v;
  for (long x = -B; x <= B; ++x)
    for (long y = -B; y <= B; ++y) v.push_back({x, y});
  return v;
}

std::vector<std::array<long, 3>> box_triples(long B) {
  std::vector<std::array<long, 3>> v;
  for (long x = -B; x <= B; ++x)
    for (long y = -B; y <= B; ++y)
      for (long z = -B; z <= B; ++z) v.push_back({x, y, z});
  return v;
}

}  // namespace

std::size_t scan_slice_count(long bound, bool raw) {
  if (raw) return box_triples(bound).size();
  auto pts = box_points(bound);
  return std::count_if(pts.begin(), pts.end(), [](const Pt& p) { return p >= Pt{0, 0}; });
}

std::vector<TorusParams> scan_slice(long B, bool raw, std::size_t slice) {
  std::vector<TorusParams> out;
  if (raw) {
    auto trips = box_triples(B);
    const auto& p = trips.at(slice);
    long sp = p[0] + p[1] + p[2];
    for (const auto& q : trips) {
      if (q[0] + q[1] + q[2] != sp) continue;
      for (const auto& a : trips) {
        long sa = a[0] + a[1] + a[2];
        for (long b1 = -B; b1 <= B; ++b1)
          for (long b2 = -B; b2 <= B; ++b2) {
            long b3 = sa - b1 - b2;
            if (b3 < -B || b3 > B) continue;
            out.push_back(TorusParams::of(p, q, a, {b1, b2, b3}));
          }
      }
    }
    return out;
  }
  auto pts = box_points(B);
  std::vector<Pt> pos;
  for (const auto& p : pts)
    if (p >= Pt{0, 0}) pos.push_back(p);
  const Pt P2 = pos.at(slice);
  for (std::size_t k3 = slice; k3 < pos.size(); ++k3) {
    const Pt P3 = pos[k3];
    const long sx = P2.x + P3.x, sy = P2.y + P3.y;
    for (std::size_t k1 = 0; k1 < pts.size(); ++k1)
      for (std::size_t k2 = k1; k2 < pts.size(); ++k2) {
        const Pt Q1 = pts[k1], Q2 = pts[k2];
        const Pt Q3{sx - Q1.x - Q2.x, sy - Q1.y - Q2.y};
        if (Q3.x < -B || Q3.x > B || Q3.y < -B || Q3.y > B || Q3 < Q2) continue;
        out.push_back(TorusParams::of({0, P2.x, P3.x}, {Q1.x, Q2.x, Q3.x}, {0, P2.y, P3.y},
                                        {Q1.y, Q2.y, Q3.y}));
      }
  }
  return out;
}

namespace {

std::vector<TorusParams> random_instances(const ScanConfig& cfg) {
  std::vector<TorusParams> out;
  std::mt19937_64 rng(cfg.seed);
  const long R = cfg.random_bound;
  std::uniform_int_distribution<long> d(-R, R);
  auto balanced = [&](const std::array<long, 3>& x, std::array<long, 3>& y) {
    y[0] = d(rng);
    y[1] = d(rng);
    y[2] = x[0] + x[1] + x[2] - y[0] - y[1];
    return y[2] >= -R && y[2] <= R;
  };
  while (out.size() < cfg.random_samples) {
    std::array<long, 3> p{d(rng), d(rng), d(rng)}, a{d(rng), d(rng), d(rng)}, q{}, b{};
    if (!balanced(p, q) || !balanced(a, b)) continue;
    auto t = TorusParams::of(p, q, a, b);
    if (is_almost_free(t)) out.push_back(t);
  }
  return out;
}

std::string shape_of(const SingularGraph& g) {
  auto nv = g.singular_vertices().size(), ne = g.singular_edges().size();
  if (nv == 0 && ne == 0) return "empty";
  std::string s = std::to_string(nv) + "v";
  if (ne) s += "+" + std::to_string(ne) + "e";
  return s;
}

bool wants(const ScanConfig& cfg, Assertion a) {
  return std::find(cfg.assertions.begin(), cfg.assertions.end(), a) != cfg.assertions.end();
}

void record(ScanSummary& s, Assertion a, const TorusParams& t, std::string detail) {
  ++s.counterexample_count;
  if (s.counterexamples.size() < kMaxKeptCounterexamples) s.counterexamples.push_back({a, t, std::move(detail)});
}

void process(const TorusParams& t, const ScanConfig& cfg, ScanSummary& s) {
  ++s.enumerated;
  if (!is_almost_free(t)) return;
  ++s.almost_free;
  const bool eff = is_effective(t);
  if (eff) ++s.effective;
  const auto verdict = admits_positive_curvature(t);
  std::optional<SingularGraph> g;
  if (eff) g = singular_graph(t);
  const std::size_t nsv = g ? g->singular_vertices().size() : 0;

  const auto& f = cfg.filters;
  if (f.effective && !eff) return;
  if (f.positive && !verdict.positive()) return;
  if (f.sigma_nonempty && !(g && !g->sigma_empty())) return;
  if (f.sigma_size && !(g && static_cast<int>(nsv) == *f.sigma_size)) return;
  ++s.considered;
  ++s.verdicts[curvature_class_name(verdict.cls)];
  if (g) ++s.sigma_shapes[std::string(verdict.positive() ? "positive/" : "not-positive/") + shape_of(*g)];

  if (g && verdict.positive() && nsv == 3 && g->singular_edges().empty()) {
    ++s.three_point_positive;
    if (s.three_point_examples.size() < cfg.keep_examples) s.three_point_examples.push_back(t);
  }

  if (wants(cfg, Assertion::SatAgreement)) {
    ++s.checked[assertion_name(Assertion::SatAgreement)];
    auto sat = separating_axis_decision(t);
    if (sat != verdict.cls)
      record(s, Assertion::SatAgreement, t,
             "intersection says " + curvature_class_name(verdict.cls) + ", projection says " + curvature_class_name(sat));
  }
  if (!g) return;
  const auto sv = g->singular_vertices();
  const bool pos = verdict.positive();

  if (wants(cfg, Assertion::TheoremAParity) && pos && !sv.empty()) {
    ++s.checked[assertion_name(Assertion::TheoremAParity)];
    if (!parity_census(*g).both_parities()) record(s, Assertion::TheoremAParity, t, "singular vertices of one parity: " + shape_of(*g));
  }
  if (wants(cfg, Assertion::TheoremASmoothSphere) && pos && sv.size() == 2) {
    ++s.checked[assertion_name(Assertion::TheoremASmoothSphere)];
    std::optional<EdgeId> joining;
    for (EdgeId e : all_edges()) {
      auto ends = edge_endpoints(e);
      if ((ends[0] == sv[0] && ends[1] == sv[1]) || (ends[0] == sv[1] && ends[1] == sv[0])) joining = e;
    }
    if (!joining)
      record(s, Assertion::TheoremASmoothSphere, t, "the two singular vertices are not joined by an edge");
    else if (!g->at(*joining).singular() || g->at(*joining).cls != EdgeClass::SmoothSphere)
      record(s, Assertion::TheoremASmoothSphere, t,
             edge_name(*joining) + " is " + edge_class_name(g->at(*joining).cls) + " with group " +
                 g->at(*joining).isotropy.group.to_string());
  }
  const bool want_loc = wants(cfg, Assertion::Localization), want_sq = wants(cfg, Assertion::Squares);
  if (!want_loc && !want_sq) return;
  auto edge = containing_edge(*g);
  if (!edge) return;
  if (want_loc) {
    ++s.checked[assertion_name(Assertion::Localization)];
    auto res = localization_check_detailed(t, cfg.max_degree);
    if (!res.holds)
      record(s, Assertion::Localization, t,
             "mismatch in degree " + std::to_string(res.first_mismatch.value_or(0)) + " along " + edge_name(res.edge));
  }
  if (want_sq && pos && !sv.empty()) {
    ++s.checked[assertion_name(Assertion::Squares)];
    const auto& rec = g->at(*edge);
    auto prof = cohomology_profile(t, cfg.max_degree);
    Integer k = rec.isotropy.group.torsion_order();
    bool ok = rec.cls == EdgeClass::SmoothSphere && prof.stable && prof.stable->group.is_finite() &&
              prof.stable->group.torsion_order() == k * k;
    if (!ok)
      record(s, Assertion::Squares, t,
             edge_name(*edge) + " " + edge_class_name(rec.cls) + ", stable " +
                 (prof.stable ? prof.stable->group.to_string() : std::string("none")) + ", expected order " +
                 Integer(k * k).get_str());
  }
}

void merge(ScanSummary& into, const ScanSummary& part, std::size_t keep) {
  into.enumerated += part.enumerated;
  into.almost_free += part.almost_free;
  into.effective += part.effective;
  into.considered += part.considered;
  for (const auto& [k, v] : part.verdicts) into.verdicts[k] += v;
  for (const auto& [k, v] : part.sigma_shapes) into.sigma_shapes[k] += v;
  for (const auto& [k, v] : part.checked) into.checked[k] += v;
  into.counterexample_count += part.counterexample_count;
  for (const auto& c : part.counterexamples)
    if (into.counterexamples.size() < kMaxKeptCounterexamples) into.counterexamples.push_back(c);
  into.three_point_positive += part.three_point_positive;
  for (const auto& t : part.three_point_examples)
    if (into.three_point_examples.size() < keep) into.three_point_examples.push_back(t);
}

}  // namespace

ScanSummary run_scan(const ScanConfig& cfg) {
  validate(cfg);
  auto start = std::chrono::steady_clock::now();
  const std::size_t box_slices = scan_slice_count(cfg.bound, cfg.raw);
  const auto randoms = random_instances(cfg);
  const std::size_t random_slices = (randoms.size() + kRandomChunk - 1) / kRandomChunk;
  const std::size_t total = box_slices + random_slices;

  std::vector<ScanSummary> parts(total);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < total;) {
      ScanSummary& s = parts[k];
      if (k < box_slices) {
        for (const auto& t : scan_slice(cfg.bound, cfg.raw, k)) process(t, cfg, s);
      } else {
        std::size_t lo = (k - box_slices) * kRandomChunk, hi = std::min(randoms.size(), lo + kRandomChunk);
        for (std::size_t i = lo; i < hi; ++i) process(randoms[i], cfg, s);
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < cfg.jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  ScanSummary out;
  out.config = cfg;
  for (const auto& p : parts) merge(out, p, cfg.keep_examples);
  out.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

json to_json(const ScanSummary& s) {
  const auto& c = s.config;
  json assertions = json::array();
  for (auto a : c.assertions) assertions.push_back(assertion_name(a));
  json filters = {{"almost_free", c.filters.almost_free},
                  {"effective", c.filters.effective},
                  {"positive", c.filters.positive},
                  {"sigma_nonempty", c.filters.sigma_nonempty},
                  {"sigma_size", c.filters.sigma_size ? json(*c.filters.sigma_size) : json(nullptr)}};
  json cx = json::array();
  for (const auto& e : s.counterexamples)
    cx.push_back({{"assertion", assertion_name(e.assertion)},
                  {"params", params_to_json(e.params)},
                  {"text", e.params.to_string()},
                  {"detail", e.detail}});
  json ex = json::array();
  for (const auto& t : s.three_point_examples) ex.push_back(params_to_json(t));
  return {{"schema", kSchemaVersion},
          {"kind", "scan"},
          {"config",
           {{"bound", c.bound},
            {"raw", c.raw},
            {"filters", filters},
            {"assertions", assertions},
            {"max_degree", c.max_degree},
            {"random_samples", c.random_samples},
            {"random_bound", c.random_bound},
            {"seed", c.seed},
            {"keep_examples", c.keep_examples}}},
          {"counts",
           {{"enumerated", s.enumerated},
            {"almost_free", s.almost_free},
            {"effective", s.effective},
            {"considered", s.considered}}},
          {"verdicts", s.verdicts},
          {"sigma_shapes", s.sigma_shapes},
          {"checked", s.checked},
          {"counterexample_count", s.counterexample_count},
          {"counterexamples", cx},
          {"sharpness", {{"three_point_positive", s.three_point_positive}, {"examples", ex}}},
          {"execution", {{"jobs", c.jobs}, {"elapsed_ms", s.elapsed_ms}}}};
}

ScanSummary scan_from_json(const json& j) {
  if (j.value("schema", 0) != kSchemaVersion || j.value("kind", "") != "scan")
    throw Error(ErrorKind::Parse, "not a schema-1 scan report");
  ScanSummary s;
  auto& c = s.config;
  const auto& jc = j.at("config");
  c.bound = jc.at("bound").get<long>();
  c.raw = jc.at("raw").get<bool>();
  const auto& jf = jc.at("filters");
  c.filters.almost_free = jf.at("almost_free").get<bool>();
  c.filters.effective = jf.at("effective").get<bool>();
  c.filters.positive = jf.at("positive").get<bool>();
  c.filters.sigma_nonempty = jf.at("sigma_nonempty").get<bool>();
  if (!jf.at("sigma_size").is_null()) c.filters.sigma_size = jf["sigma_size"].get<int>();
  c.assertions.clear();
  for (const auto& a : jc.at("assertions")) {
    auto parsed = parse_assertion(a.get<std::string>());
    if (!parsed) throw Error(ErrorKind::Parse, "unknown assertion " + a.dump());
    c.assertions.push_back(*parsed);
  }
  c.max_degree = jc.at("max_degree").get<std::size_t>();
  c.random_samples = jc.at("random_samples").get<std::size_t>();
  c.random_bound = jc.at("random_bound").get<long>();
  c.seed = jc.at("seed").get<std::uint64_t>();
  c.keep_examples = jc.at("keep_examples").get<std::size_t>();
  c.jobs = j.at("execution").at("jobs").get<unsigned>();
  s.elapsed_ms = j["execution"].at("elapsed_ms").get<double>();
  const auto& jn = j.at("counts");
  s.enumerated = jn.at("enumerated").get<std::uint64_t>();
  s.almost_free = jn.at("almost_free").get<std::uint64_t>();
  s.effective = jn.at("effective").get<std::uint64_t>();
  s.considered = jn.at("considered").get<std::uint64_t>();
  s.verdicts = j.at("verdicts").get<std::map<std::string, std::uint64_t>>();
  s.sigma_shapes = j.at("sigma_shapes").get<std::map<std::string, std::uint64_t>>();
  s.checked = j.at("checked").get<std::map<std::string, std::uint64_t>>();
  s.counterexample_count = j.at("counterexample_count").get<std::uint64_t>();
  for (const auto& e : j.at("counterexamples")) {
    auto a = parse_assertion(e.at("assertion").get<std::string>());
    if (!a) throw Error(ErrorKind::Parse, "unknown assertion in counterexample");
    s.counterexamples.push_back({*a, params_from_json(e.at("params")), e.at("detail").get<std::string>()});
  }
  s.three_point_positive = j.at("sharpness").at("three_point_positive").get<std::uint64_t>();
  for (const auto& t : j["sharpness"].at("examples")) s.three_point_examples.push_back(params_from_json(t));
  return s;
}

std::string to_text(const ScanSummary& s) {
  std::ostringstream os;
  const auto& c = s.config;
  os << "scan bound=" << c.bound << (c.raw ? " raw" : " canonical");
  if (c.random_samples) os << " + " << c.random_samples << " random (|x|<=" << c.random_bound << ", seed " << c.seed << ")";
  os << "\n";
  os << "instances    " << s.enumerated << " enumerated, " << s.almost_free << " almost free, " << s.effective
     << " effective, " << s.considered << " considered\n";
  os << "verdicts    ";
  for (const auto& [k, v] : s.verdicts) os << " " << k << "=" << v;
  os << "\nsigma shapes";
  for (const auto& [k, v] : s.sigma_shapes) os << " " << k << "=" << v;
  os << "\nchecked     ";
  for (const auto& [k, v] : s.checked) os << " " << k << "=" << v;
  os << "\nthree-point positive instances: " << s.three_point_positive << "\n";
  for (const auto& t : s.three_point_examples) os << "  " << t.to_string() << "\n";
  os << "counterexamples: " << s.counterexample_count << "\n";
  for (const auto& e : s.counterexamples)
    os << "  [" << assertion_name(e.assertion) << "] " << e.params.to_string() << "  " << e.detail << "\n";
  os << "elapsed " << static_cast<long>(s.elapsed_ms) << " ms with " << c.jobs << " job(s)\n";
  return os.str();
}

}  // namespace eschorb
