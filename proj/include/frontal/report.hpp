#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "frontal/curve_lab.hpp"
#include "frontal/invariants.hpp"

namespace frontal {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "frontal-report/1";
inline constexpr const char* kToolVersion = "0.1.0";

/// One corpus entry: a named germ (x, p, q) with optional expectations.
struct GermSpec {
  std::string name;
  std::string p;
  std::string q;
  /// Expected values keyed by the names of flat_values().
  Json expect = Json::object();
};

enum class ReadingChoice { DPlus, Full, Both };
ReadingChoice parse_reading(const std::string& s);

struct AnalyzeOptions {
  int max_jet = kDefaultJetCap;
  ReadingChoice reading = ReadingChoice::Both;
  bool timing = true;
};

enum class StageStatus { Ok, Failed, Skipped, Undetermined };
const char* to_string(StageStatus s);

struct Stage {
  std::string name;
  StageStatus status = StageStatus::Skipped;
  std::string message;
};

struct Report {
  GermSpec spec;
  std::vector<Stage> stages;
  /// Stage payloads keyed by stage name.
  Json data = Json::object();
  double timing_ms = 0;

  bool parse_failed() const;
  /// A stage stopped at the jet cap without a decision.
  bool undetermined() const;
  const Stage* stage(const std::string& name) const;
};

/// Rationals render as "a/b" (or "n"), polynomials in canonical form.
std::string render(const Scalar& s);

/// Runs every stage; a failing stage is recorded and the rest continue
/// where their inputs exist.
Report run_analyze(const GermSpec& spec, const AnalyzeOptions& options = {});

Json to_json(const Report& r, bool with_timing = true);
Report report_from_json(const Json& j);
std::string to_text(const Report& r);
/// "path.to.key: value" lines for a JSON value.
std::string flatten_text(const Json& j);

/// Flat name -> value view used for corpus expectations (S, K, T, W, F3,
/// codim, frontal, label, ...).
Json flat_values(const Report& r);

struct Mismatch {
  std::string key;
  Json expected;
  Json actual;
};
std::vector<Mismatch> check_expectations(const Report& r);

/// One JSON object per line: {"name", "p", "q", "expect": {...}}. Blank lines
/// and lines starting with '#' are skipped.
GermSpec parse_corpus_line(const std::string& line);
std::vector<GermSpec> load_corpus(const std::string& path);

/// Analyses entries on `threads` workers; results are in input order.
std::vector<Report> run_corpus(const std::vector<GermSpec>& corpus, const AnalyzeOptions& options,
                               unsigned threads = 0);

/// Fold recognition, frontalisation and classification of a germ.
Json frontalise_json(const MapGerm& g, int cap = kDefaultJetCap);
Json classify_json(const MapGerm& g, int cap = kDefaultJetCap);

/// delta, mu, double point function and kappa data for parametrised branches.
Json curve_json(const std::vector<ParamCurve>& branches, int cap = kDefaultJetCap);

}  // namespace frontal
