#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "catalog.hpp"
#include "plocal/higher_limits.hpp"
#include "plocal/homology.hpp"

namespace plocal::app {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "plocal-report/1";

enum class Status { pass, fail, not_certified };

const char* to_string(Status s);

struct PipelineOptions {
  unsigned prime = 2;
  /// Nerve and bar complexes are built in degrees 0..max_degree.
  std::size_t max_degree = 4;
  /// Functor cochains are built in degrees 0..max_limit_degree.
  std::size_t max_limit_degree = kDefaultLimitDegree;
  /// F_i is used for i = 0..cohomology_index_max.
  std::size_t cohomology_index_max = 2;
  std::size_t budget = kDefaultBasisBudget;
  std::size_t order_bound = kDefaultOrderBound;
  bool skeletal = true;
  /// Names from check_names(); empty runs everything.
  std::vector<std::string> checks;
};

struct Verdict {
  std::string check;
  Status status = Status::not_certified;
  std::string detail;
  Json data = Json::object();
};

struct AnalysisReport {
  Json input = Json::object();
  Json group = Json::object();
  Json sylow = Json::object();
  Json omega = Json::object();
  Json centric = Json::array();
  Json categories = Json::object();
  Json homology = Json::object();
  std::vector<Verdict> verdicts;
  /// Set when a stage hit the basis budget; later stages did not run.
  std::optional<std::string> aborted;
  std::vector<std::pair<std::string, double>> timings;

  Status overall() const;
};

/// Every check the pipeline knows, in the order it runs them.
const std::vector<std::string>& check_names();

/// Runs the whole verification pipeline. Budget failures stop the run and
/// leave a partial report; other errors propagate.
AnalysisReport run_pipeline(const GroupSpec& spec, const PipelineOptions& options);

enum class Format { json, text };

std::string emit_report(const AnalysisReport& report, Format format, bool include_timings = true);

}  // namespace plocal::app
