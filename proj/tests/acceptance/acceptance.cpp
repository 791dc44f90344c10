// Acceptance suite: one pass/fail line per criterion, exit status 1 on any
// failure.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "app/catalog.hpp"
#include "app/pipeline.hpp"
#include "oracle.hpp"

namespace {

using namespace plocal;
using namespace plocal::app;

struct Case {
  std::string group;
  unsigned prime;
};

std::vector<Case> catalog_cases() {
  std::vector<Case> out;
  for (const auto& g : acceptance_groups())
    for (unsigned p : {2u, 3u}) out.push_back({g, p});
  return out;
}

std::string name(const Case& c) { return c.group + " p=" + std::to_string(c.prime); }

AnalysisReport run(const Case& c, std::vector<std::string> checks, std::size_t max_degree = 3) {
  PipelineOptions opt;
  opt.prime = c.prime;
  opt.max_degree = max_degree;
  opt.checks = std::move(checks);
  return run_pipeline(parse_group_spec(c.group), opt);
}

// Failure notes collected while a criterion runs.
class Notes {
 public:
  void fail(const std::string& what) { lines_.push_back(what); }
  bool ok() const { return lines_.empty(); }
  const std::vector<std::string>& lines() const { return lines_; }

  // Every requested verdict must pass; a report without them fails.
  void require_pass(const Case& c, const AnalysisReport& r, const std::vector<std::string>& checks) {
    if (r.aborted) fail(name(c) + ": aborted at " + *r.aborted);
    for (const auto& check : checks) {
      bool found = false;
      for (const auto& v : r.verdicts) {
        if (v.check != check) continue;
        found = true;
        if (v.status != Status::pass)
          fail(name(c) + ": " + check + " is " + to_string(v.status) + " (" + v.detail + ")");
      }
      if (!found && !r.aborted) fail(name(c) + ": " + check + " did not run");
    }
  }

 private:
  std::vector<std::string> lines_;
};

std::vector<std::size_t> dims(const Json& j) { return j.get<std::vector<std::size_t>>(); }

std::vector<std::size_t> head(std::vector<std::size_t> v, std::size_t n) {
  if (v.size() > n) v.resize(n);
  return v;
}

std::string text(const std::vector<std::size_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + "]";
}

Notes closure_suite() {
  Notes n;
  const std::vector<std::string> checks{"closure", "adjunction"};
  for (const auto& c : catalog_cases()) n.require_pass(c, run(c, checks), checks);
  return n;
}

Notes category_laws() {
  Notes n;
  const std::vector<std::string> checks{"category-laws"};
  for (const auto& c : catalog_cases()) n.require_pass(c, run(c, checks), checks);
  return n;
}

Notes transporter_linking() {
  Notes n;
  const std::vector<std::string> checks{"kernel-lemma", "transporter-linking"};
  for (const auto& c : catalog_cases()) n.require_pass(c, run(c, checks, 4), checks);
  return n;
}

Notes step_one() {
  Notes n;
  const std::vector<std::string> checks{"step-one"};
  for (const auto& [c, dmax] : std::vector<std::pair<Case, std::size_t>>{
           {{"sym:3", 2}, 4}, {{"sym:3", 3}, 4}, {{"sym:4", 2}, 3}}) {
    const auto r = run(c, checks, dmax);
    n.require_pass(c, r, checks);
    if (!r.homology["profiles"].contains("transporter_omega")) {
      n.fail(name(c) + ": no transporter profile");
      continue;
    }
    const auto got = head(dims(r.homology["profiles"]["transporter_omega"]), dmax - 1);
    const auto g = build_group(parse_group_spec(c.group));
    const auto want = oracle::bar_homology(*g, c.prime, dmax - 1);
    if (got != want) n.fail(name(c) + ": H(T_omega) " + text(got) + " but bar oracle " + text(want));
  }
  return n;
}

Notes punctured() {
  Notes n;
  const std::vector<std::string> checks{"punctured"};
  for (const auto& c : catalog_cases()) n.require_pass(c, run(c, checks), checks);
  return n;
}

Notes normalizer_and_restriction() {
  Notes n;
  const std::vector<std::string> checks{"normalizer-quotient", "restriction", "filtration"};
  for (const auto& c : catalog_cases()) n.require_pass(c, run(c, checks), checks);
  return n;
}

Notes lambda_vanishing() {
  Notes n;
  const std::vector<std::string> checks{"lambda-vanishing"};
  for (const auto& c : catalog_cases()) n.require_pass(c, run(c, checks), checks);
  return n;
}

std::vector<std::size_t> golden_sym4() {
  std::ifstream in(std::string(PLOCAL_GOLDEN_DIR) + "/sym4_p2.json");
  if (!in) return {};
  return dims(Json::parse(in)["bar_homology"]);
}

Notes main_comparison() {
  Notes n;
  const std::vector<std::string> checks{"main-comparison"};
  const auto golden = golden_sym4();
  if (golden.size() != 3) n.fail("golden file for sym:4 is missing or malformed");
  for (const auto& [c, want] : std::vector<std::pair<Case, std::vector<std::size_t>>>{
           {{"sym:3", 2}, {1, 1, 1}}, {{"sym:3", 3}, {1, 0, 0}}, {{"sym:4", 2}, golden}}) {
    const auto r = run(c, checks, 4);
    n.require_pass(c, r, checks);
    for (const auto& v : r.verdicts) {
      if (v.check != "main-comparison" || !v.data.contains("linking")) continue;
      const auto linking = head(dims(v.data["linking"]), 3);
      const auto bg = head(dims(v.data["classifying_space"]), 3);
      if (linking != want) n.fail(name(c) + ": H(L_S^c) " + text(linking) + ", expected " + text(want));
      if (bg != want) n.fail(name(c) + ": H(BG) " + text(bg) + ", expected " + text(want));
    }
  }
  return n;
}

std::string full_suite_reports() {
  std::string all;
  for (const auto& c : catalog_cases()) all += emit_report(run(c, {}), Format::json, false);
  return all;
}

Notes determinism() {
  Notes n;
  const auto first = full_suite_reports();
  const auto second = full_suite_reports();
  if (first.empty()) n.fail("empty reports");
  if (first != second) n.fail("reports differ between runs");
  return n;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Notes()>>> criteria{
      {"1 closure properties over the catalog", closure_suite},
      {"2 category laws for T, L and O", category_laws},
      {"3 T^c -> L^c kernel conditions and homology isomorphism", transporter_linking},
      {"4 H(T_omega) equals H(BG)", step_one},
      {"5 punctured functor limits vanish", punctured},
      {"6 normalizer quotient, restriction and filtration", normalizer_and_restriction},
      {"7 Lambda vanishing with an order p kernel element", lambda_vanishing},
      {"8 H(L_S^c) equals H(BG) in degrees up to 2", main_comparison},
      {"9 byte-identical reports on repeated runs", determinism},
  };
  int failures = 0;
  for (const auto& [label, body] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Notes notes;
    try {
      notes = body();
    } catch (const std::exception& e) {
      notes.fail(std::string("error: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line << (notes.ok() ? "PASS " : "FAIL ") << label << "  (" << static_cast<long>(secs * 10) / 10.0 << " s)";
    std::cout << line.str() << std::endl;
    for (const auto& l : notes.lines()) std::cout << "     " << l << '\n';
    if (!notes.ok()) ++failures;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
  return failures == 0 ? 0 : 1;
}
