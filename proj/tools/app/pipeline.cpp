#include "pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include "plocal/category.hpp"
#include "plocal/errors.hpp"
#include "plocal/omega.hpp"

namespace plocal::app {

const char* to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::not_certified:
      return "not-certified";
  }
  return "not-certified";
}

Status AnalysisReport::overall() const {
  if (verdicts.empty()) return Status::not_certified;
  bool all_pass = true;
  for (const auto& v : verdicts) {
    if (v.status == Status::fail) return Status::fail;
    if (v.status != Status::pass) all_pass = false;
  }
  return all_pass && !aborted ? Status::pass : Status::not_certified;
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {
      "closure",          "adjunction",         "category-laws",     "kernel-lemma",
      "step-one",         "punctured",          "restriction",       "normalizer-quotient",
      "lambda-vanishing", "filtration",         "centric-inclusion", "centric-transporter",
      "transporter-linking", "main-comparison",
  };
  return names;
}

namespace {

Json dims_json(const std::vector<std::size_t>& dims) {
  Json a = Json::array();
  for (auto d : dims) a.push_back(d);
  return a;
}

Status from_bool(bool ok) { return ok ? Status::pass : Status::fail; }

Status iso_status(const IsoVerdict& v) {
  if (v.iso.empty()) return Status::not_certified;
  return from_bool(v.all_iso());
}

Json iso_json(const IsoVerdict& v) {
  Json j;
  j["source"] = dims_json(v.source.dims);
  j["target"] = dims_json(v.target.dims);
  j["cone"] = dims_json(v.cone.dims);
  j["induced_rank"] = dims_json(v.induced_rank);
  Json iso = Json::array();
  for (bool b : v.iso) iso.push_back(b);
  j["iso"] = iso;
  if (!v.iso.empty()) j["certified_max"] = v.certified_max;
  return j;
}

std::string profile_text(const std::vector<std::size_t>& dims) { return to_string(LimitsProfile{dims}); }

Json category_json(const FiniteCategory& c) {
  Json j;
  j["objects"] = c.object_count();
  j["morphisms"] = c.morphism_count();
  return j;
}

Json generators_json(const Subgroup& s) {
  Json a = Json::array();
  for (ElemId g : s.generators()) a.push_back(s.parent().element(g).to_cycles());
  return a;
}

std::vector<Subgroup> centric_only(std::span<const Subgroup> subgroups, unsigned p) {
  std::vector<Subgroup> out;
  for (const auto& s : subgroups) {
    if (is_centric(s, p)) out.push_back(s);
  }
  return out;
}

/// `small` followed by the members of `big` that are needed to contain it:
/// in skeletal mode one representative per remaining conjugacy class,
/// otherwise every member of `big` not already in `small`.
std::vector<Subgroup> extend_collection(const std::vector<Subgroup>& small, const std::vector<Subgroup>& big,
                                        bool skeletal) {
  std::vector<Subgroup> out = small;
  for (const auto& s : big) {
    const bool present = skeletal ? find_conjugate(out, s).has_value()
                                  : std::find(out.begin(), out.end(), s) != out.end();
    if (!present) out.push_back(s);
  }
  return out;
}

std::vector<ObjId> first_objects(std::size_t n) {
  std::vector<ObjId> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = static_cast<ObjId>(i);
  return ids;
}

struct BudgetAbort {
  std::string stage;
  std::string reason;
};

class Runner {
 public:
  Runner(const GroupSpec& spec, const PipelineOptions& options) : spec_(spec), opt_(options) {}

  AnalysisReport run();

 private:
  bool wanted(const std::string& check) const {
    return opt_.checks.empty() || std::find(opt_.checks.begin(), opt_.checks.end(), check) != opt_.checks.end();
  }

  void timed(const std::string& stage, const std::function<void()>& body);
  void check(const std::string& name, const std::function<Verdict()>& body);

  CategoryPtr maybe_skeleton(const CategoryPtr& c) const { return opt_.skeletal ? skeleton(c).category : c; }
  const NerveComplex& bar();
  void record_profile(const std::string& name, const HomologyProfile& h);
  std::vector<Subgroup> omega_collection() const;
  std::vector<Subgroup> centric_omega_collection() const;
  std::vector<Subgroup> centric_collection() const;

  Verdict closure();
  Verdict adjunction();
  Verdict category_laws();
  Verdict kernel_lemma();
  Verdict step_one();
  Verdict punctured();
  Verdict restriction();
  Verdict normalizer_quotient();
  Verdict lambda_vanishing();
  Verdict filtration();
  Verdict centric_inclusion();
  Verdict centric_transporter();
  Verdict transporter_linking();
  Verdict main_comparison();

  const GroupSpec& spec_;
  const PipelineOptions& opt_;
  AnalysisReport report_;

  GroupPtr group_;
  unsigned p_ = 2;
  std::optional<Subgroup> sylow_;
  std::optional<OmegaPoset> omega_;
  std::vector<Subgroup> sylow_subgroups_;
  std::vector<Subgroup> class_reps_;
  std::vector<Subgroup> centric_all_;
  std::optional<NerveComplex> bar_;
};

void Runner::timed(const std::string& stage, const std::function<void()>& body) {
  const auto start = std::chrono::steady_clock::now();
  try {
    body();
  } catch (const BudgetExceeded& e) {
    const auto end = std::chrono::steady_clock::now();
    report_.timings.emplace_back(stage, std::chrono::duration<double, std::milli>(end - start).count());
    throw BudgetAbort{stage, e.what()};
  }
  const auto end = std::chrono::steady_clock::now();
  report_.timings.emplace_back(stage, std::chrono::duration<double, std::milli>(end - start).count());
}

void Runner::check(const std::string& name, const std::function<Verdict()>& body) {
  if (!wanted(name)) return;
  timed(name, [&] {
    Verdict v = body();
    v.check = name;
    report_.verdicts.push_back(std::move(v));
  });
}

const NerveComplex& Runner::bar() {
  if (!bar_) {
    bar_ = bar_complex(group_, p_, opt_.max_degree, opt_.budget);
    record_profile("bar", fp_homology(bar_->complex));
  }
  return *bar_;
}

void Runner::record_profile(const std::string& name, const HomologyProfile& h) {
  report_.homology["profiles"][name] = dims_json(h.dims);
}

std::vector<Subgroup> Runner::omega_collection() const {
  const auto members = omega_->members();
  return {members.begin(), members.end()};
}

std::vector<Subgroup> Runner::centric_omega_collection() const {
  return centric_only(omega_->members(), p_);
}

std::vector<Subgroup> Runner::centric_collection() const {
  return opt_.skeletal ? centric_only(class_reps_, p_) : centric_all_;
}

AnalysisReport Runner::run() {
  report_.input["group"] = spec_.text;
  report_.input["prime"] = opt_.prime;
  report_.input["max_degree"] = opt_.max_degree;
  report_.input["max_limit_degree"] = opt_.max_limit_degree;
  report_.input["cohomology_index_max"] = opt_.cohomology_index_max;
  report_.input["budget"] = opt_.budget;
  report_.input["skeletal"] = opt_.skeletal;
  Json checks = Json::array();
  for (const auto& c : check_names()) {
    if (wanted(c)) checks.push_back(c);
  }
  report_.input["checks"] = checks;
  for (const auto& c : opt_.checks) {
    if (std::find(check_names().begin(), check_names().end(), c) == check_names().end()) {
      throw Error("unknown check '" + c + "'");
    }
  }
  if (!is_prime(opt_.prime)) throw Error("not a prime: " + std::to_string(opt_.prime));
  p_ = opt_.prime;

  try {
    timed("group", [&] {
      group_ = build_group(spec_, opt_.order_bound);
      report_.group["order"] = group_->order();
      report_.group["degree"] = group_->degree();
      Json gens = Json::array();
      for (const auto& g : group_->generators()) gens.push_back(g.to_cycles());
      report_.group["generators"] = gens;
    });

    timed("sylow", [&] {
      sylow_ = sylow_subgroup(group_, p_);
      report_.sylow["order"] = sylow_->order();
      report_.sylow["count"] = sylow_conjugates(*sylow_).size();
      report_.sylow["generators"] = generators_json(*sylow_);
    });

    timed("omega", [&] {
      omega_.emplace(group_, p_);
      const auto& om = *omega_;
      Json members = Json::array();
      for (std::size_t i = 0; i < om.size(); ++i) {
        Json m;
        m["label"] = subgroup_label(om.members()[i]);
        m["order"] = om.members()[i].order();
        m["class"] = om.class_of(i);
        m["centric"] = is_centric(om.members()[i], p_);
        members.push_back(m);
      }
      report_.omega["members"] = members;
      Json classes = Json::array();
      for (const auto& cls : om.classes()) {
        Json c;
        c["representative"] = subgroup_label(om.members()[cls.front()]);
        c["size"] = cls.size();
        c["centric"] = is_centric(om.members()[cls.front()], p_);
        classes.push_back(c);
      }
      report_.omega["classes"] = classes;
      Json hasse = Json::array();
      for (const auto& [a, b] : om.hasse_edges()) hasse.push_back(Json::array({a, b}));
      report_.omega["hasse"] = hasse;
      report_.omega["minimum"] = subgroup_label(om.members()[om.minimum()]);
      report_.omega["chain_length"] = chain_length(om);
    });

    timed("centric", [&] {
      sylow_subgroups_ = all_subgroups(*sylow_);
      class_reps_ = conjugacy_representatives(sylow_subgroups_);
      for (const auto& rep : class_reps_) {
        const auto e = centricity_entry(rep, p_);
        Json j;
        j["label"] = subgroup_label(rep);
        j["order"] = rep.order();
        j["class_size"] = conjugacy_class(rep).size();
        j["centric"] = e.is_centric;
        j["centralizer_order"] = e.centralizer.order();
        j["center_order"] = e.center.order();
        j["residual_order"] = e.residual.order();
        report_.centric.push_back(j);
        if (e.is_centric) {
          for (auto& s : conjugacy_class(rep)) centric_all_.push_back(std::move(s));
        }
      }
      std::sort(centric_all_.begin(), centric_all_.end());
    });

    report_.homology["max_degree"] = opt_.max_degree;
    if (opt_.max_degree >= 2) report_.homology["certified_max"] = opt_.max_degree - 2;
    report_.homology["profiles"] = Json::object();

    check("closure", [&] { return closure(); });
    check("adjunction", [&] { return adjunction(); });
    check("category-laws", [&] { return category_laws(); });
    check("kernel-lemma", [&] { return kernel_lemma(); });
    check("step-one", [&] { return step_one(); });
    check("punctured", [&] { return punctured(); });
    check("restriction", [&] { return restriction(); });
    check("normalizer-quotient", [&] { return normalizer_quotient(); });
    check("lambda-vanishing", [&] { return lambda_vanishing(); });
    check("filtration", [&] { return filtration(); });
    check("centric-inclusion", [&] { return centric_inclusion(); });
    check("centric-transporter", [&] { return centric_transporter(); });
    check("transporter-linking", [&] { return transporter_linking(); });
    check("main-comparison", [&] { return main_comparison(); });
  } catch (const BudgetAbort& a) {
    report_.aborted = a.stage + ": " + a.reason;
  }
  return report_;
}

// ---------------------------------------------------------------------------

Verdict Runner::closure() {
  const auto v = check_closure_properties(*omega_, sylow_subgroups_);
  Verdict out;
  out.status = from_bool(v.ok());
  out.data["subgroups_tested"] = v.subgroups_tested;
  out.data["extensive_and_monotone"] = v.extensive_and_monotone;
  out.data["idempotent"] = v.idempotent;
  out.data["transporters_grow"] = v.transporters_grow;
  out.data["transporters_agree"] = v.transporters_agree;
  out.data["conjugation_equivariant"] = v.conjugation_equivariant;
  out.detail = std::to_string(v.subgroups_tested) + " subgroups of S";
  return out;
}

Verdict Runner::adjunction() {
  const auto v = circ_adjunction_check(*omega_, sylow_subgroups_);
  Verdict out;
  out.status = from_bool(v.ok());
  out.data["circ_is_functor"] = v.circ_is_functor;
  out.data["unit_natural"] = v.unit_natural;
  out.data["bijections"] = v.bijections;
  out.data["pairs_checked"] = v.pairs_checked;
  out.detail = std::to_string(v.pairs_checked) + " pairs";
  return out;
}

Verdict Runner::category_laws() {
  std::vector<std::pair<std::string, CategoryPtr>> built;
  built.emplace_back("transporter_omega", build_transporter(omega_collection()));
  built.emplace_back("transporter_omega_centric", build_transporter(centric_omega_collection()));
  built.emplace_back("transporter_centric", build_transporter(centric_all_));
  built.emplace_back("linking_centric", build_linking(p_, centric_all_));
  built.emplace_back("linking_sylow_centric", build_linking(p_, centric_only(sylow_subgroups_, p_)));
  built.emplace_back("orbit_omega", build_orbit(omega_collection()));
  built.emplace_back("orbit_omega_skeletal", omega_orbit_category(*omega_));
  built.emplace_back("orbit_p_skeletal", p_subgroup_orbit_category(*sylow_, p_));

  Verdict out;
  bool ok = true;
  std::size_t triples = 0;
  for (const auto& [name, c] : built) {
    const auto laws = check_category_laws(*c);
    Json j = category_json(*c);
    j["laws"] = laws.ok();
    report_.categories[name] = j;
    ok = ok && laws.ok();
    triples += laws.triples_checked;
    if (!laws.ok() && out.detail.empty()) out.detail = "laws fail in " + name;
  }
  out.status = from_bool(ok);
  out.data["categories"] = built.size();
  out.data["triples_checked"] = triples;
  if (ok) out.detail = std::to_string(built.size()) + " categories, " + std::to_string(triples) + " triples";
  return out;
}

Verdict Runner::kernel_lemma() {
  Verdict out;
  if (centric_all_.empty()) {
    out.status = Status::pass;
    out.detail = "no centric subgroups";
    return out;
  }
  const auto psi = quotient_projection(build_transporter(centric_all_), p_);
  const auto v = verify_kernel_lemma(psi, p_);
  const bool functor = psi.is_functor();
  out.status = from_bool(v.ok() && functor);
  out.data["functor"] = functor;
  out.data["bijective_on_iso_classes"] = v.bijective_on_iso_classes;
  out.data["surjective_on_morphisms"] = v.surjective_on_morphisms;
  out.data["kernels_prime_to_p"] = v.kernels_prime_to_p;
  out.data["fibers_are_kernel_orbits"] = v.fibers_are_kernel_orbits;
  out.data["kernel_orders"] = dims_json(v.kernel_orders);
  out.detail = "projection on " + std::to_string(centric_all_.size()) + " centric subgroups";
  return out;
}

Verdict Runner::step_one() {
  Verdict out;
  const auto full = build_transporter(omega_collection());
  const auto t = maybe_skeleton(full);
  const auto min_obj = find_conjugate(t->subgroups(), omega_->members()[omega_->minimum()]);
  const auto bg = build_group_category(group_);
  const auto inclusion = automorphism_inclusion(bg, t, static_cast<ObjId>(*min_obj));
  const auto& b = bar();
  const auto nerve = nerve_complex(t, p_, opt_.max_degree, opt_.budget);
  const auto map = induced_chain_map(inclusion, b, nerve);
  const auto iso = homology_iso_verdict(b.complex, nerve.complex, map);
  record_profile("transporter_omega", iso.target);

  const auto cosets = build_coset_category(omega_collection());
  const auto coset_nerve = nerve_complex(cosets, p_, opt_.max_degree, opt_.budget);
  const auto coset_h = fp_homology(coset_nerve.complex);
  record_profile("orbit_omega_cosets", coset_h);
  bool contractible = !coset_h.dims.empty() && coset_h.dims[0] == 1;
  for (std::size_t d = 1; d < coset_h.dims.size(); ++d) contractible = contractible && coset_h.dims[d] == 0;

  out.status = iso_status(iso);
  if (!contractible) out.status = Status::fail;
  out.data["comparison"] = iso_json(iso);
  out.data["coset_category"] = category_json(*cosets);
  out.data["coset_homology"] = dims_json(coset_h.dims);
  out.data["contractible"] = contractible;
  out.detail = "H(T_omega) " + profile_text(iso.target.dims) + " vs H(BG) " + profile_text(iso.source.dims);
  return out;
}

Verdict Runner::punctured() {
  Verdict out;
  if (opt_.max_limit_degree == 0) {
    out.detail = "no limit degrees requested";
    return out;
  }
  bool ok = true;
  std::size_t cases = 0;
  Json list = Json::array();
  for (const auto& cls : omega_->classes()) {
    const auto& q = omega_->members()[cls.front()];
    if (is_centric(q, p_)) continue;
    for (std::size_t i = 0; i <= opt_.cohomology_index_max; ++i) {
      const auto v = punctured_vanishing(*omega_, q, i, opt_.max_limit_degree);
      Json j;
      j["subgroup"] = subgroup_label(q);
      j["i"] = i;
      j["over_omega"] = dims_json(v.over_omega.dims);
      j["over_p_subgroups"] = dims_json(v.over_p_subgroups.dims);
      j["ok"] = v.ok();
      list.push_back(j);
      ok = ok && v.ok();
      ++cases;
    }
  }
  out.status = from_bool(ok);
  out.data["cases"] = list;
  out.detail = cases == 0 ? "no non-centric classes in omega" : std::to_string(cases) + " cases";
  return out;
}

Verdict Runner::restriction() {
  Verdict out;
  if (opt_.max_limit_degree == 0) {
    out.detail = "no limit degrees requested";
    return out;
  }
  const auto orbit = omega_orbit_category(*omega_);
  std::vector<bool> support(orbit->object_count());
  std::vector<ObjId> kept;
  for (ObjId a = 0; a < orbit->object_count(); ++a) {
    support[a] = is_centric(orbit->subgroups()[a], p_);
    if (support[a]) kept.push_back(a);
  }
  bool ok = true;
  Json list = Json::array();
  for (std::size_t i = 0; i <= opt_.cohomology_index_max; ++i) {
    const auto f = cohomology_functor(orbit, p_, i, support);
    const auto v = restriction_check(f, kept, opt_.max_limit_degree);
    Json j;
    j["i"] = i;
    j["full"] = dims_json(v.full.dims);
    j["restricted"] = dims_json(v.restricted.dims);
    j["ok"] = v.ok();
    list.push_back(j);
    ok = ok && v.ok();
  }
  out.status = from_bool(ok);
  out.data["cases"] = list;
  out.detail = "omega centric subcollection, " + std::to_string(kept.size()) + " of " +
               std::to_string(orbit->object_count()) + " classes";
  return out;
}

Verdict Runner::normalizer_quotient() {
  Verdict out;
  if (opt_.max_limit_degree == 0) {
    out.detail = "no limit degrees requested";
    return out;
  }
  bool ok = true;
  Json list = Json::array();
  for (const auto& q : class_reps_) {
    for (std::size_t i = 0; i <= opt_.cohomology_index_max; ++i) {
      const auto v = normalizer_quotient_check(*sylow_, p_, q, i, opt_.max_limit_degree);
      Json j;
      j["subgroup"] = subgroup_label(q);
      j["i"] = i;
      j["quotient_order"] = v.quotient_order;
      j["module_dim"] = v.module_dim;
      j["orbit_side"] = dims_json(v.orbit_side.dims);
      j["quotient_side"] = dims_json(v.quotient_side.dims);
      list.push_back(j);
      ok = ok && v.ok();
    }
  }
  out.status = from_bool(ok);
  out.data["cases"] = list;
  out.detail = std::to_string(list.size()) + " cases over " + std::to_string(class_reps_.size()) + " classes";
  return out;
}

Verdict Runner::lambda_vanishing() {
  Verdict out;
  if (opt_.max_limit_degree == 0) {
    out.detail = "no limit degrees requested";
    return out;
  }
  const auto module = ModuleData::trivial(*group_);
  const auto lam = lambda_star(group_, p_, module, opt_.max_limit_degree);
  const bool hypothesis = kernel_has_order_p_element(*group_, module, p_);
  out.data["lambda"] = dims_json(lam.dims);
  out.data["hypothesis"] = hypothesis;
  if (hypothesis) {
    out.status = from_bool(lam.vanishes());
    out.detail = "trivial module, lambda " + to_string(lam);
  } else {
    out.status = Status::pass;
    out.detail = "no element of order p; lambda " + to_string(lam);
  }
  return out;
}

Verdict Runner::filtration() {
  Verdict out;
  if (opt_.max_limit_degree == 0) {
    out.detail = "no limit degrees requested";
    return out;
  }
  bool ok = true;
  std::size_t stages = 0;
  Json list = Json::array();
  for (std::size_t i = 0; i <= opt_.cohomology_index_max; ++i) {
    const auto v = filtration_pipeline(*omega_, i, opt_.max_limit_degree);
    Json j;
    j["i"] = i;
    j["centric_end"] = dims_json(v.centric_end.dims);
    j["omega_end"] = dims_json(v.omega_end.dims);
    Json st = Json::array();
    for (const auto& s : v.stages) {
      Json k;
      k["added"] = s.added;
      k["order"] = s.order;
      k["upward_closed"] = s.upward_closed;
      k["kernel_is_punctured"] = s.kernel_is_punctured;
      k["kernel_limits"] = dims_json(s.kernel_limits.dims);
      k["before"] = dims_json(s.before.dims);
      k["after"] = dims_json(s.after.dims);
      k["ok"] = s.ok();
      st.push_back(k);
    }
    j["stages"] = st;
    if (const auto bad = v.first_failure()) j["first_failure"] = *bad;
    list.push_back(j);
    ok = ok && v.ok();
    stages = v.stages.size();
  }
  out.status = from_bool(ok);
  out.data["cases"] = list;
  out.detail = std::to_string(stages) + (stages == 1 ? " stage" : " stages") + " per functor";
  return out;
}

Verdict Runner::centric_inclusion() {
  Verdict out;
  const auto small = opt_.skeletal ? conjugacy_representatives(centric_omega_collection()) : centric_omega_collection();
  const auto big = extend_collection(small, omega_collection(), opt_.skeletal);
  const auto whole = build_transporter(big);
  const auto sub = full_subcategory(whole, first_objects(small.size()));
  const auto a = nerve_complex(sub.category, p_, opt_.max_degree, opt_.budget);
  const auto b = nerve_complex(whole, p_, opt_.max_degree, opt_.budget);
  const auto iso = homology_iso_verdict(a.complex, b.complex, induced_chain_map(sub.inclusion, a, b));
  record_profile("transporter_omega_centric", iso.source);
  out.status = iso_status(iso);
  out.data["comparison"] = iso_json(iso);
  out.detail = "H " + profile_text(iso.source.dims) + " -> " + profile_text(iso.target.dims);
  return out;
}

Verdict Runner::centric_transporter() {
  Verdict out;
  const auto small = opt_.skeletal ? conjugacy_representatives(centric_omega_collection()) : centric_omega_collection();
  const auto big = extend_collection(small, centric_collection(), opt_.skeletal);
  const auto whole = build_transporter(big);
  const auto sub = full_subcategory(whole, first_objects(small.size()));
  const auto a = nerve_complex(sub.category, p_, opt_.max_degree, opt_.budget);
  const auto b = nerve_complex(whole, p_, opt_.max_degree, opt_.budget);
  const auto iso = homology_iso_verdict(a.complex, b.complex, induced_chain_map(sub.inclusion, a, b));
  record_profile("transporter_centric", iso.target);
  out.status = iso_status(iso);
  out.data["comparison"] = iso_json(iso);
  out.detail = "H " + profile_text(iso.source.dims) + " -> " + profile_text(iso.target.dims);
  return out;
}

Verdict Runner::transporter_linking() {
  Verdict out;
  const auto objects = centric_collection();
  if (objects.empty()) {
    out.detail = "no centric subgroups";
    return out;
  }
  const auto t = build_transporter(objects);
  const auto psi = quotient_projection(t, p_);
  const auto kernel = verify_kernel_lemma(psi, p_);
  const auto a = nerve_complex(t, p_, opt_.max_degree, opt_.budget);
  const auto b = nerve_complex(psi.target, p_, opt_.max_degree, opt_.budget);
  const auto iso = homology_iso_verdict(a.complex, b.complex, induced_chain_map(psi, a, b));
  record_profile("linking_centric", iso.target);
  out.status = iso_status(iso);
  if (!kernel.ok()) out.status = Status::fail;
  out.data["kernel_lemma"] = kernel.ok();
  out.data["comparison"] = iso_json(iso);
  out.detail = "H(T^c) " + profile_text(iso.source.dims) + " -> H(L^c) " + profile_text(iso.target.dims);
  return out;
}

Verdict Runner::main_comparison() {
  Verdict out;
  const auto in_s = centric_only(sylow_subgroups_, p_);
  const auto objects = opt_.skeletal ? conjugacy_representatives(in_s) : in_s;
  const auto l = build_linking(p_, objects);
  const auto nerve = nerve_complex(l, p_, opt_.max_degree, opt_.budget);
  const auto hl = fp_homology(nerve.complex);
  const auto hb = fp_homology(bar().complex);
  record_profile("linking_sylow_centric", hl);
  out.data["linking"] = dims_json(hl.dims);
  out.data["classifying_space"] = dims_json(hb.dims);
  if (opt_.max_degree < 2) {
    out.detail = "truncation leaves no certified degree";
    return out;
  }
  const std::size_t certified = opt_.max_degree - 2;
  bool equal = true;
  for (std::size_t d = 0; d <= certified; ++d) equal = equal && hl.dims[d] == hb.dims[d];
  out.data["certified_max"] = certified;
  out.status = from_bool(equal);
  std::vector<std::size_t> shown(hl.dims.begin(), hl.dims.begin() + static_cast<std::ptrdiff_t>(certified + 1));
  out.detail = "H(L_S^c) = H(BG) = " + profile_text(shown) + " for d <= " + std::to_string(certified);
  if (!equal) {
    out.detail = "H(L_S^c) " + profile_text(hl.dims) + " differs from H(BG) " + profile_text(hb.dims);
  }
  return out;
}

}  // namespace

AnalysisReport run_pipeline(const GroupSpec& spec, const PipelineOptions& options) {
  return Runner(spec, options).run();
}

std::string emit_report(const AnalysisReport& report, Format format, bool include_timings) {
  if (format == Format::text) {
    std::ostringstream out;
    out << "group " << report.input.value("group", std::string()) << "  prime "
        << report.input.value("prime", 0u);
    if (report.group.contains("order")) out << "  order " << report.group["order"].get<std::size_t>();
    out << '\n';
    if (report.sylow.contains("order")) {
      out << "sylow order " << report.sylow["order"].get<std::size_t>() << "  count "
          << report.sylow["count"].get<std::size_t>() << '\n';
    }
    if (report.omega.contains("members")) {
      out << "omega " << report.omega["members"].size() << " members  " << report.omega["classes"].size()
          << " classes  chain length " << report.omega["chain_length"].get<std::size_t>() << '\n';
    }
    for (const auto& v : report.verdicts) {
      std::string status = to_string(v.status);
      status.resize(14, ' ');
      std::string name = v.check;
      name.resize(21, ' ');
      out << status << name << v.detail << '\n';
    }
    if (report.aborted) out << "aborted " << *report.aborted << '\n';
    out << "overall " << to_string(report.overall()) << '\n';
    if (include_timings) {
      for (const auto& [stage, ms] : report.timings) out << "time " << stage << ' ' << ms << " ms\n";
    }
    return out.str();
  }

  Json j;
  j["schema"] = kReportSchema;
  j["input"] = report.input;
  j["group"] = report.group;
  j["sylow"] = report.sylow;
  j["omega"] = report.omega;
  j["centric"] = report.centric;
  j["categories"] = report.categories;
  j["homology"] = report.homology;
  Json verdicts = Json::array();
  for (const auto& v : report.verdicts) {
    Json k;
    k["check"] = v.check;
    k["status"] = to_string(v.status);
    k["detail"] = v.detail;
    k["data"] = v.data;
    verdicts.push_back(k);
  }
  j["verdicts"] = verdicts;
  j["aborted"] = report.aborted ? Json(*report.aborted) : Json(nullptr);
  j["overall"] = to_string(report.overall());
  if (include_timings) {
    Json t = Json::object();
    for (const auto& [stage, ms] : report.timings) t[stage] = ms;
    j["timings_ms"] = t;
  }
  return j.dump(2) + "\n";
}

}  // namespace plocal::app
