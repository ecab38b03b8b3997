#include "lowtail/report.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "lowtail/dependency.hpp"
#include "lowtail/errors.hpp"
#include "lowtail/oracle.hpp"
#include "lowtail/rng.hpp"

namespace lowtail {

namespace {

const char* mode_name(RelationMode mode) {
  switch (mode) {
    case RelationMode::support_overlap: return "support-overlap";
    case RelationMode::exact_refined: return "exact-refined";
    case RelationMode::user_supplied: return "user-supplied";
  }
  return "?";
}

const char* method_name(Method method) {
  return method == Method::exact ? "exact" : "monte-carlo";
}

Json config_doc(const RunOptions& opts) {
  Json j;
  j["max_exact_support"] = opts.prob.max_exact_support;
  j["mc_samples"] = opts.prob.mc_samples;
  j["seed"] = opts.prob.seed;
  j["tolerance"] = opts.tolerance;
  j["exact_tolerance"] = opts.exact_tolerance;
  Json grid = Json::array();
  for (double f : opts.t_fracs) grid.push_back(f);
  j["t_grid"] = std::move(grid);
  j["force"] = opts.force;
  return j;
}

Json summary_doc(const Summary& s) {
  Json j;
  j["mu"] = s.mu;
  j["delta"] = s.delta;
  j["eps"] = s.eps;
  j["delta_bar"] = s.delta_bar;
  j["method"] = method_name(s.method);
  if (s.method == Method::monte_carlo) j["max_std_error"] = s.max_std_error;
  Json per_event = Json::array();
  for (const PerEvent& e : s.per_event) {
    Json je;
    je["prob"] = e.prob;
    je["weight"] = e.weight;
    per_event.push_back(std::move(je));
  }
  j["per_event"] = std::move(per_event);
  return j;
}

Json value_doc(const BoundValue& v) {
  Json j;
  j["raw"] = v.raw;
  j["clamped"] = v.clamped;
  return j;
}

Json bounds_doc(const BoundReport& report) {
  Json j;
  j["i1"] = report.i1 ? value_doc(*report.i1) : Json(nullptr);
  j["i1a"] = report.i1a ? value_doc(*report.i1a) : Json(nullptr);
  Json i2a = value_doc(report.i2a);
  i2a["method"] = method_name(report.i2a_method);
  i2a["sum_expectations"] = report.i2a_sum;
  j["i2a"] = std::move(i2a);
  j["lower_bound"] = report.lower;
  Json grid = Json::array();
  for (const GridRow& row : report.grid) {
    Json jr;
    jr["frac"] = row.frac;
    jr["t"] = row.t;
    if (row.has_i2) {
      jr["i2_phi"] = value_doc(row.i2_phi);
      jr["i2_quad"] = value_doc(row.i2_quad);
    } else {
      jr["i2_phi"] = nullptr;
      jr["i2_quad"] = nullptr;
    }
    jr["i2e_phi"] = value_doc(row.i2e_phi);
    jr["i2e_quad"] = value_doc(row.i2e_quad);
    grid.push_back(std::move(jr));
  }
  j["grid"] = std::move(grid);
  return j;
}

Json validation_doc(const ValidationReport& v) {
  Json j;
  j["pass"] = v.pass;
  j["tolerance"] = v.tol;
  j["worst_violation"] = v.worst_violation;
  Json entries = Json::array();
  for (const SubsetCheckEntry& e : v.entries) {
    Json je;
    je["event"] = e.event;
    je["subsets_checked"] = e.subsets_checked;
    je["exhaustive"] = e.exhaustive;
    je["statistical"] = e.statistical;
    je["worst_violation"] = e.worst_violation;
    entries.push_back(std::move(je));
  }
  j["events"] = std::move(entries);
  if (!v.warnings.empty()) {
    Json w = Json::array();
    for (const std::string& s : v.warnings) w.push_back(s);
    j["warnings"] = std::move(w);
  }
  return j;
}

struct PreparedRelation {
  DependencyRelation relation;
  Json doc;
  std::optional<ValidationReport> validation;
};

PreparedRelation prepare_relation(const Instance& instance, const RunOptions& opts) {
  const EventFamily& family = instance.family;
  const DependencyMode mode = opts.dependency_override.value_or(instance.dependency.mode);

  if (mode == DependencyMode::explicit_pairs && instance.dependency.mode != DependencyMode::explicit_pairs) {
    throw RelationError("--dependency cannot introduce explicit pairs; put them in the instance file");
  }

  if (mode == DependencyMode::support) {
    DependencyRelation rel = build_support_relation(family);
    Json doc;
    doc["mode"] = mode_name(rel.mode());
    doc["pair_count"] = rel.pair_count();
    return PreparedRelation{std::move(rel), std::move(doc), std::nullopt};
  }

  if (mode == DependencyMode::exact) {
    const DependencyRelation support = build_support_relation(family);
    RefineOutcome refined = refine_exact(support, family, opts.exact_tolerance, opts.prob);
    ValidationReport validation =
        validate_relation(refined.relation, family, opts.exact_tolerance, opts.prob);
    Json doc;
    doc["mode"] = mode_name(refined.relation.mode());
    doc["pair_count"] = refined.relation.pair_count();
    doc["pairs_removed"] = refined.removed;
    if (!refined.warnings.empty()) {
      Json w = Json::array();
      for (const std::string& s : refined.warnings) w.push_back(s);
      doc["warnings"] = std::move(w);
    }
    return PreparedRelation{std::move(refined.relation), std::move(doc), std::move(validation)};
  }

  DependencyRelation rel(family.size(), instance.dependency.pairs, RelationMode::user_supplied);
  ValidationReport validation = validate_relation(rel, family, opts.exact_tolerance, opts.prob);
  Json doc;
  doc["mode"] = mode_name(rel.mode());
  doc["pair_count"] = rel.pair_count();
  return PreparedRelation{std::move(rel), std::move(doc), std::move(validation)};
}

Json instance_doc(const Instance& instance) {
  Json j;
  j["n"] = instance.family.space().size();
  j["k"] = instance.family.size();
  j["weighted"] = !instance.family.unweighted();
  return j;
}

Json base_document(const char* command, const Instance& instance, const RunOptions& opts,
                   const PreparedRelation& prepared) {
  Json doc;
  doc["command"] = command;
  doc["instance"] = instance_doc(instance);
  doc["config"] = config_doc(opts);
  doc["relation"] = prepared.doc;
  if (prepared.validation) doc["relation_validation"] = validation_doc(*prepared.validation);
  return doc;
}

}  // namespace

Json run_compute(const Instance& instance, const RunOptions& opts) {
  const PreparedRelation prepared = prepare_relation(instance, opts);
  Json doc = base_document("compute", instance, opts, prepared);

  if (prepared.relation.mode() == RelationMode::user_supplied && prepared.validation &&
      !prepared.validation->pass && !opts.force) {
    doc["aborted"] = true;
    doc["abort_reason"] = "user-supplied relation failed independence validation (pass --force to override)";
    return doc;
  }

  const BoundReport bounds = make_bound_report(instance.family, prepared.relation, opts.t_fracs, opts.prob);
  doc["summary"] = summary_doc(bounds.summary);
  doc["bounds"] = bounds_doc(bounds);
  return doc;
}

namespace {

struct StatTail {
  double estimate;
  double std_error;
};

StatTail tail_stat(std::uint64_t hits, std::uint64_t samples) {
  const double est = static_cast<double>(hits) / static_cast<double>(samples);
  return StatTail{est, std::sqrt(est * (1.0 - est) / static_cast<double>(samples))};
}

// One domination row: upper ? bound >= lhs : bound <= lhs, within tol, and
// within 3 standard errors on top when the left side is a Monte Carlo
// estimate.
Json domination_entry(const std::string& name, double bound_raw, double lhs, double lhs_se, bool upper,
                      double tol, bool statistical, bool& pass) {
  const double margin = tol + (statistical ? 3.0 * lhs_se : 0.0);
  const double slack = upper ? bound_raw - lhs : lhs - bound_raw;
  const bool ok = slack >= -margin;
  if (!ok) pass = false;
  Json j;
  j["bound"] = name;
  j["value"] = bound_raw;
  j["exact_lhs"] = lhs;
  if (statistical) j["lhs_std_error"] = lhs_se;
  j["slack"] = slack;
  j["pass"] = ok;
  return j;
}

Json aim_doc(const AimReport& r, const std::vector<std::size_t>& ordering) {
  Json j;
  j["pass"] = r.pass;
  j["worst_slack"] = r.worst_slack;
  Json ord = Json::array();
  for (std::size_t e : ordering) ord.push_back(e);
  j["ordering"] = std::move(ord);
  return j;
}

}  // namespace

Json run_verify(const Instance& instance, const RunOptions& opts) {
  const EventFamily& family = instance.family;
  const PreparedRelation prepared = prepare_relation(instance, opts);
  Json doc = base_document("verify", instance, opts, prepared);
  bool pass = true;

  // Relation soundness is part of verification even in force mode.
  std::optional<ValidationReport> validation = prepared.validation;
  if (!validation) {
    validation = validate_relation(prepared.relation, family, opts.exact_tolerance, opts.prob);
    doc["relation_validation"] = validation_doc(*validation);
  }
  if (!validation->pass) pass = false;

  const BoundReport bounds = make_bound_report(family, prepared.relation, opts.t_fracs, opts.prob);
  doc["summary"] = summary_doc(bounds.summary);
  doc["bounds"] = bounds_doc(bounds);
  const Summary& s = bounds.summary;

  const int joint_size = std::popcount(family.joint_support());
  const bool exact_mode = joint_size <= opts.prob.max_exact_support;
  if (!exact_mode && opts.prob.mc_samples == 0) {
    throw TooLargeForExact(joint_size, opts.prob.max_exact_support);
  }

  Json checks;
  Json domination = Json::array();

  if (exact_mode) {
    const ExactDistribution dist = enumerate_distribution(family, opts.prob.max_exact_support);
    Json oracle;
    oracle["coords_enumerated"] = dist.coords_enumerated();
    oracle["prob_zero"] = dist.prob_zero();
    oracle["mean"] = dist.mean();
    oracle["total_mass"] = dist.total_mass();
    Json atoms = Json::array();
    for (const auto& [v, p] : dist.atoms()) {
      Json ja;
      ja["value"] = v;
      ja["prob"] = p;
      atoms.push_back(std::move(ja));
    }
    oracle["distribution"] = std::move(atoms);
    Json tails = Json::array();
    for (const GridRow& row : bounds.grid) {
      Json jt;
      jt["t"] = row.t;
      jt["threshold"] = s.mu - row.t;
      jt["exact"] = dist.lower_tail(s.mu - row.t);
      tails.push_back(std::move(jt));
    }
    oracle["lower_tail"] = std::move(tails);
    doc["oracle"] = std::move(oracle);

    Json consistency;
    const double mass_err = std::abs(dist.total_mass() - 1.0);
    const double mean_err = std::abs(dist.mean() - s.mu);
    consistency["total_mass_error"] = mass_err;
    consistency["mean_error"] = mean_err;
    const bool cons_ok = mass_err <= opts.exact_tolerance && mean_err <= opts.tolerance;
    consistency["pass"] = cons_ok;
    if (!cons_ok) pass = false;
    checks["consistency"] = std::move(consistency);

    const double p0 = dist.prob_zero();
    if (bounds.i1) domination.push_back(domination_entry("i1", bounds.i1->raw, p0, 0.0, true, opts.tolerance, false, pass));
    if (bounds.i1a) {
      domination.push_back(domination_entry("i1a", bounds.i1a->raw, p0, 0.0, true, opts.tolerance, false, pass));
    }
    domination.push_back(domination_entry("i2a", bounds.i2a.raw, p0, 0.0, true, opts.tolerance, false, pass));
    domination.push_back(domination_entry("lower-bound", bounds.lower, p0, 0.0, false, opts.tolerance, false, pass));
    for (const GridRow& row : bounds.grid) {
      const double tail = dist.lower_tail(s.mu - row.t);
      const std::string suffix = "(t=" + format_double(row.t) + ")";
      if (row.has_i2) {
        domination.push_back(domination_entry("i2-phi" + suffix, row.i2_phi.raw, tail, 0.0, true, opts.tolerance, false, pass));
        domination.push_back(
            domination_entry("i2-quadratic" + suffix, row.i2_quad.raw, tail, 0.0, true, opts.tolerance, false, pass));
      }
      domination.push_back(
          domination_entry("i2e-phi" + suffix, row.i2e_phi.raw, tail, 0.0, true, opts.tolerance, false, pass));
      domination.push_back(
          domination_entry("i2e-quadratic" + suffix, row.i2e_quad.raw, tail, 0.0, true, opts.tolerance, false, pass));
    }
    checks["domination"] = std::move(domination);

    // Sequential-conditioning check on the identity ordering plus seeded
    // shuffles.
    Json aims = Json::array();
    std::vector<std::size_t> ordering(family.size());
    std::iota(ordering.begin(), ordering.end(), 0);
    std::mt19937_64 rng(derive_seed(opts.prob.seed, 0x61696d));
    for (int round = 0; round < 6; ++round) {
      const AimReport r = check_aim(family, prepared.relation, ordering, opts.tolerance, opts.prob.max_exact_support);
      if (!r.pass) pass = false;
      aims.push_back(aim_doc(r, ordering));
      for (std::size_t i = ordering.size(); i > 1; --i) {
        std::swap(ordering[i - 1], ordering[uniform_below(rng, i)]);
      }
    }
    checks["aim"] = std::move(aims);

    const Aim2Report aim2 = check_aim2(family, prepared.relation, kDefaultSGrid, opts.tolerance,
                                       opts.prob.max_exact_support);
    if (!aim2.pass) pass = false;
    Json jaim2;
    jaim2["pass"] = aim2.pass;
    jaim2["worst_slack"] = aim2.worst_slack;
    Json sgrid = Json::array();
    for (double v : kDefaultSGrid) sgrid.push_back(v);
    jaim2["s_grid"] = std::move(sgrid);
    checks["aim2"] = std::move(jaim2);

    // Correlation/closure/identity checks over the family's own events.
    std::vector<std::pair<UpSet, UpSet>> pairs;
    for (std::size_t i = 0; i < family.size() && pairs.size() < 100; ++i) {
      for (std::size_t j = i + 1; j < family.size() && pairs.size() < 100; ++j) {
        pairs.emplace_back(family.event(i), family.event(j));
      }
    }
    std::vector<std::array<UpSet, 3>> triples;
    if (family.size() >= 3) {
      std::mt19937_64 trng(derive_seed(opts.prob.seed, 0x3a10));
      const std::size_t want = std::min<std::size_t>(60, family.size() * (family.size() - 1) * (family.size() - 2) / 6);
      for (std::size_t t = 0; t < want; ++t) {
        const std::vector<std::size_t> idx = sample_indices(trng, family.size(), 3);
        triples.push_back({family.event(idx[0]), family.event(idx[1]), family.event(idx[2])});
      }
    }
    const AxiomsReport axioms =
        check_axioms(family.space(), pairs, triples, opts.tolerance, opts.prob.max_exact_support);
    if (!axioms.pass) pass = false;
    Json jax;
    jax["pass"] = axioms.pass;
    jax["pairs_checked"] = axioms.pairs_checked;
    jax["triples_checked"] = axioms.triples_checked;
    jax["worst_harris_violation"] = axioms.worst_harris_violation;
    jax["lattice_mismatches"] = axioms.lattice_mismatches;
    jax["worst_e1_violation"] = axioms.worst_e1_violation;
    checks["axioms"] = std::move(jax);
    doc["statistical"] = false;
  } else {
    // Statistical verification: seeded sampling of the full outcome space.
    const std::vector<std::size_t> coords = indices_from_mask(family.joint_support());
    std::mt19937_64 rng(derive_seed(opts.prob.seed, 0x5a11));
    const std::uint64_t samples = opts.prob.mc_samples;
    std::uint64_t zero_hits = 0;
    std::vector<std::uint64_t> tail_hits(bounds.grid.size(), 0);
    double sum_x = 0.0, sum_x2 = 0.0;
    for (std::uint64_t round = 0; round < samples; ++round) {
      MinSet omega = 0;
      for (std::size_t c : coords) {
        if (uniform01(rng) < family.space().p(c)) omega |= MinSet{1} << c;
      }
      double x = 0.0;
      for (std::size_t i = 0; i < family.size(); ++i) {
        if (family.event(i).contains(omega)) x += family.weight(i);
      }
      if (x == 0.0) ++zero_hits;
      for (std::size_t g = 0; g < bounds.grid.size(); ++g) {
        if (x <= s.mu - bounds.grid[g].t + 1e-12) ++tail_hits[g];
      }
      sum_x += x;
      sum_x2 += x * x;
    }
    const StatTail p0 = tail_stat(zero_hits, samples);
    Json oracle;
    oracle["samples"] = samples;
    oracle["prob_zero_estimate"] = p0.estimate;
    oracle["prob_zero_std_error"] = p0.std_error;
    const double mean = sum_x / static_cast<double>(samples);
    const double mean_se =
        std::sqrt(std::max(0.0, sum_x2 / static_cast<double>(samples) - mean * mean) / static_cast<double>(samples));
    oracle["mean_estimate"] = mean;
    oracle["mean_std_error"] = mean_se;
    Json tails = Json::array();
    for (std::size_t g = 0; g < bounds.grid.size(); ++g) {
      const StatTail ts = tail_stat(tail_hits[g], samples);
      Json jt;
      jt["t"] = bounds.grid[g].t;
      jt["threshold"] = s.mu - bounds.grid[g].t;
      jt["estimate"] = ts.estimate;
      jt["std_error"] = ts.std_error;
      tails.push_back(std::move(jt));
    }
    oracle["lower_tail"] = std::move(tails);
    doc["oracle"] = std::move(oracle);

    Json consistency;
    const double mean_err = std::abs(mean - s.mu);
    consistency["mean_error"] = mean_err;
    consistency["mean_std_error"] = mean_se;
    const bool cons_ok = mean_err <= opts.tolerance + 4.0 * mean_se + 4.0 * s.max_std_error;
    consistency["pass"] = cons_ok;
    if (!cons_ok) pass = false;
    checks["consistency"] = std::move(consistency);

    if (bounds.i1) {
      domination.push_back(domination_entry("i1", bounds.i1->raw, p0.estimate, p0.std_error, true, opts.tolerance, true, pass));
    }
    if (bounds.i1a) {
      domination.push_back(
          domination_entry("i1a", bounds.i1a->raw, p0.estimate, p0.std_error, true, opts.tolerance, true, pass));
    }
    domination.push_back(
        domination_entry("i2a", bounds.i2a.raw, p0.estimate, p0.std_error, true, opts.tolerance, true, pass));
    domination.push_back(
        domination_entry("lower-bound", bounds.lower, p0.estimate, p0.std_error, false, opts.tolerance, true, pass));
    for (std::size_t g = 0; g < bounds.grid.size(); ++g) {
      const GridRow& row = bounds.grid[g];
      const StatTail ts = tail_stat(tail_hits[g], samples);
      const std::string suffix = "(t=" + format_double(row.t) + ")";
      if (row.has_i2) {
        domination.push_back(
            domination_entry("i2-phi" + suffix, row.i2_phi.raw, ts.estimate, ts.std_error, true, opts.tolerance, true, pass));
        domination.push_back(domination_entry("i2-quadratic" + suffix, row.i2_quad.raw, ts.estimate, ts.std_error, true,
                                              opts.tolerance, true, pass));
      }
      domination.push_back(
          domination_entry("i2e-phi" + suffix, row.i2e_phi.raw, ts.estimate, ts.std_error, true, opts.tolerance, true, pass));
      domination.push_back(domination_entry("i2e-quadratic" + suffix, row.i2e_quad.raw, ts.estimate, ts.std_error, true,
                                            opts.tolerance, true, pass));
    }
    checks["domination"] = std::move(domination);
    checks["aim"] = "skipped: enumeration infeasible at this support size";
    checks["aim2"] = "skipped: enumeration infeasible at this support size";
    checks["axioms"] = "skipped: enumeration infeasible at this support size";
    doc["statistical"] = true;
  }

  doc["checks"] = std::move(checks);
  doc["pass"] = pass;
  return doc;
}

namespace {

void render_value(std::ostream& os, const Json& j) {
  if (j.is_string()) {
    os << j.get<std::string>();
  } else if (j.is_number_float()) {
    os << format_double(j.get<double>());
  } else {
    os << j.dump();
  }
}

void render_bound_line(std::ostream& os, const char* label, const Json& j) {
  os << "  " << label << ": ";
  if (j.is_null()) {
    os << "n/a (weighted family)\n";
    return;
  }
  os << "raw=" << format_double(j["raw"].get<double>()) << " clamped=" << format_double(j["clamped"].get<double>());
  if (j.contains("method")) os << " [" << j["method"].get<std::string>() << "]";
  os << "\n";
}

}  // namespace

std::string render(const Json& doc, OutputFormat format) {
  if (format == OutputFormat::machine) return emit_json(doc);

  std::ostringstream os;
  os << "lowtail " << doc["command"].get<std::string>() << " report\n";
  const Json& inst = doc["instance"];
  os << "instance: n=" << inst["n"] << " k=" << inst["k"]
     << " weighted=" << (inst["weighted"].get<bool>() ? "yes" : "no") << "\n";
  const Json& rel = doc["relation"];
  os << "relation: mode=" << rel["mode"].get<std::string>() << " pairs=" << rel["pair_count"];
  if (rel.contains("pairs_removed")) os << " removed-by-refinement=" << rel["pairs_removed"];
  os << "\n";
  if (doc.contains("relation_validation")) {
    const Json& v = doc["relation_validation"];
    os << "relation validation: " << (v["pass"].get<bool>() ? "pass" : "FAIL")
       << " worst-violation=" << format_double(v["worst_violation"].get<double>()) << "\n";
  }
  if (doc.contains("aborted")) {
    os << "aborted: " << doc["abort_reason"].get<std::string>() << "\n";
    return os.str();
  }
  const Json& s = doc["summary"];
  os << "summary [" << s["method"].get<std::string>() << "]:"
     << " mu=" << format_double(s["mu"].get<double>()) << " delta=" << format_double(s["delta"].get<double>())
     << " eps=" << format_double(s["eps"].get<double>())
     << " delta_bar=" << format_double(s["delta_bar"].get<double>()) << "\n";

  const Json& b = doc["bounds"];
  os << "bounds:\n";
  render_bound_line(os, "i1 (exp(-mu+delta/2))", b["i1"]);
  render_bound_line(os, "i1a (product form)", b["i1a"]);
  render_bound_line(os, "i2a (neighborhood ratios)", b["i2a"]);
  os << "  lower-bound: " << format_double(b["lower_bound"].get<double>()) << "\n";
  os << "  t-grid:\n";
  os << "    frac t i2_phi i2_quad i2e_phi i2e_quad\n";
  for (const Json& row : b["grid"]) {
    os << "    " << format_double(row["frac"].get<double>()) << " " << format_double(row["t"].get<double>());
    for (const char* key : {"i2_phi", "i2_quad", "i2e_phi", "i2e_quad"}) {
      os << " ";
      if (row[key].is_null()) {
        os << "n/a";
      } else {
        os << format_double(row[key]["raw"].get<double>());
      }
    }
    os << "\n";
  }

  if (doc.contains("oracle")) {
    const Json& oracle = doc["oracle"];
    os << "oracle:\n";
    if (doc["statistical"].get<bool>()) {
      os << "  statistical (samples=" << oracle["samples"] << ")\n";
      os << "  Pr(X=0) estimate=" << format_double(oracle["prob_zero_estimate"].get<double>())
         << " se=" << format_double(oracle["prob_zero_std_error"].get<double>()) << "\n";
    } else {
      os << "  coords=" << oracle["coords_enumerated"] << " Pr(X=0)=" << format_double(oracle["prob_zero"].get<double>())
         << " mean=" << format_double(oracle["mean"].get<double>()) << "\n";
      os << "  distribution:";
      for (const Json& atom : oracle["distribution"]) {
        os << " " << format_double(atom["value"].get<double>()) << ":" << format_double(atom["prob"].get<double>());
      }
      os << "\n";
    }
  }
  if (doc.contains("checks")) {
    const Json& checks = doc["checks"];
    os << "checks:\n";
    for (const auto& [name, body] : checks.items()) {
      os << "  " << name << ": ";
      if (body.is_string()) {
        render_value(os, body);
      } else if (body.is_array()) {
        std::size_t ok = 0;
        for (const Json& e : body) ok += e["pass"].get<bool>() ? 1 : 0;
        os << ok << "/" << body.size() << " pass";
        for (const Json& e : body) {
          if (e["pass"].get<bool>()) continue;
          os << "\n    FAIL";
          if (e.contains("bound")) os << " " << e["bound"].get<std::string>();
          if (e.contains("slack")) os << " slack=" << format_double(e["slack"].get<double>());
          if (e.contains("worst_slack")) os << " worst_slack=" << format_double(e["worst_slack"].get<double>());
        }
      } else if (body.contains("pass")) {
        os << (body["pass"].get<bool>() ? "pass" : "FAIL");
      } else {
        render_value(os, body);
      }
      os << "\n";
    }
  }
  if (doc.contains("pass")) {
    os << "overall: " << (doc["pass"].get<bool>() ? "PASS" : "FAIL") << "\n";
  }
  return os.str();
}

}  // namespace lowtail
