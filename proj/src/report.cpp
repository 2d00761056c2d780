#include "starlab/report.hpp"

#include <chrono>
#include <functional>

#include "starlab/decomposition.hpp"
#include "starlab/equivalence.hpp"
#include "starlab/lattice.hpp"
#include "starlab/structure.hpp"
#include "starlab/subsets.hpp"

namespace starlab {

namespace {

using Json = nlohmann::ordered_json;

Json indices(const Bitset& b) { return Json(b.to_indices()); }

Json check_json(const CheckResult& r) {
  Json j;
  j["status"] = check_status_name(r.status);
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

Json witness_json(const EquivWitness& w) {
  Json j;
  j["s"] = w.s;
  j["A"] = indices(w.a);
  j["B"] = indices(w.b);
  return j;
}

Json decomposition_json(const DecompositionResult& d) {
  Json j;
  j["status"] = check_status_name(d.status);
  if (!d.detail.empty()) j["detail"] = d.detail;
  if (d.status == CheckStatus::kPass) {
    j["A"] = indices(d.a);
    if (d.certificate) j["certificate"] = indices(*d.certificate);
    j["unique"] = d.unique;
  } else if (!d.candidates.empty()) {
    Json c = Json::array();
    for (const auto& a : d.candidates) c.push_back(indices(a));
    j["candidates"] = std::move(c);
  }
  return j;
}

}  // namespace

Json analyze(const StarSemigroup& s, const AnalyzeOptions& opts) {
  const auto started = std::chrono::steady_clock::now();
  Json j;
  j["schema_version"] = kSchemaVersion;

  Json meta;
  meta["name"] = s.name();
  meta["n"] = s.n();
  meta["zero"] = s.zero();
  meta["ring"] = s.has_ring();
  j["semigroup"] = std::move(meta);

  ValidationReport val = validate(s);
  Json vj;
  vj["ok"] = val.ok;
  if (!val.ok) {
    Json violations = Json::array();
    for (const auto& v : val.violations) {
      Json one;
      one["axiom"] = axiom_kind_name(v.kind);
      one["witness"] = Json(v.witness);
      if (!v.detail.empty()) one["detail"] = v.detail;
      violations.push_back(std::move(one));
    }
    vj["violations"] = std::move(violations);
  }
  j["validation"] = std::move(vj);
  if (!val.ok) return j;

  PropernessResult prop = is_proper(s);
  Json pj;
  pj["proper"] = prop.proper;
  if (!prop.proper) pj["witness"] = prop.witness;
  StarCancellationResult canc = check_star_cancellation(s);
  pj["star_cancellative"] = canc.cancellative;
  j["properness"] = std::move(pj);

  ElementClasses classes = classify_elements(s);
  Json cj;
  cj["positives"] = indices(classes.positives);
  cj["self_adjoints"] = indices(classes.self_adjoints);
  cj["idempotents"] = indices(classes.idempotents);
  cj["projections"] = indices(classes.projections);
  if (classes.additive_positives)
    cj["additive_positives"] = indices(*classes.additive_positives);
  j["classes"] = std::move(cj);

  Json checks;
  checks["positive_powers"] = check_json(
      check_positive_powers(s) ? CheckResult::pass()
                               : CheckResult::fail("a positive power escapes"));
  checks["cancellation_implies_proper"] = check_json(
      (!canc.cancellative || prop.proper)
          ? CheckResult::pass()
          : CheckResult::fail("cancellative but not proper"));

  EnumerateOptions en;
  en.exhaustive = s.n() <= kExhaustiveSubsetCap &&
                  s.n() <= std::max(opts.max_exhaustive_n, 1);
  en.seed = opts.seed;
  if (s.n() > 64) en.sample_count = 48;  // closures get pricey at n = 512
  auto bij_json = [&](const BijectionReport& r) {
    Json b;
    b["status"] = r.ok ? "pass" : "fail";
    b["exhaustive"] = r.exhaustive;
    b["size_left"] = r.size_left;
    b["size_right"] = r.size_right;
    if (!r.exhaustive) b["sample_count"] = r.sample_count;
    if (!r.ok) {
      b["detail"] = r.failure;
      if (r.witness) b["witness"] = indices(*r.witness);
    }
    return b;
  };
  checks["correspondence_rooted_ideals"] =
      bij_json(correspondence_rooted_ideals(s, en));
  checks["correspondence_hereditary"] =
      bij_json(correspondence_hereditary(s, en));
  PospartResult pp = pospart_inclusion_check(s, en);
  checks["pospart_inclusion"] = check_json(
      pp.ok ? CheckResult::pass()
            : CheckResult::fail("fails at I = " + pp.witness_i.to_string() +
                                ", J = " + pp.witness_j.to_string()));

  RelationFactsReport tri = relation_facts_check(s);
  checks["relation_facts"] = check_json(
      tri.ok ? CheckResult::pass() : CheckResult::fail(tri.failure));
  checks["product_facts"] = check_json(proper_product_facts(s));

  SubsetSample sample;
  sample.exhaustive = s.n() <= opts.max_exhaustive_n;
  sample.seed = opts.seed;

  Json lattices = Json::object();
  if (prop.proper) {
    for (RelKind kind : {RelKind::kPerp, RelKind::kL, RelKind::kR,
                         RelKind::kNabla, RelKind::kBot4}) {
      PolarLattice lat = closed_lattice(s, kind, opts.closure_cap,
                                        /*require_axioms=*/false);
      LatticeAxiomReport ax = ortholattice_axioms(lat);
      Json lj;
      lj["size"] = lat.size();
      lj["axioms_ok"] = ax.ok;
      if (!ax.ok) lj["axiom_failure"] = ax.failure;
      lj["orthomodular"] = check_orthomodular(lat).ok;
      lj["modular"] = check_modular(lat).ok;
      lj["centre_size"] = static_cast<int>(centre(lat).size());
      lattices[rel_kind_name(kind)] = std::move(lj);
    }
  }
  j["lattices"] = std::move(lattices);

  checks["polar_structure"] = check_json(polar_structure_check(s, sample));
  checks["ortholattice_comparison"] = check_json(ortholattice_comparison_check(s));
  checks["annihilator_splitting"] = check_json(annihilator_splitting_sweep(s, sample));
  checks["annideal_centre"] = check_json(annideal_centre_check(s));
  checks["relative_centre"] = check_json(relative_centre_sweep(s, sample));
  checks["commutative_annihilators"] = check_json(commutative_annihilators_sweep(s, sample));
  checks["commutative_nabla_finite"] =
      check_json(commutative_nabla_finite_check(s));
  checks["essential"] = check_json(essential_checks(s, sample));
  if (prop.proper) {
    PolarLattice perp = closed_lattice(s, RelKind::kPerp, opts.closure_cap);
    LatticeLawResult del = del_relation_check(s, perp);
    checks["del_relation"] = check_json(
        del.ok ? CheckResult::pass()
               : CheckResult::fail("witness (" +
                                   std::to_string(del.witness[0]) + "," +
                                   std::to_string(del.witness[1]) + "," +
                                   std::to_string(del.witness[2]) + ")"));
  } else {
    checks["del_relation"] =
        check_json(CheckResult::gate("semigroup is not proper"));
  }

  EquivContext ctx(s, opts.closure_cap);
  ReflexivityResult refl = reflexivity_check(ctx);
  {
    Json r = check_json(refl.check);
    r["reflexive"] = refl.reflexive;
    checks["reflexivity"] = std::move(r);
  }
  checks["transitivity"] = check_json(transitivity_check(ctx));
  checks["closure_translation"] = check_json(closure_translation_check(ctx));
  checks["nabla_monotonicity"] = check_json(nabla_monotonicity_check(ctx));
  checks["sup_preservation"] = check_json(sup_preservation_check(ctx));
  checks["complementary_pairs"] = check_json(complementary_pair_check(ctx));
  checks["mvn_vs_sim"] = check_json(mvn_vs_sim_check(ctx));
  checks["perspectivity"] = check_json(perspectivity_check(ctx));
  checks["division"] = check_json(division_check(ctx));
  checks["central_localization"] = check_json(central_localization_check(ctx));
  checks["csb"] = check_json(csb_check(ctx));
  checks["comparability"] = check_json(comparability_check(ctx));
  checks["restriction"] = check_json(restriction_checks(ctx, sample));
  checks["modularity_theorem"] = check_json(modularity_theorem_check(ctx));

  AdditivityReport add = additivity_checks(ctx);
  Json aj;
  if (ctx.proper()) {
    Json pa;
    pa["holds"] = add.perp_additive;
    if (!add.perp_witness.empty()) pa["witness"] = add.perp_witness;
    aj["perp_additive"] = std::move(pa);
    Json na;
    na["holds"] = add.nabla_additive;
    if (!add.nabla_witness.empty()) na["witness"] = add.nabla_witness;
    aj["nabla_additive"] = std::move(na);
  }
  aj["completeness_lemma_perp"] = check_json(add.completeness_lemma_perp);
  aj["completeness_lemma_nabla"] = check_json(add.completeness_lemma_nabla);
  aj["sum_rule"] = check_json(add.sum_rule);
  aj["perp_cancellative"] = check_json(add.perp_cancellative);
  aj["proj_closure_injective"] = check_json(add.proj_closure_injective);
  aj["ring_route"] = check_json(add.ring_route);
  checks["additivity"] = std::move(aj);

  checks["orthogonality_survey"] =
      Json{{"status", "informational"},
           {"detail", orthogonality_preservation_survey(ctx)}};

  j["checks"] = std::move(checks);

  if (ctx.proper()) {
    Json eq;
    const int m = ctx.lattice_size();
    Json members = Json::array();
    for (int i = 0; i < m; ++i) members.push_back(indices(ctx.perp().set(i)));
    eq["annihilators"] = std::move(members);
    Json sim = Json::array();
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        if (auto w = ctx.sim_witness_struct(a, b)) {
          Json one = witness_json(*w);
          one["pair"] = Json::array({a, b});
          sim.push_back(std::move(one));
        }
    eq["sim_witnesses"] = std::move(sim);
    // ~-classes: components of the (symmetric) ~ relation; members never
    // related to themselves stand alone.
    {
      std::vector<int> root(m);
      for (int i = 0; i < m; ++i) root[i] = i;
      std::function<int(int)> find = [&](int x) {
        return root[x] == x ? x : root[x] = find(root[x]);
      };
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
          if (ctx.sim(a, b)) root[find(a)] = find(b);
      Json classes = Json::array();
      for (int r = 0; r < m; ++r) {
        if (find(r) != r) continue;
        Json cls = Json::array();
        for (int i = 0; i < m; ++i)
          if (find(i) == r) cls.push_back(i);
        classes.push_back(std::move(cls));
      }
      eq["sim_classes"] = std::move(classes);
    }
    j["equivalence"] = std::move(eq);

    Json dec;
    dec["typeI"] = decomposition_json(type_I_decomposition(ctx));
    dec["typeI1"] = decomposition_json(type_I1_decomposition(ctx));
    dec["typeIII"] = decomposition_json(type_III_decomposition(ctx));
    dec["typefin"] = decomposition_json(finite_decomposition(ctx));
    Json cross = check_json(decomposition_cross_consistency(ctx));
    dec["cross_consistency"] = std::move(cross);
    j["decompositions"] = std::move(dec);
  }

  if (opts.timings) {
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - started);
    j["timing"] = Json{{"total_ms", elapsed.count()}};
  }
  return j;
}

namespace {

void walk(const nlohmann::ordered_json& node, bool* any_fail,
          bool* any_gate) {
  if (node.is_object()) {
    if (node.contains("status") && node["status"].is_string()) {
      const std::string s = node["status"].get<std::string>();
      if (s == "fail") *any_fail = true;
      if (s == "hypothesis_not_met") *any_gate = true;
    }
    for (const auto& [k, v] : node.items()) {
      (void)k;
      walk(v, any_fail, any_gate);
    }
  } else if (node.is_array()) {
    for (const auto& v : node) walk(v, any_fail, any_gate);
  }
}

}  // namespace

int exit_code_for(const nlohmann::ordered_json& report,
                  bool strict_hypotheses) {
  bool any_fail = false, any_gate = false;
  walk(report, &any_fail, &any_gate);
  if (report.contains("validation") && !report["validation"]["ok"].get<bool>())
    return 3;
  if (any_fail) return 1;
  if (any_gate && strict_hypotheses) return 2;
  return 0;
}

}  // namespace starlab
