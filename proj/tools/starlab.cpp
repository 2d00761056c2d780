// starlab - a laboratory for finite *-semigroups and their *-annihilator
// ortholattices.
//
// Subcommands: validate, analyze, lattice, decompose, gallery, check-all.
// Exit codes: 0 all-pass, 1 theorem-check failure, 2 hypothesis-not-met
// only (with --strict-hypotheses), 3 input error.

#include <cstdlib>
#include <fstream>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"

#include "starlab/decomposition.hpp"
#include "starlab/equivalence.hpp"
#include "starlab/fuzz.hpp"
#include "starlab/generators.hpp"
#include "starlab/io.hpp"
#include "starlab/report.hpp"

namespace {

using starlab::StarSemigroup;

void configure_threads() {
#ifdef _OPENMP
  if (const char* env = std::getenv("STARLAB_THREADS")) {
    int t = std::atoi(env);
    if (t > 0) omp_set_num_threads(t);
  }
#endif
}

StarSemigroup load(const std::string& path, const std::string& gen) {
  if (!gen.empty()) {
    StarSemigroup s = starlab::generate_from_spec(gen);
    starlab::ValidationReport rep = starlab::validate(s);
    if (!rep.ok) throw starlab::ValidationError(rep);
    return s;
  }
  return starlab::make_semigroup(starlab::parse_file(path));
}

void write_output(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + out);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  configure_threads();
  CLI::App app{"finite *-semigroup laboratory"};
  app.require_subcommand(1);

  std::string path, gen, out, rel = "perp", dot;
  int max_n = 12, fuzz_count = 1000;
  uint64_t seed = 1;
  bool strict = false, timings = false;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("path", path, "semigroup file");
    cmd->add_option("--gen", gen, "generator spec, e.g. zn:6 bool:2 matring:2,2");
  };

  CLI::App* validate_cmd = app.add_subcommand("validate", "check the axioms");
  add_input(validate_cmd);

  CLI::App* analyze_cmd =
      app.add_subcommand("analyze", "full analysis report (JSON)");
  add_input(analyze_cmd);
  analyze_cmd->add_option("--out", out, "output file (default stdout)");
  analyze_cmd->add_option("--max-n", max_n, "exhaustive subset sweep bound");
  analyze_cmd->add_option("--seed", seed, "sampling seed");
  analyze_cmd->add_flag("--strict-hypotheses", strict,
                        "exit 2 when gated checks were skipped");
  analyze_cmd->add_flag("--timings", timings, "include wall-clock timings");

  CLI::App* lattice_cmd =
      app.add_subcommand("lattice", "closed-set lattice and DOT output");
  add_input(lattice_cmd);
  lattice_cmd->add_option("--rel", rel, "perp|L|R|nabla|bot4");
  lattice_cmd->add_option("--dot", dot, "write the Hasse diagram here");
  lattice_cmd->add_option("--out", out, "summary output file");

  CLI::App* decompose_cmd =
      app.add_subcommand("decompose", "type decompositions (JSON)");
  add_input(decompose_cmd);
  decompose_cmd->add_option("--out", out, "output file (default stdout)");

  CLI::App* gallery_cmd =
      app.add_subcommand("gallery", "list the built-in instances");

  CLI::App* check_cmd =
      app.add_subcommand("check-all", "gallery sweep plus fuzz battery");
  check_cmd->add_option("--max-n", max_n, "exhaustive subset sweep bound");
  check_cmd->add_option("--seed", seed, "fuzz seed (required for reproducibility)")
      ->required();
  check_cmd->add_option("--fuzz-count", fuzz_count, "number of fuzz instances");
  check_cmd->add_option("--out", out, "output file (default stdout)");
  check_cmd->add_flag("--strict-hypotheses", strict,
                      "exit 2 when gated checks were skipped");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate_cmd->parsed()) {
      starlab::RawTables raw;
      if (!gen.empty()) {
        StarSemigroup s = starlab::generate_from_spec(gen);
        starlab::ValidationReport rep = starlab::validate(s);
        if (rep.ok) {
          std::cout << "ok\n";
          return 0;
        }
        for (const auto& v : rep.violations)
          std::cout << "violation: " << starlab::axiom_kind_name(v.kind)
                    << " witness (" << v.witness[0] << "," << v.witness[1]
                    << "," << v.witness[2] << ") " << v.detail << "\n";
        return 1;
      }
      raw = starlab::parse_file(path);
      starlab::ValidationReport rep = starlab::validate(raw);
      if (rep.ok) {
        std::cout << "ok\n";
        return 0;
      }
      for (const auto& v : rep.violations)
        std::cout << "violation: " << starlab::axiom_kind_name(v.kind)
                  << " witness (" << v.witness[0] << "," << v.witness[1]
                  << "," << v.witness[2] << ") " << v.detail << "\n";
      return 1;
    }

    if (analyze_cmd->parsed()) {
      StarSemigroup s = load(path, gen);
      starlab::AnalyzeOptions opts;
      opts.max_exhaustive_n = max_n;
      opts.seed = seed;
      opts.strict_hypotheses = strict;
      opts.timings = timings;
      auto report = starlab::analyze(s, opts);
      write_output(out, report.dump(2) + "\n");
      return starlab::exit_code_for(report, strict);
    }

    if (lattice_cmd->parsed()) {
      StarSemigroup s = load(path, gen);
      auto kind = starlab::rel_kind_from_name(rel);
      if (!kind) throw std::runtime_error("unknown relation: " + rel);
      starlab::PolarLattice lat = starlab::closed_lattice(
          s, *kind, starlab::kClosureCapDefault, /*require_axioms=*/false);
      nlohmann::ordered_json j;
      j["schema_version"] = starlab::kSchemaVersion;
      j["relation"] = rel;
      j["size"] = lat.size();
      auto sets = nlohmann::ordered_json::array();
      for (int i = 0; i < lat.size(); ++i)
        sets.push_back(lat.set(i).to_indices());
      j["closed_sets"] = std::move(sets);
      j["orthomodular"] = starlab::check_orthomodular(lat).ok;
      j["modular"] = starlab::check_modular(lat).ok;
      j["centre_size"] = static_cast<int>(starlab::centre(lat).size());
      write_output(out, j.dump(2) + "\n");
      if (!dot.empty())
        write_output(dot, starlab::hasse_dot(lat, s.name() + "." + rel));
      return 0;
    }

    if (decompose_cmd->parsed()) {
      StarSemigroup s = load(path, gen);
      starlab::EquivContext ctx(s);
      nlohmann::ordered_json j;
      j["schema_version"] = starlab::kSchemaVersion;
      bool any_fail = false;
      for (auto d : {starlab::type_I_decomposition(ctx),
                     starlab::type_I1_decomposition(ctx),
                     starlab::type_III_decomposition(ctx),
                     starlab::finite_decomposition(ctx)}) {
        nlohmann::ordered_json one;
        one["status"] = starlab::check_status_name(d.status);
        if (d.status == starlab::CheckStatus::kPass) {
          one["A"] = d.a.to_indices();
          if (d.certificate) one["certificate"] = d.certificate->to_indices();
          one["unique"] = d.unique;
        } else {
          one["detail"] = d.detail;
          any_fail |= d.status == starlab::CheckStatus::kFail;
        }
        j[starlab::decomposition_kind_name(d.kind)] = std::move(one);
      }
      write_output(out, j.dump(2) + "\n");
      return any_fail ? 1 : 0;
    }

    if (gallery_cmd->parsed()) {
      for (const auto& g : starlab::gallery())
        std::cout << g.spec << "\t" << g.note << "\n";
      return 0;
    }

    if (check_cmd->parsed()) {
      nlohmann::ordered_json j;
      j["schema_version"] = starlab::kSchemaVersion;
      j["seed"] = seed;
      bool any_fail = false, any_gate = false;
      auto instances = nlohmann::ordered_json::array();
      for (const auto& g : starlab::gallery()) {
        StarSemigroup s = starlab::generate_from_spec(g.spec);
        starlab::AnalyzeOptions opts;
        opts.max_exhaustive_n = max_n;
        opts.seed = seed;
        auto rep = starlab::analyze(s, opts);
        int code = starlab::exit_code_for(rep, /*strict=*/true);
        any_fail |= code == 1;
        any_gate |= code == 2;
        nlohmann::ordered_json one;
        one["spec"] = g.spec;
        one["exit"] = code;
        one["report"] = std::move(rep);
        instances.push_back(std::move(one));
      }
      j["gallery"] = std::move(instances);
      starlab::FuzzOutcome fuzz =
          starlab::run_fuzz_battery(fuzz_count, seed);
      nlohmann::ordered_json fj;
      fj["total"] = fuzz.total;
      fj["proper"] = fuzz.proper_count;
      fj["failures"] = fuzz.failures;
      if (!fuzz.failure_details.empty()) fj["details"] = fuzz.failure_details;
      j["fuzz"] = std::move(fj);
      any_fail |= fuzz.failures > 0;
      write_output(out, j.dump(2) + "\n");
      if (any_fail) return 1;
      if (any_gate && strict) return 2;
      return 0;
    }
  } catch (const starlab::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const starlab::ValidationError& e) {
    std::cerr << "invalid semigroup:\n";
    for (const auto& v : e.report.violations)
      std::cerr << "  " << starlab::axiom_kind_name(v.kind) << " at ("
                << v.witness[0] << "," << v.witness[1] << "," << v.witness[2]
                << ")\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 3;
  }
  return 0;
}
