// Assembly of the full analysis report: validation, properness, classes,
// correspondences, lattices, theorem checks, decompositions.  Reports are
// deterministic for a fixed input and configuration; wall-clock timings
// are only included on request so that repeated runs stay byte-identical.

#ifndef STARLAB_REPORT_HPP_
#define STARLAB_REPORT_HPP_

#include <cstdint>

#include "starlab/lattice.hpp"
#include "starlab/semigroup.hpp"

#include "json.hpp"

namespace starlab {

constexpr int kSchemaVersion = 1;

struct AnalyzeOptions {
  int closure_cap = kClosureCapDefault;
  int max_exhaustive_n = 12;  // exhaustive subset sweeps up to this n
  uint64_t seed = 1;          // sampling seed on larger carriers
  bool strict_hypotheses = false;
  bool timings = false;
};

nlohmann::ordered_json analyze(const StarSemigroup& s,
                               const AnalyzeOptions& opts = {});

// 0 all-pass, 1 any failure, 2 hypothesis-not-met only (strict mode).
int exit_code_for(const nlohmann::ordered_json& report,
                  bool strict_hypotheses);

}  // namespace starlab

#endif  // STARLAB_REPORT_HPP_
