#include "starlab/decomposition.hpp"

namespace starlab {

const char* decomposition_kind_name(DecompositionKind k) {
  switch (k) {
    case DecompositionKind::kTypeI: return "typeI";
    case DecompositionKind::kTypeI1: return "typeI1";
    case DecompositionKind::kTypeIII: return "typeIII";
    case DecompositionKind::kFinite: return "typefin";
  }
  return "?";
}

namespace {

// The four searches share one shape: find every A in P^nabla such that
//   - A arises as B^nabla nabla of a finite B (certificate mode), or is
//     itself finite (self mode), and
//   - A^perp contains no nonzero finite member of the stated family.
DecompositionResult decompose(const EquivContext& ctx, DecompositionKind kind,
                              bool (*finite)(const EquivContext&, int),
                              bool certificate_mode,
                              bool forbidden_from_nabla) {
  DecompositionResult res;
  res.kind = kind;
  const auto& perp = ctx.perp();
  const auto& nabla_members = ctx.nabla_members_in_perp();

  auto nn_closure = [&](int b) {  // B^nabla nabla as a perp index
    const Bitset bn = polar(ctx.nabla().relation(), perp.set(b));
    return perp.require(polar(ctx.nabla().relation(), bn));
  };

  std::vector<char> is_finite(perp.size());
  for (int i = 0; i < perp.size(); ++i)
    is_finite[i] = finite(ctx, i) ? 1 : 0;

  for (int a : nabla_members) {
    std::optional<int> cert;
    if (certificate_mode) {
      for (int b = 0; b < perp.size(); ++b)
        if (is_finite[b] && nn_closure(b) == a) {
          cert = b;
          break;
        }
      if (!cert) continue;
    } else if (!is_finite[a]) {
      continue;
    }
    const int ap = perp.ortho(a);
    bool clean = true;
    if (forbidden_from_nabla) {
      for (int c : nabla_members)
        if (c != perp.bottom() && perp.leq(c, ap) && is_finite[c]) {
          clean = false;
          break;
        }
    } else {
      for (int c = 0; c < perp.size(); ++c)
        if (c != perp.bottom() && perp.leq(c, ap) && is_finite[c]) {
          clean = false;
          break;
        }
    }
    if (!clean) continue;
    res.candidates.push_back(perp.set(a));
    if (res.candidates.size() == 1) {
      res.a = perp.set(a);
      if (cert) res.certificate = perp.set(*cert);
    }
  }

  if (res.candidates.size() == 1) {
    res.unique = true;
    res.status = CheckStatus::kPass;
    // Re-verify the certificate against the defining clauses.
    if (res.certificate) {
      const int b = perp.require(*res.certificate);
      if (!finite(ctx, b) || perp.set(nn_closure(b)) != res.a) {
        res.status = CheckStatus::kFail;
        res.detail = "certificate fails re-verification";
      }
    }
  } else {
    res.status = CheckStatus::kFail;
    res.detail = "expected exactly one candidate, found " +
                 std::to_string(res.candidates.size());
  }
  return res;
}

std::optional<CheckResult> sim_gates(const EquivContext& ctx) {
  if (!ctx.proper()) return CheckResult::gate("semigroup is not proper");
  if (!ctx.reflexive()) return CheckResult::gate("~ is not reflexive");
  AdditivityReport add = additivity_checks(ctx);
  if (!add.nabla_additive)
    return CheckResult::gate("~ is not nabla-additive");
  if (!add.completeness_lemma_nabla.ok())
    return CheckResult::gate("finite completeness reduction fails");
  return std::nullopt;
}

DecompositionResult gated(DecompositionKind kind, const CheckResult& gate) {
  DecompositionResult res;
  res.kind = kind;
  res.status = gate.status;
  res.detail = gate.detail;
  return res;
}

}  // namespace

DecompositionResult type_I_decomposition(const EquivContext& ctx) {
  if (!ctx.proper())
    return gated(DecompositionKind::kTypeI,
                 CheckResult::gate("semigroup is not proper"));
  return decompose(ctx, DecompositionKind::kTypeI, &nabla_finite,
                   /*certificate_mode=*/true, /*forbidden_from_nabla=*/false);
}

DecompositionResult type_I1_decomposition(const EquivContext& ctx) {
  if (!ctx.proper())
    return gated(DecompositionKind::kTypeI1,
                 CheckResult::gate("semigroup is not proper"));
  return decompose(ctx, DecompositionKind::kTypeI1, &nabla_finite,
                   /*certificate_mode=*/false, /*forbidden_from_nabla=*/true);
}

DecompositionResult type_III_decomposition(const EquivContext& ctx) {
  if (auto gate = sim_gates(ctx))
    return gated(DecompositionKind::kTypeIII, *gate);
  return decompose(ctx, DecompositionKind::kTypeIII, &sim_finite,
                   /*certificate_mode=*/true, /*forbidden_from_nabla=*/false);
}

DecompositionResult finite_decomposition(const EquivContext& ctx) {
  if (auto gate = sim_gates(ctx))
    return gated(DecompositionKind::kFinite, *gate);
  return decompose(ctx, DecompositionKind::kFinite, &sim_finite,
                   /*certificate_mode=*/false, /*forbidden_from_nabla=*/true);
}

CheckResult decomposition_cross_consistency(const EquivContext& ctx) {
  if (!ctx.proper()) return CheckResult::gate("semigroup is not proper");
  DecompositionResult one = type_I_decomposition(ctx);
  DecompositionResult abelian = type_I1_decomposition(ctx);
  if (one.status != CheckStatus::kPass ||
      abelian.status != CheckStatus::kPass)
    return CheckResult::gate("a nabla decomposition did not resolve");
  if (!abelian.a.is_subset_of(one.a))
    return CheckResult::fail("abelian part " + abelian.a.to_string() +
                             " escapes the type-I part " + one.a.to_string());
  return CheckResult::pass();
}

}  // namespace starlab
