#include "engine.hpp"

namespace sl2q {

static void check_k(i64 k) {
  if (k < 3) throw invalid_parameter("closed forms require k >= 3");
}

i64 dim_gamma_q(i64 q, i64 k) {
  check_k(k);
  if (q < 5 || q % 2 == 0 || !is_prime(q))
    throw invalid_parameter("q must be an odd prime >= 5");
  i64 t1 = (k - 1) * q * (q * q - 1);
  i64 t2 = q * q - 1;
  if (t1 % 24 != 0 || t2 % 4 != 0) throw arithmetic_failure("dim_gamma_q: divisibility failed");
  return t1 / 24 - t2 / 4;
}

i64 dim_gamma1_q(i64 q, i64 k) {
  check_k(k);
  if (q < 5 || q % 2 == 0 || !is_prime(q))
    throw invalid_parameter("q must be an odd prime >= 5");
  i64 t1 = (k - 1) * (q * q - 1);
  if (t1 % 24 != 0 || (q - 1) % 2 != 0) throw arithmetic_failure("dim_gamma1_q: divisibility failed");
  return t1 / 24 - (q - 1) / 2;
}

i64 dim_level1(i64 k) {
  if (k < 0) throw invalid_parameter("dim_level1: negative weight");
  if (k % 2 != 0 || k < 12) return 0;
  return k % 12 == 2 ? k / 12 - 1 : k / 12;
}

Rational trivial_steinberg_sum(const DimensionProfile& p) { return Rational(p.phi[0]); }

// sum over n in F_q* of zeta_e(n) * psi[n]
static i64 quadratic_twist_sum(const GroupContext& ctx, const DimensionProfile& p) {
  i64 s = 0;
  for (i64 n = 1; n < ctx.q(); ++n) s += (ctx.is_square(n) ? 1 : -1) * p.psi[n];
  return s;
}

std::optional<Rational> multiplicity_theorem(const GroupContext& ctx,
                                             const DimensionProfile& p,
                                             const IrrepLabel& rho, Mode mode) {
  const i64 q = ctx.q();
  const i64 k = p.k;
  const i64 ksign = k % 2 == 0 ? 1 : -1;
  if (mode == Mode::Physical && !validate_profile(ctx, p, ValidationLevel::Physical).ok())
    throw invalid_parameter("physical mode requires a profile satisfying C6");

  if (rho.central_sign(q) != ksign) return Rational(0);  // vanishing clause

  const i64 D = p.total();
  const i64 d0 = p.psi[0];
  const i64 eps = ((q - 1) / 2) % 2 == 0 ? 1 : -1;

  switch (rho.kind) {
    case IrrepKind::Trivial:
      if (mode == Mode::Raw) return std::nullopt;
      return Rational(dim_level1(k));
    case IrrepKind::Steinberg:
      if (mode == Mode::Raw) return std::nullopt;
      return Rational(p.phi[0] - dim_level1(k));
    case IrrepKind::PrincipalSeries:
      return Rational(p.phi[rho.a] + p.phi[q - 1 - rho.a], 2);
    case IrrepKind::PSHalfPlus:
    case IrrepKind::PSHalfMinus: {
      i64 sgn = rho.kind == IrrepKind::PSHalfPlus ? 1 : -1;
      return Rational(p.phi[(q - 1) / 2], 2) +
             Rational(sgn * eps * quadratic_twist_sum(ctx, p), q - 1);
    }
    case IrrepKind::Cuspidal: {
      Rational head = mode == Mode::Raw
                          ? Rational(2 * (D - d0), q - 1)
                          : Rational((k - 1) * (q * q - 1), 12) - Rational(q - 1, 2);
      return head - Rational(p.tau[rho.a] + p.tau[q + 1 - rho.a], 2);
    }
    case IrrepKind::CuspHalfPlus:
    case IrrepKind::CuspHalfMinus: {
      i64 sgn = rho.kind == IrrepKind::CuspHalfPlus ? 1 : -1;
      Rational head = mode == Mode::Raw
                          ? Rational(D - d0, q - 1)
                          : Rational((k - 1) * (q * q - 1), 24) - Rational(q - 1, 4);
      return head - Rational(p.tau[(q + 1) / 2], 2) +
             Rational(sgn * eps * quadratic_twist_sum(ctx, p), q - 1);
    }
  }
  throw arithmetic_failure("multiplicity_theorem: unreachable");
}

MultiplicityReport full_report(const GroupContext& ctx, const DimensionProfile& p, Mode mode,
                               Method method) {
  auto structural = validate_profile(ctx, p, ValidationLevel::Structural);
  if (!structural.ok()) throw invalid_parameter("full_report: profile is not structurally valid");
  if (mode == Mode::Physical && !validate_profile(ctx, p, ValidationLevel::Physical).ok())
    throw invalid_parameter("full_report: physical mode requires C6");

  const i64 q = ctx.q();
  const i64 den = 2 * (q - 1);
  const i64 D = p.total();
  const bool want_inner = method != Method::TheoremOnly;
  const bool want_theorem = method != Method::InnerOnly;

  MultiplicityReport rep;
  rep.q = q;
  rep.k = p.k;
  rep.mode = mode;
  rep.sum_rule_rhs = D;

  std::vector<IrrepLabel> irreps = enumerate_irreps(ctx);
  std::vector<std::optional<Rational>> inner(irreps.size());

  if (want_inner) {
    // numerator bound for centered-lift recovery across all irreps
    i64 bound = den * ((q + 1) * (D + 1) + p.k * q * q);
    i64 p1 = ModPrimeEval::smallest_admissible_prime(ctx, 2 * bound);
    i64 p2 = ModPrimeEval::smallest_admissible_prime(ctx, p1);
    ModPrimeEval ev1(ctx, p1), ev2(ctx, p2);
    ComplexEval evc(ctx);
    auto t1 = build_table(ctx, ev1);
    auto t2 = build_table(ctx, ev2);
    auto tc = build_table(ctx, evc);
    auto s1 = build_sigma(ctx, ev1, p, t1.classes);
    auto s2 = build_sigma(ctx, ev2, p, t2.classes);
    auto sc = build_sigma(ctx, evc, p, tc.classes);

    for (size_t i = 0; i < irreps.size(); ++i) {
      auto r1 = ev1.to_rational(multiplicity_inner(ctx, ev1, s1, t1, i), den);
      auto r2 = ev2.to_rational(multiplicity_inner(ctx, ev2, s2, t2, i), den);
      auto rc = evc.to_rational(multiplicity_inner(ctx, evc, sc, tc, i), den);
      if (!r1 || !r2 || !(*r1 == *r2))
        throw arithmetic_failure("inner product recovery disagrees between primes " +
                                 std::to_string(p1) + " and " + std::to_string(p2));
      if (!rc || !(*rc == *r1))
        throw arithmetic_failure("inner product recovery disagrees between complex and mod-p");
      inner[i] = *r1;
    }
  }

  Rational lhs(0);
  bool all = true;
  std::optional<Rational> inner_triv, inner_st;
  for (size_t i = 0; i < irreps.size(); ++i) {
    IrrepResult r;
    r.label = irreps[i];
    r.degree = irreps[i].degree(q);
    r.parity_forced_zero =
        irreps[i].central_sign(q) != (p.k % 2 == 0 ? 1 : -1);
    if (want_inner) r.inner = inner[i];
    if (want_theorem) r.theorem_val = multiplicity_theorem(ctx, p, irreps[i], mode);
    if (r.inner && r.theorem_val) r.match = (*r.inner == *r.theorem_val);
    if (r.inner) {
      lhs = lhs + *r.inner * Rational(r.degree);
      if (irreps[i].kind == IrrepKind::Trivial) inner_triv = r.inner;
      if (irreps[i].kind == IrrepKind::Steinberg) inner_st = r.inner;
    }
    all = all && r.match;
    rep.irreps.push_back(std::move(r));
  }

  if (want_inner) {
    rep.sum_rule_lhs = lhs;
    rep.sum_rule_ok = (lhs == Rational(D));
  } else {
    rep.sum_rule_lhs = Rational(D);
    rep.sum_rule_ok = true;  // not independently computable from theorem values alone
  }

  if (mode == Mode::Raw && inner_triv && inner_st) {
    rep.trivial_steinberg_sum_ok =
        (*inner_triv + *inner_st == trivial_steinberg_sum(p));
    all = all && *rep.trivial_steinberg_sum_ok;
  }

  rep.all_match = all && rep.sum_rule_ok;
  return rep;
}

}  // namespace sl2q
