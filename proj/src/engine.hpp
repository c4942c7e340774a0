#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chartable.hpp"
#include "profile.hpp"
#include "rational.hpp"

namespace sl2q {

// closed forms valid for k >= 3
i64 dim_gamma_q(i64 q, i64 k);   // dim S_k(Gamma(q))
i64 dim_gamma1_q(i64 q, i64 k);  // dim S_k(Gamma_1(q))
i64 dim_level1(i64 k);           // dim S_k(SL2(Z))

enum class Mode { Raw, Physical };

// Closed-form multiplicity of rho in sigma. Raw mode evaluates the
// pre-substitution identities on the profile data alone; physical mode
// substitutes the closed forms for the Gamma(q)/Gamma_1(q) totals (requiring
// C6) and additionally splits trivial/Steinberg. In raw mode the trivial and
// Steinberg rows are only determined as a sum (see trivial_steinberg_sum) and
// this returns nullopt for them.
std::optional<Rational> multiplicity_theorem(const GroupContext& ctx,
                                             const DimensionProfile& p,
                                             const IrrepLabel& rho, Mode mode);

// m(trivial) + m(Steinberg) = phi[0] (both modes)
Rational trivial_steinberg_sum(const DimensionProfile& p);

// Character inner product (1/|G|) sum_c |c| chi_sigma(c) chi_rho(c); no
// conjugation is applied. sigma and the table must share the eval context.
template <class E>
typename E::Scalar multiplicity_inner(const GroupContext& ctx, const E& ev,
                                      const std::vector<typename E::Scalar>& sigma,
                                      const CharacterTable<E>& table, size_t irrep_index) {
  auto s = ev.zero();
  for (size_t c = 0; c < table.classes.size(); ++c) {
    auto term = ev.mul(ev.from_int(table.classes[c].size),
                       ev.mul(sigma[c], table.entries[irrep_index][c]));
    s = ev.add(s, term);
  }
  return ev.div_int(s, ctx.group_order());
}

struct IrrepResult {
  IrrepLabel label;
  i64 degree = 0;
  std::optional<Rational> inner;        // absent when method excludes it
  std::optional<Rational> theorem_val;  // absent for raw-mode trivial/Steinberg
  bool parity_forced_zero = false;
  bool match = true;  // trivially true when either side is absent
};

struct MultiplicityReport {
  i64 q = 0;
  i64 k = 0;
  Mode mode = Mode::Raw;
  std::vector<IrrepResult> irreps;
  Rational sum_rule_lhs;  // sum m_rho * deg(rho) over computed multiplicities
  i64 sum_rule_rhs = 0;   // chi_sigma(identity)
  bool sum_rule_ok = false;
  // raw mode: trivial+Steinberg checked as a sum against phi[0]
  std::optional<bool> trivial_steinberg_sum_ok;
  bool all_match = false;
};

enum class Method { Both, InnerOnly, TheoremOnly };

// Runs the inner products in two ModPrime contexts plus the complex context,
// cross-checks the integer/rational recovery, evaluates the closed forms, and
// compares. Throws arithmetic_failure if the contexts disagree.
MultiplicityReport full_report(const GroupContext& ctx, const DimensionProfile& p, Mode mode,
                               Method method = Method::Both);

}  // namespace sl2q
