#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chartable.hpp"
#include "classes.hpp"
#include "eval.hpp"

namespace sl2q {

// The classical-dimension inputs determining the character of the action on
// S_k(Gamma(q)):
//   phi[a] = dim S_k(Gamma_0(q), alpha_a)        a in Z/(q-1)
//   psi[n] = dim S_k(Gamma_1(q), psi_n)          n in Z/q
//   tau[b] = dim S_k(Gamma_E(q), tau_b)          b in Z/(q+1)
// Exponents refer to the context's canonical generators.
struct DimensionProfile {
  i64 q = 0;
  i64 k = 0;
  std::vector<i64> phi;  // size q-1
  std::vector<i64> psi;  // size q
  std::vector<i64> tau;  // size q+1

  i64 total() const {  // = chi_sigma(identity)
    i64 s = 0;
    for (i64 v : psi) s += v;
    return s;
  }
  i64 phi_total() const {
    i64 s = 0;
    for (i64 v : phi) s += v;
    return s;
  }
  i64 tau_total() const {
    i64 s = 0;
    for (i64 v : tau) s += v;
    return s;
  }
};

enum class ValidationLevel { Structural, Physical };

struct ConstraintResult {
  std::string name;  // "C1".."C6"
  std::string description;
  bool pass = true;
  std::vector<std::string> offending;
};

struct ValidationReport {
  std::vector<ConstraintResult> constraints;
  bool ok() const {
    for (const auto& c : constraints)
      if (!c.pass) return false;
    return true;
  }
};

// Checks C1-C5 (structural) and additionally C6 (physical totals).
// Rejects k < 3 and shape mismatches outright.
ValidationReport validate_profile(const GroupContext& ctx, const DimensionProfile& p,
                                  ValidationLevel level);

// JSON round-trip; the format is {"q":..,"k":..,"phi":{"0":..},"psi":{..},"tau":{..}}
// with every exponent key mandatory. expect_q < 0 disables the q check.
DimensionProfile profile_from_json(const std::string& text, i64 expect_q = -1);
std::string profile_to_json(const DimensionProfile& p);

// Structurally valid by construction; deterministic in (seed, k, magnitude).
DimensionProfile random_valid_profile(const GroupContext& ctx, i64 k, std::uint64_t seed,
                                      i64 magnitude);

// chi_sigma on each class, in enumerate_classes order.
template <class E>
std::vector<typename E::Scalar> build_sigma(const GroupContext& ctx, const E& ev,
                                            const DimensionProfile& p,
                                            const std::vector<ClassData>& classes) {
  using S = typename E::Scalar;
  if (!validate_profile(ctx, p, ValidationLevel::Structural).ok())
    throw invalid_parameter("build_sigma: profile is not structurally valid");
  const i64 q = ctx.q();
  const i64 ksign = p.k % 2 == 0 ? 1 : -1;

  std::vector<S> out;
  out.reserve(classes.size());
  for (const auto& cd : classes) {
    const ClassLabel& c = cd.label;
    S v = ev.zero();
    switch (c.kind) {
      case ClassKind::Identity:
        v = ev.from_int(p.total());
        break;
      case ClassKind::MinusIdentity:
        v = ev.from_int(ksign * p.total());
        break;
      case ClassKind::Unipotent: {
        i64 gamma = c.gamma_delta ? ctx.delta() : 1;
        for (i64 n = 0; n < q; ++n)
          if (p.psi[n]) v = ev.add(v, ev.mul(ev.root_q(n * gamma), ev.from_int(p.psi[n])));
        if (c.eta && ksign == -1) v = ev.neg(v);
        break;
      }
      case ClassKind::Split: {
        i64 j = ctx.dlog_mult(c.split_x);
        for (i64 a = 0; a < q - 1; ++a)
          if (p.phi[a]) v = ev.add(v, ev.mul(ev.root_qm1(a * j), ev.from_int(p.phi[a])));
        break;
      }
      case ClassKind::NonSplit: {
        i64 j = ctx.dlog_torus(c.ns_z);
        for (i64 b = 0; b < q + 1; ++b)
          if (p.tau[b]) v = ev.add(v, ev.mul(ev.root_qp1(b * j), ev.from_int(p.tau[b])));
        break;
      }
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace sl2q
