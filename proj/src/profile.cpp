#include "profile.hpp"

#include <random>

#include <json.hpp>

#include "engine.hpp"

namespace sl2q {

using nlohmann::json;

static void check_shape(const GroupContext& ctx, const DimensionProfile& p) {
  if (p.q != ctx.q()) throw invalid_parameter("profile q does not match the context");
  if (p.k < 3) throw invalid_parameter("profile weight k must be >= 3");
  if (static_cast<i64>(p.phi.size()) != p.q - 1 || static_cast<i64>(p.psi.size()) != p.q ||
      static_cast<i64>(p.tau.size()) != p.q + 1)
    throw invalid_parameter("profile maps have the wrong key sets");
  for (i64 v : p.phi)
    if (v < 0) throw invalid_parameter("profile entries must be nonnegative");
  for (i64 v : p.psi)
    if (v < 0) throw invalid_parameter("profile entries must be nonnegative");
  for (i64 v : p.tau)
    if (v < 0) throw invalid_parameter("profile entries must be nonnegative");
}

ValidationReport validate_profile(const GroupContext& ctx, const DimensionProfile& p,
                                  ValidationLevel level) {
  check_shape(ctx, p);
  const i64 q = ctx.q();
  const i64 ksign = p.k % 2 == 0 ? 1 : -1;
  ValidationReport rep;

  ConstraintResult c1{"C1", "parity: entries for characters of the wrong parity vanish"};
  for (i64 a = 0; a < q - 1; ++a) {
    i64 sign = a % 2 == 0 ? 1 : -1;  // alpha_a(-1)
    if (sign != ksign && p.phi[a] != 0) {
      c1.pass = false;
      c1.offending.push_back("phi[" + std::to_string(a) + "]");
    }
  }
  for (i64 b = 0; b < q + 1; ++b) {
    i64 sign = b % 2 == 0 ? 1 : -1;  // tau_b(-1)
    if (sign != ksign && p.tau[b] != 0) {
      c1.pass = false;
      c1.offending.push_back("tau[" + std::to_string(b) + "]");
    }
  }
  rep.constraints.push_back(std::move(c1));

  ConstraintResult c2{"C2", "psi constant on square classes of F_q*"};
  for (i64 n = 1; n < q; ++n) {
    i64 rep_n = ctx.is_square(n) ? 1 : ctx.delta();
    if (p.psi[n] != p.psi[rep_n]) {
      c2.pass = false;
      c2.offending.push_back("psi[" + std::to_string(n) + "]");
    }
  }
  rep.constraints.push_back(std::move(c2));

  ConstraintResult c3{"C3", "psi[0] equals the sum of all phi entries"};
  if (p.psi[0] != p.phi_total()) {
    c3.pass = false;
    c3.offending.push_back("psi[0]=" + std::to_string(p.psi[0]) + " vs sum(phi)=" +
                           std::to_string(p.phi_total()));
  }
  rep.constraints.push_back(std::move(c3));

  ConstraintResult c4{"C4", "conjugation symmetry phi[a]=phi[-a], psi[n]=psi[-n], tau[b]=tau[-b]"};
  for (i64 a = 1; a < q - 1; ++a)
    if (p.phi[a] != p.phi[q - 1 - a]) {
      c4.pass = false;
      c4.offending.push_back("phi[" + std::to_string(a) + "]");
    }
  for (i64 n = 1; n < q; ++n)
    if (p.psi[n] != p.psi[q - n]) {
      c4.pass = false;
      c4.offending.push_back("psi[" + std::to_string(n) + "]");
    }
  for (i64 b = 1; b < q + 1; ++b)
    if (p.tau[b] != p.tau[q + 1 - b]) {
      c4.pass = false;
      c4.offending.push_back("tau[" + std::to_string(b) + "]");
    }
  rep.constraints.push_back(std::move(c4));

  ConstraintResult c5{"C5", "sum of psi equals sum of tau"};
  if (p.total() != p.tau_total()) {
    c5.pass = false;
    c5.offending.push_back("sum(psi)=" + std::to_string(p.total()) + " vs sum(tau)=" +
                           std::to_string(p.tau_total()));
  }
  rep.constraints.push_back(std::move(c5));

  if (level == ValidationLevel::Physical) {
    ConstraintResult c6{"C6", "totals match the closed forms for dim S_k(Gamma(q)), dim S_k(Gamma_1(q))"};
    i64 dg = dim_gamma_q(p.q, p.k);
    i64 dg1 = dim_gamma1_q(p.q, p.k);
    if (p.total() != dg) {
      c6.pass = false;
      c6.offending.push_back("sum(psi)=" + std::to_string(p.total()) + " vs dim S_k(Gamma(q))=" +
                             std::to_string(dg));
    }
    if (p.psi[0] != dg1) {
      c6.pass = false;
      c6.offending.push_back("psi[0]=" + std::to_string(p.psi[0]) +
                             " vs dim S_k(Gamma_1(q))=" + std::to_string(dg1));
    }
    rep.constraints.push_back(std::move(c6));
  }
  return rep;
}

static std::vector<i64> map_from_json(const json& j, const std::string& key, i64 size) {
  if (!j.contains(key) || !j[key].is_object())
    throw parse_error("profile: missing or non-object \"" + key + "\" map");
  std::vector<i64> out(size, 0);
  const json& m = j[key];
  for (i64 e = 0; e < size; ++e) {
    std::string k = std::to_string(e);
    if (!m.contains(k))
      throw parse_error("profile: \"" + key + "\" is missing key \"" + k + "\"");
    if (!m[k].is_number_integer() || m[k].get<i64>() < 0)
      throw parse_error("profile: \"" + key + "\"[\"" + k + "\"] must be a nonnegative integer");
    out[e] = m[k].get<i64>();
  }
  if (static_cast<i64>(m.size()) != size)
    throw parse_error("profile: \"" + key + "\" has extra keys");
  return out;
}

DimensionProfile profile_from_json(const std::string& text, i64 expect_q) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw parse_error(std::string("profile: invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("q") || !j.contains("k"))
    throw parse_error("profile: expected an object with \"q\" and \"k\"");
  DimensionProfile p;
  p.q = j["q"].get<i64>();
  p.k = j["k"].get<i64>();
  if (expect_q >= 0 && p.q != expect_q)
    throw invalid_parameter("profile q=" + std::to_string(p.q) + " disagrees with --q " +
                            std::to_string(expect_q));
  p.phi = map_from_json(j, "phi", p.q - 1);
  p.psi = map_from_json(j, "psi", p.q);
  p.tau = map_from_json(j, "tau", p.q + 1);
  return p;
}

std::string profile_to_json(const DimensionProfile& p) {
  json j;
  j["q"] = p.q;
  j["k"] = p.k;
  auto emit = [](const std::vector<i64>& v) {
    json m = json::object();
    for (size_t e = 0; e < v.size(); ++e) m[std::to_string(e)] = v[e];
    return m;
  };
  j["phi"] = emit(p.phi);
  j["psi"] = emit(p.psi);
  j["tau"] = emit(p.tau);
  return j.dump();
}

DimensionProfile random_valid_profile(const GroupContext& ctx, i64 k, std::uint64_t seed,
                                      i64 magnitude) {
  if (k < 3) throw invalid_parameter("random_valid_profile: k must be >= 3");
  if (magnitude < 0) throw invalid_parameter("random_valid_profile: negative magnitude");
  const i64 q = ctx.q();
  const i64 ksign = k % 2 == 0 ? 1 : -1;
  auto allowed_mult = [&](i64 a) { return (a % 2 == 0 ? 1 : -1) == ksign; };
  auto allowed_torus = [&](i64 b) { return (b % 2 == 0 ? 1 : -1) == ksign; };

  // self-paired torus slot usable for the C5 balance, when its parity fits
  i64 torus_slot = -1;
  if (allowed_torus(0)) torus_slot = 0;
  else if (allowed_torus((q + 1) / 2)) torus_slot = (q + 1) / 2;

  for (std::uint64_t attempt = 0;; ++attempt) {
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + attempt + 1);
    auto draw = [&]() -> i64 {
      return magnitude == 0 ? 0 : static_cast<i64>(rng() % (magnitude + 1));
    };

    DimensionProfile p;
    p.q = q;
    p.k = k;
    p.phi.assign(q - 1, 0);
    p.psi.assign(q, 0);
    p.tau.assign(q + 1, 0);

    for (i64 a = 0; a <= (q - 1) / 2; ++a) {
      if (!allowed_mult(a)) continue;
      i64 v = draw();
      p.phi[a] = v;
      p.phi[(q - 1 - a) % (q - 1)] = v;
    }
    p.psi[0] = p.phi_total();
    if (q % 4 == 1) {
      i64 vs = draw(), vn = draw();
      for (i64 n = 1; n < q; ++n) p.psi[n] = ctx.is_square(n) ? vs : vn;
    } else {
      i64 v = draw();  // C2 + C4 force both square classes equal when -1 is a nonsquare
      for (i64 n = 1; n < q; ++n) p.psi[n] = v;
    }
    for (i64 b = 0; b <= (q + 1) / 2; ++b) {
      if (!allowed_torus(b)) continue;
      i64 v = draw();
      p.tau[b] = v;
      p.tau[(q + 1 - b) % (q + 1)] = v;
    }

    // balance C5: sum(tau) must equal sum(psi)
    i64 diff = p.total() - p.tau_total();
    if (torus_slot >= 0) {
      if (p.tau[torus_slot] + diff < 0) continue;  // resample
      p.tau[torus_slot] += diff;
    } else {
      // k odd and q = 3 (mod 4): only paired torus slots are available, so the
      // difference must be made even first; phi[(q-1)/2] is self-paired and odd here
      if (diff % 2 != 0) {
        p.phi[(q - 1) / 2] += 1;
        p.psi[0] += 1;
        diff += 1;
      }
      if (p.tau[1] + diff / 2 < 0) continue;
      p.tau[1] += diff / 2;
      p.tau[q] += diff / 2;
    }

    if (validate_profile(ctx, p, ValidationLevel::Structural).ok()) return p;
  }
}

}  // namespace sl2q
