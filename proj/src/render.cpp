#include "render.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "oracle.hpp"

namespace sl2q {

using nlohmann::json;

static json scalar_json(const ModPrimeEval&, i64 v) { return v; }
static json scalar_json(const ComplexEval&, std::complex<double> v) {
  auto clean = [](double x) { return std::abs(x) < 1e-12 ? 0.0 : x; };
  return json::array({clean(v.real()), clean(v.imag())});
}
static std::string scalar_str(const ModPrimeEval&, i64 v) { return std::to_string(v); }
static std::string scalar_str(const ComplexEval&, std::complex<double> v) {
  std::ostringstream os;
  os << std::setprecision(6) << v.real();
  if (std::abs(v.imag()) > 1e-9) os << (v.imag() > 0 ? "+" : "") << v.imag() << "i";
  return os.str();
}

static std::string mat_str(const Mat2& m) {
  return "[" + std::to_string(m.a) + "," + std::to_string(m.b) + ";" + std::to_string(m.c) +
         "," + std::to_string(m.d) + "]";
}

std::string render_classes(const GroupContext& ctx, Format fmt) {
  auto classes = enumerate_classes(ctx);
  if (fmt == Format::Csv) {
    std::ostringstream os;
    os << "label,size,representative\n";
    for (const auto& c : classes)
      os << c.label.str() << "," << c.size << "," << mat_str(c.representative) << "\n";
    return os.str();
  }
  if (fmt == Format::Pretty) {
    std::ostringstream os;
    os << "conjugacy classes of SL2(F_" << ctx.q() << "), |G| = " << ctx.group_order() << "\n";
    for (const auto& c : classes)
      os << "  " << std::left << std::setw(16) << c.label.str() << " size " << std::setw(8)
         << c.size << " rep " << mat_str(c.representative) << "\n";
    return os.str();
  }
  json j;
  j["q"] = ctx.q();
  j["delta"] = ctx.delta();
  j["ext_gen"] = json::array({ctx.ext_gen().x, ctx.ext_gen().y});
  j["group_order"] = ctx.group_order();
  j["classes"] = json::array();
  for (const auto& c : classes) {
    json e;
    e["label"] = c.label.str();
    e["size"] = c.size;
    e["representative"] = json::array({c.representative.a, c.representative.b,
                                       c.representative.c, c.representative.d});
    j["classes"].push_back(e);
  }
  return j.dump(2);
}

template <class E>
static std::string chartable_impl(const GroupContext& ctx, const E& ev, json meta, Format fmt) {
  auto t = build_table(ctx, ev);
  if (fmt == Format::Csv || fmt == Format::Pretty) {
    std::ostringstream os;
    const char sep = fmt == Format::Csv ? ',' : ' ';
    auto pad = [&](const std::string& s, int w) {
      if (fmt == Format::Csv) return s;
      std::ostringstream p;
      p << std::left << std::setw(w) << s;
      return p.str();
    };
    os << pad("irrep", 14);
    for (const auto& c : t.classes) os << sep << pad(c.label.str(), 14);
    os << "\n";
    for (size_t i = 0; i < t.irreps.size(); ++i) {
      os << pad(t.irreps[i].str(ctx.q()), 14);
      for (size_t c = 0; c < t.classes.size(); ++c)
        os << sep << pad(scalar_str(ev, t.entries[i][c]), 14);
      os << "\n";
    }
    return os.str();
  }
  json j = std::move(meta);
  j["q"] = ctx.q();
  j["classes"] = json::array();
  for (const auto& c : t.classes)
    j["classes"].push_back(json{{"label", c.label.str()}, {"size", c.size}});
  j["rows"] = json::object();
  for (size_t i = 0; i < t.irreps.size(); ++i) {
    json row = json::array();
    for (size_t c = 0; c < t.classes.size(); ++c) row.push_back(scalar_json(ev, t.entries[i][c]));
    j["rows"][t.irreps[i].str(ctx.q())] = row;
  }
  j["degrees"] = json::object();
  for (const auto& r : t.irreps) j["degrees"][r.str(ctx.q())] = r.degree(ctx.q());
  return j.dump(2);
}

std::string render_chartable(const GroupContext& ctx, EvalKind ev, i64 p, Format fmt) {
  if (ev == EvalKind::Complex)
    return chartable_impl(ctx, ComplexEval(ctx), json{{"eval", "complex"}}, fmt);
  if (p == 0) p = ModPrimeEval::smallest_admissible_prime(ctx);
  return chartable_impl(ctx, ModPrimeEval(ctx, p), json{{"eval", "modp"}, {"p", p}}, fmt);
}

std::string render_gauss(const GroupContext& ctx, i64 p) {
  if (p == 0) p = ModPrimeEval::smallest_admissible_prime(ctx);
  ComplexEval evc(ctx);
  ModPrimeEval evm(ctx, p);

  json j;
  j["q"] = ctx.q();
  j["epsilon"] = evm.epsilon();
  j["complex"] = json{{"s", scalar_json(evc, evc.gauss())},
                      {"s_squared", scalar_json(evc, evc.mul(evc.gauss(), evc.gauss()))}};
  j["modp"] = json{{"p", p},
                   {"s", evm.gauss()},
                   {"s_squared", evm.mul(evm.gauss(), evm.gauss())}};

  bool twisted_ok = true;
  for (i64 n = 0; n < ctx.q(); ++n) {
    auto lhs = gauss_sum_twisted(ctx, evm, n);
    auto rhs = n == 0 ? evm.zero()
                      : evm.mul(evm.from_int(ctx.is_square(n) ? 1 : -1), evm.gauss());
    twisted_ok = twisted_ok && evm.eq(lhs, rhs);
  }
  j["twisted_law_ok"] = twisted_ok;
  j["square_law_ok"] =
      evm.eq(evm.mul(evm.gauss(), evm.gauss()), evm.from_int(ctx.q() * evm.epsilon()));
  return j.dump(2);
}

std::string render_closed_forms(i64 q, i64 k) {
  json j;
  j["q"] = q;
  j["k"] = k;
  j["gamma_q"] = dim_gamma_q(q, k);
  j["gamma1_q"] = dim_gamma1_q(q, k);
  j["level1"] = dim_level1(k);
  return j.dump(2);
}

std::string render_validation(const GroupContext& ctx, const DimensionProfile& p,
                              ValidationLevel level) {
  auto rep = validate_profile(ctx, p, level);
  json j;
  j["q"] = p.q;
  j["k"] = p.k;
  j["level"] = level == ValidationLevel::Physical ? "physical" : "structural";
  j["ok"] = rep.ok();
  j["constraints"] = json::array();
  for (const auto& c : rep.constraints)
    j["constraints"].push_back(json{{"name", c.name},
                                    {"description", c.description},
                                    {"pass", c.pass},
                                    {"offending", c.offending}});
  return j.dump(2);
}

static json rational_json(const Rational& r) { return r.str(); }

std::string render_report(const MultiplicityReport& rep, Method method) {
  json j;
  j["q"] = rep.q;
  j["k"] = rep.k;
  j["mode"] = rep.mode == Mode::Raw ? "raw" : "physical";
  j["method"] = method == Method::Both ? "both" : (method == Method::InnerOnly ? "inner" : "theorem");
  j["irreps"] = json::array();
  for (const auto& r : rep.irreps) {
    json e;
    e["label"] = r.label.str(rep.q);
    e["degree"] = r.degree;
    if (r.inner) e["inner"] = rational_json(*r.inner);
    if (r.theorem_val) e["theorem"] = rational_json(*r.theorem_val);
    e["parity_forced_zero"] = r.parity_forced_zero;
    e["match"] = r.match;
    j["irreps"].push_back(e);
  }
  j["sum_rule"] = json{{"lhs", rational_json(rep.sum_rule_lhs)},
                       {"rhs", rep.sum_rule_rhs},
                       {"ok", rep.sum_rule_ok}};
  if (rep.trivial_steinberg_sum_ok)
    j["trivial_steinberg_sum_ok"] = *rep.trivial_steinberg_sum_ok;
  j["all_match"] = rep.all_match;
  return j.dump(2);
}

std::string run_verification(const GroupContext& ctx, i64 trials, std::uint64_t seed, bool& ok) {
  json j;
  j["q"] = ctx.q();
  j["trials"] = trials;
  j["seed"] = seed;
  std::vector<std::string> failures;

  auto part = verify_class_partition(ctx, std::max<i64>(ctx.q(), kDefaultOracleBound));
  j["partition_ok"] = part.ok;
  for (const auto& m : part.mismatches) failures.push_back("partition: " + m);

  // orthogonality in one exact context
  {
    ModPrimeEval ev(ctx, ModPrimeEval::smallest_admissible_prime(ctx));
    auto t = build_table(ctx, ev);
    auto orth = verify_orthogonality(ctx, ev, t);
    j["orthogonality_ok"] = orth.ok();
    for (auto& f : orth.first_failures)
      failures.push_back("first orthogonality: " + f.first + " x " + f.second);
    for (auto& f : orth.second_failures)
      failures.push_back("second orthogonality: " + f.first + " x " + f.second);
  }

  i64 done = 0;
  for (i64 t = 0; t < trials; ++t) {
    i64 k = 3 + t % 10;
    auto prof = random_valid_profile(ctx, k, seed + static_cast<std::uint64_t>(t), 4);
    MultiplicityReport rep;
    try {
      rep = full_report(ctx, prof, Mode::Raw, Method::Both);
    } catch (const std::exception& e) {
      failures.push_back("trial " + std::to_string(t) + ": " + e.what());
      continue;
    }
    if (!rep.all_match) failures.push_back("trial " + std::to_string(t) + ": engine != theorem");
    for (const auto& r : rep.irreps)
      if (r.parity_forced_zero && r.inner && !(*r.inner == Rational(0)))
        failures.push_back("trial " + std::to_string(t) + ": parity zero violated at " +
                           r.label.str(ctx.q()));

    // element-wise oracle cross-check on the first few trials
    if (t < 3 && ctx.q() <= 31) {
      ModPrimeEval ev(ctx, ModPrimeEval::smallest_admissible_prime(
                               ctx, 4 * (ctx.q() + 1) * (prof.total() + k * ctx.q() * ctx.q())));
      auto table = build_table(ctx, ev);
      auto sigma = build_sigma(ctx, ev, prof, table.classes);
      for (size_t i = 0; i < table.irreps.size(); ++i) {
        auto direct = multiplicity_inner(ctx, ev, sigma, table, i);
        auto brute = inner_product_bruteforce(ctx, ev, sigma, table, i);
        if (!ev.eq(direct, brute))
          failures.push_back("trial " + std::to_string(t) + ": brute-force mismatch at " +
                             table.irreps[i].str(ctx.q()));
      }
    }
    ++done;
  }
  j["trials_completed"] = done;
  j["failures"] = failures;
  ok = failures.empty();
  j["ok"] = ok;
  return j.dump(2);
}

}  // namespace sl2q
