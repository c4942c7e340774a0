#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "engine.hpp"
#include "oracle.hpp"

using namespace sl2q;

static std::string read_file(const std::string& name) {
  std::ifstream in(std::string(SL2Q_FIXTURE_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST_CASE("group enumeration hits every element once") {
  for (i64 q : {5, 7, 11}) {
    GroupContext ctx(q);
    i64 count = 0;
    std::map<std::tuple<i64, i64, i64, i64>, int> seen;
    enumerate_group(ctx, [&](const Mat2& g) {
      CHECK(ctx.det(g) == 1);
      ++count;
      ++seen[{g.a, g.b, g.c, g.d}];
    });
    CHECK(count == ctx.group_order());
    CHECK(static_cast<i64>(seen.size()) == ctx.group_order());
  }
}

TEST_CASE("enumeration bound guard") {
  GroupContext ctx(5);
  CHECK_THROWS_AS(enumerate_group(ctx, [](const Mat2&) {}, 3), invalid_parameter);
}

TEST_CASE("partition verification") {
  for (i64 q : {5, 7, 11}) {
    GroupContext ctx(q);
    auto rep = verify_class_partition(ctx);
    INFO("q = ", q);
    CHECK(rep.ok);
    CHECK(rep.mismatches.empty());
  }
}

TEST_CASE("brute-force inner products match the class-based engine") {
  GroupContext ctx(5);
  auto p = profile_from_json(read_file("fixture-q5k3-synthetic.json"), 5);
  ModPrimeEval ev(ctx, 61);
  auto table = build_table(ctx, ev);
  auto sigma = build_sigma(ctx, ev, p, table.classes);
  for (size_t i = 0; i < table.irreps.size(); ++i) {
    auto direct = multiplicity_inner(ctx, ev, sigma, table, i);
    auto brute = inner_product_bruteforce(ctx, ev, sigma, table, i);
    INFO("irrep ", table.irreps[i].str(5));
    CHECK(direct == brute);
  }
}

TEST_CASE("brute-force agreement on random profiles") {
  for (i64 q : {5, 7}) {
    GroupContext ctx(q);
    ModPrimeEval ev(ctx, ModPrimeEval::smallest_admissible_prime(ctx));
    auto table = build_table(ctx, ev);
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      auto p = random_valid_profile(ctx, 3 + static_cast<i64>(seed), seed, 3);
      auto sigma = build_sigma(ctx, ev, p, table.classes);
      for (size_t i = 0; i < table.irreps.size(); ++i)
        CHECK(multiplicity_inner(ctx, ev, sigma, table, i) ==
              inner_product_bruteforce(ctx, ev, sigma, table, i));
    }
  }
}

TEST_CASE("fixture values recovered through the brute-force path") {
  // exhaustive 120-element sums reproduce the hand-computed multiplicities
  GroupContext ctx(5);
  auto p = profile_from_json(read_file("fixture-q5k3-synthetic.json"), 5);
  ModPrimeEval ev(ctx, 61);
  auto table = build_table(ctx, ev);
  auto sigma = build_sigma(ctx, ev, p, table.classes);
  for (size_t i = 0; i < table.irreps.size(); ++i) {
    auto v = inner_product_bruteforce(ctx, ev, sigma, table, i);
    auto r = ev.to_rational(v, 2 * (5 - 1));
    REQUIRE(r);
    if (table.irreps[i] == IrrepLabel{IrrepKind::PrincipalSeries, 1})
      CHECK(*r == Rational(1));
    else if (table.irreps[i].kind == IrrepKind::CuspHalfMinus)
      CHECK(*r == Rational(-1));
    else if (table.irreps[i].kind != IrrepKind::Trivial &&
             table.irreps[i].kind != IrrepKind::Steinberg)
      CHECK(*r == Rational(0));
  }
}
