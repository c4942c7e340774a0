#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>

#include "sl2q/sl2q.h"

static std::string read_file(const std::string& name) {
  std::ifstream in(std::string(SL2Q_FIXTURE_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

static std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  sl2q_string_free(s);
  return out;
}

TEST_CASE("context lifecycle and validation") {
  sl2q_context* ctx = sl2q_context_new(5);
  REQUIRE(ctx);
  CHECK(sl2q_context_q(ctx) == 5);
  CHECK(sl2q_context_delta(ctx) == 2);
  sl2q_context_free(ctx);

  CHECK(sl2q_context_new(4) == nullptr);
  CHECK(std::string(sl2q_last_error()).size() > 0);
  CHECK(sl2q_context_new(9) == nullptr);
}

TEST_CASE("classes and chartable render through the C layer") {
  sl2q_context* ctx = sl2q_context_new(5);
  REQUIRE(ctx);

  std::string classes = take(sl2q_classes_render(ctx, SL2Q_FORMAT_JSON));
  CHECK(classes.find("\"split(2)\"") != std::string::npos);
  CHECK(classes.find("\"group_order\": 120") != std::string::npos);

  std::string csv = take(sl2q_classes_render(ctx, SL2Q_FORMAT_CSV));
  CHECK(csv.rfind("label,size,representative", 0) == 0);

  std::string table = take(sl2q_chartable_render(ctx, SL2Q_EVAL_MODP, 0, SL2Q_FORMAT_JSON));
  CHECK(table.find("\"p\": 61") != std::string::npos);
  CHECK(table.find("\"steinberg\"") != std::string::npos);

  std::string tablec = take(sl2q_chartable_render(ctx, SL2Q_EVAL_COMPLEX, 0, SL2Q_FORMAT_JSON));
  CHECK(tablec.find("\"complex\"") != std::string::npos);

  CHECK(sl2q_chartable_render(ctx, 99, 0, SL2Q_FORMAT_JSON) == nullptr);
  CHECK(sl2q_classes_render(ctx, 99) == nullptr);

  sl2q_context_free(ctx);
}

TEST_CASE("gauss and closed forms") {
  sl2q_context* ctx = sl2q_context_new(5);
  REQUIRE(ctx);
  std::string g = take(sl2q_gauss_render(ctx, 0));
  CHECK(g.find("\"s\": 26") != std::string::npos);
  CHECK(g.find("\"square_law_ok\": true") != std::string::npos);
  CHECK(g.find("\"twisted_law_ok\": true") != std::string::npos);
  sl2q_context_free(ctx);

  std::string cf = take(sl2q_closed_forms_render(5, 3));
  CHECK(cf.find("\"gamma_q\": 4") != std::string::npos);
  CHECK(cf.find("\"gamma1_q\": 0") != std::string::npos);
  CHECK(sl2q_closed_forms_render(6, 3) == nullptr);
  CHECK(sl2q_closed_forms_render(5, 2) == nullptr);
}

TEST_CASE("profile validation and dims through the C layer") {
  sl2q_context* ctx = sl2q_context_new(5);
  REQUIRE(ctx);
  std::string fixture = read_file("fixture-q5k3-synthetic.json");

  int ok = -1;
  std::string v =
      take(sl2q_profile_validate(ctx, fixture.c_str(), SL2Q_VALIDATE_STRUCTURAL, &ok));
  CHECK(ok == 1);
  CHECK(v.find("\"ok\": true") != std::string::npos);

  ok = -1;
  take(sl2q_profile_validate(ctx, fixture.c_str(), SL2Q_VALIDATE_PHYSICAL, &ok));
  CHECK(ok == 0);

  int all_match = -1;
  std::string rep = take(
      sl2q_dims_report(ctx, fixture.c_str(), SL2Q_MODE_RAW, SL2Q_METHOD_BOTH, &all_match));
  CHECK(all_match == 1);
  CHECK(rep.find("\"all_match\": true") != std::string::npos);
  CHECK(rep.find("ps{1,3}") != std::string::npos);

  // malformed input surfaces as a failure with a message
  CHECK(sl2q_dims_report(ctx, "{", SL2Q_MODE_RAW, SL2Q_METHOD_BOTH, &all_match) == nullptr);
  CHECK(std::string(sl2q_last_error()).find("profile") != std::string::npos);

  sl2q_context_free(ctx);
}

TEST_CASE("verification entry point") {
  sl2q_context* ctx = sl2q_context_new(5);
  REQUIRE(ctx);
  int ok = -1;
  std::string rep = take(sl2q_verify(ctx, 4, 1, &ok));
  CHECK(ok == 1);
  CHECK(rep.find("\"partition_ok\": true") != std::string::npos);
  CHECK(sl2q_verify(ctx, 0, 1, &ok) == nullptr);
  sl2q_context_free(ctx);
}
