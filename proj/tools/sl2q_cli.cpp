// Command-line front end; talks to the engine exclusively through the C API.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "sl2q/sl2q.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;

struct ContextDeleter {
  void operator()(sl2q_context* c) const { sl2q_context_free(c); }
};
using ContextPtr = std::unique_ptr<sl2q_context, ContextDeleter>;

int fail_usage(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return kExitUsage;
}

// Prints the string (taking ownership) or reports the last C-API error.
int emit(char* s) {
  if (!s) return fail_usage(sl2q_last_error());
  std::cout << s;
  if (*s && s[std::strlen(s) - 1] != '\n') std::cout << "\n";
  sl2q_string_free(s);
  return kExitOk;
}

ContextPtr make_context(std::int64_t q, int& rc) {
  ContextPtr ctx(sl2q_context_new(q));
  if (!ctx) rc = fail_usage(sl2q_last_error());
  return ctx;
}

int parse_format(const std::string& f, int& out) {
  if (f == "json") out = SL2Q_FORMAT_JSON;
  else if (f == "csv") out = SL2Q_FORMAT_CSV;
  else if (f == "pretty") out = SL2Q_FORMAT_PRETTY;
  else return fail_usage("unknown format '" + f + "'");
  return kExitOk;
}

// --p wins; otherwise SL2Q_PRIME applies to mod-p evaluation; 0 = automatic.
std::int64_t effective_prime(std::int64_t p_flag, bool modp) {
  if (p_flag != 0 || !modp) return p_flag;
  const char* env = std::getenv("SL2Q_PRIME");
  if (!env || !*env) return 0;
  return std::strtoll(env, nullptr, 10);
}

int read_profile(const std::string& path, std::string& out) {
  std::ifstream in(path);
  if (!in) return fail_usage("cannot open profile file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Character table and cusp-form multiplicity tool for SL2(F_q)"};
  app.require_subcommand(1);

  std::int64_t q = 5, k = 3, p = 0, trials = 25;
  std::uint64_t seed = 1;
  std::string eval = "modp", format = "json", profile_path, mode = "raw", method = "both";

  auto add_q = [&](CLI::App* c) { c->add_option("--q", q, "odd prime >= 5")->required(); };
  auto add_eval = [&](CLI::App* c) {
    c->add_option("--eval", eval, "evaluation context: float|modp");
    c->add_option("--p", p, "prime for mod-p evaluation (0 = automatic)");
  };
  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", format, "output format: json|csv|pretty");
  };

  auto* c_table = app.add_subcommand("chartable", "print the character table");
  add_q(c_table); add_eval(c_table); add_format(c_table);

  auto* c_classes = app.add_subcommand("classes", "print the conjugacy classes");
  add_q(c_classes); add_format(c_classes);

  auto* c_gauss = app.add_subcommand("gauss", "print Gauss-sum data and laws");
  add_q(c_gauss);
  c_gauss->add_option("--p", p, "prime for mod-p evaluation (0 = automatic)");

  auto* c_dims = app.add_subcommand("dims", "multiplicity report for a dimension profile");
  add_q(c_dims);
  c_dims->add_option("--k", k, "weight hint (the profile file is authoritative)");
  c_dims->add_option("--profile", profile_path, "profile JSON file")->required();
  c_dims->add_option("--mode", mode, "raw|physical");
  c_dims->add_option("--method", method, "both|inner|theorem");

  auto* c_verify = app.add_subcommand("verify", "randomized self-verification");
  add_q(c_verify);
  c_verify->add_option("--trials", trials, "number of random profiles");
  c_verify->add_option("--seed", seed, "RNG seed");

  auto* c_closed = app.add_subcommand("closedforms", "closed-form cusp dimensions");
  add_q(c_closed);
  c_closed->add_option("--k", k, "weight (>= 3)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  int rc = kExitOk;

  if (c_classes->parsed()) {
    int fmt;
    if ((rc = parse_format(format, fmt)) != kExitOk) return rc;
    auto ctx = make_context(q, rc);
    if (!ctx) return rc;
    return emit(sl2q_classes_render(ctx.get(), fmt));
  }

  if (c_table->parsed()) {
    int fmt;
    if ((rc = parse_format(format, fmt)) != kExitOk) return rc;
    int ev;
    if (eval == "float") ev = SL2Q_EVAL_COMPLEX;
    else if (eval == "modp") ev = SL2Q_EVAL_MODP;
    else return fail_usage("unknown eval '" + eval + "'");
    auto ctx = make_context(q, rc);
    if (!ctx) return rc;
    return emit(sl2q_chartable_render(ctx.get(), ev, effective_prime(p, ev == SL2Q_EVAL_MODP), fmt));
  }

  if (c_gauss->parsed()) {
    auto ctx = make_context(q, rc);
    if (!ctx) return rc;
    return emit(sl2q_gauss_render(ctx.get(), effective_prime(p, true)));
  }

  if (c_closed->parsed()) return emit(sl2q_closed_forms_render(q, k));

  if (c_dims->parsed()) {
    int m;
    if (mode == "raw") m = SL2Q_MODE_RAW;
    else if (mode == "physical") m = SL2Q_MODE_PHYSICAL;
    else return fail_usage("unknown mode '" + mode + "'");
    int meth;
    if (method == "both") meth = SL2Q_METHOD_BOTH;
    else if (method == "inner") meth = SL2Q_METHOD_INNER;
    else if (method == "theorem") meth = SL2Q_METHOD_THEOREM;
    else return fail_usage("unknown method '" + method + "'");
    std::string text;
    if ((rc = read_profile(profile_path, text)) != kExitOk) return rc;
    auto ctx = make_context(q, rc);
    if (!ctx) return rc;
    int all_match = 0;
    char* out = sl2q_dims_report(ctx.get(), text.c_str(), m, meth, &all_match);
    if (!out) return fail_usage(sl2q_last_error());
    rc = emit(out);
    if (rc != kExitOk) return rc;
    return (meth == SL2Q_METHOD_BOTH && !all_match) ? kExitVerification : kExitOk;
  }

  if (c_verify->parsed()) {
    auto ctx = make_context(q, rc);
    if (!ctx) return rc;
    int ok = 0;
    char* out = sl2q_verify(ctx.get(), trials, seed, &ok);
    if (!out) return fail_usage(sl2q_last_error());
    rc = emit(out);
    if (rc != kExitOk) return rc;
    return ok ? kExitOk : kExitVerification;
  }

  return fail_usage("no subcommand");
}
