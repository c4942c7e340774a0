#include "sl2q/sl2q.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "field.hpp"
#include "profile.hpp"
#include "render.hpp"

using namespace sl2q;

struct sl2q_context {
  GroupContext ctx;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class F>
char* guarded(F&& fn) {
  try {
    g_last_error.clear();
    return dup_string(fn());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return nullptr;
  } catch (...) {
    g_last_error = "unknown error";
    return nullptr;
  }
}

Format to_format(int f) {
  switch (f) {
    case SL2Q_FORMAT_JSON: return Format::Json;
    case SL2Q_FORMAT_CSV: return Format::Csv;
    case SL2Q_FORMAT_PRETTY: return Format::Pretty;
  }
  throw invalid_parameter("unknown output format");
}

}  // namespace

extern "C" {

sl2q_context* sl2q_context_new(int64_t q) {
  try {
    g_last_error.clear();
    return new sl2q_context{GroupContext(q)};
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return nullptr;
  }
}

void sl2q_context_free(sl2q_context* ctx) { delete ctx; }

int64_t sl2q_context_q(const sl2q_context* ctx) { return ctx ? ctx->ctx.q() : 0; }
int64_t sl2q_context_delta(const sl2q_context* ctx) { return ctx ? ctx->ctx.delta() : 0; }

char* sl2q_classes_render(const sl2q_context* ctx, int format) {
  if (!ctx) { g_last_error = "null context"; return nullptr; }
  return guarded([&] { return render_classes(ctx->ctx, to_format(format)); });
}

char* sl2q_chartable_render(const sl2q_context* ctx, int eval_kind, int64_t p, int format) {
  if (!ctx) { g_last_error = "null context"; return nullptr; }
  return guarded([&] {
    if (eval_kind != SL2Q_EVAL_COMPLEX && eval_kind != SL2Q_EVAL_MODP)
      throw invalid_parameter("unknown evaluation kind");
    EvalKind ev = eval_kind == SL2Q_EVAL_COMPLEX ? EvalKind::Complex : EvalKind::ModPrime;
    return render_chartable(ctx->ctx, ev, p, to_format(format));
  });
}

char* sl2q_gauss_render(const sl2q_context* ctx, int64_t p) {
  if (!ctx) { g_last_error = "null context"; return nullptr; }
  return guarded([&] { return render_gauss(ctx->ctx, p); });
}

char* sl2q_closed_forms_render(int64_t q, int64_t k) {
  return guarded([&] {
    if (q < 5 || q % 2 == 0 || !is_prime(q))
      throw invalid_parameter("q must be an odd prime >= 5");
    return render_closed_forms(q, k);
  });
}

char* sl2q_profile_validate(const sl2q_context* ctx, const char* profile_json, int level,
                            int* ok) {
  if (ok) *ok = 0;
  if (!ctx || !profile_json) { g_last_error = "null argument"; return nullptr; }
  return guarded([&] {
    auto prof = profile_from_json(profile_json, ctx->ctx.q());
    ValidationLevel lvl =
        level == SL2Q_VALIDATE_PHYSICAL ? ValidationLevel::Physical : ValidationLevel::Structural;
    auto rep = validate_profile(ctx->ctx, prof, lvl);
    if (ok) *ok = rep.ok() ? 1 : 0;
    return render_validation(ctx->ctx, prof, lvl);
  });
}

char* sl2q_dims_report(const sl2q_context* ctx, const char* profile_json, int mode, int method,
                       int* all_match) {
  if (all_match) *all_match = 0;
  if (!ctx || !profile_json) { g_last_error = "null argument"; return nullptr; }
  return guarded([&] {
    auto prof = profile_from_json(profile_json, ctx->ctx.q());
    Mode m = mode == SL2Q_MODE_PHYSICAL ? Mode::Physical : Mode::Raw;
    Method meth = method == SL2Q_METHOD_INNER
                      ? Method::InnerOnly
                      : (method == SL2Q_METHOD_THEOREM ? Method::TheoremOnly : Method::Both);
    auto rep = full_report(ctx->ctx, prof, m, meth);
    if (all_match) *all_match = rep.all_match ? 1 : 0;
    return render_report(rep, meth);
  });
}

char* sl2q_verify(const sl2q_context* ctx, int64_t trials, uint64_t seed, int* ok) {
  if (ok) *ok = 0;
  if (!ctx) { g_last_error = "null context"; return nullptr; }
  return guarded([&] {
    if (trials < 1) throw invalid_parameter("trials must be positive");
    bool good = false;
    std::string out = run_verification(ctx->ctx, trials, seed, good);
    if (ok) *ok = good ? 1 : 0;
    return out;
  });
}

void sl2q_string_free(char* s) { std::free(s); }

const char* sl2q_last_error(void) { return g_last_error.c_str(); }

}  // extern "C"
