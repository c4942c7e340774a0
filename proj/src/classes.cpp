#include "classes.hpp"

#include <algorithm>

namespace sl2q {

std::string ClassLabel::str() const {
  switch (kind) {
    case ClassKind::Identity: return "id";
    case ClassKind::MinusIdentity: return "-id";
    case ClassKind::Unipotent:
      return "u(" + std::to_string(eta) + "," + (gamma_delta ? "D" : "1") + ")";
    case ClassKind::Split: return "split(" + std::to_string(split_x) + ")";
    case ClassKind::NonSplit:
      return "nonsplit(" + std::to_string(ns_z.x) + "," + std::to_string(ns_z.y) + ")";
  }
  return "?";
}

std::vector<ClassData> enumerate_classes(const GroupContext& ctx) {
  const i64 q = ctx.q();
  std::vector<ClassData> out;
  out.reserve(q + 4);

  Mat2 id{1, 0, 0, 1};
  out.push_back({ClassLabel::identity(), id, 1});
  out.push_back({ClassLabel::minus_identity(), ctx.mat_neg(id), 1});

  const i64 usize = (q * q - 1) / 2;
  for (int eta = 0; eta <= 1; ++eta) {
    for (int gd = 0; gd <= 1; ++gd) {
      i64 gamma = gd ? ctx.delta() : 1;
      Mat2 rep{1, gamma, 0, 1};
      if (eta) rep = ctx.mat_neg(rep);
      out.push_back({ClassLabel::unipotent(eta, gd != 0), rep, usize});
    }
  }

  for (i64 x = 2; x <= q - 2; ++x) {
    if (x <= ctx.inv(x))
      out.push_back({ClassLabel::split(x), Mat2{x, 0, 0, ctx.inv(x)}, q * (q + 1)});
  }

  std::vector<std::pair<i64, ExtElem>> torus;  // (dlog, canonical z)
  for (i64 j = 1; j <= q; ++j) {
    if (j == (q + 1) / 2) continue;  // z = -1
    ExtElem z = ctx.ext_pow(ctx.ext_gen(), j);
    if (z.y >= 1 && z.y <= (q - 1) / 2) torus.emplace_back(j, z);
  }
  std::sort(torus.begin(), torus.end());
  for (auto& [j, z] : torus)
    out.push_back({ClassLabel::nonsplit(z), ctx.embed_torus(z), q * (q - 1)});

  return out;
}

ClassLabel classify(const GroupContext& ctx, const Mat2& g) {
  const i64 q = ctx.q();
  if (ctx.det(g) != 1) throw invalid_parameter("classify: determinant is not 1");

  if (g == Mat2{1, 0, 0, 1}) return ClassLabel::identity();
  if (g == Mat2{q - 1, 0, 0, q - 1}) return ClassLabel::minus_identity();

  const i64 t = ctx.trace(g);
  if (t == 2) {
    // square-class invariant of the unipotent conjugacy orbit
    i64 inv = g.c != 0 ? ctx.neg(g.c) : g.b;
    return ClassLabel::unipotent(0, !ctx.is_square(inv));
  }
  if (t == q - 2) {
    ClassLabel m = classify(ctx, ctx.mat_neg(g));
    m.eta = 1;
    return m;
  }

  const i64 disc = ctx.sub(ctx.mul(t, t), 4);
  const i64 inv2 = ctx.inv(2);
  if (ctx.is_square(disc)) {
    i64 s = ctx.sqrt_mod(disc);
    i64 x = ctx.mul(ctx.add(t, s), inv2);
    i64 xi = ctx.inv(x);
    return ClassLabel::split(std::min(x, xi));
  }

  // nonsplit: z = t/2 + y*sqrt(Delta) with norm 1, so y^2 = (t^2-4)/(4*Delta)
  i64 x0 = ctx.mul(t, inv2);
  i64 y2 = ctx.mul(ctx.sub(ctx.mul(x0, x0), 1), ctx.inv(ctx.delta()));
  i64 y = ctx.sqrt_mod(y2);
  if (y > (q - 1) / 2) y = q - y;
  return ClassLabel::nonsplit({x0, y});
}

ClassLabel inverse_class(const GroupContext& ctx, const ClassLabel& label) {
  if (label.kind == ClassKind::Unipotent) {
    bool flip = !ctx.is_square(ctx.q() - 1);  // -1 nonsquare swaps the gamma classes
    return ClassLabel::unipotent(label.eta, flip ? !label.gamma_delta : label.gamma_delta);
  }
  return label;  // identity, -identity, split, nonsplit are self-inverse
}

}  // namespace sl2q
