#pragma once

#include <string>
#include <utility>
#include <vector>

#include "classes.hpp"
#include "eval.hpp"

namespace sl2q {

enum class IrrepKind {
  Trivial,
  Steinberg,
  PrincipalSeries,  // label a, unordered pair {a, -a} mod q-1, a not in {0, (q-1)/2}
  PSHalfPlus,       // the two halves of rho(zeta_e)
  PSHalfMinus,
  Cuspidal,         // label b, unordered pair {b, -b} mod q+1, b not in {0, (q+1)/2}
  CuspHalfPlus,     // the two halves of omega(zeta_0)
  CuspHalfMinus,
};

struct IrrepLabel {
  IrrepKind kind = IrrepKind::Trivial;
  i64 a = 0;  // canonical exponent min(a, q-1-a) resp. min(b, q+1-b)

  friend bool operator==(const IrrepLabel&, const IrrepLabel&) = default;

  i64 degree(i64 q) const {
    switch (kind) {
      case IrrepKind::Trivial: return 1;
      case IrrepKind::Steinberg: return q;
      case IrrepKind::PrincipalSeries: return q + 1;
      case IrrepKind::PSHalfPlus:
      case IrrepKind::PSHalfMinus: return (q + 1) / 2;
      case IrrepKind::Cuspidal: return q - 1;
      case IrrepKind::CuspHalfPlus:
      case IrrepKind::CuspHalfMinus: return (q - 1) / 2;
    }
    return 0;
  }

  // value of the central character at -I (so chi(-I) = central_sign * degree)
  i64 central_sign(i64 q) const {
    switch (kind) {
      case IrrepKind::Trivial:
      case IrrepKind::Steinberg: return 1;
      case IrrepKind::PrincipalSeries: return a % 2 == 0 ? 1 : -1;
      case IrrepKind::PSHalfPlus:
      case IrrepKind::PSHalfMinus: return ((q - 1) / 2) % 2 == 0 ? 1 : -1;
      case IrrepKind::Cuspidal: return a % 2 == 0 ? 1 : -1;
      case IrrepKind::CuspHalfPlus:
      case IrrepKind::CuspHalfMinus: return ((q + 1) / 2) % 2 == 0 ? 1 : -1;
    }
    return 1;
  }

  std::string str(i64 q) const {
    switch (kind) {
      case IrrepKind::Trivial: return "trivial";
      case IrrepKind::Steinberg: return "steinberg";
      case IrrepKind::PrincipalSeries:
        return "ps{" + std::to_string(a) + "," + std::to_string(q - 1 - a) + "}";
      case IrrepKind::PSHalfPlus: return "ps_half+";
      case IrrepKind::PSHalfMinus: return "ps_half-";
      case IrrepKind::Cuspidal:
        return "cusp{" + std::to_string(a) + "," + std::to_string(q + 1 - a) + "}";
      case IrrepKind::CuspHalfPlus: return "cusp_half+";
      case IrrepKind::CuspHalfMinus: return "cusp_half-";
    }
    return "?";
  }
};

// The q+4 irreducibles: trivial, Steinberg, principal series (a ascending),
// the rho(zeta_e) halves, cuspidal (b ascending), the omega(zeta_0) halves.
inline std::vector<IrrepLabel> enumerate_irreps(const GroupContext& ctx) {
  const i64 q = ctx.q();
  std::vector<IrrepLabel> out;
  out.push_back({IrrepKind::Trivial});
  out.push_back({IrrepKind::Steinberg});
  for (i64 a = 1; a < (q - 1) / 2; ++a) out.push_back({IrrepKind::PrincipalSeries, a});
  out.push_back({IrrepKind::PSHalfPlus});
  out.push_back({IrrepKind::PSHalfMinus});
  for (i64 b = 1; b < (q + 1) / 2; ++b) out.push_back({IrrepKind::Cuspidal, b});
  out.push_back({IrrepKind::CuspHalfPlus});
  out.push_back({IrrepKind::CuspHalfMinus});
  return out;
}

template <class E>
struct CharacterTable {
  std::vector<ClassData> classes;
  std::vector<IrrepLabel> irreps;
  std::vector<std::vector<typename E::Scalar>> entries;  // [irrep][class]
};

template <class E>
typename E::Scalar character_entry(const GroupContext& ctx, const E& ev,
                                   const IrrepLabel& rho, const ClassLabel& c) {
  using S = typename E::Scalar;
  const i64 q = ctx.q();
  const i64 deg = rho.degree(q);

  // half-character unipotent values; sqrt(q*eps) is the context's Gauss sum S
  auto ps_half = [&](bool plus, bool gamma_delta) -> S {
    S s = gamma_delta == plus ? ev.neg(ev.gauss()) : ev.gauss();
    return ev.half(ev.add(ev.one(), s));  // (1 +- S)/2
  };
  auto cusp_half = [&](bool plus, bool gamma_delta) -> S {
    S s = gamma_delta == plus ? ev.neg(ev.gauss()) : ev.gauss();
    return ev.half(ev.add(ev.from_int(-1), s));  // (-1 +- S)/2
  };

  switch (c.kind) {
    case ClassKind::Identity:
      return ev.from_int(deg);
    case ClassKind::MinusIdentity:
      return ev.from_int(deg * rho.central_sign(q));
    case ClassKind::Unipotent: {
      i64 csgn = rho.central_sign(q);
      i64 sgn = c.eta ? csgn : 1;
      switch (rho.kind) {
        case IrrepKind::Trivial: return ev.one();
        case IrrepKind::Steinberg: return ev.zero();
        case IrrepKind::PrincipalSeries: return ev.from_int(c.eta ? csgn : 1);
        case IrrepKind::Cuspidal: return ev.from_int(c.eta ? -csgn : -1);
        case IrrepKind::PSHalfPlus:
        case IrrepKind::PSHalfMinus: {
          S v = ps_half(rho.kind == IrrepKind::PSHalfPlus, c.gamma_delta);
          return sgn == 1 ? v : ev.neg(v);
        }
        case IrrepKind::CuspHalfPlus:
        case IrrepKind::CuspHalfMinus: {
          S v = cusp_half(rho.kind == IrrepKind::CuspHalfPlus, c.gamma_delta);
          return sgn == 1 ? v : ev.neg(v);
        }
      }
      break;
    }
    case ClassKind::Split: {
      switch (rho.kind) {
        case IrrepKind::Trivial:
        case IrrepKind::Steinberg: return ev.one();
        case IrrepKind::PrincipalSeries: {
          i64 j = ctx.dlog_mult(c.split_x);
          return ev.add(ev.root_qm1(rho.a * j), ev.root_qm1(-rho.a * j));
        }
        case IrrepKind::PSHalfPlus:
        case IrrepKind::PSHalfMinus:
          return ev.from_int(ctx.is_square(c.split_x) ? 1 : -1);
        default: return ev.zero();  // cuspidal family vanishes on split classes
      }
    }
    case ClassKind::NonSplit: {
      i64 j = ctx.dlog_torus(c.ns_z);
      switch (rho.kind) {
        case IrrepKind::Trivial: return ev.one();
        case IrrepKind::Steinberg: return ev.from_int(-1);
        case IrrepKind::Cuspidal:
          return ev.neg(ev.add(ev.root_qp1(rho.a * j), ev.root_qp1(-rho.a * j)));
        case IrrepKind::CuspHalfPlus:
        case IrrepKind::CuspHalfMinus:
          return ev.from_int(j % 2 == 0 ? -1 : 1);  // -zeta_0(z)
        default: return ev.zero();  // principal series family vanishes here
      }
    }
  }
  throw arithmetic_failure("character_entry: unreachable");
}

template <class E>
CharacterTable<E> build_table(const GroupContext& ctx, const E& ev) {
  CharacterTable<E> t;
  t.classes = enumerate_classes(ctx);
  t.irreps = enumerate_irreps(ctx);
  t.entries.resize(t.irreps.size());
  for (size_t i = 0; i < t.irreps.size(); ++i) {
    t.entries[i].reserve(t.classes.size());
    for (const auto& cd : t.classes)
      t.entries[i].push_back(character_entry(ctx, ev, t.irreps[i], cd.label));
  }
  return t;
}

struct OrthogonalityReport {
  std::vector<std::pair<std::string, std::string>> first_failures;
  std::vector<std::pair<std::string, std::string>> second_failures;
  bool ok() const { return first_failures.empty() && second_failures.empty(); }
};

template <class E>
OrthogonalityReport verify_orthogonality(const GroupContext& ctx, const E& ev,
                                         const CharacterTable<E>& t) {
  OrthogonalityReport rep;
  const size_t n = t.classes.size();
  std::vector<size_t> invidx(n);
  for (size_t c = 0; c < n; ++c) {
    ClassLabel inv = inverse_class(ctx, t.classes[c].label);
    for (size_t c2 = 0; c2 < n; ++c2)
      if (t.classes[c2].label == inv) { invidx[c] = c2; break; }
  }
  const i64 G = ctx.group_order();

  for (size_t i = 0; i < t.irreps.size(); ++i) {
    for (size_t j = 0; j < t.irreps.size(); ++j) {
      auto s = ev.zero();
      for (size_t c = 0; c < n; ++c) {
        auto term = ev.mul(ev.from_int(t.classes[c].size),
                           ev.mul(t.entries[i][c], t.entries[j][invidx[c]]));
        s = ev.add(s, term);
      }
      auto want = ev.from_int(i == j ? G : 0);
      if (!ev.eq(s, want))
        rep.first_failures.emplace_back(t.irreps[i].str(ctx.q()), t.irreps[j].str(ctx.q()));
    }
  }

  for (size_t c = 0; c < n; ++c) {
    for (size_t c2 = 0; c2 < n; ++c2) {
      auto s = ev.zero();
      for (size_t i = 0; i < t.irreps.size(); ++i)
        s = ev.add(s, ev.mul(t.entries[i][c], t.entries[i][invidx[c2]]));
      auto want = ev.from_int(c == c2 ? G / t.classes[c].size : 0);
      if (!ev.eq(s, want))
        rep.second_failures.emplace_back(t.classes[c].label.str(), t.classes[c2].label.str());
    }
  }
  return rep;
}

}  // namespace sl2q
