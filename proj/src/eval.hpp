#pragma once

#include <cmath>
#include <complex>
#include <optional>

#include "field.hpp"
#include "rational.hpp"

namespace sl2q {

// Character of F_q* (MultChar, exponent mod q-1), of the additive group F_q
// (AddChar, exponent mod q), or of the norm-one torus (TorusChar, mod q+1).
struct CharLabel {
  enum Kind { Mult, Add, Torus } kind = Mult;
  i64 e = 0;
};

// Floating-point evaluation: zeta_m = exp(2*pi*i/m), comparisons at 1e-9.
class ComplexEval {
 public:
  using Scalar = std::complex<double>;

  explicit ComplexEval(const GroupContext& ctx);

  i64 q() const { return q_; }
  i64 epsilon() const { return eps_; }  // zeta_e(-1)

  Scalar zero() const { return {0.0, 0.0}; }
  Scalar one() const { return {1.0, 0.0}; }
  Scalar from_int(i64 v) const { return {static_cast<double>(v), 0.0}; }
  Scalar add(Scalar a, Scalar b) const { return a + b; }
  Scalar sub(Scalar a, Scalar b) const { return a - b; }
  Scalar mul(Scalar a, Scalar b) const { return a * b; }
  Scalar neg(Scalar a) const { return -a; }
  Scalar half(Scalar a) const { return a * 0.5; }
  Scalar div_int(Scalar a, i64 d) const { return a / static_cast<double>(d); }

  Scalar root_q(i64 e) const { return root(q_, e); }
  Scalar root_qm1(i64 e) const { return root(q_ - 1, e); }
  Scalar root_qp1(i64 e) const { return root(q_ + 1, e); }

  Scalar gauss() const { return gauss_; }

  bool eq(Scalar a, Scalar b) const { return std::abs(a - b) < 1e-9; }

  // Round a value known to lie in (1/den)*Z; nullopt if farther than 1e-6.
  std::optional<Rational> to_rational(Scalar v, i64 den) const;

 private:
  Scalar root(i64 m, i64 e) const {
    double t = 2.0 * 3.14159265358979323846 * static_cast<double>(((e % m) + m) % m) /
               static_cast<double>(m);
    return {std::cos(t), std::sin(t)};
  }
  i64 q_ = 0;
  i64 eps_ = 0;
  Scalar gauss_;
};

// Exact evaluation in F_p with p = 1 (mod lcm(q-1, q, q+1)), so F_p contains
// roots of unity of all three orders. Roots are g^((p-1)/m) for the smallest
// primitive root g of p. sqrt(q*eps) is *defined* as the Gauss sum built from
// zeta_q, which keeps every half-character identity exact.
class ModPrimeEval {
 public:
  using Scalar = i64;

  ModPrimeEval(const GroupContext& ctx, i64 p);

  static i64 lcm_order(const GroupContext& ctx);
  // smallest prime p = 1 (mod lcm) with p > above
  static i64 smallest_admissible_prime(const GroupContext& ctx, i64 above = 0);

  i64 q() const { return q_; }
  i64 p() const { return p_; }
  i64 epsilon() const { return eps_; }

  Scalar zero() const { return 0; }
  Scalar one() const { return 1; }
  Scalar from_int(i64 v) const { i64 r = v % p_; return r < 0 ? r + p_ : r; }
  Scalar add(Scalar a, Scalar b) const { i64 r = a + b; return r >= p_ ? r - p_ : r; }
  Scalar sub(Scalar a, Scalar b) const { i64 r = a - b; return r < 0 ? r + p_ : r; }
  Scalar mul(Scalar a, Scalar b) const { return a * b % p_; }
  Scalar neg(Scalar a) const { return a == 0 ? 0 : p_ - a; }
  Scalar half(Scalar a) const { return mul(a, inv2_); }
  Scalar div_int(Scalar a, i64 d) const { return mul(a, inv(from_int(d))); }

  Scalar pow(Scalar base, i64 e) const;
  Scalar inv(Scalar a) const;

  Scalar root_q(i64 e) const { return root(zq_, q_, e); }
  Scalar root_qm1(i64 e) const { return root(zqm1_, q_ - 1, e); }
  Scalar root_qp1(i64 e) const { return root(zqp1_, q_ + 1, e); }

  Scalar gauss() const { return gauss_; }

  bool eq(Scalar a, Scalar b) const { return a == b; }

  // Centered lift of v*den as an integer numerator over den.
  std::optional<Rational> to_rational(Scalar v, i64 den) const;

 private:
  Scalar root(i64 base, i64 m, i64 e) const { return pow(base, ((e % m) + m) % m); }
  i64 q_ = 0, p_ = 0, eps_ = 0;
  i64 zq_ = 0, zqm1_ = 0, zqp1_ = 0;
  i64 inv2_ = 0;
  i64 gauss_ = 0;
};

// Character evaluation; the argument domain depends on the label kind.
template <class E>
typename E::Scalar mult_char_value(const GroupContext& ctx, const E& ev, i64 a, i64 x) {
  return ev.root_qm1(a * ctx.dlog_mult(x));
}
template <class E>
typename E::Scalar add_char_value(const GroupContext& ctx, const E& ev, i64 n, i64 x) {
  return ev.root_q(n * ctx.reduce(x));
}
template <class E>
typename E::Scalar torus_char_value(const GroupContext& ctx, const E& ev, i64 b,
                                    const ExtElem& z) {
  return ev.root_qp1(b * ctx.dlog_torus(z));
}

template <class E>
typename E::Scalar char_value(const GroupContext& ctx, const E& ev, CharLabel chi, i64 x) {
  switch (chi.kind) {
    case CharLabel::Mult: return mult_char_value(ctx, ev, chi.e, x);
    case CharLabel::Add: return add_char_value(ctx, ev, chi.e, x);
    default: throw invalid_parameter("char_value: torus character needs an ExtElem argument");
  }
}
template <class E>
typename E::Scalar char_value(const GroupContext& ctx, const E& ev, CharLabel chi,
                              const ExtElem& z) {
  if (chi.kind != CharLabel::Torus)
    throw invalid_parameter("char_value: ExtElem argument needs a torus character");
  if (ctx.norm(z) != 1) throw invalid_parameter("char_value: argument not on the torus");
  return torus_char_value(ctx, ev, chi.e, z);
}

// sum over x in F_q* of zeta_e(x) * psi_n(x); n = 1 is the quadratic Gauss sum
template <class E>
typename E::Scalar gauss_sum_twisted(const GroupContext& ctx, const E& ev, i64 n) {
  auto s = ev.zero();
  const i64 e = (ctx.q() - 1) / 2;
  for (i64 x = 1; x < ctx.q(); ++x) {
    auto term = ev.mul(mult_char_value(ctx, ev, e, x), add_char_value(ctx, ev, n, x));
    s = ev.add(s, term);
  }
  return s;
}

}  // namespace sl2q
