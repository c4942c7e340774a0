#include "eval.hpp"

#include <cmath>
#include <numeric>

namespace sl2q {

ComplexEval::ComplexEval(const GroupContext& ctx) : q_(ctx.q()) {
  eps_ = ctx.is_square(q_ - 1) ? 1 : -1;
  gauss_ = gauss_sum_twisted(ctx, *this, 1);
}

std::optional<Rational> ComplexEval::to_rational(Scalar v, i64 den) const {
  double scaled = v.real() * static_cast<double>(den);
  double rounded = std::round(scaled);
  double tol = 1e-6 * std::max(1.0, std::abs(scaled));
  if (std::abs(scaled - rounded) > tol || std::abs(v.imag()) > tol) return std::nullopt;
  return Rational(static_cast<i64>(std::llround(scaled)), den);
}

i64 ModPrimeEval::lcm_order(const GroupContext& ctx) {
  i64 q = ctx.q();
  return std::lcm(std::lcm(q - 1, q), q + 1);
}

i64 ModPrimeEval::smallest_admissible_prime(const GroupContext& ctx, i64 above) {
  const i64 L = lcm_order(ctx);
  for (i64 p = L + 1;; p += L)
    if (p > above && is_prime(p)) return p;
}

static i64 smallest_primitive_root(i64 p) {
  // factor p-1 by trial division
  std::vector<i64> primes;
  i64 m = p - 1;
  for (i64 d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      primes.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) primes.push_back(m);

  auto powmod = [p](i64 b, i64 e) {
    i64 r = 1;
    b %= p;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  for (i64 g = 2;; ++g) {
    bool ok = true;
    for (i64 f : primes)
      if (powmod(g, (p - 1) / f) == 1) { ok = false; break; }
    if (ok) return g;
  }
}

ModPrimeEval::ModPrimeEval(const GroupContext& ctx, i64 p) : q_(ctx.q()), p_(p) {
  if (!is_prime(p)) throw invalid_parameter("evaluation prime p = " + std::to_string(p) + " is not prime");
  const i64 L = lcm_order(ctx);
  if ((p - 1) % L != 0)
    throw invalid_parameter("p = " + std::to_string(p) + " is not 1 mod lcm(q-1,q,q+1) = " +
                            std::to_string(L));
  eps_ = ((q_ - 1) / 2) % 2 == 0 ? 1 : -1;

  i64 g = smallest_primitive_root(p);
  zq_ = pow(g, (p - 1) / q_);
  zqm1_ = pow(g, (p - 1) / (q_ - 1));
  zqp1_ = pow(g, (p - 1) / (q_ + 1));
  inv2_ = inv(2);
  gauss_ = gauss_sum_twisted(ctx, *this, 1);
}

i64 ModPrimeEval::pow(Scalar base, i64 e) const {
  i64 r = 1;
  base = from_int(base);
  if (e < 0) throw invalid_parameter("ModPrimeEval::pow: negative exponent");
  while (e) {
    if (e & 1) r = r * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return r;
}

i64 ModPrimeEval::inv(Scalar a) const {
  a = from_int(a);
  if (a == 0) throw invalid_parameter("ModPrimeEval::inv: zero");
  return pow(a, p_ - 2);
}

std::optional<Rational> ModPrimeEval::to_rational(Scalar v, i64 den) const {
  i64 scaled = mul(from_int(v), from_int(den));
  if (scaled > p_ / 2) scaled -= p_;
  return Rational(scaled, den);
}

}  // namespace sl2q
