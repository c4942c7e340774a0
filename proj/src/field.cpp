#include "field.hpp"

namespace sl2q {

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

static i64 mult_order(i64 a, i64 q) {
  i64 o = 1, x = a % q;
  while (x != 1) {
    x = x * a % q;
    ++o;
  }
  return o;
}

GroupContext::GroupContext(i64 q) : q_(q) {
  if (q < 5 || q % 2 == 0 || !is_prime(q))
    throw invalid_parameter("q must be an odd prime >= 5, got " + std::to_string(q));

  for (i64 a = 2; a < q_; ++a) {
    if (mult_order(a, q_) == q_ - 1) {
      delta_ = a;
      break;
    }
  }

  dlog_mult_.assign(q_, -1);
  i64 x = 1;
  for (i64 j = 0; j < q_ - 1; ++j) {
    dlog_mult_[x] = j;
    x = x * delta_ % q_;
  }

  sqrt_.assign(q_, -1);
  for (i64 y = q_ - 1; y >= 0; --y) sqrt_[y * y % q_] = y;  // keep smallest root

  // torus generator: lexicographically smallest (x, y), y != 0, norm 1, order q+1
  for (i64 gx = 0; gx < q_ && gen_ == ExtElem{}; ++gx) {
    for (i64 gy = 1; gy < q_; ++gy) {
      ExtElem z{gx, gy};
      if (norm(z) != 1) continue;
      i64 o = 1;
      ExtElem w = z;
      while (!(w == ExtElem{1, 0})) {
        w = ext_mul(w, z);
        ++o;
      }
      if (o == q_ + 1) {
        gen_ = z;
        break;
      }
    }
  }
  if (gen_ == ExtElem{}) throw arithmetic_failure("no torus generator found");

  dlog_torus_.assign(q_ * q_, -1);
  ExtElem z{1, 0};
  for (i64 j = 0; j <= q_; ++j) {
    dlog_torus_[z.x * q_ + z.y] = j;
    z = ext_mul(z, gen_);
  }
}

i64 GroupContext::pow(i64 base, i64 e) const {
  base = reduce(base);
  if (base == 0) return e == 0 ? 1 : 0;
  e %= q_ - 1;
  if (e < 0) e += q_ - 1;
  i64 r = 1;
  while (e) {
    if (e & 1) r = r * base % q_;
    base = base * base % q_;
    e >>= 1;
  }
  return r;
}

i64 GroupContext::inv(i64 a) const {
  a = reduce(a);
  if (a == 0) throw invalid_parameter("inverse of zero");
  return pow(a, q_ - 2);
}

bool GroupContext::is_square(i64 a) const {
  a = reduce(a);
  if (a == 0) throw invalid_parameter("is_square: zero is neither");
  return dlog_mult_[a] % 2 == 0;
}

i64 GroupContext::sqrt_mod(i64 a) const {
  a = reduce(a);
  if (sqrt_[a] < 0) throw invalid_parameter("sqrt_mod: nonsquare argument");
  return sqrt_[a];
}

ExtElem GroupContext::ext_mul(const ExtElem& z, const ExtElem& w) const {
  return {add(mul(z.x, w.x), mul(delta_, mul(z.y, w.y))),
          add(mul(z.x, w.y), mul(z.y, w.x))};
}

ExtElem GroupContext::ext_pow(const ExtElem& z, i64 e) const {
  ExtElem r{1, 0}, b = z;
  if (e < 0) throw invalid_parameter("ext_pow: negative exponent");
  while (e) {
    if (e & 1) r = ext_mul(r, b);
    b = ext_mul(b, b);
    e >>= 1;
  }
  return r;
}

Mat2 GroupContext::mat_mul(const Mat2& g, const Mat2& h) const {
  return {add(mul(g.a, h.a), mul(g.b, h.c)), add(mul(g.a, h.b), mul(g.b, h.d)),
          add(mul(g.c, h.a), mul(g.d, h.c)), add(mul(g.c, h.b), mul(g.d, h.d))};
}

Mat2 GroupContext::mat_inv(const Mat2& g) const {
  if (det(g) != 1) throw invalid_parameter("mat_inv: determinant is not 1");
  return {g.d, neg(g.b), neg(g.c), g.a};
}

Mat2 GroupContext::embed_torus(const ExtElem& z) const {
  if (norm(z) != 1) throw invalid_parameter("embed_torus: element has norm != 1");
  return {z.x, mul(delta_, z.y), z.y, z.x};
}

i64 GroupContext::dlog_mult(i64 x) const {
  x = reduce(x);
  if (x == 0) throw invalid_parameter("dlog_mult: zero element");
  return dlog_mult_[x];
}

i64 GroupContext::dlog_torus(const ExtElem& z) const {
  i64 j = dlog_torus_[reduce(z.x) * q_ + reduce(z.y)];
  if (j < 0) throw invalid_parameter("dlog_torus: element not on the norm-one torus");
  return j;
}

}  // namespace sl2q
