#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sl2q {

using i64 = std::int64_t;

struct invalid_parameter : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct arithmetic_failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct verification_failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Element of E = F_q(sqrt(Delta)), stored as x + y*sqrt(Delta).
struct ExtElem {
  i64 x = 0;
  i64 y = 0;
  friend auto operator<=>(const ExtElem&, const ExtElem&) = default;
};

struct Mat2 {
  i64 a = 0, b = 0, c = 0, d = 0;
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

bool is_prime(i64 n);

// Arithmetic context for F_q, its quadratic extension E = F_q(sqrt(Delta)),
// and the norm-one torus inside SL2(F_q). Immutable after construction.
//
// Canonical generator choices (they pin down all character indexing):
//   delta   = smallest residue generating F_q*
//   ext_gen = lexicographically smallest (x, y), y != 0, of norm 1 and
//             multiplicative order exactly q+1
class GroupContext {
 public:
  explicit GroupContext(i64 q);

  i64 q() const { return q_; }
  i64 delta() const { return delta_; }
  ExtElem ext_gen() const { return gen_; }
  i64 group_order() const { return q_ * (q_ * q_ - 1); }

  // F_q arithmetic on residues in [0, q)
  i64 reduce(i64 v) const { i64 r = v % q_; return r < 0 ? r + q_ : r; }
  i64 add(i64 a, i64 b) const { return reduce(a + b); }
  i64 sub(i64 a, i64 b) const { return reduce(a - b); }
  i64 mul(i64 a, i64 b) const { return reduce(reduce(a) * reduce(b)); }
  i64 neg(i64 a) const { return reduce(-a); }
  i64 pow(i64 base, i64 e) const;
  i64 inv(i64 a) const;

  bool is_square(i64 a) const;   // a must be nonzero
  i64 sqrt_mod(i64 a) const;     // smallest root; throws if a is a nonsquare

  // extension field
  ExtElem ext_mul(const ExtElem& z, const ExtElem& w) const;
  ExtElem ext_conj(const ExtElem& z) const { return {z.x, neg(z.y)}; }
  ExtElem ext_pow(const ExtElem& z, i64 e) const;
  i64 norm(const ExtElem& z) const { return sub(mul(z.x, z.x), mul(delta_, mul(z.y, z.y))); }

  // 2x2 matrices
  i64 det(const Mat2& m) const { return sub(mul(m.a, m.d), mul(m.b, m.c)); }
  i64 trace(const Mat2& m) const { return add(m.a, m.d); }
  Mat2 mat_mul(const Mat2& g, const Mat2& h) const;
  Mat2 mat_inv(const Mat2& g) const;  // requires det 1
  Mat2 mat_neg(const Mat2& g) const { return {neg(g.a), neg(g.b), neg(g.c), neg(g.d)}; }

  // norm-one torus embedding z = x + y*sqrt(Delta) -> (x, Delta*y; y, x)
  Mat2 embed_torus(const ExtElem& z) const;

  // discrete logs: delta^dlog_mult(x) = x, ext_gen^dlog_torus(z) = z
  i64 dlog_mult(i64 x) const;
  i64 dlog_torus(const ExtElem& z) const;

 private:
  i64 q_ = 0;
  i64 delta_ = 0;
  ExtElem gen_;
  std::vector<i64> dlog_mult_;   // indexed by residue; -1 at 0
  std::vector<i64> dlog_torus_;  // indexed by x*q + y; -1 off the torus
  std::vector<i64> sqrt_;        // smallest square root per residue; -1 if none
};

}  // namespace sl2q
