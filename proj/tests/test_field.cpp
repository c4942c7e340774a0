#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "field.hpp"

using namespace sl2q;

TEST_CASE("primality helper") {
  CHECK(is_prime(2));
  CHECK(is_prime(5));
  CHECK(is_prime(97));
  CHECK(is_prime(337));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));   // 7 * 13
  CHECK_FALSE(is_prime(121));  // 11^2
}

TEST_CASE("context rejects bad q") {
  CHECK_THROWS_AS(GroupContext(4), invalid_parameter);
  CHECK_THROWS_AS(GroupContext(3), invalid_parameter);
  CHECK_THROWS_AS(GroupContext(9), invalid_parameter);
  CHECK_THROWS_AS(GroupContext(2), invalid_parameter);
}

TEST_CASE("canonical generators are the smallest choices") {
  GroupContext c5(5);
  CHECK(c5.delta() == 2);
  CHECK(c5.ext_gen().x == 3);
  CHECK(c5.ext_gen().y == 2);

  GroupContext c7(7);
  CHECK(c7.delta() == 3);
  CHECK(c7.ext_gen().x == 2);
  CHECK(c7.ext_gen().y == 1);
}

TEST_CASE("delta generates the multiplicative group") {
  for (i64 q : {5, 7, 11, 13, 17, 19, 23}) {
    GroupContext ctx(q);
    std::vector<bool> hit(q, false);
    i64 v = 1;
    for (i64 e = 0; e < q - 1; ++e) {
      CHECK_FALSE(hit[v]);
      hit[v] = true;
      v = ctx.mul(v, ctx.delta());
    }
    CHECK(v == 1);
    // delta itself must be a nonsquare (generators always are)
    CHECK_FALSE(ctx.is_square(ctx.delta()));
  }
}

TEST_CASE("field arithmetic basics") {
  GroupContext ctx(7);
  CHECK(ctx.add(5, 4) == 2);
  CHECK(ctx.sub(2, 5) == 4);
  CHECK(ctx.mul(3, 5) == 1);
  CHECK(ctx.inv(3) == 5);
  CHECK(ctx.neg(2) == 5);
  CHECK(ctx.pow(3, 6) == 1);
  CHECK(ctx.pow(0, 0) == 1);
  CHECK(ctx.pow(0, 6) == 0);  // zero base must not hit the exponent reduction
  CHECK_THROWS_AS(ctx.inv(0), invalid_parameter);
}

TEST_CASE("discrete logs invert exponentiation") {
  for (i64 q : {5, 7, 13}) {
    GroupContext ctx(q);
    for (i64 x = 1; x < q; ++x) CHECK(ctx.pow(ctx.delta(), ctx.dlog_mult(x)) == x);
  }
}

TEST_CASE("squares and square roots") {
  for (i64 q : {5, 7, 11, 13}) {
    GroupContext ctx(q);
    i64 squares = 0;
    for (i64 x = 1; x < q; ++x) {
      if (!ctx.is_square(x)) continue;
      ++squares;
      i64 r = ctx.sqrt_mod(x);
      CHECK(ctx.mul(r, r) == x);
      CHECK(r <= q - r);  // smallest root
    }
    CHECK(squares == (q - 1) / 2);
  }
}

TEST_CASE("quadratic extension and norm-one torus") {
  for (i64 q : {5, 7, 11}) {
    GroupContext ctx(q);
    CHECK_FALSE(ctx.is_square(ctx.delta()));  // Delta = delta is a nonsquare

    // ext_gen has norm 1 and exact order q + 1
    ExtElem g = ctx.ext_gen();
    CHECK(ctx.norm(g) == 1);
    ExtElem z = g;
    for (i64 e = 1; e < q + 1; ++e) {
      CHECK_FALSE((z.x == 1 && z.y == 0));
      z = ctx.ext_mul(z, g);
    }
    CHECK(z.x == 1);
    CHECK(z.y == 0);

    // torus dlogs invert powering, and norms are multiplicative
    for (i64 e = 0; e < q + 1; ++e) {
      ExtElem w = ctx.ext_pow(g, e);
      CHECK(ctx.norm(w) == 1);
      CHECK(ctx.dlog_torus(w) == e);
    }
  }
}

TEST_CASE("conjugation fixes the norm and inverts torus elements") {
  GroupContext ctx(7);
  ExtElem g = ctx.ext_gen();
  for (i64 e = 0; e < 8; ++e) {
    ExtElem w = ctx.ext_pow(g, e);
    ExtElem wc = ctx.ext_conj(w);
    CHECK(ctx.norm(wc) == ctx.norm(w));
    ExtElem prod = ctx.ext_mul(w, wc);
    CHECK(prod.x == 1);
    CHECK(prod.y == 0);
  }
}

TEST_CASE("torus embedding lands in SL2 with the right trace") {
  // q = 7: (0, 3) is a norm-one element with x = 0 (none exists for q = 5)
  GroupContext ctx(7);
  ExtElem z{0, 3};
  CHECK(ctx.norm(z) == 1);
  Mat2 m = ctx.embed_torus(z);
  CHECK(ctx.det(m) == 1);
  CHECK(ctx.trace(m) == ctx.reduce(2 * z.x));

  ExtElem g = ctx.ext_gen();
  for (i64 e = 0; e < 8; ++e) {
    ExtElem w = ctx.ext_pow(g, e);
    Mat2 mw = ctx.embed_torus(w);
    CHECK(ctx.det(mw) == 1);
    CHECK(ctx.trace(mw) == ctx.reduce(2 * w.x));
  }

  // the embedding is a homomorphism
  Mat2 mg = ctx.embed_torus(g);
  Mat2 acc{1, 0, 0, 1};
  for (i64 e = 0; e < 8; ++e) {
    Mat2 direct = ctx.embed_torus(ctx.ext_pow(g, e));
    CHECK(acc == direct);
    acc = ctx.mat_mul(acc, mg);
  }
}

TEST_CASE("matrix helpers") {
  GroupContext ctx(5);
  Mat2 a{1, 2, 3, 4};  // det = 4 - 6 = -2 = 3
  CHECK(ctx.det(a) == 3);
  Mat2 s{2, 1, 1, 1};  // det = 1
  CHECK(ctx.det(s) == 1);
  Mat2 si = ctx.mat_inv(s);
  Mat2 id = ctx.mat_mul(s, si);
  CHECK(id == (Mat2{1, 0, 0, 1}));
  CHECK(ctx.mat_neg(s) == (Mat2{3, 4, 4, 4}));
  CHECK(ctx.group_order() == 120);
}
