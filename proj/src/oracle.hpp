#pragma once

#include <map>
#include <string>
#include <vector>

#include "chartable.hpp"
#include "classes.hpp"
#include "field.hpp"

namespace sl2q {

inline constexpr i64 kDefaultOracleBound = 200;

// Streams every matrix of determinant 1, lexicographically in (a, b, c):
// for a != 0 solve d, for a = 0 require bc = -1 and let d range freely.
template <class F>
void enumerate_group(const GroupContext& ctx, F&& fn, i64 bound = kDefaultOracleBound) {
  const i64 q = ctx.q();
  if (q > bound) throw invalid_parameter("enumerate_group: q exceeds the configured bound");
  for (i64 b = 0; b < q; ++b)
    for (i64 c = 0; c < q; ++c)
      if (ctx.mul(b, c) == q - 1)
        for (i64 d = 0; d < q; ++d) fn(Mat2{0, b, c, d});
  for (i64 a = 1; a < q; ++a) {
    i64 ai = ctx.inv(a);
    for (i64 b = 0; b < q; ++b)
      for (i64 c = 0; c < q; ++c) fn(Mat2{a, b, c, ctx.mul(ai, ctx.add(1, ctx.mul(b, c)))});
  }
}

struct PartitionReport {
  bool ok = true;
  i64 element_count = 0;
  std::map<std::string, i64> counts;  // by class label
  std::vector<std::string> mismatches;
};

// Classifies every group element and compares per-label counts with the sizes
// announced by enumerate_classes.
PartitionReport verify_class_partition(const GroupContext& ctx, i64 bound = kDefaultOracleBound);

// Element-wise average of chi_sigma * chi_rho over the whole group; must agree
// with the class-based multiplicity_inner exactly.
template <class E>
typename E::Scalar inner_product_bruteforce(const GroupContext& ctx, const E& ev,
                                            const std::vector<typename E::Scalar>& sigma,
                                            const CharacterTable<E>& table, size_t irrep_index,
                                            i64 bound = kDefaultOracleBound) {
  std::map<ClassLabel, size_t> index;
  for (size_t c = 0; c < table.classes.size(); ++c) index[table.classes[c].label] = c;
  auto s = ev.zero();
  enumerate_group(
      ctx,
      [&](const Mat2& g) {
        size_t c = index.at(classify(ctx, g));
        s = ev.add(s, ev.mul(sigma[c], table.entries[irrep_index][c]));
      },
      bound);
  return ev.div_int(s, ctx.group_order());
}

}  // namespace sl2q
