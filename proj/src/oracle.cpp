#include "oracle.hpp"

namespace sl2q {

PartitionReport verify_class_partition(const GroupContext& ctx, i64 bound) {
  PartitionReport rep;
  std::map<std::string, i64> seen;
  enumerate_group(
      ctx,
      [&](const Mat2& g) {
        ++seen[classify(ctx, g).str()];
        ++rep.element_count;
      },
      bound);

  auto classes = enumerate_classes(ctx);
  for (const auto& cd : classes) {
    i64 got = seen.count(cd.label.str()) ? seen[cd.label.str()] : 0;
    if (got != cd.size)
      rep.mismatches.push_back(cd.label.str() + ": expected " + std::to_string(cd.size) +
                               ", classified " + std::to_string(got));
  }
  if (seen.size() != classes.size())
    rep.mismatches.push_back("label count mismatch: classified " +
                             std::to_string(seen.size()) + " labels, enumerated " +
                             std::to_string(classes.size()));
  if (rep.element_count != ctx.group_order())
    rep.mismatches.push_back("element count " + std::to_string(rep.element_count) +
                             " != " + std::to_string(ctx.group_order()));
  rep.counts = std::move(seen);
  rep.ok = rep.mismatches.empty();
  return rep;
}

}  // namespace sl2q
