#pragma once

#include <cstdint>
#include <string>

#include "engine.hpp"
#include "field.hpp"
#include "profile.hpp"

namespace sl2q {

enum class Format { Json, Csv, Pretty };
enum class EvalKind { Complex, ModPrime };

std::string render_classes(const GroupContext& ctx, Format fmt);

// p = 0 picks the smallest admissible prime (ModPrime only)
std::string render_chartable(const GroupContext& ctx, EvalKind ev, i64 p, Format fmt);

// S and S^2 in both evaluation contexts, plus the twisted-sum law check
std::string render_gauss(const GroupContext& ctx, i64 p);

std::string render_closed_forms(i64 q, i64 k);

std::string render_validation(const GroupContext& ctx, const DimensionProfile& p,
                              ValidationLevel level);

std::string render_report(const MultiplicityReport& rep, Method method);

// Random-profile property run (engine vs closed forms, sum rule, parity zeros)
// plus class-partition and brute-force inner-product cross-checks.
// Sets ok=false on any failed identity.
std::string run_verification(const GroupContext& ctx, i64 trials, std::uint64_t seed, bool& ok);

}  // namespace sl2q
