#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "field.hpp"

namespace sl2q {

enum class ClassKind { Identity, MinusIdentity, Unipotent, Split, NonSplit };

// Canonical label of one of the q+4 conjugacy classes of SL2(F_q).
//   Unipotent: class of (-1)^eta * (1, gamma; 0, 1), gamma in {1, Delta}
//   Split:     class of diag(x, x^-1); canonical x = min residue of {x, x^-1}
//   NonSplit:  class of the embedded norm-one z; canonical z has y in [1,(q-1)/2]
struct ClassLabel {
  ClassKind kind = ClassKind::Identity;
  int eta = 0;
  bool gamma_delta = false;
  i64 split_x = 0;
  ExtElem ns_z;

  friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
  friend bool operator<(const ClassLabel& l, const ClassLabel& r) {
    auto key = [](const ClassLabel& c) {
      return std::tuple(static_cast<int>(c.kind), c.eta, c.gamma_delta, c.split_x,
                        c.ns_z.x, c.ns_z.y);
    };
    return key(l) < key(r);
  }

  std::string str() const;

  static ClassLabel identity() { return {}; }
  static ClassLabel minus_identity() { return {ClassKind::MinusIdentity}; }
  static ClassLabel unipotent(int eta, bool gamma_delta) {
    return {ClassKind::Unipotent, eta, gamma_delta};
  }
  static ClassLabel split(i64 x) { return {ClassKind::Split, 0, false, x}; }
  static ClassLabel nonsplit(ExtElem z) { return {ClassKind::NonSplit, 0, false, 0, z}; }
};

struct ClassData {
  ClassLabel label;
  Mat2 representative;
  i64 size = 0;
};

// All q+4 classes in canonical order: Identity, MinusIdentity, the four
// unipotents (eta ascending, gamma in {1, Delta}), Split by ascending
// canonical x, NonSplit by ascending torus dlog of the canonical element.
std::vector<ClassData> enumerate_classes(const GroupContext& ctx);

ClassLabel classify(const GroupContext& ctx, const Mat2& g);

// Class of g^-1 for g in the given class.
ClassLabel inverse_class(const GroupContext& ctx, const ClassLabel& label);

}  // namespace sl2q
