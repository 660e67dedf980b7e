// SPDX-License-Identifier: Apache-2.0
//
// Nonskew variable symmetry.
//
#pragma once

#include "npnmatch/TruthTable.h"

#include <span>
#include <vector>

namespace npn {

enum class SymmetryKind : uint8_t {
  None,
  /// f is invariant under x_i <-> x_j.
  Identical,
  /// f is invariant under x_i <-> !x_j.
  Opposite,
};

/// Cofactor test: Identical when f_{x_i !x_j} == f_{!x_i x_j}, Opposite when
/// f_{x_i x_j} == f_{!x_i !x_j}. Identical wins when both hold.
SymmetryKind areSymmetric(const TruthTable &f, unsigned i, unsigned j);

/// True when f is invariant under x_i <-> x_j^rel, i.e. the plain swap for
/// Positive and the swap with both inputs complemented for Negative.
bool isInvariantUnderSwap(const TruthTable &f, unsigned i, unsigned j,
                          Polarity rel);

/// A maximal set of pairwise symmetric variables.
///
/// relativePol[k] is the polarity of members[k] relative to the first member:
/// after replacing every member x_m by x_m ^ (relativePol == Negative), f is
/// totally symmetric in the class.
struct SymmetryClass {
  std::vector<unsigned> members;
  std::vector<Polarity> relativePol;
  /// Every pair satisfies both symmetry conditions, so f is also invariant
  /// under complementing any two members together. Only the parity of the
  /// member polarities matters for such a class.
  bool pairNegationInvariant = false;

  unsigned first() const { return members.front(); }
  size_t size() const { return members.size(); }

  bool operator==(const SymmetryClass &) const = default;
};

/// Partitions the variables of f into symmetry classes. Pairs are tested only
/// inside buckets of equal canonical first-order value (max, min) taken from
/// `counts`, which must be the cofactor counts of the unrestricted f.
/// Classes are ordered by first member; variables in no class are asymmetric.
std::vector<SymmetryClass>
buildSymmetryClasses(const TruthTable &f,
                     std::span<const CofactorCounts> counts);

/// Convenience overload computing the counts itself.
std::vector<SymmetryClass> buildSymmetryClasses(const TruthTable &f);

} // namespace npn
