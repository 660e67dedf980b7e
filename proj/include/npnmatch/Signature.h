// SPDX-License-Identifier: Apache-2.0
//
// Structural signature (SS) vectors.
//
// Each variable carries its first-order cofactor counts under the current
// cube, its frozen symmetry marks and a group number. Groups start out as the
// classes of equal canonical first-order value (max, min) and are only ever
// refined afterwards, so two variables that were told apart once can never be
// mapped onto each other later.
//
#pragma once

#include "npnmatch/Symmetry.h"
#include "npnmatch/TruthTable.h"

#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace npn {

struct SSValue {
  uint64_t pos = 0;
  uint64_t neg = 0;
  /// |C_i|, or -1 for an asymmetric variable.
  int symSize = -1;
  /// First member of C_i, or -1 for an asymmetric variable.
  int symFirst = -1;
  unsigned group = 0;
  /// Identified variables read (0, 0) and keep their group.
  bool identified = false;

  /// (max, min) of the two counts; equal for x_i and !x_i.
  std::pair<uint64_t, uint64_t> canonical() const {
    return pos >= neg ? std::pair{pos, neg} : std::pair{neg, pos};
  }

  bool operator==(const SSValue &) const = default;
};

struct SSVector {
  std::vector<SSValue> values;

  size_t size() const { return values.size(); }
  const SSValue &operator[](size_t i) const { return values[i]; }
  SSValue &operator[](size_t i) { return values[i]; }

  bool operator==(const SSVector &) const = default;
};

/// Renders `{(pos, neg, symSize, symFirst, group),(...)}`.
std::string toString(const SSVector &v);
std::ostream &operator<<(std::ostream &os, const SSVector &v);

enum class Phase : int8_t { Undetermined = -1, Positive = 0, Negative = 1 };

inline Phase phaseOf(uint64_t pos, uint64_t neg) {
  if (pos > neg)
    return Phase::Positive;
  if (pos < neg)
    return Phase::Negative;
  return Phase::Undetermined;
}

/// `{-1, 0, 1}` style rendering.
std::string toString(std::span<const Phase> phases);

/// A function together with everything about it that never changes during a
/// match: its symmetry classes and the per-variable class lookup.
struct FunctionInfo {
  TruthTable table;
  std::vector<SymmetryClass> classes;
  /// Index into `classes`, or -1.
  std::vector<int> classOf;

  static std::shared_ptr<const FunctionInfo> analyze(TruthTable f);
};

/// (|f_{c x_i}|, |f_{c !x_i}|). Throws std::invalid_argument when x_i is
/// already constrained by the cube.
CofactorCounts firstOrderValue(const TruthTable &f, const Cube &cube,
                               unsigned i);

/// Builds the SS vector of f under `cube`. Identified variables read (0, 0)
/// and keep the group they have in `prev`. Without `prev`, groups are
/// numbered in descending canonical order; with `prev`, each old group is
/// split by canonical value, the largest part keeps the old number and the
/// other parts get fresh numbers past the current maximum.
SSVector computeSSVector(const FunctionInfo &info, const Cube &cube,
                         const std::vector<bool> &identified,
                         const SSVector *prev);

/// Per-variable phases. Identified variables report their recorded phase.
std::vector<Phase> determinePhases(const SSVector &v,
                                   const std::vector<bool> &identified,
                                   std::span<const Phase> recorded);

/// Same group structure: for every group, the multiset of
/// (identified, canonical value, symSize) agrees on both sides.
bool vectorsCompatible(const SSVector &vf, const SSVector &vg);

/// The per-function half of a match: restriction cube, identification flags,
/// the current SS vector and phases, and the phase each variable had when it
/// was first determined.
struct SideState {
  std::shared_ptr<const FunctionInfo> info;
  Cube cube;
  std::vector<bool> identified;
  SSVector vector;
  std::vector<Phase> phases;
  std::vector<Phase> phaseRecord;

  explicit SideState(std::shared_ptr<const FunctionInfo> info);

  unsigned numVars() const { return info->table.numVars(); }
  const TruthTable &table() const { return info->table; }

  bool operator==(const SideState &other) const;
};

/// Recomputes both SS vectors under their cubes, regroups, refreshes phases
/// and phase records, and reports whether the vectors are still compatible.
bool update(SideState &f, SideState &g);

} // namespace npn
