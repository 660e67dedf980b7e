// SPDX-License-Identifier: Apache-2.0
//
// Brute-force ground truth for small arities, plus the random function
// generators shared by the tests and the benchmark harness. Nothing here goes
// through the signature search.
//
#pragma once

#include "npnmatch/TruthTable.h"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

namespace npn {

inline constexpr unsigned kMaxOracleVars = 8;
inline constexpr unsigned kMaxClassifyVars = 4;

/// Tries every permutation (lexicographic), every input polarity vector
/// (ascending as an n-bit integer, bit i for x_i) and both output polarities
/// (positive first). Returns the first T with applyNPTransform(f, T) == g.
/// Throws std::invalid_argument for n > kMaxOracleVars or mismatched arity.
std::optional<NPTransformation> exhaustiveMatch(const TruthTable &f,
                                                const TruthTable &g);

/// Calls `fn(T)` for every NP transformation over n variables in the
/// exhaustiveMatch order; stops early when `fn` returns false.
template <typename Fn> void forEachTransformation(unsigned n, Fn &&fn);

struct NPNClassification {
  unsigned numVars = 0;
  /// Minimum truth-table integer of every class, ascending.
  std::vector<uint64_t> representatives;
  /// Class index of every function, indexed by its truth-table integer.
  std::vector<uint32_t> classOf;

  size_t count() const { return representatives.size(); }
};

/// Partitions all 2^(2^n) functions into NPN classes. n <= kMaxClassifyVars.
NPNClassification enumerateNPNClasses(unsigned n);

enum class GeneratorKind { Type1Random, Type2Balanced };

/// "type1" / "type2".
std::string_view toString(GeneratorKind kind);
/// Accepts "type1" and "type2"; throws std::invalid_argument otherwise.
GeneratorKind parseGeneratorKind(std::string_view text);

/// Uniform integer in [0, bound) without modulo bias. Platform independent,
/// unlike std::uniform_int_distribution.
uint64_t uniformBelow(std::mt19937_64 &rng, uint64_t bound);

/// type1: every minterm present independently with probability 1/2.
/// type2: exactly 2^(n-1) minterms, uniformly chosen.
TruthTable randomFunction(unsigned n, GeneratorKind kind, std::mt19937_64 &rng);
TruthTable randomFunction(unsigned n, GeneratorKind kind, uint64_t seed);

/// Uniformly random permutation, input polarities and output polarity.
NPTransformation randomTransformation(unsigned n, std::mt19937_64 &rng);

struct EquivalentPair {
  TruthTable f;
  TruthTable g;
  /// g == applyNPTransform(f, hidden).
  NPTransformation hidden;
};

EquivalentPair randomEquivalentPair(unsigned n, GeneratorKind kind,
                                    uint64_t seed);

//===----------------------------------------------------------------------===//

template <typename Fn> void forEachTransformation(unsigned n, Fn &&fn) {
  NPTransformation t = NPTransformation::identity(n);
  do {
    for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
      for (unsigned i = 0; i < n; ++i)
        t.inputPol[i] = (mask >> i) & 1 ? Polarity::Negative : Polarity::Positive;
      for (Polarity out : {Polarity::Positive, Polarity::Negative}) {
        t.outputPol = out;
        if (!fn(static_cast<const NPTransformation &>(t)))
          return;
      }
    }
  } while (std::next_permutation(t.perm.begin(), t.perm.end()));
}

} // namespace npn
