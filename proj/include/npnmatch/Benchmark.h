// SPDX-License-Identifier: Apache-2.0
//
// Random-pair benchmark harness and matcher-driven classification.
//
#pragma once

#include "npnmatch/Matcher.h"
#include "npnmatch/Oracle.h"

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace npn {

enum class BenchMode { Equivalent, NonEquivalent };

/// "equiv" / "nonequiv".
std::string_view toString(BenchMode mode);
BenchMode parseBenchMode(std::string_view text);

struct BenchConfig {
  unsigned minVars = 7;
  unsigned maxVars = 7;
  unsigned pairs = 10;
  BenchMode mode = BenchMode::Equivalent;
  GeneratorKind kind = GeneratorKind::Type1Random;
  uint64_t seed = 1;
  /// Time one extra, unreported pair per n first.
  bool warmup = true;
  uint64_t nodeCap = 0;
};

/// Throws std::invalid_argument unless 2 <= minVars <= maxVars <= kMaxVars
/// and pairs >= 1.
void validate(const BenchConfig &config);

struct BenchRow {
  unsigned n = 0;
  BenchMode mode = BenchMode::Equivalent;
  GeneratorKind kind = GeneratorKind::Type1Random;
  unsigned pairs = 0;
  double minSeconds = 0;
  double maxSeconds = 0;
  double avgSeconds = 0;
  /// Timed pairs whose verdict disagrees with how the pair was built.
  unsigned unexpectedVerdicts = 0;
  uint64_t nodesVisited = 0;
};

struct BenchReport {
  std::vector<BenchRow> rows;

  /// Header `n,mode,kind,pairs,min_s,max_s,avg_s`, one row per n.
  std::string toCsv() const;
};

struct FunctionPair {
  TruthTable f;
  TruthTable g;
};

/// Independent random functions with equal or complementary minterm counts
/// that are not NPN-equivalent. Equivalence is ruled out by the brute-force
/// oracle up to kMaxOracleVars and by the matcher above it.
FunctionPair randomNonEquivalentPair(unsigned n, GeneratorKind kind,
                                     std::mt19937_64 &rng);

/// Builds the pair of one benchmark slot. Equivalent pairs come from
/// randomEquivalentPair(n, kind, pairSeed).
FunctionPair benchmarkPair(unsigned n, BenchMode mode, GeneratorKind kind,
                           uint64_t pairSeed);

BenchReport runBenchmark(const BenchConfig &config);

/// Partitions all functions of n <= kMaxClassifyVars variables by running
/// matchNPN against the representatives found so far. Representatives are
/// the smallest truth-table integers of their classes.
NPNClassification classifyByMatching(unsigned n);

} // namespace npn
