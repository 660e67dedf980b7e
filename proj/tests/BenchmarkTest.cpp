// SPDX-License-Identifier: Apache-2.0

#include "npnmatch/Benchmark.h"

#include <gtest/gtest.h>

#include <sstream>

using namespace npn;

namespace {

/// CSV with the three timing columns removed.
std::string withoutTimings(const std::string &csv) {
  std::istringstream in(csv);
  std::string line, out;
  while (std::getline(in, line)) {
    size_t cut = line.find(',');
    for (int k = 0; k < 3 && cut != std::string::npos; ++k)
      cut = line.find(',', cut + 1);
    out += line.substr(0, cut) + "\n";
  }
  return out;
}

} // namespace

TEST(BenchmarkTest, EquivalentModeReport) {
  BenchConfig config;
  config.minVars = 7;
  config.maxVars = 10;
  config.pairs = 50;
  config.kind = GeneratorKind::Type2Balanced;
  config.seed = 11;
  BenchReport report = runBenchmark(config);
  ASSERT_EQ(report.rows.size(), 4u);
  for (unsigned k = 0; k < 4; ++k) {
    const BenchRow &row = report.rows[k];
    EXPECT_EQ(row.n, 7 + k);
    EXPECT_EQ(row.pairs, 50u);
    EXPECT_EQ(row.unexpectedVerdicts, 0u);
    EXPECT_LE(row.minSeconds, row.avgSeconds);
    EXPECT_LE(row.avgSeconds, row.maxSeconds);
  }
  std::string csv = report.toCsv();
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "n,mode,kind,pairs,min_s,max_s,avg_s");
  EXPECT_EQ(withoutTimings(csv), "n,mode,kind,pairs\n7,equiv,type2,50\n"
                                 "8,equiv,type2,50\n9,equiv,type2,50\n"
                                 "10,equiv,type2,50\n");
}

TEST(BenchmarkTest, NonEquivalentMode) {
  BenchConfig config;
  config.minVars = 2;
  config.maxVars = 9;
  config.pairs = 5;
  config.mode = BenchMode::NonEquivalent;
  config.seed = 3;
  BenchReport report = runBenchmark(config);
  for (const BenchRow &row : report.rows)
    EXPECT_EQ(row.unexpectedVerdicts, 0u) << "n=" << row.n;
}

TEST(BenchmarkTest, NonEquivalentPairsShareZerothOrder) {
  std::mt19937_64 rng(8);
  for (unsigned n : {2u, 4u, 8u, 12u}) {
    for (GeneratorKind kind : {GeneratorKind::Type1Random, GeneratorKind::Type2Balanced}) {
      FunctionPair p = randomNonEquivalentPair(n, kind, rng);
      uint64_t cf = countMinterms(p.f), cg = countMinterms(p.g);
      EXPECT_TRUE(cf == cg || cf == p.f.numBits() - cg);
      EXPECT_EQ(matchNPN(p.f, p.g).verdict, Verdict::NonEquivalent);
      if (n <= kMaxOracleVars)
        EXPECT_FALSE(exhaustiveMatch(p.f, p.g));
    }
  }
}

TEST(BenchmarkTest, DeterministicApartFromTimings) {
  BenchConfig config;
  config.minVars = 5;
  config.maxVars = 8;
  config.pairs = 6;
  config.mode = BenchMode::NonEquivalent;
  config.seed = 99;
  EXPECT_EQ(withoutTimings(runBenchmark(config).toCsv()),
            withoutTimings(runBenchmark(config).toCsv()));
  EXPECT_EQ(runBenchmark(config).rows[2].nodesVisited,
            runBenchmark(config).rows[2].nodesVisited);
}

TEST(BenchmarkTest, ConfigValidation) {
  BenchConfig config;
  config.minVars = 1;
  EXPECT_THROW(runBenchmark(config), std::invalid_argument);
  config.minVars = 9;
  config.maxVars = 8;
  EXPECT_THROW(runBenchmark(config), std::invalid_argument);
  config.maxVars = 23;
  EXPECT_THROW(validate(config), std::invalid_argument);
  config.minVars = 7;
  config.maxVars = 7;
  config.pairs = 0;
  EXPECT_THROW(validate(config), std::invalid_argument);
  EXPECT_EQ(parseBenchMode("nonequiv"), BenchMode::NonEquivalent);
  EXPECT_THROW(parseBenchMode("both"), std::invalid_argument);
}

TEST(BenchmarkTest, ClassifyByMatchingAgreesWithOracle) {
  for (unsigned n = 0; n <= 3; ++n) {
    NPNClassification a = classifyByMatching(n), b = enumerateNPNClasses(n);
    EXPECT_EQ(a.representatives, b.representatives);
    EXPECT_EQ(a.classOf, b.classOf);
  }
  EXPECT_THROW(classifyByMatching(5), std::invalid_argument);
}
