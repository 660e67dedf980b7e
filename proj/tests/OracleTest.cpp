// SPDX-License-Identifier: Apache-2.0

#include "npnmatch/Oracle.h"
#include "support/Reference.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>

using namespace npn;

TEST(OracleTest, ExhaustiveMatchExamples) {
  TruthTable f1 = ref::sop(3, "~x0~x1x2 + x0~x1~x2");
  TruthTable g1 = ref::sop(3, "~x0x1x2 + x0x1~x2");
  auto t = exhaustiveMatch(f1, g1);
  ASSERT_TRUE(t);
  EXPECT_EQ(ref::apply(f1, *t), g1);

  TruthTable f2 = ref::sop(3, "x0~x1 + ~x1x2 + ~x0x1~x2");
  TruthTable h2 = ref::sop(3, "x0~x1 + x0x2 + ~x1x2");
  EXPECT_FALSE(exhaustiveMatch(f2, h2));

  TruthTable x = ref::sop(2, "x0~x1 + ~x0x1");
  auto tx = exhaustiveMatch(x, negate(x));
  ASSERT_TRUE(tx);
  EXPECT_EQ(tx->perm, (std::vector<unsigned>{0, 1}));
  EXPECT_EQ(tx->outputPol, Polarity::Negative);
}

TEST(OracleTest, FirstWitnessInEnumerationOrder) {
  TruthTable f = ref::sop(3, "x0x1 + x2");
  // Order: permutations lexicographically, polarity vectors ascending,
  // positive output first. Find the first match by brute force here.
  TruthTable g = ref::sop(3, "~x2x1 + x0");
  std::optional<NPTransformation> want;
  forEachTransformation(3, [&](const NPTransformation &t) {
    if (ref::apply(f, t) == g) {
      want = t;
      return false;
    }
    return true;
  });
  ASSERT_TRUE(want);
  EXPECT_EQ(exhaustiveMatch(f, g), want);
}

TEST(OracleTest, Guards) {
  EXPECT_THROW(exhaustiveMatch(TruthTable(9), TruthTable(9)), std::invalid_argument);
  EXPECT_THROW(exhaustiveMatch(TruthTable(3), TruthTable(4)), std::invalid_argument);
  EXPECT_THROW(enumerateNPNClasses(5), std::invalid_argument);
}

TEST(OracleTest, TransformationCount) {
  size_t count = 0;
  forEachTransformation(4, [&](const NPTransformation &) {
    ++count;
    return true;
  });
  EXPECT_EQ(count, 24u * 16u * 2u);
}

TEST(OracleTest, ClassCounts) {
  EXPECT_EQ(enumerateNPNClasses(0).count(), 1u);
  EXPECT_EQ(enumerateNPNClasses(1).count(), 2u);
  EXPECT_EQ(enumerateNPNClasses(2).count(), 4u);
  EXPECT_EQ(enumerateNPNClasses(3).count(), 14u);
  NPNClassification c4 = enumerateNPNClasses(4);
  EXPECT_EQ(c4.count(), 222u);
  EXPECT_TRUE(std::is_sorted(c4.representatives.begin(), c4.representatives.end()));
  for (size_t k = 0; k < c4.count(); ++k)
    EXPECT_EQ(c4.classOf[c4.representatives[k]], k);
}

TEST(OracleTest, CanonicalizationConsistentWithMatching) {
  NPNClassification c3 = enumerateNPNClasses(3);
  for (uint64_t a = 0; a < 256; a += 3)
    for (uint64_t b = 0; b < 256; b += 5) {
      bool same = c3.classOf[a] == c3.classOf[b];
      EXPECT_EQ(same, exhaustiveMatch(TruthTable(3, {a}), TruthTable(3, {b})).has_value());
    }
}

TEST(OracleTest, RandomFunctionKinds) {
  for (uint64_t seed = 0; seed < 20; ++seed)
    EXPECT_EQ(countMinterms(randomFunction(7, GeneratorKind::Type2Balanced, seed)), 64u);
  EXPECT_EQ(randomFunction(10, GeneratorKind::Type1Random, 42),
            randomFunction(10, GeneratorKind::Type1Random, 42));
  EXPECT_NE(randomFunction(10, GeneratorKind::Type1Random, 42),
            randomFunction(10, GeneratorKind::Type1Random, 43));
  EXPECT_EQ(randomFunction(3, GeneratorKind::Type2Balanced, 9),
            randomFunction(3, GeneratorKind::Type2Balanced, 9));

  // Mean of 1000 type1 samples at n = 12: sigma of the mean is
  // sqrt(4096 / 4) / sqrt(1000).
  double sum = 0;
  for (uint64_t seed = 0; seed < 1000; ++seed)
    sum += countMinterms(randomFunction(12, GeneratorKind::Type1Random, seed));
  double sigma = std::sqrt(4096.0 / 4) / std::sqrt(1000.0);
  EXPECT_LT(std::abs(sum / 1000 - 2048), 3 * sigma);
}

TEST(OracleTest, GeneratorKindNames) {
  EXPECT_EQ(parseGeneratorKind("type1"), GeneratorKind::Type1Random);
  EXPECT_EQ(parseGeneratorKind("type2"), GeneratorKind::Type2Balanced);
  EXPECT_EQ(toString(GeneratorKind::Type2Balanced), "type2");
  EXPECT_THROW(parseGeneratorKind("type3"), std::invalid_argument);
}

TEST(OracleTest, UniformBelowCoversRange) {
  std::mt19937_64 rng(1);
  std::set<uint64_t> seen;
  for (int k = 0; k < 500; ++k) {
    uint64_t v = uniformBelow(rng, 7);
    ASSERT_LT(v, 7u);
    seen.insert(v);
  }
  EXPECT_EQ(seen.size(), 7u);
  EXPECT_THROW(uniformBelow(rng, 0), std::invalid_argument);
}

TEST(OracleTest, EquivalentPairs) {
  for (uint64_t seed = 0; seed < 30; ++seed) {
    EquivalentPair p = randomEquivalentPair(4, GeneratorKind::Type1Random, seed);
    EXPECT_TRUE(p.hidden.isValid());
    EXPECT_EQ(ref::apply(p.f, p.hidden), p.g);
    EXPECT_TRUE(exhaustiveMatch(p.f, p.g));
  }
  EquivalentPair q = randomEquivalentPair(9, GeneratorKind::Type2Balanced, 5);
  EXPECT_EQ(applyNPTransform(q.g, inverse(q.hidden)), q.f);
}

TEST(OracleTest, IdentityTransformationKeepsFunction) {
  TruthTable f = randomFunction(6, GeneratorKind::Type1Random, 3);
  EXPECT_EQ(applyNPTransform(f, NPTransformation::identity(6)), f);
}
