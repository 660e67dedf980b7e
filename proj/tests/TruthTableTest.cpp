// SPDX-License-Identifier: Apache-2.0

#include "npnmatch/Oracle.h"
#include "npnmatch/TruthTable.h"
#include "support/Reference.h"

#include <gtest/gtest.h>

#include <random>

using namespace npn;

namespace {

TruthTable ex2f() { return ref::sop(3, "x0~x1 + ~x1x2 + ~x0x1~x2"); }
TruthTable ex7f() {
  return ref::sop(7, "~x0x2x5~x6 + ~x0x1x2~x3x6 + x1~x2~x3x6 + x0x4~x5 + "
                     "x0x2x5~x6 + x0x1x2~x3~x4x6 + x0x1x2~x3x4x5x6");
}
TruthTable ex7g() {
  return ref::sop(7, "~x0~x1~x2~x5 + ~x0~x1~x5x6 + ~x0~x1~x2x5~x6 + ~x0x1x3x4 + "
                     "~x0x1~x2x5~x6 + ~x0x1~x2~x5~x6 + x0x1x3x4 + x0~x1~x5x6");
}

/// Example 7's witness {2->5-1, 0->0-1, 4->2-1, 1->3-0, 3->4-1, 5->6-0,
/// 6->1-0}.
NPTransformation ex7T() {
  NPTransformation t;
  t.perm = {0, 3, 5, 4, 2, 6, 1};
  auto N = Polarity::Negative, P = Polarity::Positive;
  t.inputPol = {N, P, N, N, N, P, P};
  return t;
}

} // namespace

TEST(TruthTableTest, ConstructionAndEvaluation) {
  TruthTable zero(0);
  EXPECT_EQ(zero.numVars(), 0u);
  EXPECT_EQ(zero.numBits(), 1u);
  EXPECT_FALSE(zero.bit(0));
  EXPECT_TRUE(TruthTable::constant(0, true).bit(0));

  TruthTable andTT = TruthTable::fromFunction(2, [](uint64_t m) { return m == 3; });
  EXPECT_EQ(andTT.words()[0], 0x8u);
  for (uint64_t m = 0; m < 4; ++m)
    EXPECT_EQ(andTT.evaluate(m), m == 3);

  TruthTable x9 = TruthTable::variable(12, 9);
  for (uint64_t m = 0; m < x9.numBits(); m += 37)
    EXPECT_EQ(x9.bit(m), ((m >> 9) & 1) != 0);
}

TEST(TruthTableTest, ConstructionRejectsBadInput) {
  EXPECT_THROW(TruthTable(kMaxVars + 1), std::invalid_argument);
  EXPECT_THROW(TruthTable(7, {0}), std::invalid_argument);
  EXPECT_THROW(TruthTable(2, {0x10}), std::invalid_argument);
  EXPECT_THROW(Cube({pos(1), neg(1)}), std::invalid_argument);
}

TEST(TruthTableTest, CountMinterms) {
  EXPECT_EQ(countMinterms(ex2f()), 4u);
  EXPECT_EQ(countMinterms(TruthTable::constant(4, false)), 0u);
  EXPECT_EQ(countMinterms(ex7f()), 46u);
  EXPECT_EQ(countMinterms(TruthTable::constant(0, true)), 1u);
}

TEST(TruthTableTest, Cofactor) {
  TruthTable f = ex2f();
  TruthTable fx1 = cofactor(f, {pos(1)});
  EXPECT_EQ(countMinterms(fx1), 1u);
  EXPECT_TRUE(fx1.bit(0b010)); // x0 = 0, x2 = 0
  EXPECT_EQ(cofactor(f, {}), f);

  // Example 5 under x0: x1 reads (5, 6).
  TruthTable f5 = ref::fromHex(5, "b69a6ae0");
  TruthTable r = cofactor(f5, {pos(0)});
  EXPECT_EQ(countMinterms(r, {pos(1)}), 5u);
  EXPECT_EQ(countMinterms(r, {neg(1)}), 6u);
}

TEST(TruthTableTest, Negate) {
  EXPECT_EQ(negate(TruthTable::constant(3, false)), TruthTable::constant(3, true));
  EXPECT_EQ(countMinterms(negate(TruthTable::constant(3, false))), 8u);
  EXPECT_EQ(countMinterms(~ex7f()), 82u);
  for (unsigned n : {0u, 3u, 6u, 9u}) {
    TruthTable f = randomFunction(n, GeneratorKind::Type1Random, n);
    EXPECT_EQ(negate(negate(f)), f);
  }
}

TEST(TruthTableTest, ApplyMatchesDefinitionExamples) {
  // x0 -> !x2, x1 -> !x1, x2 -> !x0.
  TruthTable f = ref::sop(3, "~x0~x1x2 + x0~x1~x2");
  NPTransformation t{{2, 1, 0},
                     {Polarity::Negative, Polarity::Negative, Polarity::Negative},
                     Polarity::Positive};
  EXPECT_EQ(applyNPTransform(f, t), ref::sop(3, "~x0x1x2 + x0x1~x2"));
  EXPECT_EQ(applyNPTransform(f, NPTransformation::identity(3)), f);
  EXPECT_EQ(applyNPTransform(ex7f(), ex7T()), ex7g());
  EXPECT_TRUE(equal(applyNPTransform(ex7f(), ex7T()), ex7g()));
}

TEST(TruthTableTest, EqualChecksArity) {
  TruthTable f = ex2f();
  EXPECT_TRUE(equal(f, f));
  EXPECT_FALSE(equal(f, negate(f)));
  EXPECT_THROW(equal(f, TruthTable(4)), std::invalid_argument);
}

TEST(TruthTableTest, ApplyRejectsWrongSize) {
  EXPECT_THROW(applyNPTransform(ex2f(), NPTransformation::identity(4)),
               std::invalid_argument);
  NPTransformation bad = NPTransformation::identity(3);
  bad.perm = {0, 0, 1};
  EXPECT_FALSE(bad.isValid());
  EXPECT_THROW(applyNPTransform(ex2f(), bad), std::invalid_argument);
}

class KernelProperty : public ::testing::TestWithParam<unsigned> {};

TEST_P(KernelProperty, SwapFlipFixMatchReference) {
  unsigned n = GetParam();
  std::mt19937_64 rng(100 + n);
  TruthTable f = randomFunction(n, GeneratorKind::Type1Random, rng);
  for (unsigned i = 0; i < n; ++i) {
    TruthTable flipped = f.flipVar(i);
    for (uint64_t m = 0; m < f.numBits(); ++m)
      ASSERT_EQ(flipped.bit(m), f.bit(m ^ (uint64_t{1} << i)));
    for (unsigned j = 0; j < n; ++j) {
      TruthTable swapped = f.swapVars(i, j);
      for (uint64_t m = 0; m < f.numBits(); ++m) {
        uint64_t bi = (m >> i) & 1, bj = (m >> j) & 1;
        uint64_t s = (m & ~((uint64_t{1} << i) | (uint64_t{1} << j))) |
                     (bi << j) | (bj << i);
        ASSERT_EQ(swapped.bit(m), f.bit(s)) << "i=" << i << " j=" << j;
      }
    }
    for (bool value : {false, true}) {
      TruthTable fixed = f.fixVar(i, value);
      for (uint64_t m = 0; m < f.numBits(); ++m) {
        uint64_t s = value ? m | (uint64_t{1} << i) : m & ~(uint64_t{1} << i);
        ASSERT_EQ(fixed.bit(m), f.bit(s));
      }
    }
  }
}

TEST_P(KernelProperty, ShannonExpansionAndCounts) {
  unsigned n = GetParam();
  TruthTable f = randomFunction(n, GeneratorKind::Type1Random, 7 * n + 1);
  uint64_t total = countMinterms(f);
  std::vector<CofactorCounts> counts = cofactorCounts(f);
  for (unsigned i = 0; i < n; ++i) {
    TruthTable hi = cofactor(f, {pos(i)}), lo = cofactor(f, {neg(i)});
    TruthTable xi = TruthTable::variable(n, i);
    TruthTable recombined = TruthTable::fromFunction(n, [&](uint64_t m) {
      return (xi.bit(m) && hi.bit(m)) || (!xi.bit(m) && lo.bit(m));
    });
    EXPECT_EQ(recombined, f);
    EXPECT_EQ(countMinterms(hi) + countMinterms(lo), total);
    EXPECT_EQ(counts[i].pos, ref::count(f, {{i, true}}));
    EXPECT_EQ(counts[i].neg, ref::count(f, {{i, false}}));
  }
}

TEST_P(KernelProperty, CubeCountsMatchReference) {
  unsigned n = GetParam();
  std::mt19937_64 rng(n);
  TruthTable f = randomFunction(n, GeneratorKind::Type1Random, rng);
  for (int trial = 0; trial < 8; ++trial) {
    Cube cube;
    std::vector<std::pair<unsigned, bool>> refCube;
    for (unsigned v = 0; v < n; ++v) {
      if (rng() % 3)
        continue;
      bool value = rng() & 1;
      cube.push({v, value ? Polarity::Positive : Polarity::Negative});
      refCube.emplace_back(v, value);
    }
    EXPECT_EQ(countMinterms(f, cube), ref::count(f, refCube));
    EXPECT_EQ(countMinterms(cofactor(f, cube)), ref::count(f, refCube));
    std::vector<CofactorCounts> counts = cofactorCounts(f, cube);
    for (unsigned i = 0; i < n; ++i) {
      if (cube.contains(i)) {
        EXPECT_EQ(counts[i], (CofactorCounts{0, 0}));
        continue;
      }
      auto withPos = refCube, withNeg = refCube;
      withPos.emplace_back(i, true);
      withNeg.emplace_back(i, false);
      EXPECT_EQ(counts[i].pos, ref::count(f, withPos));
      EXPECT_EQ(counts[i].neg, ref::count(f, withNeg));
    }
  }
}

TEST_P(KernelProperty, ApplyIsAGroupAction) {
  unsigned n = GetParam();
  std::mt19937_64 rng(31 * n);
  TruthTable f = randomFunction(n, GeneratorKind::Type1Random, rng);
  for (int trial = 0; trial < 6; ++trial) {
    NPTransformation a = randomTransformation(n, rng);
    NPTransformation b = randomTransformation(n, rng);
    TruthTable fa = applyNPTransform(f, a);
    EXPECT_EQ(fa, ref::apply(f, a));
    EXPECT_EQ(applyNPTransform(fa, b), applyNPTransform(f, compose(a, b)));
    EXPECT_EQ(applyNPTransform(fa, inverse(a)), f);
    uint64_t expected = a.outputPol == Polarity::Positive
                            ? countMinterms(f)
                            : f.numBits() - countMinterms(f);
    EXPECT_EQ(countMinterms(fa), expected);
  }
}

INSTANTIATE_TEST_SUITE_P(Arities, KernelProperty,
                         ::testing::Values(0u, 1u, 2u, 3u, 5u, 6u, 7u, 8u, 10u),
                         ::testing::PrintToStringParamName());

TEST(TruthTableTest, LargeTableKernel) {
  TruthTable f = randomFunction(20, GeneratorKind::Type1Random, 5);
  std::mt19937_64 rng(5);
  NPTransformation t = randomTransformation(20, rng);
  TruthTable g = applyNPTransform(f, t);
  EXPECT_EQ(applyNPTransform(g, inverse(t)), f);
  // Spot-check a few minterms against the definition.
  for (int k = 0; k < 200; ++k) {
    uint64_t m = rng() & (g.numBits() - 1), y = 0;
    for (unsigned i = 0; i < 20; ++i)
      y |= (((m >> t.perm[i]) & 1) ^ (t.inputPol[i] == Polarity::Negative))
           << i;
    EXPECT_EQ(g.bit(m), f.bit(y) != (t.outputPol == Polarity::Negative));
  }
}
