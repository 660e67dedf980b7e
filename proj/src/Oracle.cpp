// SPDX-License-Identifier: Apache-2.0

#include "npnmatch/Oracle.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

using namespace npn;

std::optional<NPTransformation> npn::exhaustiveMatch(const TruthTable &f,
                                                     const TruthTable &g) {
  unsigned n = f.numVars();
  if (n != g.numVars())
    throw std::invalid_argument("exhaustiveMatch: arity mismatch");
  if (n > kMaxOracleVars)
    throw std::invalid_argument("exhaustiveMatch: " + std::to_string(n) +
                                " variables exceeds the brute-force limit of " +
                                std::to_string(kMaxOracleVars));
  if (countMinterms(f) != countMinterms(g) &&
      countMinterms(f) != f.numBits() - countMinterms(g))
    return std::nullopt;

  // The sorted first-order values are invariant under NP transformations up
  // to swapping each pair; cheap to compare before the full enumeration.
  auto profile = [](const TruthTable &h) {
    std::vector<std::pair<uint64_t, uint64_t>> out;
    for (const CofactorCounts &c : cofactorCounts(h))
      out.push_back(std::minmax(c.pos, c.neg));
    std::sort(out.begin(), out.end());
    return out;
  };
  TruthTable notG = negate(g);
  auto pf = profile(f);
  if (pf != profile(g) && pf != profile(notG))
    return std::nullopt;

  // flipped[mask] is the permuted table with inputs in `mask` complemented,
  // built from the entry with the lowest bit of mask cleared.
  std::vector<TruthTable> flipped(uint64_t{1} << n);
  NPTransformation t = NPTransformation::identity(n);
  do {
    flipped[0] = applyNPTransform(f, t);
    for (uint64_t mask = 0; mask < flipped.size(); ++mask) {
      if (mask) {
        unsigned low = std::countr_zero(mask);
        flipped[mask] = flipped[mask & (mask - 1)].flipVar(t.perm[low]);
      }
      const TruthTable &h = flipped[mask];
      bool direct = h == g;
      if (!direct && h != notG)
        continue;
      NPTransformation w = t;
      for (unsigned i = 0; i < n; ++i)
        w.inputPol[i] = (mask >> i) & 1 ? Polarity::Negative : Polarity::Positive;
      w.outputPol = direct ? Polarity::Positive : Polarity::Negative;
      return w;
    }
  } while (std::next_permutation(t.perm.begin(), t.perm.end()));
  return std::nullopt;
}

NPNClassification npn::enumerateNPNClasses(unsigned n) {
  if (n > kMaxClassifyVars)
    throw std::invalid_argument("enumerateNPNClasses: " + std::to_string(n) +
                                " variables exceeds the limit of " +
                                std::to_string(kMaxClassifyVars));
  NPNClassification out;
  out.numVars = n;
  uint64_t numFunctions = uint64_t{1} << (uint64_t{1} << n);
  constexpr uint32_t kUnseen = ~uint32_t{0};
  out.classOf.assign(numFunctions, kUnseen);

  std::vector<NPTransformation> all;
  forEachTransformation(n, [&](const NPTransformation &t) {
    all.push_back(t);
    return true;
  });

  for (uint64_t v = 0; v < numFunctions; ++v) {
    if (out.classOf[v] != kUnseen)
      continue;
    auto id = static_cast<uint32_t>(out.representatives.size());
    out.representatives.push_back(v);
    TruthTable f(n, {v});
    for (const NPTransformation &t : all)
      out.classOf[applyNPTransform(f, t).words()[0]] = id;
  }
  return out;
}

std::string_view npn::toString(GeneratorKind kind) {
  return kind == GeneratorKind::Type1Random ? "type1" : "type2";
}

GeneratorKind npn::parseGeneratorKind(std::string_view text) {
  if (text == "type1")
    return GeneratorKind::Type1Random;
  if (text == "type2")
    return GeneratorKind::Type2Balanced;
  throw std::invalid_argument("unknown generator kind '" + std::string(text) +
                              "' (expected type1 or type2)");
}

uint64_t npn::uniformBelow(std::mt19937_64 &rng, uint64_t bound) {
  if (bound == 0)
    throw std::invalid_argument("uniformBelow: empty range");
  uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    uint64_t r = rng();
    if (r >= threshold)
      return r % bound;
  }
}

TruthTable npn::randomFunction(unsigned n, GeneratorKind kind,
                               std::mt19937_64 &rng) {
  if (n > kMaxVars)
    throw std::invalid_argument("randomFunction: too many variables");
  std::vector<uint64_t> words(TruthTable::wordCount(n), 0);
  uint64_t bits = uint64_t{1} << n;

  if (kind == GeneratorKind::Type1Random) {
    for (uint64_t &w : words)
      w = rng();
    if (n < 6)
      words[0] &= (uint64_t{1} << bits) - 1;
    return TruthTable(n, std::move(words));
  }

  // Partial Fisher-Yates: the first half of a shuffled minterm list.
  std::vector<uint32_t> minterms(bits);
  std::iota(minterms.begin(), minterms.end(), 0u);
  uint64_t half = bits / 2;
  for (uint64_t k = 0; k < half; ++k) {
    uint64_t pick = k + uniformBelow(rng, bits - k);
    std::swap(minterms[k], minterms[pick]);
    words[minterms[k] >> 6] |= uint64_t{1} << (minterms[k] & 63);
  }
  return TruthTable(n, std::move(words));
}

TruthTable npn::randomFunction(unsigned n, GeneratorKind kind, uint64_t seed) {
  std::mt19937_64 rng(seed);
  return randomFunction(n, kind, rng);
}

NPTransformation npn::randomTransformation(unsigned n, std::mt19937_64 &rng) {
  NPTransformation t = NPTransformation::identity(n);
  for (unsigned k = n; k > 1; --k)
    std::swap(t.perm[k - 1], t.perm[uniformBelow(rng, k)]);
  for (Polarity &p : t.inputPol)
    p = rng() & 1 ? Polarity::Negative : Polarity::Positive;
  t.outputPol = rng() & 1 ? Polarity::Negative : Polarity::Positive;
  return t;
}

EquivalentPair npn::randomEquivalentPair(unsigned n, GeneratorKind kind,
                                         uint64_t seed) {
  std::mt19937_64 rng(seed);
  TruthTable f = randomFunction(n, kind, rng);
  NPTransformation t = randomTransformation(n, rng);
  TruthTable g = applyNPTransform(f, t);
  return {std::move(f), std::move(g), std::move(t)};
}
