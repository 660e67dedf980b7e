// SPDX-License-Identifier: Apache-2.0

#include "npnmatch/TruthTable.h"

#include <bit>
#include <stdexcept>
#include <string>

using namespace npn;

namespace {

// Positions of minterms with x_i = 1 inside one 64-bit word, i < 6.
constexpr uint64_t kProjection[6] = {
    0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
    0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};

uint64_t tailMask(unsigned numVars) {
  if (numVars >= 6)
    return ~uint64_t{0};
  return (uint64_t{1} << (1u << numVars)) - 1;
}

void checkVar(const TruthTable &f, unsigned var, const char *what) {
  if (var >= f.numVars())
    throw std::out_of_range(std::string(what) + ": variable " +
                            std::to_string(var) + " out of range for " +
                            std::to_string(f.numVars()) + "-input function");
}

} // namespace

//===----------------------------------------------------------------------===//
// Cube
//===----------------------------------------------------------------------===//

Cube::Cube(std::initializer_list<Literal> literals) {
  for (const Literal &lit : literals)
    push(lit);
}

Cube::Cube(std::vector<Literal> literals) {
  for (const Literal &lit : literals)
    push(lit);
}

void Cube::push(Literal lit) {
  if (lit.var >= 32)
    throw std::invalid_argument("cube literal variable out of range");
  if (contains(lit.var))
    throw std::invalid_argument("cube already constrains x" +
                                std::to_string(lit.var));
  literals_.push_back(lit);
  mask_ |= uint32_t{1} << lit.var;
}

//===----------------------------------------------------------------------===//
// TruthTable
//===----------------------------------------------------------------------===//

TruthTable::TruthTable(unsigned numVars) : numVars_(numVars) {
  if (numVars > kMaxVars)
    throw std::invalid_argument("truth tables support at most " +
                                std::to_string(kMaxVars) + " variables");
  words_.assign(wordCount(numVars), 0);
}

TruthTable::TruthTable(unsigned numVars, std::vector<uint64_t> words)
    : numVars_(numVars), words_(std::move(words)) {
  if (numVars > kMaxVars)
    throw std::invalid_argument("truth tables support at most " +
                                std::to_string(kMaxVars) + " variables");
  if (words_.size() != wordCount(numVars))
    throw std::invalid_argument("word count does not match variable count");
  if (words_[0] & ~tailMask(numVars))
    throw std::invalid_argument("bits set beyond 2^n in truth table");
}

TruthTable TruthTable::constant(unsigned numVars, bool value) {
  TruthTable t(numVars);
  if (value) {
    for (uint64_t &w : t.words_)
      w = ~uint64_t{0};
    t.clearTail();
  }
  return t;
}

TruthTable TruthTable::variable(unsigned numVars, unsigned var) {
  TruthTable t(numVars);
  checkVar(t, var, "variable");
  if (var < 6) {
    for (uint64_t &w : t.words_)
      w = kProjection[var];
    t.clearTail();
  } else {
    size_t step = size_t{1} << (var - 6);
    for (size_t k = 0; k < t.words_.size(); ++k)
      if (k & step)
        t.words_[k] = ~uint64_t{0};
  }
  return t;
}

bool TruthTable::isConstant() const {
  uint64_t first = words_[0] & 1u ? tailMask(numVars_) : 0;
  for (uint64_t w : words_)
    if (w != first)
      return false;
  return true;
}

void TruthTable::clearTail() { words_[0] &= tailMask(numVars_); }

TruthTable TruthTable::swapVars(unsigned i, unsigned j) const {
  checkVar(*this, i, "swapVars");
  checkVar(*this, j, "swapVars");
  TruthTable r = *this;
  r.swapInPlace(i, j);
  return r;
}

TruthTable TruthTable::flipVar(unsigned i) const {
  checkVar(*this, i, "flipVar");
  TruthTable r = *this;
  r.flipInPlace(i);
  return r;
}

TruthTable TruthTable::fixVar(unsigned i, bool value) const {
  checkVar(*this, i, "fixVar");
  TruthTable r = *this;
  r.fixInPlace(i, value);
  return r;
}

void TruthTable::swapInPlace(unsigned i, unsigned j) {
  if (i == j)
    return;
  if (i > j)
    std::swap(i, j);
  bool bi = (bound_ >> i) & 1u, bj = (bound_ >> j) & 1u;
  if (bi != bj)
    bound_ ^= (uint32_t{1} << i) | (uint32_t{1} << j);

  std::vector<uint64_t> &w = words_;
  if (j < 6) {
    unsigned shift = (1u << j) - (1u << i);
    uint64_t low = kProjection[i] & ~kProjection[j];
    uint64_t high = low << shift;
    for (uint64_t &x : w)
      x = (x & ~(low | high)) | ((x & low) << shift) | ((x >> shift) & low);
  } else if (i < 6) {
    size_t step = size_t{1} << (j - 6);
    unsigned s = 1u << i;
    uint64_t p = kProjection[i];
    for (size_t k = 0; k < w.size(); ++k) {
      if (k & step)
        continue;
      uint64_t a = w[k], b = w[k + step];
      w[k] = (a & ~p) | ((b & ~p) << s);
      w[k + step] = (b & p) | ((a & p) >> s);
    }
  } else {
    size_t si = size_t{1} << (i - 6), sj = size_t{1} << (j - 6);
    for (size_t k = 0; k < w.size(); ++k)
      if ((k & si) && !(k & sj))
        std::swap(w[k], w[k - si + sj]);
  }
}

void TruthTable::flipInPlace(unsigned i) {
  std::vector<uint64_t> &w = words_;
  if (i < 6) {
    unsigned s = 1u << i;
    uint64_t p = kProjection[i];
    for (uint64_t &x : w)
      x = ((x & p) >> s) | ((x & ~p) << s);
    clearTail();
  } else {
    size_t step = size_t{1} << (i - 6);
    for (size_t k = 0; k < w.size(); ++k)
      if (!(k & step))
        std::swap(w[k], w[k + step]);
  }
}

void TruthTable::fixInPlace(unsigned i, bool value) {
  bound_ |= uint32_t{1} << i;
  std::vector<uint64_t> &w = words_;
  if (i < 6) {
    unsigned s = 1u << i;
    uint64_t p = kProjection[i];
    for (uint64_t &x : w)
      x = value ? (x & p) | ((x & p) >> s) : (x & ~p) | ((x & ~p) << s);
    clearTail();
  } else {
    size_t step = size_t{1} << (i - 6);
    for (size_t k = 0; k < w.size(); ++k) {
      if (k & step)
        continue;
      if (value)
        w[k] = w[k + step];
      else
        w[k + step] = w[k];
    }
  }
}

//===----------------------------------------------------------------------===//
// NPTransformation
//===----------------------------------------------------------------------===//

NPTransformation NPTransformation::identity(unsigned numVars) {
  NPTransformation t;
  t.perm.resize(numVars);
  for (unsigned i = 0; i < numVars; ++i)
    t.perm[i] = i;
  t.inputPol.assign(numVars, Polarity::Positive);
  return t;
}

bool NPTransformation::isValid() const {
  if (inputPol.size() != perm.size())
    return false;
  std::vector<bool> seen(perm.size(), false);
  for (unsigned p : perm) {
    if (p >= perm.size() || seen[p])
      return false;
    seen[p] = true;
  }
  return true;
}

NPTransformation npn::compose(const NPTransformation &first,
                              const NPTransformation &second) {
  if (first.size() != second.size())
    throw std::invalid_argument("compose: transformation sizes differ");
  unsigned n = first.size();
  NPTransformation r;
  r.perm.resize(n);
  r.inputPol.resize(n);
  for (unsigned i = 0; i < n; ++i) {
    unsigned mid = first.perm[i];
    r.perm[i] = second.perm[mid];
    bool negated = (first.inputPol[i] == Polarity::Negative) !=
                   (second.inputPol[mid] == Polarity::Negative);
    r.inputPol[i] = negated ? Polarity::Negative : Polarity::Positive;
  }
  r.outputPol = first.outputPol == second.outputPol ? Polarity::Positive
                                                    : Polarity::Negative;
  return r;
}

NPTransformation npn::inverse(const NPTransformation &t) {
  unsigned n = t.size();
  NPTransformation r;
  r.perm.resize(n);
  r.inputPol.resize(n);
  for (unsigned i = 0; i < n; ++i) {
    r.perm[t.perm[i]] = i;
    r.inputPol[t.perm[i]] = t.inputPol[i];
  }
  r.outputPol = t.outputPol;
  return r;
}

//===----------------------------------------------------------------------===//
// Kernel operations
//===----------------------------------------------------------------------===//

uint64_t npn::countMinterms(const TruthTable &f) {
  uint64_t total = 0;
  for (uint64_t w : f.words())
    total += std::popcount(w);
  return total >> std::popcount(f.boundVars());
}

namespace {

struct CubeFilter {
  uint64_t lowMask;
  size_t highCare = 0;
  size_t highValue = 0;
};

CubeFilter makeFilter(const TruthTable &f, const Cube &cube) {
  CubeFilter filter{tailMask(f.numVars())};
  for (const Literal &lit : cube.literals()) {
    checkVar(f, lit.var, "cube");
    bool positive = lit.pol == Polarity::Positive;
    if (lit.var < 6) {
      filter.lowMask &= positive ? kProjection[lit.var] : ~kProjection[lit.var];
    } else {
      size_t bit = size_t{1} << (lit.var - 6);
      filter.highCare |= bit;
      if (positive)
        filter.highValue |= bit;
    }
  }
  return filter;
}

} // namespace

uint64_t npn::countMinterms(const TruthTable &f, const Cube &cube) {
  CubeFilter filter = makeFilter(f, cube);
  std::span<const uint64_t> w = f.words();
  uint64_t total = 0;
  for (size_t k = 0; k < w.size(); ++k)
    if ((k & filter.highCare) == filter.highValue)
      total += std::popcount(w[k] & filter.lowMask);
  return total >> std::popcount(f.boundVars() & ~cube.varMask());
}

std::vector<CofactorCounts> npn::cofactorCounts(const TruthTable &f,
                                                const Cube &cube) {
  unsigned n = f.numVars();
  CubeFilter filter = makeFilter(f, cube);
  std::span<const uint64_t> w = f.words();
  unsigned lowVars = n < 6 ? n : 6;

  std::vector<uint64_t> positive(n, 0);
  uint64_t total = 0;
  for (size_t k = 0; k < w.size(); ++k) {
    if ((k & filter.highCare) != filter.highValue)
      continue;
    uint64_t h = w[k] & filter.lowMask;
    if (!h)
      continue;
    uint64_t c = std::popcount(h);
    total += c;
    for (unsigned i = 0; i < lowVars; ++i)
      positive[i] += std::popcount(h & kProjection[i]);
    for (size_t bits = k; bits; bits &= bits - 1)
      positive[6 + std::countr_zero(bits)] += c;
  }

  unsigned shift = std::popcount(f.boundVars() & ~cube.varMask());
  std::vector<CofactorCounts> counts(n);
  for (unsigned i = 0; i < n; ++i) {
    if (cube.contains(i))
      continue;
    counts[i].pos = positive[i] >> shift;
    counts[i].neg = (total - positive[i]) >> shift;
  }
  return counts;
}

TruthTable npn::cofactor(const TruthTable &f, const Cube &cube) {
  TruthTable r = f;
  for (const Literal &lit : cube.literals()) {
    checkVar(f, lit.var, "cofactor");
    if ((r.boundVars() >> lit.var) & 1u)
      throw std::invalid_argument("cofactor: x" + std::to_string(lit.var) +
                                  " is already bound");
    r.fixInPlace(lit.var, lit.pol == Polarity::Positive);
  }
  return r;
}

TruthTable npn::negate(const TruthTable &f) {
  TruthTable r = f;
  for (uint64_t &w : r.words_)
    w = ~w;
  r.clearTail();
  return r;
}

TruthTable npn::applyNPTransform(const TruthTable &f,
                                 const NPTransformation &t) {
  unsigned n = f.numVars();
  if (t.size() != n)
    throw std::invalid_argument("applyNPTransform: transformation has " +
                                std::to_string(t.size()) +
                                " entries, function has " +
                                std::to_string(n) + " inputs");
  if (!t.isValid())
    throw std::invalid_argument("applyNPTransform: perm is not a bijection");

  TruthTable r = f;
  for (unsigned i = 0; i < n; ++i)
    if (t.inputPol[i] == Polarity::Negative)
      r.flipInPlace(i);

  // Move original variable v to position perm[v] by transpositions.
  std::vector<unsigned> loc(n), at(n), source(n);
  for (unsigned i = 0; i < n; ++i) {
    loc[i] = at[i] = i;
    source[t.perm[i]] = i;
  }
  for (unsigned p = 0; p < n; ++p) {
    unsigned v = source[p];
    unsigned q = loc[v];
    if (q == p)
      continue;
    r.swapInPlace(p, q);
    unsigned u = at[p];
    loc[u] = q;
    at[q] = u;
    loc[v] = p;
    at[p] = v;
  }

  if (t.outputPol == Polarity::Negative) {
    for (uint64_t &w : r.words_)
      w = ~w;
    r.clearTail();
  }
  return r;
}

bool npn::equal(const TruthTable &f, const TruthTable &g) {
  if (f.numVars() != g.numVars())
    throw std::invalid_argument("equal: arity mismatch (" +
                                std::to_string(f.numVars()) + " vs " +
                                std::to_string(g.numVars()) + ")");
  return f == g;
}
