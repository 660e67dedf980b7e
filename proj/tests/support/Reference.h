// SPDX-License-Identifier: Apache-2.0
//
// Slow, obviously-correct reference computations used to cross-check the
// word-level kernel and the matcher. Everything here works one minterm at a
// time and shares no code with the library beyond the TruthTable container.
//
#pragma once

#include "npnmatch/TruthTable.h"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace npn::ref {

/// Sum of products such as "~x0x1 + x2". Variables are x<index>, `~` or `!`
/// complements the next literal.
inline TruthTable sop(unsigned n, std::string_view text) {
  struct Term {
    uint64_t care = 0, value = 0;
  };
  std::vector<Term> terms(1);
  bool negate = false;
  for (size_t i = 0; i < text.size();) {
    char c = text[i];
    if (c == ' ') {
      ++i;
    } else if (c == '+') {
      terms.emplace_back();
      ++i;
    } else if (c == '~' || c == '!') {
      negate = true;
      ++i;
    } else if (c == 'x') {
      size_t j = ++i;
      while (j < text.size() && text[j] >= '0' && text[j] <= '9')
        ++j;
      unsigned v = std::stoul(std::string(text.substr(i, j - i)));
      if (v >= n)
        throw std::invalid_argument("sop: variable out of range");
      terms.back().care |= uint64_t{1} << v;
      if (!negate)
        terms.back().value |= uint64_t{1} << v;
      negate = false;
      i = j;
    } else {
      throw std::invalid_argument("sop: unexpected character");
    }
  }
  return TruthTable::fromFunction(n, [&](uint64_t m) {
    for (const Term &t : terms)
      if ((m & t.care) == t.value)
        return true;
    return false;
  });
}

inline TruthTable fromHex(unsigned n, std::string_view hex) {
  std::vector<uint64_t> words(TruthTable::wordCount(n), 0);
  for (size_t k = 0; k < hex.size(); ++k) {
    char c = hex[hex.size() - 1 - k];
    uint64_t v = c <= '9' ? c - '0' : (c | 0x20) - 'a' + 10;
    words[(4 * k) >> 6] |= v << ((4 * k) & 63);
  }
  return TruthTable(n, std::move(words));
}

/// h(m) = f(y) ^ out with y_i = m_{perm[i]} ^ neg_i.
inline TruthTable apply(const TruthTable &f, const NPTransformation &t) {
  unsigned n = f.numVars();
  return TruthTable::fromFunction(n, [&](uint64_t m) {
    uint64_t y = 0;
    for (unsigned i = 0; i < n; ++i) {
      uint64_t b = (m >> t.perm[i]) & 1;
      if (t.inputPol[i] == Polarity::Negative)
        b ^= 1;
      y |= b << i;
    }
    return f.bit(y) != (t.outputPol == Polarity::Negative);
  });
}

/// Minterms of f inside the cube given as (var, value) pairs, counted over
/// the remaining free variables.
inline uint64_t count(const TruthTable &f,
                      const std::vector<std::pair<unsigned, bool>> &cube = {}) {
  uint64_t c = 0;
  for (uint64_t m = 0; m < f.numBits(); ++m) {
    bool inside = true;
    for (auto [v, value] : cube)
      inside &= (((m >> v) & 1) != 0) == value;
    c += inside && f.bit(m);
  }
  return c;
}

/// f restricted by x_i = a, x_j = b, as a function of the other variables.
inline std::vector<bool> restriction(const TruthTable &f, unsigned i, bool a,
                                     unsigned j, bool b) {
  std::vector<bool> out;
  for (uint64_t m = 0; m < f.numBits(); ++m)
    if ((((m >> i) & 1) != 0) == a && (((m >> j) & 1) != 0) == b)
      out.push_back(f.bit(m));
  return out;
}

/// f_{x_i !x_j} == f_{!x_i x_j}
inline bool identicalSymmetric(const TruthTable &f, unsigned i, unsigned j) {
  return restriction(f, i, true, j, false) == restriction(f, i, false, j, true);
}

/// f_{x_i x_j} == f_{!x_i !x_j}
inline bool oppositeSymmetric(const TruthTable &f, unsigned i, unsigned j) {
  return restriction(f, i, true, j, true) == restriction(f, i, false, j, false);
}

inline uint64_t toInteger(const TruthTable &f) { return f.words()[0]; }

} // namespace npn::ref
