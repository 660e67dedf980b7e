// SPDX-License-Identifier: Apache-2.0
//
// Dense truth tables and NP transformations.
//
// A TruthTable over n variables stores 2^n bits; bit m is f(m), where input
// x_i is bit i of the minterm index m (x_0 is the least significant bit). The
// same convention is used by the hex file format.
//
#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace npn {

inline constexpr unsigned kMaxVars = 22;

enum class Polarity : uint8_t { Positive = 0, Negative = 1 };

inline Polarity operator!(Polarity p) {
  return p == Polarity::Positive ? Polarity::Negative : Polarity::Positive;
}

/// A variable together with the value it is fixed to by a cofactor.
struct Literal {
  unsigned var = 0;
  Polarity pol = Polarity::Positive;

  bool operator==(const Literal &) const = default;
};

inline Literal pos(unsigned var) { return {var, Polarity::Positive}; }
inline Literal neg(unsigned var) { return {var, Polarity::Negative}; }

/// Conjunction of literals over distinct variables. The empty cube is the
/// constant-true restriction.
class Cube {
public:
  Cube() = default;
  Cube(std::initializer_list<Literal> literals);
  explicit Cube(std::vector<Literal> literals);

  /// Throws std::invalid_argument if the variable is already constrained.
  void push(Literal lit);

  std::span<const Literal> literals() const { return literals_; }
  size_t size() const { return literals_.size(); }
  bool empty() const { return literals_.empty(); }
  bool contains(unsigned var) const { return (mask_ >> var) & 1u; }
  uint32_t varMask() const { return mask_; }

  bool operator==(const Cube &) const = default;

private:
  std::vector<Literal> literals_;
  uint32_t mask_ = 0;
};

struct NPTransformation;

class TruthTable {
public:
  /// Constant false over zero variables.
  TruthTable() : TruthTable(0u) {}
  /// Constant false over `numVars` variables.
  explicit TruthTable(unsigned numVars);
  /// Takes ownership of a word array of exactly wordCount(numVars) words.
  /// Bits beyond 2^numVars must be zero.
  TruthTable(unsigned numVars, std::vector<uint64_t> words);

  static TruthTable constant(unsigned numVars, bool value);
  /// The projection function x_var.
  static TruthTable variable(unsigned numVars, unsigned var);

  template <typename Fn>
  static TruthTable fromFunction(unsigned numVars, Fn &&fn) {
    std::vector<uint64_t> words(wordCount(numVars), 0);
    uint64_t bits = uint64_t{1} << numVars;
    for (uint64_t m = 0; m < bits; ++m)
      if (fn(m))
        words[m >> 6] |= uint64_t{1} << (m & 63);
    return TruthTable(numVars, std::move(words));
  }

  static size_t wordCount(unsigned numVars) {
    return numVars <= 6 ? 1 : size_t{1} << (numVars - 6);
  }

  unsigned numVars() const { return numVars_; }
  uint64_t numBits() const { return uint64_t{1} << numVars_; }
  bool bit(uint64_t minterm) const {
    return (words_[minterm >> 6] >> (minterm & 63)) & 1u;
  }
  bool evaluate(uint64_t assignment) const { return bit(assignment); }

  std::span<const uint64_t> words() const { return words_; }

  /// Variables substituted away by cofactor(). They are vacuous, and
  /// countMinterms() counts each surviving assignment of the free variables
  /// once.
  uint32_t boundVars() const { return bound_; }

  bool isConstant() const;

  /// Same arity and identical bits.
  bool operator==(const TruthTable &other) const {
    return numVars_ == other.numVars_ && words_ == other.words_;
  }

  // Kernel transforms. All return new tables; the receiver is unchanged.

  /// h(m) = f(m with bits i and j exchanged).
  TruthTable swapVars(unsigned i, unsigned j) const;
  /// h(m) = f(m ^ (1 << i)).
  TruthTable flipVar(unsigned i) const;
  /// h(m) = f(m with bit i forced to `value`). Marks i as bound.
  TruthTable fixVar(unsigned i, bool value) const;

private:
  friend TruthTable negate(const TruthTable &f);
  friend TruthTable cofactor(const TruthTable &f, const Cube &cube);
  friend TruthTable applyNPTransform(const TruthTable &f,
                                     const NPTransformation &t);

  void swapInPlace(unsigned i, unsigned j);
  void flipInPlace(unsigned i);
  void fixInPlace(unsigned i, bool value);
  void clearTail();

  unsigned numVars_ = 0;
  uint32_t bound_ = 0;
  std::vector<uint64_t> words_;
};

/// Permutation plus per-input and output polarity. Applying T to f yields
/// h(X) = f(TX): every x_i of f is replaced by x_{perm[i]}, complemented when
/// inputPol[i] is Negative; the result is complemented when outputPol is
/// Negative.
struct NPTransformation {
  std::vector<unsigned> perm;
  std::vector<Polarity> inputPol;
  Polarity outputPol = Polarity::Positive;

  static NPTransformation identity(unsigned numVars);

  unsigned size() const { return static_cast<unsigned>(perm.size()); }
  /// perm is a bijection on {0..n-1} and inputPol has n entries.
  bool isValid() const;

  bool operator==(const NPTransformation &) const = default;
};

/// Transformation equivalent to applying `first`, then `second`.
NPTransformation compose(const NPTransformation &first,
                         const NPTransformation &second);
NPTransformation inverse(const NPTransformation &t);

uint64_t countMinterms(const TruthTable &f);
/// |f_c|: minterms of f inside the cube, counted over the free variables.
uint64_t countMinterms(const TruthTable &f, const Cube &cube);

/// First-order cofactor counts of one variable: (|f_{x_i}|, |f_{!x_i}|).
struct CofactorCounts {
  uint64_t pos = 0;
  uint64_t neg = 0;

  bool operator==(const CofactorCounts &) const = default;
};

/// (|f_{c x_i}|, |f_{c !x_i}|) for every variable i in one pass over the
/// table. Entries for variables constrained by the cube are (0, 0).
std::vector<CofactorCounts> cofactorCounts(const TruthTable &f,
                                           const Cube &cube = {});
TruthTable cofactor(const TruthTable &f, const Cube &cube);
TruthTable negate(const TruthTable &f);
TruthTable applyNPTransform(const TruthTable &f, const NPTransformation &t);
/// Throws std::invalid_argument when the arities differ.
bool equal(const TruthTable &f, const TruthTable &g);

inline TruthTable operator~(const TruthTable &f) { return negate(f); }

} // namespace npn
