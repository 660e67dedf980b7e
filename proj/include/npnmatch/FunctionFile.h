// SPDX-License-Identifier: Apache-2.0
//
// Function files.
//
// Hex form:
//
//   # comment
//   vars=5
//   tt=b69a6ae0
//
// The hex string is the truth table read as one big integer: bit m is f(m)
// with x_0 the least significant bit of m. It always has 2^max(n,2) / 4
// digits.
//
// PLA form (single output, on-set cover only):
//
//   .i 3
//   .o 1
//   10- 1
//   -01 1
//   .e
//
// Input column i is x_i. `.p` is optional and checked when present; `.ilb`
// and `.ob` are accepted and ignored.
//
#pragma once

#include "npnmatch/TruthTable.h"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

namespace npn {

/// Malformed function text. line() and column() are 1-based; column() is 0
/// when the problem concerns the whole line or the whole file.
class ParseError : public std::runtime_error {
public:
  ParseError(size_t line, size_t column, const std::string &message);

  size_t line() const { return line_; }
  size_t column() const { return column_; }
  /// The message without the position prefix.
  const std::string &detail() const { return detail_; }

private:
  size_t line_;
  size_t column_;
  std::string detail_;
};

/// Parses either form; PLA is recognised by a leading `.` directive.
TruthTable parseFunction(std::string_view text);

/// Number of hex digits of an n-variable table.
size_t hexDigits(unsigned numVars);

std::string toHex(const TruthTable &f);
/// `vars=N` and `tt=HEX` lines.
std::string serializeHex(const TruthTable &f);
/// One cover line per minterm.
std::string serializePla(const TruthTable &f);

/// Reads and parses a file; ParseError messages are prefixed by the path.
TruthTable readFunctionFile(const std::filesystem::path &path);
void writeFunctionFile(const std::filesystem::path &path, const TruthTable &f);

} // namespace npn
