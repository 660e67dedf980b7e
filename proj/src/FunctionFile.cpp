// SPDX-License-Identifier: Apache-2.0

#include "npnmatch/FunctionFile.h"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

using namespace npn;

ParseError::ParseError(size_t line, size_t column, const std::string &message)
    : std::runtime_error("line " + std::to_string(line) +
                         (column ? ", column " + std::to_string(column) : "") +
                         ": " + message),
      line_(line), column_(column), detail_(message) {}

namespace {

struct Line {
  size_t number;
  /// Offset of `text` within the original line, for column reporting.
  size_t offset;
  std::string_view text;
};

bool isSpace(char c) { return c == ' ' || c == '\t' || c == '\r'; }

/// Non-empty lines with comments and surrounding blanks stripped.
std::vector<Line> significantLines(std::string_view text) {
  std::vector<Line> out;
  size_t number = 0;
  while (!text.empty()) {
    size_t eol = text.find('\n');
    std::string_view raw = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{}
                                         : text.substr(eol + 1);
    ++number;
    if (size_t hash = raw.find('#'); hash != std::string_view::npos)
      raw = raw.substr(0, hash);
    size_t begin = 0;
    while (begin < raw.size() && isSpace(raw[begin]))
      ++begin;
    size_t end = raw.size();
    while (end > begin && isSpace(raw[end - 1]))
      --end;
    if (end > begin)
      out.push_back({number, begin, raw.substr(begin, end - begin)});
  }
  return out;
}

/// Splits on blanks, keeping 1-based columns.
std::vector<std::pair<size_t, std::string_view>> fields(const Line &line) {
  std::vector<std::pair<size_t, std::string_view>> out;
  std::string_view t = line.text;
  size_t i = 0;
  while (i < t.size()) {
    while (i < t.size() && isSpace(t[i]))
      ++i;
    size_t start = i;
    while (i < t.size() && !isSpace(t[i]))
      ++i;
    if (i > start)
      out.emplace_back(line.offset + start + 1, t.substr(start, i - start));
  }
  return out;
}

unsigned parseVarCount(std::string_view digits, size_t line, size_t column) {
  unsigned n = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc() || ptr != digits.data() + digits.size())
    throw ParseError(line, column,
                     "expected a variable count, got '" + std::string(digits) +
                         "'");
  if (n > kMaxVars)
    throw ParseError(line, column,
                     "variable count " + std::to_string(n) +
                         " out of range (0.." + std::to_string(kMaxVars) + ")");
  return n;
}

int hexValue(char c) {
  if (c >= '0' && c <= '9')
    return c - '0';
  if (c >= 'a' && c <= 'f')
    return c - 'a' + 10;
  if (c >= 'A' && c <= 'F')
    return c - 'A' + 10;
  return -1;
}

TruthTable parseHex(const std::vector<Line> &lines) {
  std::optional<unsigned> n;
  const Line *ttLine = nullptr;
  std::string_view hex;
  size_t hexColumn = 0;

  for (const Line &line : lines) {
    size_t eq = line.text.find('=');
    if (eq == std::string_view::npos)
      throw ParseError(line.number, line.offset + 1,
                       "expected 'vars=N' or 'tt=HEX'");
    auto trim = [](std::string_view s, size_t &shift) {
      shift = 0;
      while (!s.empty() && isSpace(s.front()))
        s.remove_prefix(1), ++shift;
      while (!s.empty() && isSpace(s.back()))
        s.remove_suffix(1);
      return s;
    };
    size_t keyShift, valueShift;
    std::string_view key = trim(line.text.substr(0, eq), keyShift);
    std::string_view value = trim(line.text.substr(eq + 1), valueShift);
    size_t valueColumn = line.offset + eq + 2 + valueShift;

    if (key == "vars") {
      if (n)
        throw ParseError(line.number, line.offset + 1, "duplicate 'vars'");
      n = parseVarCount(value, line.number, valueColumn);
    } else if (key == "tt") {
      if (ttLine)
        throw ParseError(line.number, line.offset + 1, "duplicate 'tt'");
      ttLine = &line;
      if (value.starts_with("0x") || value.starts_with("0X"))
        value.remove_prefix(2), valueColumn += 2;
      hex = value;
      hexColumn = valueColumn;
    } else {
      throw ParseError(line.number, line.offset + keyShift + 1,
                       "unknown key '" + std::string(key) + "'");
    }
  }
  size_t lastLine = lines.empty() ? 1 : lines.back().number;
  if (!n)
    throw ParseError(lastLine, 0, "missing 'vars=N'");
  if (!ttLine)
    throw ParseError(lastLine, 0, "missing 'tt=HEX'");

  size_t want = hexDigits(*n);
  if (hex.size() != want)
    throw ParseError(ttLine->number, hexColumn,
                     "expected " + std::to_string(want) +
                         " hex digits for " + std::to_string(*n) +
                         " variables, got " + std::to_string(hex.size()));

  std::vector<uint64_t> words(TruthTable::wordCount(*n), 0);
  uint64_t bits = uint64_t{1} << *n;
  for (size_t k = 0; k < hex.size(); ++k) {
    int v = hexValue(hex[k]);
    if (v < 0)
      throw ParseError(ttLine->number, hexColumn + k,
                       std::string("invalid hex digit '") + hex[k] + "'");
    uint64_t bit = 4 * (hex.size() - 1 - k);
    for (unsigned b = 0; b < 4; ++b) {
      if (!((v >> b) & 1))
        continue;
      if (bit + b >= bits)
        throw ParseError(ttLine->number, hexColumn + k,
                         "bit " + std::to_string(bit + b) +
                             " is set but the table has only " +
                             std::to_string(bits) + " bits");
      words[(bit + b) >> 6] |= uint64_t{1} << ((bit + b) & 63);
    }
  }
  return TruthTable(*n, std::move(words));
}

TruthTable parsePla(const std::vector<Line> &lines) {
  std::optional<unsigned> n;
  std::optional<size_t> declaredTerms;
  std::vector<uint64_t> words;
  size_t terms = 0;
  bool ended = false;

  for (const Line &line : lines) {
    auto f = fields(line);
    if (ended)
      throw ParseError(line.number, f[0].first, "content after '.e'");
    std::string_view head = f[0].second;

    if (head.starts_with('.')) {
      auto needArg = [&]() -> std::pair<size_t, std::string_view> {
        if (f.size() != 2)
          throw ParseError(line.number, f[0].first,
                           "'" + std::string(head) + "' takes one argument");
        return f[1];
      };
      if (head == ".i") {
        if (n)
          throw ParseError(line.number, f[0].first, "duplicate '.i'");
        auto [col, arg] = needArg();
        n = parseVarCount(arg, line.number, col);
        words.assign(TruthTable::wordCount(*n), 0);
      } else if (head == ".o") {
        auto [col, arg] = needArg();
        if (arg != "1")
          throw ParseError(line.number, col,
                           "only single-output covers are supported");
      } else if (head == ".p") {
        auto [col, arg] = needArg();
        size_t p = 0;
        auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), p);
        if (ec != std::errc() || ptr != arg.data() + arg.size())
          throw ParseError(line.number, col, "expected a term count");
        declaredTerms = p;
      } else if (head == ".e" || head == ".end") {
        ended = true;
      } else if (head != ".ilb" && head != ".ob") {
        throw ParseError(line.number, f[0].first,
                         "unsupported directive '" + std::string(head) + "'");
      }
      continue;
    }

    if (!n)
      throw ParseError(line.number, f[0].first, "cover line before '.i'");
    if (f.size() != 2)
      throw ParseError(line.number, f[0].first,
                       "expected an input part and an output column");
    auto [inCol, inputs] = f[0];
    auto [outCol, output] = f[1];
    if (inputs.size() != *n)
      throw ParseError(line.number, inCol,
                       "expected " + std::to_string(*n) +
                           " input columns, got " +
                           std::to_string(inputs.size()));
    if (output != "1")
      throw ParseError(line.number, outCol, "only '1' outputs are supported");

    uint64_t care = 0, value = 0;
    for (unsigned i = 0; i < *n; ++i) {
      char c = inputs[i];
      if (c == '1' || c == '0') {
        care |= uint64_t{1} << i;
        value |= uint64_t(c == '1') << i;
      } else if (c != '-') {
        throw ParseError(line.number, inCol + i,
                         std::string("invalid input column '") + c + "'");
      }
    }
    // Enumerate the free-variable subsets of the cube.
    uint64_t freeMask = ~care & ((uint64_t{1} << *n) - 1);
    uint64_t sub = 0;
    do {
      uint64_t m = value | sub;
      words[m >> 6] |= uint64_t{1} << (m & 63);
      sub = (sub - freeMask) & freeMask;
    } while (sub != 0);
    ++terms;
  }

  size_t lastLine = lines.empty() ? 1 : lines.back().number;
  if (!n)
    throw ParseError(lastLine, 0, "missing '.i'");
  if (declaredTerms && *declaredTerms != terms)
    throw ParseError(lastLine, 0,
                     "'.p' declares " + std::to_string(*declaredTerms) +
                         " terms, found " + std::to_string(terms));
  return TruthTable(*n, std::move(words));
}

} // namespace

TruthTable npn::parseFunction(std::string_view text) {
  std::vector<Line> lines = significantLines(text);
  if (lines.empty())
    throw ParseError(1, 0, "empty function file");
  if (lines.front().text.starts_with('.'))
    return parsePla(lines);
  return parseHex(lines);
}

size_t npn::hexDigits(unsigned numVars) {
  return (size_t{1} << std::max(numVars, 2u)) / 4;
}

std::string npn::toHex(const TruthTable &f) {
  static constexpr char kDigits[] = "0123456789abcdef";
  size_t digits = hexDigits(f.numVars());
  std::string s(digits, '0');
  auto words = f.words();
  for (size_t k = 0; k < digits; ++k) {
    size_t bit = 4 * k;
    s[digits - 1 - k] = kDigits[(words[bit >> 6] >> (bit & 63)) & 0xf];
  }
  return s;
}

std::string npn::serializeHex(const TruthTable &f) {
  return "vars=" + std::to_string(f.numVars()) + "\ntt=" + toHex(f) + "\n";
}

std::string npn::serializePla(const TruthTable &f) {
  unsigned n = f.numVars();
  std::ostringstream os;
  os << ".i " << n << "\n.o 1\n.p " << countMinterms(f) << "\n";
  for (uint64_t m = 0; m < f.numBits(); ++m) {
    if (!f.bit(m))
      continue;
    for (unsigned i = 0; i < n; ++i)
      os << ((m >> i) & 1 ? '1' : '0');
    os << " 1\n";
  }
  os << ".e\n";
  return os.str();
}

TruthTable npn::readFunctionFile(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parseFunction(buffer.str());
  } catch (const ParseError &e) {
    throw ParseError(e.line(), e.column(), path.string() + ": " + e.detail());
  }
}

void npn::writeFunctionFile(const std::filesystem::path &path,
                            const TruthTable &f) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot write '" + path.string() + "'");
  out << serializeHex(f);
  if (!out)
    throw std::runtime_error("error writing '" + path.string() + "'");
}
