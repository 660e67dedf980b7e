// SPDX-License-Identifier: Apache-2.0

#include "npnmatch/Cli.h"

#include "npnmatch/Benchmark.h"
#include "npnmatch/FunctionFile.h"
#include "npnmatch/Matcher.h"
#include "npnmatch/Oracle.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <random>

using namespace npn;

namespace {

std::vector<VarMapping> mappingsOf(const NPTransformation &t) {
  std::vector<VarMapping> maps;
  for (unsigned i = 0; i < t.size(); ++i)
    maps.push_back({i, t.perm[i], t.inputPol[i]});
  return maps;
}

std::string cubeString(const Cube &c) {
  if (c.empty())
    return "1";
  std::string s;
  for (const Literal &l : c.literals())
    s += (l.pol == Polarity::Negative ? "~x" : "x") + std::to_string(l.var);
  return s;
}

std::string mappingList(const std::vector<VarMapping> &maps) {
  std::string s;
  for (const VarMapping &m : maps)
    s += (s.empty() ? "" : ", ") + toString(m);
  return s;
}

void loadPair(const std::string &a, const std::string &b, TruthTable &f,
              TruthTable &g) {
  f = readFunctionFile(a);
  g = readFunctionFile(b);
  if (f.numVars() != g.numVars())
    throw std::invalid_argument("'" + a + "' has " +
                                std::to_string(f.numVars()) +
                                " variables but '" + b + "' has " +
                                std::to_string(g.numVars()));
}

std::pair<unsigned, unsigned> parseRange(const std::string &text) {
  auto number = [&](std::string_view s) {
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
      throw std::invalid_argument("bad variable range '" + text +
                                  "' (expected N or LO..HI)");
    return v;
  };
  std::string_view t = text;
  size_t dots = t.find("..");
  if (dots == std::string_view::npos) {
    unsigned v = number(t);
    return {v, v};
  }
  return {number(t.substr(0, dots)), number(t.substr(dots + 2))};
}

int runMatch(const std::string &a, const std::string &b, bool json,
             uint64_t nodeCap, std::ostream &out) {
  TruthTable f, g;
  loadPair(a, b, f, g);
  MatchOptions options;
  options.nodeCap = nodeCap;
  auto start = std::chrono::steady_clock::now();
  MatchResult r = matchNPN(f, g, options);
  double elapsed = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  bool eq = r.verdict == Verdict::Equivalent;

  if (json) {
    nlohmann::json j;
    j["verdict"] = eq ? "equivalent" : "non-equivalent";
    if (eq) {
      std::vector<int> pols;
      for (Polarity p : r.witness->inputPol)
        pols.push_back(static_cast<int>(p));
      j["witness"] = {{"perm", r.witness->perm},
                      {"input_pol", pols},
                      {"output_pol", static_cast<int>(r.witness->outputPol)}};
    } else {
      j["witness"] = nullptr;
    }
    j["nodes_visited"] = r.stats.nodesVisited;
    j["verify_calls"] = r.stats.verifyCalls;
    j["elapsed_s"] = elapsed;
    out << j.dump() << "\n";
  } else if (eq) {
    out << formatWitness(r.mappings, r.witness->outputPol) << "\n";
  } else {
    out << "not equivalent\n";
  }
  return eq ? kExitEquivalent : kExitNotEquivalent;
}

int runOracle(const std::string &a, const std::string &b, std::ostream &out) {
  TruthTable f, g;
  loadPair(a, b, f, g);
  auto t = exhaustiveMatch(f, g);
  if (!t) {
    out << "not equivalent\n";
    return kExitNotEquivalent;
  }
  out << formatWitness(mappingsOf(*t), t->outputPol) << "\n";
  return kExitEquivalent;
}

int runTrace(const std::string &a, const std::string &b, std::ostream &out) {
  TruthTable f, g;
  loadPair(a, b, f, g);
  uint64_t cf = countMinterms(f), cg = countMinterms(g);
  std::vector<std::string> attempts;
  if (cf == cg)
    attempts.push_back("g");
  if (cf == f.numBits() - cg)
    attempts.push_back("!g (output negated)");
  size_t attempt = 0;

  MatchOptions options;
  options.trace = [&](const TraceEvent &e) {
    std::string pad(2 * e.depth + 2, ' ');
    const MatchState &s = *e.state;
    switch (e.kind) {
    case TraceKind::Enter:
      if (e.depth == 0 && s.mapList.empty())
        out << "== search " << attempts.at(attempt++) << "\n";
      out << std::string(2 * e.depth, ' ') << "[depth " << e.depth
          << "] cube_f = " << cubeString(s.f.cube)
          << ", cube_g = " << cubeString(s.g.cube) << "\n";
      break;
    case TraceKind::Updated:
      out << pad << "V_f = " << s.f.vector << "\n"
          << pad << "V_g = " << s.g.vector << "\n"
          << pad << "Phase_f = " << toString(s.f.phases) << "\n"
          << pad << "Phase_g = " << toString(s.g.phases) << "\n";
      break;
    case TraceKind::Sets:
      break;
    case TraceKind::Commit:
      out << pad << "commit " << mappingList(e.candidate->mappings) << "\n";
      break;
    case TraceKind::Branch:
      out << pad << "branch " << mappingList(e.candidate->mappings) << "\n";
      break;
    case TraceKind::Prune:
      out << pad << "prune: " << e.reason << "\n";
      break;
    case TraceKind::Complete:
      out << pad << "complete: {" << mappingList(s.mapList) << "} "
          << (e.verified ? "verified" : "rejected") << "\n";
      break;
    }
  };
  MatchResult r = matchNPN(f, g, options);
  if (attempts.empty())
    out << "zeroth-order signatures differ (" << cf << " vs " << cg
        << " minterms)\n";
  if (r.verdict == Verdict::Equivalent) {
    out << formatWitness(r.mappings, r.witness->outputPol) << "\n";
    return kExitEquivalent;
  }
  out << "not equivalent\n";
  return kExitNotEquivalent;
}

void writePairFile(const std::filesystem::path &path, const TruthTable &f,
                   const std::string &comment) {
  std::ofstream file(path, std::ios::binary);
  if (!file)
    throw std::runtime_error("cannot write '" + path.string() + "'");
  if (!comment.empty())
    file << "# " << comment << "\n";
  file << serializeHex(f);
}

int runGen(unsigned n, const std::string &kindText, unsigned count,
           uint64_t seed, bool pair, const std::string &outDir,
           std::ostream &out) {
  if (n > kMaxVars)
    throw std::invalid_argument("--vars must be at most " +
                                std::to_string(kMaxVars));
  GeneratorKind kind = parseGeneratorKind(kindText);
  if (!outDir.empty())
    std::filesystem::create_directories(outDir);
  std::mt19937_64 seeds(seed);
  for (unsigned k = 0; k < count; ++k) {
    uint64_t itemSeed = seeds();
    std::string id = std::to_string(k);
    id.insert(0, id.size() < 3 ? 3 - id.size() : 0, '0');
    if (pair) {
      EquivalentPair p = randomEquivalentPair(n, kind, itemSeed);
      std::string hidden =
          "hidden " + formatWitness(mappingsOf(p.hidden), p.hidden.outputPol);
      if (outDir.empty()) {
        out << "# pair " << k << " f\n" << serializeHex(p.f);
        out << "# pair " << k << " g, " << hidden << "\n" << serializeHex(p.g);
      } else {
        std::filesystem::path dir(outDir);
        writePairFile(dir / ("pair_" + id + "_f.tt"), p.f, "");
        writePairFile(dir / ("pair_" + id + "_g.tt"), p.g, hidden);
      }
      continue;
    }
    TruthTable f = randomFunction(n, kind, itemSeed);
    if (outDir.empty())
      out << "# function " << k << "\n" << serializeHex(f);
    else
      writeFunctionFile(std::filesystem::path(outDir) / ("fn_" + id + ".tt"), f);
  }
  return 0;
}

int runBench(const std::string &range, unsigned pairs, const std::string &mode,
             const std::string &kind, uint64_t seed, uint64_t nodeCap,
             const std::string &outPath, std::ostream &out,
             std::ostream &err) {
  BenchConfig config;
  std::tie(config.minVars, config.maxVars) = parseRange(range);
  config.pairs = pairs;
  config.mode = parseBenchMode(mode);
  config.kind = parseGeneratorKind(kind);
  config.seed = seed;
  config.nodeCap = nodeCap;
  BenchReport report = runBenchmark(config);

  std::string csv = report.toCsv();
  if (outPath.empty()) {
    out << csv;
  } else {
    std::ofstream file(outPath, std::ios::binary);
    if (!file)
      throw std::runtime_error("cannot write '" + outPath + "'");
    file << csv;
  }
  unsigned unexpected = 0;
  for (const BenchRow &row : report.rows)
    unexpected += row.unexpectedVerdicts;
  if (unexpected) {
    err << "error: " << unexpected << " pair(s) got an unexpected verdict\n";
    return kExitError;
  }
  return 0;
}

} // namespace

int npn::cliDispatch(const std::vector<std::string> &args, std::ostream &out,
                     std::ostream &err) {
  CLI::App app{"NPN Boolean matching workbench", "npnmatch"};
  app.require_subcommand(1);

  std::string fileA, fileB;
  bool json = false;
  uint64_t nodeCap = 0;
  auto *match = app.add_subcommand("match", "Decide NPN equivalence of two "
                                            "function files");
  match->add_option("A", fileA, "First function file")->required();
  match->add_option("B", fileB, "Second function file")->required();
  match->add_flag("--json", json, "Print a JSON result object");
  match->add_option("--node-cap", nodeCap,
                    "Abort after this many search nodes (0 = unlimited)");

  auto *oracle = app.add_subcommand("oracle", "Brute-force NPN match (n <= 8)");
  oracle->add_option("A", fileA)->required();
  oracle->add_option("B", fileB)->required();

  auto *trace = app.add_subcommand("trace", "Match and dump every recursion "
                                            "step");
  trace->add_option("A", fileA)->required();
  trace->add_option("B", fileB)->required();

  unsigned vars = 0, count = 1, pairs = 10;
  std::string kind = "type1", mode = "equiv", outPath, range;
  uint64_t seed = 0;
  bool equivalentPair = false;
  auto *gen = app.add_subcommand("gen", "Generate random functions");
  gen->add_option("--vars", vars, "Number of variables")->required();
  gen->add_option("--kind", kind, "type1 or type2");
  gen->add_option("--count", count, "Number of functions or pairs");
  gen->add_option("--seed", seed, "Random seed")->required();
  gen->add_flag("--equivalent-pair", equivalentPair,
                "Emit f and a random NP-transformed g");
  gen->add_option("--out", outPath, "Output directory (default: stdout)");

  auto *bench = app.add_subcommand("bench", "Time matchNPN on random pairs");
  bench->add_option("--vars", range, "N or LO..HI")->required();
  bench->add_option("--pairs", pairs, "Timed pairs per n");
  bench->add_option("--mode", mode, "equiv or nonequiv");
  bench->add_option("--kind", kind, "type1 or type2");
  bench->add_option("--seed", seed, "Random seed")->required();
  bench->add_option("--node-cap", nodeCap, "Search node cap per pair");
  bench->add_option("--out", outPath, "CSV path (default: stdout)");

  bool useOracle = false;
  auto *classify = app.add_subcommand("classify", "Count NPN classes (n <= 4)");
  classify->add_option("--vars", vars, "Number of variables")->required();
  classify->add_flag("--oracle", useOracle,
                     "Use brute-force enumeration instead of the matcher");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp &e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::CallForAllHelp &e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitError;
  }

  try {
    if (*match)
      return runMatch(fileA, fileB, json, nodeCap, out);
    if (*oracle)
      return runOracle(fileA, fileB, out);
    if (*trace)
      return runTrace(fileA, fileB, out);
    if (*gen)
      return runGen(vars, kind, count, seed, equivalentPair, outPath, out);
    if (*bench)
      return runBench(range, pairs, mode, kind, seed, nodeCap, outPath, out,
                      err);
    if (*classify) {
      NPNClassification c =
          useOracle ? enumerateNPNClasses(vars) : classifyByMatching(vars);
      out << c.count() << " classes\n";
      return 0;
    }
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
