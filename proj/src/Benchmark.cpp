// SPDX-License-Identifier: Apache-2.0

#include "npnmatch/Benchmark.h"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <limits>
#include <map>
#include <stdexcept>

using namespace npn;

std::string_view npn::toString(BenchMode mode) {
  return mode == BenchMode::Equivalent ? "equiv" : "nonequiv";
}

BenchMode npn::parseBenchMode(std::string_view text) {
  if (text == "equiv")
    return BenchMode::Equivalent;
  if (text == "nonequiv")
    return BenchMode::NonEquivalent;
  throw std::invalid_argument("unknown benchmark mode '" + std::string(text) +
                              "' (expected equiv or nonequiv)");
}

void npn::validate(const BenchConfig &config) {
  if (config.minVars < 2 || config.maxVars > kMaxVars ||
      config.minVars > config.maxVars)
    throw std::invalid_argument("benchmark variable range must lie within 2.." +
                                std::to_string(kMaxVars));
  if (config.pairs == 0)
    throw std::invalid_argument("benchmark needs at least one pair per n");
}

std::string BenchReport::toCsv() const {
  std::string out = "n,mode,kind,pairs,min_s,max_s,avg_s\n";
  char buf[160];
  for (const BenchRow &r : rows) {
    std::snprintf(buf, sizeof buf, "%u,%s,%s,%u,%.9f,%.9f,%.9f\n", r.n,
                  std::string(toString(r.mode)).c_str(),
                  std::string(toString(r.kind)).c_str(), r.pairs,
                  r.minSeconds, r.maxSeconds, r.avgSeconds);
    out += buf;
  }
  return out;
}

FunctionPair npn::randomNonEquivalentPair(unsigned n, GeneratorKind kind,
                                          std::mt19937_64 &rng) {
  constexpr unsigned kTriesPerF = 1u << 14;
  constexpr unsigned kMaxRestarts = 1u << 10;
  for (unsigned restart = 0; restart < kMaxRestarts; ++restart) {
    TruthTable f = randomFunction(n, kind, rng);
    uint64_t cf = countMinterms(f);
    for (unsigned t = 0; t < kTriesPerF; ++t) {
      TruthTable g = randomFunction(n, kind, rng);
      uint64_t cg = countMinterms(g);
      if (cf != cg && cf != f.numBits() - cg)
        continue;
      bool equivalent = n <= kMaxOracleVars
                            ? exhaustiveMatch(f, g).has_value()
                            : matchNPN(f, g).verdict == Verdict::Equivalent;
      if (equivalent)
        break; // likely a tiny class; draw a new f
      return {std::move(f), std::move(g)};
    }
  }
  throw std::runtime_error("could not find a non-equivalent pair for n=" +
                           std::to_string(n));
}

FunctionPair npn::benchmarkPair(unsigned n, BenchMode mode, GeneratorKind kind,
                                uint64_t pairSeed) {
  if (mode == BenchMode::Equivalent) {
    EquivalentPair p = randomEquivalentPair(n, kind, pairSeed);
    return {std::move(p.f), std::move(p.g)};
  }
  std::mt19937_64 rng(pairSeed);
  return randomNonEquivalentPair(n, kind, rng);
}

BenchReport npn::runBenchmark(const BenchConfig &config) {
  validate(config);
  using Clock = std::chrono::steady_clock;
  MatchOptions options;
  options.nodeCap = config.nodeCap;

  std::mt19937_64 seeds(config.seed);
  BenchReport report;
  for (unsigned n = config.minVars; n <= config.maxVars; ++n) {
    BenchRow row;
    row.n = n;
    row.mode = config.mode;
    row.kind = config.kind;
    row.minSeconds = std::numeric_limits<double>::infinity();
    double total = 0;
    unsigned slots = config.pairs + (config.warmup ? 1 : 0);
    for (unsigned slot = 0; slot < slots; ++slot) {
      FunctionPair p = benchmarkPair(n, config.mode, config.kind, seeds());
      auto start = Clock::now();
      MatchResult r = matchNPN(p.f, p.g, options);
      double seconds =
          std::chrono::duration<double>(Clock::now() - start).count();
      if (config.warmup && slot == 0)
        continue;
      bool expected = config.mode == BenchMode::Equivalent;
      if ((r.verdict == Verdict::Equivalent) != expected)
        ++row.unexpectedVerdicts;
      ++row.pairs;
      row.nodesVisited += r.stats.nodesVisited;
      row.minSeconds = std::min(row.minSeconds, seconds);
      row.maxSeconds = std::max(row.maxSeconds, seconds);
      total += seconds;
    }
    row.avgSeconds = total / row.pairs;
    // Rounding can push the mean a hair outside [min, max].
    row.avgSeconds = std::clamp(row.avgSeconds, row.minSeconds, row.maxSeconds);
    report.rows.push_back(row);
  }
  return report;
}

NPNClassification npn::classifyByMatching(unsigned n) {
  if (n > kMaxClassifyVars)
    throw std::invalid_argument("classifyByMatching: " + std::to_string(n) +
                                " variables exceeds the limit of " +
                                std::to_string(kMaxClassifyVars));
  NPNClassification out;
  out.numVars = n;
  uint64_t numFunctions = uint64_t{1} << (uint64_t{1} << n);
  uint64_t bits = uint64_t{1} << n;
  out.classOf.resize(numFunctions);

  // Representatives bucketed by min(|f|, 2^n - |f|); other buckets can never
  // match.
  std::map<uint64_t, std::vector<uint32_t>> buckets;
  for (uint64_t v = 0; v < numFunctions; ++v) {
    TruthTable f(n, {v});
    uint64_t c = countMinterms(f);
    std::vector<uint32_t> &bucket = buckets[std::min(c, bits - c)];
    auto hit = std::find_if(bucket.begin(), bucket.end(), [&](uint32_t id) {
      TruthTable rep(n, {out.representatives[id]});
      return matchNPN(f, rep).verdict == Verdict::Equivalent;
    });
    if (hit != bucket.end()) {
      out.classOf[v] = *hit;
      continue;
    }
    auto id = static_cast<uint32_t>(out.representatives.size());
    out.representatives.push_back(v);
    bucket.push_back(id);
    out.classOf[v] = id;
  }
  return out;
}
