// SPDX-License-Identifier: Apache-2.0

#include "npnmatch/Matcher.h"

#include <algorithm>
#include <cassert>

using namespace npn;

std::string npn::toString(const VarMapping &m) {
  return std::to_string(m.from) + "->" + std::to_string(m.to) + "-" +
         (m.pol == Polarity::Positive ? "0" : "1");
}

std::string npn::formatWitness(const std::vector<VarMapping> &maps,
                               Polarity outputPol) {
  std::string s = "T = {";
  for (size_t i = 0; i < maps.size(); ++i) {
    if (i)
      s += ", ";
    s += toString(maps[i]);
  }
  s += "}; output=";
  s += outputPol == Polarity::Positive ? "pos" : "neg";
  return s;
}

MatchState::MatchState(std::shared_ptr<const FunctionInfo> fInfo,
                       std::shared_ptr<const FunctionInfo> gInfo)
    : f(std::move(fInfo)), g(std::move(gInfo)) {
  if (f.numVars() != g.numVars())
    throw std::invalid_argument("MatchState: arity mismatch");
}

//===----------------------------------------------------------------------===//
// Mapping sets
//===----------------------------------------------------------------------===//

namespace {

/// Def. 6 cases: equal counts for identical phase, swapped counts for
/// opposite phase.
bool countsAdmit(const SSValue &a, const SSValue &b, Polarity pol) {
  if (pol == Polarity::Positive)
    return a.pos == b.pos && a.neg == b.neg;
  return a.pos == b.neg && a.neg == b.pos;
}

Polarity combine(Polarity a, Polarity b) {
  return a == b ? Polarity::Positive : Polarity::Negative;
}

/// Polarity patterns (relative to the class normal form) worth trying for a
/// class correspondence. A totally symmetric class only needs the uniform
/// patterns. When complementing any two members together is also a symmetry,
/// only the parity of the pattern matters, and for even class sizes the two
/// uniform patterns have the same parity.
std::vector<std::vector<Polarity>> classPatterns(const SymmetryClass &cf,
                                                 const SymmetryClass &cg) {
  size_t m = cf.size();
  std::vector<Polarity> zero(m, Polarity::Positive);
  std::vector<Polarity> other(m, Polarity::Negative);
  if (cf.pairNegationInvariant && cg.pairNegationInvariant && m % 2 == 0) {
    other = zero;
    other.back() = Polarity::Negative;
  }
  return {zero, other};
}

} // namespace

bool npn::checkPhaseCollision(const MatchState &state, const VarMapping &m) {
  Phase pf = state.f.phaseRecord[m.from];
  Phase pg = state.g.phaseRecord[m.to];
  if (pf == Phase::Undetermined || pg == Phase::Undetermined)
    return false;
  Polarity expected = pf == pg ? Polarity::Positive : Polarity::Negative;
  return m.pol != expected;
}

MappingSets npn::buildMappingSets(const MatchState &state) {
  const SideState &sf = state.f, &sg = state.g;
  const FunctionInfo &inf = *sf.info, &ing = *sg.info;
  const SSVector &vf = sf.vector, &vg = sg.vector;
  unsigned n = state.numVars();

  MappingSets out;
  auto markDead = [&](unsigned subject, bool byCollision) {
    if (!out.deadSubject) {
      out.deadSubject = subject;
      out.deadByCollision = byCollision;
    }
  };

  for (unsigned i = 0; i < n; ++i) {
    if (sf.identified[i])
      continue;
    int cls = inf.classOf[i];

    if (cls < 0) {
      MappingSet set{i, false, {}};
      bool admitted = false;
      for (unsigned j = 0; j < n; ++j) {
        if (sg.identified[j] || ing.classOf[j] >= 0 ||
            vf[i].group != vg[j].group)
          continue;
        for (Polarity pol : {Polarity::Positive, Polarity::Negative}) {
          if (!countsAdmit(vf[i], vg[j], pol))
            continue;
          admitted = true;
          VarMapping m{i, j, pol};
          if (checkPhaseCollision(state, m))
            continue;
          set.candidates.push_back({j, {m}});
        }
      }
      if (set.candidates.empty())
        markDead(i, admitted);
      else
        out.sets.push_back(std::move(set));
      continue;
    }

    const SymmetryClass &cf = inf.classes[cls];
    if (cf.first() != i)
      continue;
    MappingSet set{i, true, {}};
    bool admitted = false;
    for (const SymmetryClass &cg : ing.classes) {
      if (cg.size() != cf.size())
        continue;
      unsigned j = cg.first();
      if (sg.identified[j] || vf[i].group != vg[j].group ||
          vf[i].canonical() != vg[j].canonical())
        continue;
      for (const std::vector<Polarity> &pattern : classPatterns(cf, cg)) {
        MappingCandidate cand{j, {}};
        bool countsOk = true, phasesOk = true;
        for (size_t t = 0; t < cf.size(); ++t) {
          Polarity pol = combine(pattern[t], combine(cf.relativePol[t],
                                                     cg.relativePol[t]));
          VarMapping m{cf.members[t], cg.members[t], pol};
          if (!countsAdmit(vf[m.from], vg[m.to], pol)) {
            countsOk = false;
            break;
          }
          if (checkPhaseCollision(state, m))
            phasesOk = false;
          cand.mappings.push_back(m);
        }
        if (!countsOk)
          continue;
        admitted = true;
        if (phasesOk)
          set.candidates.push_back(std::move(cand));
      }
    }
    if (set.candidates.empty())
      markDead(i, admitted);
    else
      out.sets.push_back(std::move(set));
  }
  return out;
}

const MappingSet &npn::selectMinSet(const std::vector<MappingSet> &sets) {
  if (sets.empty())
    throw std::invalid_argument("selectMinSet: no mapping sets");
  const MappingSet *best = &sets.front();
  for (const MappingSet &s : sets)
    if (s.size() < best->size())
      best = &s;
  return *best;
}

//===----------------------------------------------------------------------===//
// Tree operations
//===----------------------------------------------------------------------===//

void npn::commitMapping(MatchState &state, const VarMapping &m) {
  assert(!state.f.identified[m.from] && !state.g.identified[m.to]);
  state.mapList.push_back(m);
  state.f.identified[m.from] = true;
  state.g.identified[m.to] = true;
  state.splitQueue.push_back(m);
}

void npn::extendCubes(MatchState &state) {
  if (state.splitQueue.empty())
    throw std::logic_error("extendCubes: no pending splitting variable");
  VarMapping m = state.splitQueue.front();
  state.splitQueue.pop_front();
  Polarity side = state.f.phaseRecord[m.from] == Phase::Negative
                      ? Polarity::Negative
                      : Polarity::Positive;
  state.f.cube.push({m.from, side});
  state.g.cube.push({m.to, m.pol == Polarity::Positive ? side : !side});
}

NPTransformation
npn::transformationFromMappings(unsigned numVars,
                                const std::vector<VarMapping> &maps,
                                Polarity outputPol) {
  if (maps.size() != numVars)
    throw std::invalid_argument("transformation needs exactly " +
                                std::to_string(numVars) + " mappings, got " +
                                std::to_string(maps.size()));
  NPTransformation t;
  t.perm.assign(numVars, 0);
  t.inputPol.assign(numVars, Polarity::Positive);
  std::vector<bool> seen(numVars, false);
  for (const VarMapping &m : maps) {
    if (m.from >= numVars || m.to >= numVars || seen[m.from])
      throw std::invalid_argument("malformed mapping list");
    seen[m.from] = true;
    t.perm[m.from] = m.to;
    t.inputPol[m.from] = m.pol;
  }
  t.outputPol = outputPol;
  if (!t.isValid())
    throw std::invalid_argument("mapping list is not a permutation");
  return t;
}

bool npn::verify(const TruthTable &f, const TruthTable &g,
                 const std::vector<VarMapping> &maps) {
  NPTransformation t =
      transformationFromMappings(f.numVars(), maps, Polarity::Positive);
  return equal(applyNPTransform(f, t), g);
}

namespace {

class Search {
public:
  Search(MatchStats &stats, const MatchOptions &options)
      : stats_(stats), options_(options) {}

  std::optional<std::vector<VarMapping>> run(const MatchState &root) {
    auto r = visit(root, 0);
    if (options_.exhaustive)
      return found_;
    return r;
  }

private:
  void emit(TraceKind kind, unsigned depth, const MatchState &s,
            const MappingSets *sets = nullptr,
            const MappingCandidate *cand = nullptr, std::string reason = {},
            bool verified = false) {
    if (!options_.trace)
      return;
    TraceEvent e{kind, depth, &s, sets, cand, std::move(reason), verified};
    options_.trace(e);
  }

  bool admissible(const MatchState &s, const MappingCandidate &cand) {
    for (const VarMapping &m : cand.mappings)
      if (s.f.identified[m.from] || s.g.identified[m.to] ||
          checkPhaseCollision(s, m))
        return false;
    return true;
  }

  std::optional<std::vector<VarMapping>> visit(const MatchState &parent,
                                               unsigned depth) {
    ++stats_.nodesVisited;
    if (options_.nodeCap && stats_.nodesVisited > options_.nodeCap)
      throw BudgetExceeded(options_.nodeCap);

    MatchState s = parent;
    emit(TraceKind::Enter, depth, s);

    if (s.mapList.size() == s.numVars()) {
      ++stats_.completeBranches;
      ++stats_.verifyCalls;
      bool ok = verify(s.f.table(), s.g.table(), s.mapList);
      emit(TraceKind::Complete, depth, s, nullptr, nullptr, {}, ok);
      if (!ok)
        return std::nullopt;
      if (!found_)
        found_ = s.mapList;
      return s.mapList;
    }

    if (!update(s.f, s.g)) {
      emit(TraceKind::Prune, depth, s, nullptr, nullptr,
           "signature vectors differ");
      return std::nullopt;
    }
    emit(TraceKind::Updated, depth, s);

    MappingSets sets = buildMappingSets(s);
    emit(TraceKind::Sets, depth, s, &sets);
    if (sets.deadSubject) {
      emit(TraceKind::Prune, depth, s, &sets, nullptr,
           sets.deadByCollision
               ? "phase collision on x" + std::to_string(*sets.deadSubject)
               : "no mapping for x" + std::to_string(*sets.deadSubject));
      return std::nullopt;
    }

    bool forced = false;
    for (const MappingSet &set : sets.sets) {
      if (set.size() != 1)
        continue;
      const MappingCandidate &cand = set.candidates.front();
      if (!admissible(s, cand)) {
        emit(TraceKind::Prune, depth, s, &sets, &cand,
             "forced mappings conflict");
        return std::nullopt;
      }
      for (const VarMapping &m : cand.mappings)
        commitMapping(s, m);
      forced = true;
      emit(TraceKind::Commit, depth, s, &sets, &cand);
    }
    if (forced) {
      extendCubes(s);
      return visit(s, depth + 1);
    }

    const MappingSet &best = selectMinSet(sets.sets);
    for (const MappingCandidate &cand : best.candidates) {
      if (!admissible(s, cand))
        continue;
      MatchState child = s;
      for (const VarMapping &m : cand.mappings)
        commitMapping(child, m);
      extendCubes(child);
      emit(TraceKind::Branch, depth, child, &sets, &cand);
      auto r = visit(child, depth + 1);
      if (r && !options_.exhaustive)
        return r;
    }
    return std::nullopt;
  }

  MatchStats &stats_;
  const MatchOptions &options_;
  std::optional<std::vector<VarMapping>> found_;
};

} // namespace

std::optional<std::vector<VarMapping>>
npn::detect(MatchState &state, MatchStats &stats, const MatchOptions &options) {
  ++stats.detectCalls;
  Search search(stats, options);
  return search.run(state);
}

MatchResult npn::matchNPN(const TruthTable &f, const TruthTable &g,
                          const MatchOptions &options) {
  if (f.numVars() != g.numVars())
    throw std::invalid_argument("matchNPN: arity mismatch (" +
                                std::to_string(f.numVars()) + " vs " +
                                std::to_string(g.numVars()) + ")");
  MatchResult result;
  uint64_t total = f.numBits();
  uint64_t cf = countMinterms(f), cg = countMinterms(g);
  bool direct = cf == cg;
  bool complemented = cf == total - cg;
  if (!direct && !complemented)
    return result;

  auto infoF = FunctionInfo::analyze(f);
  auto attempt = [&](const TruthTable &target, Polarity outputPol) {
    MatchState state(infoF, FunctionInfo::analyze(target));
    auto maps = detect(state, result.stats, options);
    if (!maps)
      return false;
    result.verdict = Verdict::Equivalent;
    result.mappings = *maps;
    result.witness =
        transformationFromMappings(f.numVars(), *maps, outputPol);
    return true;
  };

  if (direct && attempt(g, Polarity::Positive))
    return result;
  if (complemented)
    attempt(negate(g), Polarity::Negative);
  return result;
}
