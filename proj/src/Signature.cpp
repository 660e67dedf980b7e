// SPDX-License-Identifier: Apache-2.0

#include "npnmatch/Signature.h"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <tuple>

using namespace npn;

std::string npn::toString(const SSVector &v) {
  std::ostringstream os;
  os << '{';
  for (size_t i = 0; i < v.size(); ++i) {
    const SSValue &s = v[i];
    if (i)
      os << ',';
    os << '(' << s.pos << ", " << s.neg << ", " << s.symSize << ", "
       << s.symFirst << ", " << s.group << ')';
  }
  os << '}';
  return os.str();
}

std::ostream &npn::operator<<(std::ostream &os, const SSVector &v) {
  return os << toString(v);
}

std::string npn::toString(std::span<const Phase> phases) {
  std::string s = "{";
  for (size_t i = 0; i < phases.size(); ++i) {
    if (i)
      s += ", ";
    s += std::to_string(static_cast<int>(phases[i]));
  }
  return s + "}";
}

std::shared_ptr<const FunctionInfo> FunctionInfo::analyze(TruthTable f) {
  auto info = std::make_shared<FunctionInfo>();
  info->classes = buildSymmetryClasses(f);
  info->classOf.assign(f.numVars(), -1);
  for (size_t c = 0; c < info->classes.size(); ++c)
    for (unsigned m : info->classes[c].members)
      info->classOf[m] = static_cast<int>(c);
  info->table = std::move(f);
  return info;
}

CofactorCounts npn::firstOrderValue(const TruthTable &f, const Cube &cube,
                                    unsigned i) {
  if (i >= f.numVars())
    throw std::out_of_range("firstOrderValue: variable out of range");
  if (cube.contains(i))
    throw std::invalid_argument("firstOrderValue: x" + std::to_string(i) +
                                " is constrained by the cube");
  Cube withPos = cube, withNeg = cube;
  withPos.push(pos(i));
  withNeg.push(neg(i));
  return {countMinterms(f, withPos), countMinterms(f, withNeg)};
}

SSVector npn::computeSSVector(const FunctionInfo &info, const Cube &cube,
                              const std::vector<bool> &identified,
                              const SSVector *prev) {
  const TruthTable &f = info.table;
  unsigned n = f.numVars();
  if (identified.size() != n)
    throw std::invalid_argument("computeSSVector: identified flags size");
  if (prev && prev->size() != n)
    throw std::invalid_argument("computeSSVector: previous vector size");

  std::vector<CofactorCounts> counts = cofactorCounts(f, cube);
  SSVector v;
  v.values.resize(n);
  for (unsigned i = 0; i < n; ++i) {
    SSValue &s = v[i];
    s.identified = identified[i];
    if (!s.identified) {
      s.pos = counts[i].pos;
      s.neg = counts[i].neg;
    }
    if (int c = info.classOf[i]; c >= 0) {
      s.symSize = static_cast<int>(info.classes[c].size());
      s.symFirst = static_cast<int>(info.classes[c].first());
    }
  }

  using Key = std::pair<uint64_t, uint64_t>;
  if (!prev) {
    std::map<Key, unsigned, std::greater<Key>> order;
    for (unsigned i = 0; i < n; ++i)
      order.emplace(v[i].canonical(), 0);
    unsigned next = 0;
    for (auto &[key, id] : order)
      id = next++;
    for (unsigned i = 0; i < n; ++i)
      v[i].group = order.at(v[i].canonical());
    return v;
  }

  unsigned fresh = 0;
  for (const SSValue &s : prev->values)
    fresh = std::max(fresh, s.group + 1);

  // old group -> canonical values of its unidentified members, descending
  std::map<unsigned, std::map<Key, unsigned, std::greater<Key>>> parts;
  for (unsigned i = 0; i < n; ++i) {
    v[i].group = (*prev)[i].group;
    if (!v[i].identified)
      parts[v[i].group].emplace(v[i].canonical(), 0);
  }
  for (auto &[group, keys] : parts) {
    bool first = true;
    for (auto &[key, id] : keys) {
      id = first ? group : fresh++;
      first = false;
    }
  }
  for (unsigned i = 0; i < n; ++i)
    if (!v[i].identified)
      v[i].group = parts.at(v[i].group).at(v[i].canonical());
  return v;
}

std::vector<Phase> npn::determinePhases(const SSVector &v,
                                        const std::vector<bool> &identified,
                                        std::span<const Phase> recorded) {
  std::vector<Phase> phases(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    if (identified[i])
      phases[i] = i < recorded.size() ? recorded[i] : Phase::Undetermined;
    else
      phases[i] = phaseOf(v[i].pos, v[i].neg);
  }
  return phases;
}

bool npn::vectorsCompatible(const SSVector &vf, const SSVector &vg) {
  if (vf.size() != vg.size())
    throw std::invalid_argument("vectorsCompatible: arity mismatch");
  using Entry = std::tuple<unsigned, bool, uint64_t, uint64_t, int>;
  auto entries = [](const SSVector &v) {
    std::vector<Entry> out;
    out.reserve(v.size());
    for (const SSValue &s : v.values) {
      auto [hi, lo] = s.canonical();
      out.emplace_back(s.group, s.identified, hi, lo, s.symSize);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  return entries(vf) == entries(vg);
}

SideState::SideState(std::shared_ptr<const FunctionInfo> info)
    : info(std::move(info)) {
  unsigned n = this->info->table.numVars();
  identified.assign(n, false);
  phases.assign(n, Phase::Undetermined);
  phaseRecord.assign(n, Phase::Undetermined);
}

bool SideState::operator==(const SideState &other) const {
  return info == other.info && cube == other.cube &&
         identified == other.identified && vector == other.vector &&
         phases == other.phases && phaseRecord == other.phaseRecord;
}

namespace {

void refresh(SideState &side) {
  const SSVector *prev = side.vector.size() ? &side.vector : nullptr;
  SSVector next = computeSSVector(*side.info, side.cube, side.identified, prev);
  side.vector = std::move(next);
  side.phases = determinePhases(side.vector, side.identified, side.phaseRecord);
  for (size_t i = 0; i < side.phases.size(); ++i)
    if (!side.identified[i] && side.phaseRecord[i] == Phase::Undetermined)
      side.phaseRecord[i] = side.phases[i];
}

} // namespace

bool npn::update(SideState &f, SideState &g) {
  refresh(f);
  refresh(g);
  return vectorsCompatible(f.vector, g.vector);
}
