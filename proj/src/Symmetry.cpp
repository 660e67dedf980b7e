// SPDX-License-Identifier: Apache-2.0

#include "npnmatch/Symmetry.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

using namespace npn;

bool npn::isInvariantUnderSwap(const TruthTable &f, unsigned i, unsigned j,
                               Polarity rel) {
  if (rel == Polarity::Positive)
    return f.swapVars(i, j) == f;
  return f.flipVar(i).flipVar(j).swapVars(i, j) == f;
}

SymmetryKind npn::areSymmetric(const TruthTable &f, unsigned i, unsigned j) {
  if (i >= f.numVars() || j >= f.numVars())
    throw std::out_of_range("areSymmetric: variable out of range");
  if (i == j)
    throw std::invalid_argument("areSymmetric: needs two distinct variables");
  if (isInvariantUnderSwap(f, i, j, Polarity::Positive))
    return SymmetryKind::Identical;
  if (isInvariantUnderSwap(f, i, j, Polarity::Negative))
    return SymmetryKind::Opposite;
  return SymmetryKind::None;
}

namespace {

struct Edge {
  unsigned to;
  Polarity rel;
};

} // namespace

std::vector<SymmetryClass>
npn::buildSymmetryClasses(const TruthTable &f,
                          std::span<const CofactorCounts> counts) {
  unsigned n = f.numVars();
  if (counts.size() != n)
    throw std::invalid_argument("buildSymmetryClasses: count vector size");

  std::map<std::pair<uint64_t, uint64_t>, std::vector<unsigned>> buckets;
  for (unsigned i = 0; i < n; ++i) {
    auto [a, b] = std::minmax(counts[i].pos, counts[i].neg);
    buckets[{b, a}].push_back(i);
  }

  std::vector<std::vector<Edge>> adjacent(n);
  std::vector<unsigned> parent(n);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](unsigned x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };

  for (const auto &[key, vars] : buckets) {
    for (size_t a = 0; a < vars.size(); ++a) {
      for (size_t b = a + 1; b < vars.size(); ++b) {
        unsigned i = vars[a], j = vars[b];
        // Already connected pairs follow by transitivity.
        if (find(i) == find(j))
          continue;
        SymmetryKind kind = areSymmetric(f, i, j);
        if (kind == SymmetryKind::None)
          continue;
        Polarity rel = kind == SymmetryKind::Identical ? Polarity::Positive
                                                       : Polarity::Negative;
        adjacent[i].push_back({j, rel});
        adjacent[j].push_back({i, rel});
        unsigned ri = find(i), rj = find(j);
        parent[std::max(ri, rj)] = std::min(ri, rj);
      }
    }
  }

  std::vector<SymmetryClass> classes;
  std::vector<bool> seen(n, false);
  for (unsigned root = 0; root < n; ++root) {
    if (seen[root] || adjacent[root].empty())
      continue;

    // Relative polarities along a spanning tree rooted at the smallest member.
    std::vector<Polarity> rel(n, Polarity::Positive);
    std::vector<unsigned> component{root}, stack{root};
    seen[root] = true;
    while (!stack.empty()) {
      unsigned v = stack.back();
      stack.pop_back();
      for (const Edge &e : adjacent[v]) {
        if (seen[e.to])
          continue;
        seen[e.to] = true;
        rel[e.to] = e.rel == Polarity::Positive ? rel[v] : !rel[v];
        component.push_back(e.to);
        stack.push_back(e.to);
      }
    }
    std::sort(component.begin(), component.end());

    SymmetryClass cls;
    cls.members.push_back(root);
    cls.relativePol.push_back(Polarity::Positive);
    for (size_t k = 1; k < component.size(); ++k) {
      unsigned m = component[k];
      if (!isInvariantUnderSwap(f, root, m, rel[m]))
        continue;
      cls.members.push_back(m);
      cls.relativePol.push_back(rel[m]);
    }
    if (cls.members.size() < 2)
      continue;

    cls.pairNegationInvariant = true;
    for (size_t k = 1; k < cls.members.size(); ++k) {
      if (cls.relativePol[k] != Polarity::Positive ||
          !isInvariantUnderSwap(f, root, cls.members[k], Polarity::Negative)) {
        cls.pairNegationInvariant = false;
        break;
      }
    }
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<SymmetryClass> npn::buildSymmetryClasses(const TruthTable &f) {
  return buildSymmetryClasses(f, cofactorCounts(f));
}
