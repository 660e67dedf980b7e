// SPDX-License-Identifier: Apache-2.0
//
// NPN Boolean matching by signature-guided transformation search.
//
// The search walks a tree of partial variable mappings. At every node both
// functions are restricted by the cubes built from already mapped variables,
// their SS vectors are recomputed and compared, and the variables whose
// mapping is forced (a single candidate) are committed at once. Only when no
// mapping is forced does the search branch, over the smallest candidate set.
// A branch dies when the SS vectors stop agreeing or when a mapping would
// contradict the phase relation recorded earlier for its two variables.
//
#pragma once

#include "npnmatch/Signature.h"
#include "npnmatch/TruthTable.h"

#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace npn {

/// i -> j - k: x_i of f corresponds to x_j of g, with identical (k = 0,
/// Positive) or opposite (k = 1, Negative) phase.
struct VarMapping {
  unsigned from = 0;
  unsigned to = 0;
  Polarity pol = Polarity::Positive;

  bool operator==(const VarMapping &) const = default;
};

/// "2->5-1"
std::string toString(const VarMapping &m);

/// One way to resolve a mapping set: a single variable mapping, or the
/// member-by-member mappings of a symmetry-class correspondence.
struct MappingCandidate {
  /// Target variable, or the first member of the target class.
  unsigned target = 0;
  std::vector<VarMapping> mappings;

  bool operator==(const MappingCandidate &) const = default;
};

struct MappingSet {
  /// Variable of f, or the first member of a class of f.
  unsigned subject = 0;
  bool symmetric = false;
  std::vector<MappingCandidate> candidates;

  size_t size() const { return candidates.size(); }
};

struct MappingSets {
  std::vector<MappingSet> sets;
  /// Set when some unidentified subject has no candidate left.
  std::optional<unsigned> deadSubject;
  /// The dead subject had candidates that were all removed by phase
  /// collisions.
  bool deadByCollision = false;
};

struct MatchStats {
  uint64_t nodesVisited = 0;
  uint64_t detectCalls = 0;
  uint64_t verifyCalls = 0;
  uint64_t completeBranches = 0;

  bool operator==(const MatchStats &) const = default;
};

/// Live search state of one branch of the transformation tree.
struct MatchState {
  SideState f;
  SideState g;
  std::vector<VarMapping> mapList;
  std::deque<VarMapping> splitQueue;

  MatchState(std::shared_ptr<const FunctionInfo> f,
             std::shared_ptr<const FunctionInfo> g);

  unsigned numVars() const { return f.numVars(); }
  bool operator==(const MatchState &) const = default;
};

enum class TraceKind {
  /// A node was entered; vectors not yet updated.
  Enter,
  /// SS vectors recomputed under the current cubes.
  Updated,
  /// Mapping sets built for the node.
  Sets,
  /// A forced mapping (or class correspondence) was committed.
  Commit,
  /// A candidate of the minimum set is about to be explored.
  Branch,
  /// The branch was pruned; `reason` says why.
  Prune,
  /// All variables mapped; `verified` holds the outcome.
  Complete,
};

struct TraceEvent {
  TraceKind kind;
  unsigned depth = 0;
  const MatchState *state = nullptr;
  const MappingSets *sets = nullptr;
  const MappingCandidate *candidate = nullptr;
  std::string reason;
  bool verified = false;
};

using TraceSink = std::function<void(const TraceEvent &)>;

struct MatchOptions {
  /// Upper bound on visited tree nodes; 0 means unlimited.
  uint64_t nodeCap = 0;
  /// Keep searching after the first verified transformation, counting
  /// every complete branch of the tree.
  bool exhaustive = false;
  TraceSink trace;
};

/// Raised when a search visits more nodes than MatchOptions::nodeCap allows.
class BudgetExceeded : public std::runtime_error {
public:
  explicit BudgetExceeded(uint64_t cap)
      : std::runtime_error("node budget of " + std::to_string(cap) +
                           " exceeded"),
        cap_(cap) {}
  uint64_t cap() const { return cap_; }

private:
  uint64_t cap_;
};

enum class Verdict { Equivalent, NonEquivalent };

struct MatchResult {
  Verdict verdict = Verdict::NonEquivalent;
  /// Present iff equivalent; applyNPTransform(f, *witness) == g.
  std::optional<NPTransformation> witness;
  /// The witness in the order the search committed the mappings.
  std::vector<VarMapping> mappings;
  MatchStats stats;
};

/// Candidate sets for every unidentified asymmetric variable and every
/// unmapped symmetry class of f. Candidates that violate a phase record are
/// left out.
MappingSets buildMappingSets(const MatchState &state);

/// The first set of minimum size (sets are ordered by subject).
const MappingSet &selectMinSet(const std::vector<MappingSet> &sets);

/// True when both variables have a recorded phase and the mapping's
/// polarity contradicts the relation between the records.
bool checkPhaseCollision(const MatchState &state, const VarMapping &m);

/// Appends the mapping, marks both variables identified and queues it as a
/// future splitting variable.
void commitMapping(MatchState &state, const VarMapping &m);

/// Pops the oldest queued mapping i -> j - k and restricts both cubes by it:
/// x_i on its majority side (positive when undetermined), x_j on the same side
/// for k = 0 and the other side for k = 1.
void extendCubes(MatchState &state);

/// Transformation that maps x_i to x_j (complemented when k = 1) for every
/// i -> j - k in the list.
NPTransformation transformationFromMappings(unsigned numVars,
                                            const std::vector<VarMapping> &maps,
                                            Polarity outputPol);

/// applyNPTransform(f, T(maps)) == g. Throws std::invalid_argument unless the
/// list maps every variable.
bool verify(const TruthTable &f, const TruthTable &g,
            const std::vector<VarMapping> &maps);

/// Depth-first transformation search from `state`. Returns the first
/// verified transformation (positive output) in search order. `state` is left
/// exactly as it was on entry.
std::optional<std::vector<VarMapping>> detect(MatchState &state,
                                              MatchStats &stats,
                                              const MatchOptions &options = {});

/// Decides NPN equivalence of f and g. The zeroth-order signature picks
/// which of g and !g is searched; balanced functions try both.
MatchResult matchNPN(const TruthTable &f, const TruthTable &g,
                     const MatchOptions &options = {});

/// "T = {2->5-1, 0->0-1}; output=pos"
std::string formatWitness(const std::vector<VarMapping> &maps,
                          Polarity outputPol);

} // namespace npn
