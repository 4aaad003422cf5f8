#pragma once

#include <cstdint>
#include <string>

#include "cubecover/dnf.hpp"

namespace cubecover {

enum class SearchStrategy { Greedy, Backtracking, Exhaustive };
enum class SearchGoal { MinSize, Uniform };
enum class SearchStatus { Tautology, BestEffort, ProvedImpossible };

std::string to_string(SearchStrategy s);
std::string to_string(SearchStatus s);

/// Exhaustive runs are only accepted when the term universe (number of
/// (support, signs) candidates) is at most this bound.
inline constexpr std::uint64_t kMaxExhaustiveUniverse = std::uint64_t{1} << 16;

inline constexpr double kDefaultBudgetSeconds = 60.0;
inline constexpr std::uint64_t kDefaultNodeLimit = std::uint64_t{1} << 32;

/// Search for a distinct DNF tautology. Candidates are supports in canonical
/// order (increasing size, then lexicographic), each usable once, with sign
/// patterns per support enumerated in Gray-code order. MinSize admits every
/// support of size >= size_bound; Uniform admits exactly size size_bound.
struct SearchConfig {
  std::uint32_t n = 1;
  std::uint32_t size_bound = 0;  // k for MinSize, m for Uniform
  SearchGoal goal = SearchGoal::MinSize;
  /// Wall-clock and node budgets; whichever trips first ends the run with
  /// BestEffort. Completed runs are unaffected and fully deterministic.
  double budget_seconds = kDefaultBudgetSeconds;
  std::uint64_t node_limit = kDefaultNodeLimit;
  /// Reserved for future stochastic strategies; echoed, never consulted.
  std::uint64_t seed = 0;
  SearchStrategy strategy = SearchStrategy::Backtracking;
  std::uint32_t workers = 1;
  /// Skip the pigeonhole shortcut and force a real search.
  bool force_search = false;
};

struct SearchOutcome {
  DnfExpression best;
  std::uint64_t uncovered_count = 0;
  SearchStatus status = SearchStatus::BestEffort;
  std::uint64_t nodes_explored = 0;
  double elapsed_seconds = 0.0;
  SearchConfig config;
};

// Strategy notes.
//
// Greedy repeatedly takes the (support, signs) candidate covering the most
// new vertices, first-in-canonical-order among ties, one term per support.
//
// Backtracking walks supports in canonical order, at each one trying sign
// patterns by decreasing fresh coverage (Gray-order among ties) and then the
// skip branch, pruning when the remaining supports cannot close the deficit
// (each unused support S contributes at most 2^(n-|S|) points). It stops at
// the first tautology.
//
// Exhaustive additionally keeps going to prove optimality: a branch is cut
// only when it cannot strictly improve the best uncovered count seen, so a
// completed run proves its best value optimal. The tree is split into
// top-level chunks explored with chunk-local bests (warm-started from
// greedy); chunk results merge by lowest uncovered count, then canonical
// order. Chunks are independent, so outcome and node count do not depend on
// the worker count. Greedy and backtracking run on one thread regardless of
// `workers`.
//
// ProvedImpossible is only ever reported from density infeasibility or from
// a completed exhaustive run.

SearchOutcome search_distinct(const SearchConfig& config);
SearchOutcome search_uniform(const SearchConfig& config);

/// Re-checks a Tautology outcome against the coverage primitives only: n
/// matches, tautology, distinct supports, size constraint. No search state
/// is consulted. Requires status == Tautology (ContractError otherwise).
bool certify(const SearchOutcome& outcome);

}  // namespace cubecover
