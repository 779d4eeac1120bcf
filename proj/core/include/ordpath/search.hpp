#pragma once

#include <cstdint>
#include <optional>

#include "ordpath/path_spec.hpp"

// Exhaustive engines over small hosts. Both searches precompute every
// placement of the pattern as an edge-id bitmask with a per-cell incidence
// index, so deciding a cell only re-examines the placements through it.

namespace ordpath {

enum class SearchOutcome : std::uint8_t {
  witness_found,   // an object with the requested property exists
  exhausted,       // the full space was covered; no such object
  resource_limit,  // node budget ran out first
};

const char* outcome_name(SearchOutcome o);

struct SearchOptions {
  std::uint64_t node_budget = 1'000'000'000;  // decision nodes before giving up
  // Witness search only: > 1 splits the tree into prefix subtrees at
  // split_depth and farms them out. The extremal search shares its incumbent
  // bound across the whole tree and stays single-threaded.
  int threads = 1;
  int split_depth = 8;
  // Re-verify every leaf with the containment DP instead of trusting the
  // incremental placement bookkeeping. Debug aid; very slow.
  bool full_recheck = false;
};

struct RamseyWitness {
  OrderedColoring coloring;   // no monochromatic copy in either class
};

struct RamseySearchResult {
  SearchOutcome outcome = SearchOutcome::exhausted;
  std::optional<RamseyWitness> witness;
  std::uint64_t nodes = 0;
};

// Look for a 2-coloring of the complete ordered graph on [N] avoiding a
// monochromatic copy of the pattern. exhausted means none exists, i.e. the
// ordered Ramsey number is <= N.
RamseySearchResult search_ramsey_witness(int N, const PathSpec& spec, const SearchOptions& opt = {});

// Exact ordered Ramsey number by scanning N upward until the witness search
// exhausts. Throws window_miss if the scan leaves its window without
// settling, resource_limit if a probe runs out of budget.
struct ExactRamsey {
  int value = 0;
  std::optional<RamseyWitness> witness;  // at value - 1; absent when value <= 2
  std::uint64_t nodes = 0;               // total over all probes
};
ExactRamsey compute_ramsey_exact(const PathSpec& spec, const SearchOptions& opt = {});

struct TuranSearchResult {
  SearchOutcome outcome = SearchOutcome::exhausted;
  long long max_edges = -1;   // best pattern-free edge count seen
  OrderedGraph best;          // a graph attaining max_edges
  std::uint64_t nodes = 0;
};

// Maximum edge count of a pattern-free ordered graph on [N], by
// branch-and-bound over cells, seeded with the known constructions when the
// pattern is a zigzag. exhausted means max_edges is exact.
TuranSearchResult search_turan_max(int N, const PathSpec& spec, const SearchOptions& opt = {});

// Same search restricted to graphs whose edges all cross the halves [1, N/2]
// and [N/2+1, N]. N must be even.
TuranSearchResult search_turan_max_bipartite(int N, const PathSpec& spec, const SearchOptions& opt = {});

}  // namespace ordpath
