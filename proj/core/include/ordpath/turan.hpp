#pragma once

#include "ordpath/deletion.hpp"

// Extremal-number machinery: the largest edge count of an ordered graph on
// [N] with no copy of the pattern, engines that extract a copy from any
// graph above the threshold, and the matching extremal constructions.

namespace ordpath {

// Exact extremal number for the zigzag: C(n-1, 2) + (n-2)(N-n+1) for
// N >= n, and C(N, 2) below that since no copy fits at all.
long long turan_number_ap(int N, int n);

// Dense-host engine: any graph with more than turan_number_ap(N, n) edges
// contains a zigzag on n vertices, found by deletion with backtracking.
std::vector<std::pair<int, int>> dense_grey_edges(int N, int n);
StepSchedule dense_schedule(int N, int n);
FindResult find_ap_in_dense(const OrderedGraph& host, int n, const FindOptions& opt = {});

// The two extremal families meeting turan_number_ap exactly. The star graph
// takes every edge touching the outer vertex blocks; the band graph every
// edge of spread at most n-2.
OrderedGraph extremal_star(int N, int n);
OrderedGraph extremal_band(int N, int n);

// Bipartite extremal number between the halves [1, M] and [M+1, 2M = N],
// the same value (n/2 - 1)(N - n/2 + 1) for all four two-sided families.
long long bipartite_turan_number(int N, int n);

// Extremal bipartite host for the family: n/2 - 1 full rows plus n/2 - 1
// full columns, placed at the corners the family cannot stack into a path.
// Its edge count meets bipartite_turan_number exactly.
OrderedGraph extremal_bipartite(int N, int n, Family f);

// Engine over bipartite hosts (edges only between the halves). One
// uncolored removal per processed vertex per step.
FindResult find_path_bipartite(const OrderedGraph& host, Family f, int n, const FindOptions& opt = {});

// Halving recursion for the one-sided families: audit of the bound
// ex(N) <= 2 ex(N/2) + bipartite term, unrolled at the power-of-two ceiling
// above N. `bound` is the closed-form cap 2^{t-1} n^2 (t+1) with
// t = 1 + floor(log2(N/n)); `refined` is the sharper (1/2) n N t available
// when N is exactly 2^{t-1} n.
struct LogBoundLevel {
  int subproblems = 0;        // graphs split at this level
  int size = 0;               // their order
  long long bipartite_each = 0;
};
struct LogBoundAudit {
  int N = 0, n = 0, t = 0;
  long long bound = 0;
  std::optional<long long> refined;
  std::vector<LogBoundLevel> levels;
  int leaf_subproblems = 0;
  long long leaf_each = 0;      // C(n, 2), the trivial base cap
  long long recursion_total = 0;  // leaves + levels, at the ceiling order
};
LogBoundAudit turan_log_bound(int N, int n);

}  // namespace ordpath
