#pragma once

#include "ordpath/deletion.hpp"

// Two-color engines: given a complete coloring, locate a monochromatic copy
// of the requested path. Each engine is constructive and certifies its
// output; the upper-bound functions give the host size at which success is
// guaranteed by counting.

namespace ordpath {

// Least N this library can certify such that every 2-coloring of the
// complete ordered graph on [N] has a monochromatic zigzag on n vertices.
// Grows as 2n + O(sqrt(n)).
int ramsey_upper_bound_ap(int n);

// Overlap-window layout used by the zigzag engine: low window [1, a],
// high window [n, N]. a depends on the parity of n.
struct OverlapConfig {
  int n = 0, N = 0, a = 0;
};
OverlapConfig overlap_config(int n, int N);

// Protected cells of the overlap engine and their closed-form count,
// (n-2)^2/4 for even n and (n-1)(n-3)/4 for odd n.
std::vector<std::pair<int, int>> overlap_grey_edges(int n, int N, int a);
long long overlap_grey_count(int n);

// Cross edges between the two windows in the complete host, and the largest
// number of removals the schedule can make. The engine is sound whenever
// removals + grey < cross. That inequality is the whole guarantee.
long long overlap_cross_edges(int n, int N, int a);
long long overlap_removal_bound(int n, int N, int a);

StepSchedule overlap_schedule(int n, int N, int a);

// Find a monochromatic zigzag on n vertices. Guaranteed to certify when
// host.vertex_count() >= ramsey_upper_bound_ap(n).
FindResult find_mono_ap(const OrderedColoring& host, int n, const FindOptions& opt = {});

// Half-split engine for the one-sided families (pll, pgg): low half [1, M],
// high half [M+1, 2M]. Certifies when N = 2M >= 3n - 4. n must be even.
int ramsey_upper_bound_half(int n);

// Grey cells and schedule for a half-split engine; exposed for all four
// two-sided families because the bipartite extremal engine reuses them.
std::vector<std::pair<int, int>> half_grey_edges(Family f, int n, int M);
long long half_grey_count(int n);  // (n/2 - 1)^2, same for every family
StepSchedule half_schedule(Family f, int n, int M);
std::vector<ClaimWindow> half_claims(Family f, int n, int M);

FindResult find_mono_half(const OrderedColoring& host, Family f, int n, const FindOptions& opt = {});

// Family dispatcher: ap runs the overlap engine, pgl runs it on the
// reversed host and maps the certificate back (its trace stays in reversed
// coordinates and is tagged accordingly), pll and pgg run the half engine.
FindResult find_mono(const OrderedColoring& host, const PathSpec& spec, const FindOptions& opt = {});

}  // namespace ordpath
