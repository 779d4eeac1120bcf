#pragma once

#include <functional>
#include <optional>

#include "ordpath/path_spec.hpp"

// Containment tests. The path families admit a staircase dynamic program
// over cells: a copy is a chain of n-1 cells in the upper triangle where
// consecutive cells share one coordinate and the free coordinate moves in a
// direction dictated by the family and the parity of the position. The DP
// runs in O(n N^2 / 64) words and reconstructs a witness on success.

namespace ordpath {

// Lex-least witness preference is not guaranteed; the witness is
// deterministic for a fixed host and spec.
std::optional<PathCertificate> contains_path(const OrderedGraph& g, const PathSpec& spec);

// Same test inside one color class of a coloring; the certificate carries
// the color.
std::optional<PathCertificate> find_in_color(const OrderedColoring& c, Color color, const PathSpec& spec);

// Order-preserving embedding of an arbitrary ordered pattern, by DFS over
// increasing vertex maps. Exponential in principle; refuses patterns larger
// than vertex_cap. Returns the image of 1..p in increasing order.
std::optional<std::vector<int>> embed_generic(const OrderedGraph& host, const OrderedGraph& pattern,
                                              int vertex_cap = 16);

// Enumerate every order-preserving placement of the pattern on vertex
// subsets of [N]: fn(support) with support ascending. The copy's cells are
// {(support[i-1], support[j-1]) : (i,j) pattern edge}.
void for_each_placement(int N, const PathSpec& spec, const std::function<void(const std::vector<int>&)>& fn);

// Number of copies of the pattern present in g (full enumeration; meant for
// small hosts and cross-checks).
long long count_copies(const OrderedGraph& g, const PathSpec& spec);

}  // namespace ordpath
