#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ordpath/bits.hpp"

// Ordered graphs on the vertex set {1, ..., N}. The order of the vertices is
// part of the structure: a copy of a pattern must preserve it. Vertices are
// 1-based everywhere in the API; bit index v-1 stands for vertex v.

namespace ordpath {

enum class Color : std::uint8_t { red, blue };

inline Color other(Color c) { return c == Color::red ? Color::blue : Color::red; }
const char* color_name(Color c);

// Cells are the edge slots of the complete ordered graph: pairs (i, j) with
// 1 <= i < j <= N, ordered lexicographically. edge_id is their rank.
long long cell_count(int N);
long long edge_id(int N, int i, int j);
std::pair<int, int> edge_from_id(int N, long long id);

class OrderedGraph {
 public:
  OrderedGraph() = default;
  explicit OrderedGraph(int n);

  int vertex_count() const { return n_; }
  int words_per_row() const { return w_; }

  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  long long edge_count() const;
  std::vector<std::pair<int, int>> edges() const;  // lexicographic

  // Full symmetric adjacency row of v as a bit array (w_ words).
  const std::uint64_t* row(int v) const { return adj_.data() + std::size_t(v - 1) * w_; }

  OrderedGraph reversed() const;    // relabel through v -> n+1-v
  OrderedGraph complement() const;  // loopless complement

  bool operator==(const OrderedGraph&) const = default;

 private:
  void check_pair(int u, int v) const;
  std::uint64_t* mrow(int v) { return adj_.data() + std::size_t(v - 1) * w_; }

  int n_ = 0;
  int w_ = 0;
  std::vector<std::uint64_t> adj_;
};

// A 2-coloring of all cells of the complete ordered graph on [n]. Stored as
// the red class; blue is its loopless complement.
class OrderedColoring {
 public:
  OrderedColoring() = default;
  explicit OrderedColoring(int n);  // starts all blue

  int vertex_count() const { return n_; }

  Color color(int u, int v) const;
  void set_color(int u, int v, Color c);

  const OrderedGraph& red() const { return red_; }
  OrderedGraph color_class(Color c) const;

  OrderedColoring reversed() const;
  OrderedColoring swapped() const;  // red <-> blue

  // Deterministic coloring from a seed; every cell is a fair coin flip.
  static OrderedColoring random(int n, std::uint64_t seed);

  bool operator==(const OrderedColoring&) const = default;

 private:
  int n_ = 0;
  OrderedGraph red_;
};

}  // namespace ordpath
