#include "ordpath/graph.hpp"

#include <random>

#include "ordpath/errors.hpp"

namespace ordpath {

const char* color_name(Color c) { return c == Color::red ? "red" : "blue"; }

long long cell_count(int N) {
  if (N < 0) fail(errc::invalid_argument, "negative vertex count");
  return static_cast<long long>(N) * (N - 1) / 2;
}

long long edge_id(int N, int i, int j) {
  if (!(1 <= i && i < j && j <= N))
    fail(errc::invalid_argument, "edge_id needs 1 <= i < j <= N");
  // Rank of (i, j) in lexicographic order: full rows above i, then offset.
  return static_cast<long long>(i - 1) * (2 * N - i) / 2 + (j - i - 1);
}

std::pair<int, int> edge_from_id(int N, long long id) {
  if (id < 0 || id >= cell_count(N)) fail(errc::invalid_argument, "edge id out of range");
  long long rest = id;
  for (int i = 1; i < N; ++i) {
    long long row = N - i;
    if (rest < row) return {i, i + 1 + static_cast<int>(rest)};
    rest -= row;
  }
  fail(errc::internal, "edge_from_id fell off the triangle");
}

OrderedGraph::OrderedGraph(int n) : n_(n), w_(bits::words_for(n > 0 ? n : 1)) {
  if (n < 1) fail(errc::invalid_argument, "graph needs at least one vertex");
  adj_.assign(std::size_t(n_) * w_, 0);
}

void OrderedGraph::check_pair(int u, int v) const {
  if (u < 1 || v < 1 || u > n_ || v > n_ || u == v)
    fail(errc::invalid_argument, "vertex pair out of range");
}

bool OrderedGraph::has_edge(int u, int v) const {
  check_pair(u, v);
  return bits::test(row(u), v - 1);
}

void OrderedGraph::add_edge(int u, int v) {
  check_pair(u, v);
  bits::set(mrow(u), v - 1);
  bits::set(mrow(v), u - 1);
}

void OrderedGraph::remove_edge(int u, int v) {
  check_pair(u, v);
  bits::clear(mrow(u), v - 1);
  bits::clear(mrow(v), u - 1);
}

long long OrderedGraph::edge_count() const {
  long long twice = 0;
  for (int v = 1; v <= n_; ++v) twice += bits::popcount(row(v), w_);
  return twice / 2;
}

std::vector<std::pair<int, int>> OrderedGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 1; u <= n_; ++u)
    bits::for_each(row(u), w_, [&](int b) {
      if (b + 1 > u) out.emplace_back(u, b + 1);
    });
  return out;
}

OrderedGraph OrderedGraph::reversed() const {
  OrderedGraph r(n_);
  for (auto [u, v] : edges()) r.add_edge(n_ + 1 - v, n_ + 1 - u);
  return r;
}

OrderedGraph OrderedGraph::complement() const {
  OrderedGraph c(n_);
  for (int u = 1; u < n_; ++u)
    for (int v = u + 1; v <= n_; ++v)
      if (!has_edge(u, v)) c.add_edge(u, v);
  return c;
}

OrderedColoring::OrderedColoring(int n) : n_(n), red_(n) {}

Color OrderedColoring::color(int u, int v) const {
  return red_.has_edge(u, v) ? Color::red : Color::blue;
}

void OrderedColoring::set_color(int u, int v, Color c) {
  if (c == Color::red)
    red_.add_edge(u, v);
  else
    red_.remove_edge(u, v);
}

OrderedGraph OrderedColoring::color_class(Color c) const {
  return c == Color::red ? red_ : red_.complement();
}

OrderedColoring OrderedColoring::reversed() const {
  OrderedColoring r(n_);
  r.red_ = red_.reversed();
  return r;
}

OrderedColoring OrderedColoring::swapped() const {
  OrderedColoring s(n_);
  s.red_ = red_.complement();
  return s;
}

OrderedColoring OrderedColoring::random(int n, std::uint64_t seed) {
  OrderedColoring c(n);
  std::mt19937_64 rng(seed);
  for (int u = 1; u < n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (rng() & 1u) c.set_color(u, v, Color::red);
  return c;
}

}  // namespace ordpath
