#include <doctest.h>

#include "ordpath/bits.hpp"
#include "ordpath/errors.hpp"
#include "ordpath/graph.hpp"

using namespace ordpath;

TEST_SUITE_BEGIN("graph");

TEST_CASE("cell ids are the lexicographic rank and invert cleanly") {
  CHECK(cell_count(1) == 0);
  CHECK(cell_count(2) == 1);
  CHECK(cell_count(6) == 15);
  CHECK(edge_id(6, 1, 2) == 0);
  CHECK(edge_id(6, 1, 6) == 4);
  CHECK(edge_id(6, 2, 3) == 5);
  CHECK(edge_id(6, 5, 6) == 14);
  for (int N = 1; N <= 12; ++N) {
    long long id = 0;
    for (int i = 1; i <= N; ++i)
      for (int j = i + 1; j <= N; ++j, ++id) {
        CHECK(edge_id(N, i, j) == id);
        CHECK(edge_from_id(N, id) == std::pair{i, j});
      }
    CHECK(id == cell_count(N));
  }
}

TEST_CASE("cell ids reject malformed pairs") {
  CHECK_THROWS_AS(edge_id(5, 3, 3), error);
  CHECK_THROWS_AS(edge_id(5, 0, 2), error);
  CHECK_THROWS_AS(edge_id(5, 2, 6), error);
  CHECK_THROWS_AS(edge_from_id(5, -1), error);
  CHECK_THROWS_AS(edge_from_id(5, 10), error);
}

TEST_CASE("graph edit and query") {
  OrderedGraph g(5);
  CHECK(g.edge_count() == 0);
  g.add_edge(1, 4);
  g.add_edge(2, 3);
  g.add_edge(4, 5);
  CHECK(g.has_edge(1, 4));
  CHECK(!g.has_edge(1, 5));
  CHECK(g.edge_count() == 3);
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{1, 4}, {2, 3}, {4, 5}});
  g.remove_edge(2, 3);
  CHECK(!g.has_edge(2, 3));
  CHECK(g.edge_count() == 2);
  CHECK_THROWS_AS(g.add_edge(2, 2), error);
  CHECK_THROWS_AS(g.has_edge(0, 3), error);
}

TEST_CASE("reversal relabels through v -> n+1-v") {
  OrderedGraph g(6);
  g.add_edge(1, 2);
  g.add_edge(3, 6);
  OrderedGraph r = g.reversed();
  CHECK(r.edge_count() == 2);
  CHECK(r.has_edge(5, 6));  // image of (1, 2)
  CHECK(r.has_edge(1, 4));  // image of (3, 6)
  CHECK(r.reversed() == g);
}

TEST_CASE("complement partitions the cells") {
  OrderedGraph g(6);
  g.add_edge(2, 5);
  g.add_edge(1, 6);
  OrderedGraph co = g.complement();
  CHECK(co.edge_count() == cell_count(6) - 2);
  CHECK(!co.has_edge(2, 5));
  CHECK(co.has_edge(1, 2));
  CHECK(co.complement() == g);
}

TEST_CASE("coloring stores red and derives blue") {
  OrderedColoring c(4);
  CHECK(c.color(1, 2) == Color::blue);
  c.set_color(1, 2, Color::red);
  c.set_color(3, 4, Color::red);
  CHECK(c.color(1, 2) == Color::red);
  OrderedGraph red = c.color_class(Color::red);
  OrderedGraph blue = c.color_class(Color::blue);
  CHECK(red.edge_count() + blue.edge_count() == cell_count(4));
  CHECK(red.has_edge(3, 4));
  CHECK(blue.has_edge(1, 3));
  CHECK(c.swapped().color(1, 2) == Color::blue);
  CHECK(c.swapped().swapped() == c);
  CHECK(c.reversed().color(3, 4) == Color::red);  // image of (1, 2)
}

TEST_CASE("seeded colorings are reproducible") {
  OrderedColoring a = OrderedColoring::random(10, 42);
  OrderedColoring b = OrderedColoring::random(10, 42);
  OrderedColoring d = OrderedColoring::random(10, 43);
  CHECK(a == b);
  CHECK(a != d);
  long long reds = a.color_class(Color::red).edge_count();
  CHECK(reds > 0);
  CHECK(reds < cell_count(10));
}

TEST_CASE("bit helpers") {
  std::uint64_t w[2] = {0, 0};
  bits::set(w, 3);
  bits::set(w, 70);
  bits::set(w, 64);
  CHECK(bits::test(w, 3));
  CHECK(bits::test(w, 70));
  CHECK(!bits::test(w, 4));
  CHECK(bits::popcount(w, 2) == 3);
  CHECK(bits::lowest(w, 2) == 3);
  CHECK(bits::highest(w, 2) == 70);
  bits::clear(w, 3);
  CHECK(bits::lowest(w, 2) == 64);

  std::uint64_t r[2] = {0, 0};
  bits::set_range(r, 5, 68);
  CHECK(bits::popcount(r, 2) == 64);
  CHECK(bits::lowest(r, 2) == 5);
  CHECK(bits::highest(r, 2) == 68);

  std::uint64_t below[2], above[2];
  bits::and_below(below, r, 2, 64);   // strictly below 64
  CHECK(bits::highest(below, 2) == 63);
  bits::and_above(above, r, 2, 63);   // strictly above 63
  CHECK(bits::lowest(above, 2) == 64);
  CHECK(bits::popcount(below, 2) + bits::popcount(above, 2) == 64);  // exact split at the 63/64 cut

  int seen = 0, last = -1;
  bits::for_each(r, 2, [&](int b) {
    CHECK(b > last);
    last = b;
    ++seen;
  });
  CHECK(seen == 64);
}

TEST_SUITE_END();
