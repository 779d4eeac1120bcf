#include <doctest.h>

#include <random>

#include "ordpath/contain.hpp"
#include "ordpath/errors.hpp"
#include "oracle.hpp"

using namespace ordpath;

namespace {

OrderedGraph random_graph(int N, double p, unsigned seed) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution flip(p);
  OrderedGraph g(N);
  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j)
      if (flip(rng)) g.add_edge(i, j);
  return g;
}

OrderedGraph complete_graph(int N) {
  OrderedGraph g(N);
  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j) g.add_edge(i, j);
  return g;
}

long long binomial(int N, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (N - k + i) / i;
  return r;
}

}  // namespace

TEST_SUITE_BEGIN("contain");

TEST_CASE("staircase DP agrees with brute-force containment on random hosts") {
  const std::vector<PathSpec> specs = {
      {Family::ap, 3},  {Family::ap, 4},  {Family::ap, 5}, {Family::pll, 4},
      {Family::pgg, 4}, {Family::pgl, 4}, {Family::pll, 6}, {Family::mono, 4},
  };
  int hits = 0, misses = 0;
  for (int N : {5, 7, 9}) {
    for (unsigned seed = 0; seed < 30; ++seed) {
      double p = 0.15 + 0.07 * (seed % 10);
      OrderedGraph g = random_graph(N, p, 1000 * N + seed);
      for (const PathSpec& spec : specs) {
        if (spec.n > N) continue;
        auto got = contains_path(g, spec);
        bool expect = oracle::contains_slow(g, spec);
        REQUIRE(got.has_value() == expect);
        if (got) {
          validate_certificate(*got, g);
          ++hits;
        } else {
          ++misses;
        }
      }
    }
  }
  // The sweep must exercise both verdicts or it proves nothing.
  CHECK(hits > 100);
  CHECK(misses > 100);
}

TEST_CASE("find_in_color agrees with brute force and respects the class") {
  for (unsigned seed = 0; seed < 40; ++seed) {
    OrderedColoring c = OrderedColoring::random(8, seed);
    for (Color col : {Color::red, Color::blue}) {
      for (const PathSpec spec : {PathSpec{Family::ap, 4}, PathSpec{Family::pgg, 4}}) {
        auto got = find_in_color(c, col, spec);
        bool expect = oracle::mono_slow(c, col, spec);
        REQUIRE(got.has_value() == expect);
        if (got) {
          CHECK(got->color == col);
          validate_certificate(*got, c);
        }
      }
    }
  }
}

TEST_CASE("complete host contains everything that fits, nothing larger") {
  OrderedGraph k6 = complete_graph(6);
  CHECK(contains_path(k6, {Family::ap, 6}).has_value());
  CHECK(!contains_path(k6, {Family::ap, 7}).has_value());
  CHECK(contains_path(k6, {Family::pll, 6}).has_value());
  CHECK(!contains_path(k6, {Family::pgg, 8}).has_value());
}

TEST_CASE("for_each_placement enumerates every support once") {
  for (int N : {4, 6, 8}) {
    for (int n : {3, 4}) {
      long long count = 0;
      std::vector<int> last;
      for_each_placement(N, {Family::ap, n}, [&](const std::vector<int>& s) {
        REQUIRE(static_cast<int>(s.size()) == n);
        CHECK(std::is_sorted(s.begin(), s.end()));
        CHECK(s.front() >= 1);
        CHECK(s.back() <= N);
        if (count > 0) CHECK(last < s);  // strictly increasing lex order, so no repeats
        last = s;
        ++count;
      });
      CHECK(count == binomial(N, n));
    }
  }
}

TEST_CASE("count_copies on the complete host is the binomial") {
  // Every n-subset of a complete host carries exactly one copy.
  for (int N : {5, 6, 7}) {
    CHECK(count_copies(complete_graph(N), {Family::ap, 4}) == binomial(N, 4));
    CHECK(count_copies(complete_graph(N), {Family::pgg, 4}) == binomial(N, 4));
  }
  OrderedGraph g(6);
  g.add_edge(1, 6);
  g.add_edge(2, 6);
  g.add_edge(2, 3);
  CHECK(count_copies(g, {Family::ap, 4}) == 1);
  g.remove_edge(2, 3);
  CHECK(count_copies(g, {Family::ap, 4}) == 0);
}

TEST_CASE("embed_generic places ordered patterns and honors its cap") {
  OrderedGraph pattern(3);
  pattern.add_edge(1, 3);
  pattern.add_edge(2, 3);
  OrderedGraph host(5);
  host.add_edge(1, 4);
  host.add_edge(3, 4);
  auto img = embed_generic(host, pattern);
  REQUIRE(img.has_value());
  REQUIRE(img->size() == 3);
  CHECK(std::is_sorted(img->begin(), img->end()));
  for (auto [a, b] : pattern.edges()) CHECK(host.has_edge((*img)[a - 1], (*img)[b - 1]));

  host.remove_edge(1, 4);
  CHECK(!embed_generic(host, pattern).has_value());

  OrderedGraph big(20);
  CHECK_THROWS_AS(embed_generic(host, big, 16), error);
}

TEST_SUITE_END();
