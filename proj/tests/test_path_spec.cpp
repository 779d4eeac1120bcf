#include <doctest.h>

#include <algorithm>

#include "ordpath/errors.hpp"
#include "ordpath/path_spec.hpp"
#include "oracle.hpp"

using namespace ordpath;

TEST_SUITE_BEGIN("path-spec");

TEST_CASE("family names round trip") {
  for (Family f : {Family::ap, Family::pll, Family::pgg, Family::pgl, Family::mono}) {
    auto back = family_from_name(family_name(f));
    REQUIRE(back.has_value());
    CHECK(*back == f);
  }
  CHECK(!family_from_name("zigzag").has_value());
  CHECK(family_needs_even(Family::pll));
  CHECK(family_needs_even(Family::pgg));
  CHECK(family_needs_even(Family::pgl));
  CHECK(!family_needs_even(Family::ap));
  CHECK(!family_needs_even(Family::mono));
}

TEST_CASE("spec validation") {
  CHECK_NOTHROW(validate_spec({Family::ap, 3}));
  CHECK_NOTHROW(validate_spec({Family::pll, 4}));
  CHECK_THROWS_AS(validate_spec({Family::ap, 1}), error);
  CHECK_THROWS_AS(validate_spec({Family::pll, 5}), error);
  CHECK_THROWS_AS(validate_spec({Family::pgg, 7}), error);
  CHECK_THROWS_AS(validate_spec({Family::pgl, 3}), error);
}

TEST_CASE("traversals match an independent two-pointer construction") {
  CHECK(traversal({Family::ap, 3}) == std::vector<int>{1, 3, 2});
  CHECK(traversal({Family::ap, 7}) == std::vector<int>{1, 7, 2, 6, 3, 5, 4});
  CHECK(traversal({Family::pll, 4}) == std::vector<int>{1, 3, 2, 4});
  CHECK(traversal({Family::pgg, 4}) == std::vector<int>{2, 4, 1, 3});
  CHECK(traversal({Family::pgl, 4}) == std::vector<int>{2, 3, 1, 4});
  CHECK(traversal({Family::mono, 5}) == std::vector<int>{1, 2, 3, 4, 5});
  for (int n = 2; n <= 16; ++n) {
    for (Family f : {Family::ap, Family::pll, Family::pgg, Family::pgl, Family::mono}) {
      if (family_needs_even(f) && n % 2 != 0) continue;
      PathSpec spec{f, n};
      std::vector<int> t = traversal(spec);
      CHECK(t == oracle::traversal(spec));
      std::vector<int> sorted = t;
      std::sort(sorted.begin(), sorted.end());
      for (int i = 0; i < n; ++i) CHECK(sorted[i] == i + 1);  // a permutation of [n]
    }
  }
}

TEST_CASE("path edges are the consecutive traversal pairs, sorted") {
  std::vector<std::pair<int, int>> ap4 = path_edges({Family::ap, 4});
  CHECK(ap4 == std::vector<std::pair<int, int>>{{1, 4}, {2, 3}, {2, 4}});
  for (int n = 2; n <= 12; ++n) {
    std::vector<std::pair<int, int>> e = path_edges({Family::ap, n});
    CHECK(static_cast<int>(e.size()) == n - 1);
    CHECK(std::is_sorted(e.begin(), e.end()));
  }
}

TEST_CASE("certificate validation accepts the genuine and names the fake") {
  OrderedGraph g(8);
  // ap_4 on support {2, 4, 5, 7}: traversal 2, 7, 4, 5.
  g.add_edge(2, 7);
  g.add_edge(4, 7);
  g.add_edge(4, 5);
  PathCertificate cert{{Family::ap, 4}, {2, 7, 4, 5}, std::nullopt};
  CHECK_NOTHROW(validate_certificate(cert, g));

  PathCertificate wrong_order{{Family::ap, 4}, {2, 4, 7, 5}, std::nullopt};
  CHECK_THROWS_AS(validate_certificate(wrong_order, g), error);

  PathCertificate missing_edge{{Family::ap, 4}, {1, 7, 4, 5}, std::nullopt};
  CHECK_THROWS_AS(validate_certificate(missing_edge, g), error);

  PathCertificate dup{{Family::ap, 4}, {2, 7, 7, 5}, std::nullopt};
  CHECK_THROWS_AS(validate_certificate(dup, g), error);

  try {
    validate_certificate(missing_edge, g);
  } catch (const error& e) {
    CHECK(e.code() == errc::encoding_bug);
  }
}

TEST_CASE("colored certificates check the stated class") {
  OrderedColoring c(6);
  c.set_color(1, 6, Color::red);
  c.set_color(2, 6, Color::red);
  c.set_color(2, 3, Color::red);
  PathCertificate cert{{Family::ap, 4}, {1, 6, 2, 3}, Color::red};
  CHECK_NOTHROW(validate_certificate(cert, c));
  cert.color = Color::blue;
  CHECK_THROWS_AS(validate_certificate(cert, c), error);
  cert.color = std::nullopt;
  CHECK_THROWS_AS(validate_certificate(cert, c), error);  // colorings demand a stated class
}

TEST_CASE("reversal swaps ap and pgl and fixes the others") {
  OrderedGraph g(9);
  g.add_edge(2, 9);
  g.add_edge(3, 9);
  g.add_edge(3, 7);
  PathCertificate cert{{Family::ap, 4}, {2, 9, 3, 7}, std::nullopt};
  validate_certificate(cert, g);
  PathCertificate rev = reversed_certificate(cert, 9);
  CHECK(rev.spec.family == Family::pgl);
  CHECK_NOTHROW(validate_certificate(rev, g.reversed()));
  PathCertificate back = reversed_certificate(rev, 9);
  CHECK(back == cert);

  PathCertificate mono{{Family::mono, 3}, {1, 4, 6}, std::nullopt};
  CHECK(reversed_certificate(mono, 6).spec.family == Family::mono);
}

TEST_SUITE_END();
