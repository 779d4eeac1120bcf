#include <doctest.h>

#include <cstdio>
#include <sstream>

#include "ordpath/errors.hpp"
#include "ordpath/io.hpp"
#include "ordpath/ramsey.hpp"
#include "ordpath/turan.hpp"

using namespace ordpath;

namespace {

template <class T, class Writer, class Reader>
T round_trip(const T& value, Writer write, Reader read) {
  std::ostringstream out;
  write(out, value);
  std::istringstream in(out.str());
  return read(in);
}

}  // namespace

TEST_SUITE_BEGIN("io");

TEST_CASE("coloring files round trip") {
  for (unsigned seed = 0; seed < 10; ++seed) {
    OrderedColoring c = OrderedColoring::random(9, seed);
    OrderedColoring back = round_trip(c, write_coloring, read_coloring);
    CHECK(back == c);
  }
  std::istringstream lower("2\nr\n");
  CHECK(read_coloring(lower).color(1, 2) == Color::red);
}

TEST_CASE("graph files round trip and accept dots for gaps") {
  OrderedGraph g = extremal_star(10, 5);
  OrderedGraph back = round_trip(g, write_graph, read_graph);
  CHECK(back == g);
  std::istringstream dotted("3\n1 .\n0\n");
  OrderedGraph d = read_graph(dotted);
  CHECK(d.has_edge(1, 2));
  CHECK(!d.has_edge(1, 3));
  CHECK(!d.has_edge(2, 3));
}

TEST_CASE("malformed inputs name the problem") {
  std::istringstream bad_order("0\n");
  CHECK_THROWS_AS(read_coloring(bad_order), error);
  std::istringstream bad_cell("2\nX\n");
  CHECK_THROWS_AS(read_coloring(bad_cell), error);
  std::istringstream truncated("4\nRRR\nBB\n");
  CHECK_THROWS_AS(read_coloring(truncated), error);
  std::istringstream bad_graph("2\n2\n");
  CHECK_THROWS_AS(read_graph(bad_graph), error);
  try {
    std::istringstream again("0\n");
    read_coloring(again);
  } catch (const error& e) {
    CHECK(e.code() == errc::parse_error);
  }
}

TEST_CASE("certificate files round trip, with and without a color") {
  PathCertificate plain{{Family::ap, 4}, {2, 9, 4, 7}, std::nullopt};
  std::ostringstream out;
  write_certificate(out, plain, 9);
  std::istringstream in(out.str());
  CertificateFile f = read_certificate(in);
  CHECK(f.N == 9);
  CHECK(f.cert == plain);

  PathCertificate colored{{Family::pll, 4}, {1, 3, 2, 4}, Color::blue};
  std::ostringstream out2;
  write_certificate(out2, colored, 8);
  std::istringstream in2(out2.str());
  CHECK(read_certificate(in2).cert == colored);

  std::istringstream junk("ap 4 9 purple\n2 9 4 7\n");
  CHECK_THROWS_AS(read_certificate(junk), error);
  std::istringstream out_of_range("ap 4 9\n2 9 4 17\n");
  CHECK_THROWS_AS(read_certificate(out_of_range), error);
}

TEST_CASE("renders cover every cell of the triangle") {
  OrderedGraph empty(3);
  std::string picture = render_matrix(empty);
  CHECK(std::count(picture.begin(), picture.end(), '.') == 3);

  OrderedGraph star = extremal_star(6, 4);
  std::string sp = render_matrix(star);
  // 9 edge cells plus the row label of vertex 1 also prints a '1'.
  CHECK(std::count(sp.begin(), sp.end(), '1') == 10);
  CHECK(std::count(sp.begin(), sp.end(), '.') == 15 - 9);

  OrderedColoring c(4);
  c.set_color(1, 2, Color::red);
  std::string cp = render_matrix(c);
  CHECK(std::count(cp.begin(), cp.end(), 'R') == 1);
  CHECK(std::count(cp.begin(), cp.end(), 'B') == 5);
}

TEST_CASE("trace report accounts for every scope cell") {
  OrderedGraph host = extremal_star(12, 5);
  host.add_edge(5, 9);
  FindResult r = find_ap_in_dense(host, 5, {});
  REQUIRE(r.certificate.has_value());
  std::ostringstream out;
  write_trace(out, r.trace);
  std::string text = out.str();
  CHECK(text.find("engine turan-dense") != std::string::npos);
  CHECK(text.find("scope-edges 31") != std::string::npos);
  CHECK(text.find("guarantee yes") != std::string::npos);
  // One line per in-scope cell in the cells section.
  std::istringstream in(text);
  std::string line;
  long long cell_lines = 0;
  bool in_cells = false;
  while (std::getline(in, line)) {
    if (line.rfind("cells", 0) == 0) in_cells = true;
    else if (in_cells && line.rfind("  (", 0) == 0) ++cell_lines;
  }
  CHECK(cell_lines == r.trace.scope_edges);

  std::string picture = render_matrix(r.trace);
  CHECK(picture.find('*') != std::string::npos);  // the survivor the backtrack used
}

TEST_CASE("file helpers report unreachable paths") {
  CHECK_THROWS_AS(slurp_file("/nonexistent/dir/x.txt"), error);
  CHECK_THROWS_AS(spew_file("/nonexistent/dir/x.txt", "data"), error);
  std::string path = "/tmp/ordpath_io_test.txt";
  spew_file(path, "payload");
  CHECK(slurp_file(path) == "payload");
  std::remove(path.c_str());
}

TEST_SUITE_END();
