#include "ordpath/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "ordpath/errors.hpp"

namespace ordpath {

namespace {

int read_order(std::istream& in, const char* what) {
  long long N = 0;
  if (!(in >> N)) fail(errc::parse_error, std::string(what) + ": missing vertex count");
  if (N < 1 || N > 100000) fail(errc::parse_error, std::string(what) + ": vertex count out of range");
  return static_cast<int>(N);
}

// One row per vertex i < N holding the N-i cells (i, i+1..N) as single
// characters. Whitespace inside a row is tolerated.
template <typename Take>
void read_rows(std::istream& in, int N, const char* what, Take take) {
  for (int i = 1; i < N; ++i) {
    for (int j = i + 1; j <= N; ++j) {
      char ch = 0;
      if (!(in >> ch)) fail(errc::parse_error, std::string(what) + ": row for vertex " + std::to_string(i) + " is short");
      take(i, j, ch);
    }
  }
}

char base36(int v) { return v < 10 ? static_cast<char>('0' + v) : v < 36 ? static_cast<char>('a' + v - 10) : '+'; }

// Upper-triangle picture with a last-digit column header and row labels.
template <typename CellChar>
std::string render_triangle(int N, CellChar cell) {
  std::ostringstream out;
  int label_w = static_cast<int>(std::to_string(N).size());
  out << std::string(label_w + 3, ' ');
  for (int j = 2; j <= N; ++j) out << static_cast<char>('0' + j % 10) << ' ';
  out << '\n';
  for (int i = 1; i < N; ++i) {
    std::string label = std::to_string(i);
    out << std::string(label_w - label.size(), ' ') << label << " | ";
    out << std::string(2 * (i - 1), ' ');
    for (int j = i + 1; j <= N; ++j) out << cell(i, j) << ' ';
    out << '\n';
  }
  return out.str();
}

}  // namespace

OrderedColoring read_coloring(std::istream& in) {
  int N = read_order(in, "coloring");
  OrderedColoring c(N);
  read_rows(in, N, "coloring", [&](int i, int j, char ch) {
    if (ch == 'R' || ch == 'r')
      c.set_color(i, j, Color::red);
    else if (ch != 'B' && ch != 'b')
      fail(errc::parse_error, std::string("coloring: unexpected character '") + ch + "', want R or B");
  });
  return c;
}

void write_coloring(std::ostream& out, const OrderedColoring& c) {
  int N = c.vertex_count();
  out << N << '\n';
  for (int i = 1; i < N; ++i) {
    for (int j = i + 1; j <= N; ++j) out << (c.color(i, j) == Color::red ? 'R' : 'B');
    out << '\n';
  }
}

OrderedGraph read_graph(std::istream& in) {
  int N = read_order(in, "graph");
  OrderedGraph g(N);
  read_rows(in, N, "graph", [&](int i, int j, char ch) {
    if (ch == '1')
      g.add_edge(i, j);
    else if (ch != '0' && ch != '.')
      fail(errc::parse_error, std::string("graph: unexpected character '") + ch + "', want 1, 0 or .");
  });
  return g;
}

void write_graph(std::ostream& out, const OrderedGraph& g) {
  int N = g.vertex_count();
  out << N << '\n';
  for (int i = 1; i < N; ++i) {
    for (int j = i + 1; j <= N; ++j) out << (g.has_edge(i, j) ? '1' : '0');
    out << '\n';
  }
}

CertificateFile read_certificate(std::istream& in) {
  std::string fam;
  long long n = 0, N = 0;
  if (!(in >> fam >> n >> N)) fail(errc::parse_error, "certificate: want '<family> <n> <N> [red|blue]'");
  std::optional<Family> family = family_from_name(fam);
  if (!family) fail(errc::parse_error, "certificate: unknown family '" + fam + "'");
  if (n < 2 || n > 100000 || N < 1 || N > 100000) fail(errc::parse_error, "certificate: size out of range");

  CertificateFile file;
  file.N = static_cast<int>(N);
  file.cert.spec = PathSpec{*family, static_cast<int>(n)};
  // The rest of the header line is an optional color tag.
  std::string rest;
  std::getline(in, rest);
  std::istringstream tail(rest);
  std::string tag;
  if (tail >> tag) {
    if (tag == "red")
      file.cert.color = Color::red;
    else if (tag == "blue")
      file.cert.color = Color::blue;
    else
      fail(errc::parse_error, "certificate: unexpected header tag '" + tag + "'");
  }
  for (long long t = 0; t < n; ++t) {
    long long v = 0;
    if (!(in >> v)) fail(errc::parse_error, "certificate: want " + std::to_string(n) + " vertices");
    if (v < 1 || v > N) fail(errc::parse_error, "certificate: vertex " + std::to_string(v) + " outside [1, " + std::to_string(N) + "]");
    file.cert.vertices.push_back(static_cast<int>(v));
  }
  return file;
}

void write_certificate(std::ostream& out, const PathCertificate& cert, int N) {
  out << family_name(cert.spec.family) << ' ' << cert.spec.n << ' ' << N;
  if (cert.color) out << ' ' << color_name(*cert.color);
  out << '\n';
  for (std::size_t t = 0; t < cert.vertices.size(); ++t) out << cert.vertices[t] << (t + 1 < cert.vertices.size() ? ' ' : '\n');
}

void write_trace(std::ostream& out, const DeletionTrace& trace) {
  out << "engine " << trace.engine << '\n';
  out << "pattern " << family_name(trace.spec.family) << '_' << trace.spec.n << '\n';
  out << "vertices " << trace.N << '\n';
  out << "low-window 1.." << trace.low_hi << '\n';
  out << "high-window " << trace.high_lo << ".." << trace.N << '\n';
  out << "scope-edges " << trace.scope_edges << '\n';
  out << "grey-present " << trace.grey_present << '\n';
  out << "removed " << trace.removed_count << '\n';
  out << "survivors " << trace.survivor_count << '\n';
  out << "guarantee " << (trace.guarantee ? "yes" : "no") << '\n';
  if (trace.start_cell) out << "start-cell " << trace.start_cell->first << ' ' << trace.start_cell->second << '\n';
  out << "removals " << trace.removals.size() << '\n';
  for (const Removal& r : trace.removals) {
    out << "  step " << r.step << ": " << r.remover << " deletes " << r.other;
    if (r.color) out << ' ' << color_name(*r.color);
    out << '\n';
  }
  out << "cells\n";
  for (long long id = 0; id < static_cast<long long>(trace.cell_state.size()); ++id) {
    CellState st = trace.cell_state[id];
    if (st == CellState::out_of_scope) continue;
    auto [i, j] = edge_from_id(trace.N, id);
    out << "  (" << i << ", " << j << ") ";
    if (st == CellState::grey) {
      out << "grey\n";
    } else if (st == CellState::survived) {
      out << "survived\n";
    } else {
      const Removal& r = trace.removals[trace.removal_index[id]];
      out << "removed step=" << r.step << " remover=" << r.remover;
      if (r.color) out << " color=" << color_name(*r.color);
      out << '\n';
    }
  }
}

std::string render_matrix(const OrderedColoring& c) {
  return render_triangle(c.vertex_count(), [&](int i, int j) { return c.color(i, j) == Color::red ? 'R' : 'B'; });
}

std::string render_matrix(const OrderedGraph& g) {
  return render_triangle(g.vertex_count(), [&](int i, int j) { return g.has_edge(i, j) ? '1' : '.'; });
}

std::string render_matrix(const DeletionTrace& trace) {
  return render_triangle(trace.N, [&](int i, int j) -> char {
    switch (trace.cell_state[edge_id(trace.N, i, j)]) {
      case CellState::out_of_scope: return '.';
      case CellState::grey: return 'g';
      case CellState::survived: return '*';
      case CellState::removed: return base36(trace.removals[trace.removal_index[edge_id(trace.N, i, j)]].step);
    }
    return '?';
  });
}

std::string slurp_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::io_error, "cannot open " + path + " for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) fail(errc::io_error, "read failed on " + path);
  return ss.str();
}

void spew_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(errc::io_error, "cannot open " + path + " for writing");
  out << data;
  out.flush();
  if (!out) fail(errc::io_error, "write failed on " + path);
}

}  // namespace ordpath
