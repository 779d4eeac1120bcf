#pragma once

#include <iosfwd>
#include <string>

#include "ordpath/deletion.hpp"

// Plain-text formats. A coloring file is the vertex count on the first line
// followed by one row per vertex i < N: the colors of cells (i, i+1..N) as
// R/B characters. Graph files use 1/0 the same way. Certificate files carry
// one header line "<family> <n> <N> [red|blue]" and one line of vertices in
// traversal order.

namespace ordpath {

OrderedColoring read_coloring(std::istream& in);
void write_coloring(std::ostream& out, const OrderedColoring& c);

OrderedGraph read_graph(std::istream& in);
void write_graph(std::ostream& out, const OrderedGraph& g);

struct CertificateFile {
  PathCertificate cert;
  int N = 0;
};
CertificateFile read_certificate(std::istream& in);
void write_certificate(std::ostream& out, const PathCertificate& cert, int N);

// Removal log plus per-cell verdicts, one line per scope cell.
void write_trace(std::ostream& out, const DeletionTrace& trace);

// Upper-triangle pictures. Colorings render as R/B, graphs as 1/., traces
// as g (grey), * (survivor), . (untouched) and the removal step in base 36.
std::string render_matrix(const OrderedColoring& c);
std::string render_matrix(const OrderedGraph& g);
std::string render_matrix(const DeletionTrace& trace);

// File helpers that wrap the stream functions with errc::io_error.
std::string slurp_file(const std::string& path);
void spew_file(const std::string& path, const std::string& data);

}  // namespace ordpath
