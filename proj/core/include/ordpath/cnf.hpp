#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ordpath/path_spec.hpp"

// CNF export of the Ramsey witness question. Variable id+1 stands for cell
// edge_id(N, i, j) being red; each placement of the pattern contributes two
// clauses (not all red, not all blue). A model is exactly a witness
// coloring, so satisfiability at N decides whether the Ramsey number
// exceeds N.

namespace ordpath {

struct CnfInstance {
  PathSpec spec;
  int N = 0;
  int n_vars = 0;
  std::vector<std::vector<int>> clauses;  // DIMACS literals, no trailing 0
};

CnfInstance encode_ramsey_cnf(int N, const PathSpec& spec);

void write_dimacs(std::ostream& out, const CnfInstance& inst);
std::string to_dimacs(const CnfInstance& inst);

// Parse a solver model: "v" lines or bare literal lines, terminated by 0 or
// end of input. Unmentioned variables stay unassigned.
std::vector<int> parse_model(std::istream& in, int n_vars);

// True when every clause has a satisfied literal. Throws incomplete_model
// if a clause is decided by no assigned variable.
bool model_satisfies(const CnfInstance& inst, const std::vector<int>& model);

// Rebuild the coloring from a satisfying model and re-verify that neither
// class contains the pattern; a monochromatic copy despite a satisfying
// model is an encoding_bug.
OrderedColoring decode_model(const CnfInstance& inst, const std::vector<int>& model);

}  // namespace ordpath
