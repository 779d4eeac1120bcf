#include "ordpath/cnf.hpp"

#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>

#include "ordpath/contain.hpp"
#include "ordpath/errors.hpp"

namespace ordpath {

CnfInstance encode_ramsey_cnf(int N, const PathSpec& spec) {
  validate_spec(spec);
  if (N < 1) fail(errc::invalid_argument, "host needs at least one vertex");
  long long cells = cell_count(N);
  if (cells > (1 << 30)) fail(errc::size_limit, "too many cells to encode");
  CnfInstance inst;
  inst.spec = spec;
  inst.N = N;
  inst.n_vars = static_cast<int>(cells);
  std::vector<std::pair<int, int>> pat = path_edges(spec);
  for_each_placement(N, spec, [&](const std::vector<int>& s) {
    std::vector<int> not_all_red, not_all_blue;
    not_all_red.reserve(pat.size());
    not_all_blue.reserve(pat.size());
    for (auto [i, j] : pat) {
      int var = static_cast<int>(edge_id(N, s[i - 1], s[j - 1])) + 1;
      not_all_red.push_back(-var);
      not_all_blue.push_back(var);
    }
    inst.clauses.push_back(std::move(not_all_red));
    inst.clauses.push_back(std::move(not_all_blue));
  });
  return inst;
}

void write_dimacs(std::ostream& out, const CnfInstance& inst) {
  out << "c ordered Ramsey witness, pattern " << family_name(inst.spec.family) << "_" << inst.spec.n
      << " in a 2-colored complete ordered graph on " << inst.N << " vertices\n";
  out << "c variable e+1 is true iff the cell with edge id e is red\n";
  out << "p cnf " << inst.n_vars << " " << inst.clauses.size() << "\n";
  for (const auto& clause : inst.clauses) {
    for (int lit : clause) out << lit << " ";
    out << "0\n";
  }
}

std::string to_dimacs(const CnfInstance& inst) {
  std::ostringstream ss;
  write_dimacs(ss, inst);
  return ss.str();
}

std::vector<int> parse_model(std::istream& in, int n_vars) {
  std::vector<int> model(std::size_t(n_vars) + 1, 0);
  std::string tok;
  while (in >> tok) {
    // Solvers prefix model lines with "v" and emit "s SATISFIABLE" headers;
    // keep only integer tokens.
    bool numeric = !tok.empty();
    for (std::size_t i = 0; i < tok.size(); ++i) {
      if (i == 0 && (tok[i] == '-' || tok[i] == '+') && tok.size() > 1) continue;
      if (!std::isdigit(static_cast<unsigned char>(tok[i]))) {
        numeric = false;
        break;
      }
    }
    if (!numeric) continue;
    long long lit = 0;
    try {
      lit = std::stoll(tok);
    } catch (const std::exception&) {
      fail(errc::parse_error, "literal out of range: " + tok);
    }
    if (lit == 0) break;  // DIMACS model terminator
    long long var = lit < 0 ? -lit : lit;
    if (var > n_vars) fail(errc::parse_error, "literal " + tok + " exceeds the variable count");
    model[var] = lit < 0 ? -1 : 1;
  }
  return model;
}

bool model_satisfies(const CnfInstance& inst, const std::vector<int>& model) {
  if (model.size() != std::size_t(inst.n_vars) + 1)
    fail(errc::invalid_argument, "model sized for a different instance");
  for (const auto& clause : inst.clauses) {
    bool satisfied = false;
    bool undecided = false;
    for (int lit : clause) {
      int v = model[lit < 0 ? -lit : lit];
      if (v == 0) {
        undecided = true;
      } else if ((lit > 0) == (v > 0)) {
        satisfied = true;
        break;
      }
    }
    if (satisfied) continue;
    if (undecided) fail(errc::incomplete_model, "a clause is left undecided by the model");
    return false;
  }
  return true;
}

OrderedColoring decode_model(const CnfInstance& inst, const std::vector<int>& model) {
  if (model.size() != std::size_t(inst.n_vars) + 1)
    fail(errc::invalid_argument, "model sized for a different instance");
  for (int v = 1; v <= inst.n_vars; ++v)
    if (model[v] == 0) fail(errc::incomplete_model, "variable " + std::to_string(v) + " is unassigned");
  if (!model_satisfies(inst, model)) fail(errc::invalid_argument, "model does not satisfy the instance");
  OrderedColoring c(inst.N);
  for (int v = 1; v <= inst.n_vars; ++v)
    if (model[v] > 0) {
      auto [i, j] = edge_from_id(inst.N, v - 1);
      c.set_color(i, j, Color::red);
    }
  for (Color col : {Color::red, Color::blue})
    if (find_in_color(c, col, inst.spec))
      fail(errc::encoding_bug, std::string("satisfying model still yields a ") + color_name(col) + " copy");
  return c;
}

}  // namespace ordpath
