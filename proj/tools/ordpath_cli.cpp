// ordpath: ordered Ramsey and Turan numbers of alternating paths.
//
// Conventions: machine-readable results (values, certificate files, graph
// files, DIMACS) go to stdout; summaries and pictures go to stderr. Exit
// codes: 0 found/success, 1 honest not-found, 2 usage or input error,
// 3 resource limit, 4 internal invariant violation.

#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ordpath/cnf.hpp"
#include "ordpath/contain.hpp"
#include "ordpath/errors.hpp"
#include "ordpath/io.hpp"
#include "ordpath/ramsey.hpp"
#include "ordpath/search.hpp"
#include "ordpath/turan.hpp"

namespace {

using namespace ordpath;

Family parse_family(const std::string& name) {
  std::optional<Family> f = family_from_name(name);
  if (!f) fail(errc::invalid_argument, "unknown family '" + name + "' (ap, pll, pgg, pgl, mono)");
  return *f;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  return slurp_file(path);
}

void emit(const std::string& path, const std::string& data) {
  if (path.empty() || path == "-")
    std::cout << data;
  else
    spew_file(path, data);
}

struct Host {
  std::optional<OrderedColoring> coloring;
  std::optional<OrderedGraph> graph;

  int order() const { return coloring ? coloring->vertex_count() : graph->vertex_count(); }
};

// type: "", "coloring" or "graph"; empty sniffs the first row character.
Host load_host(const std::string& path, const std::string& type) {
  std::string text = read_input(path);
  std::string kind = type;
  if (kind.empty()) {
    std::istringstream probe(text);
    long long order = 0;
    char first = 0;
    if (!(probe >> order)) fail(errc::parse_error, path + ": missing vertex count");
    kind = "graph";
    if (probe >> first && (first == 'R' || first == 'r' || first == 'B' || first == 'b')) kind = "coloring";
  }
  std::istringstream in(text);
  Host host;
  if (kind == "coloring")
    host.coloring = read_coloring(in);
  else if (kind == "graph")
    host.graph = read_graph(in);
  else
    fail(errc::invalid_argument, "unknown host type '" + kind + "', want coloring or graph");
  return host;
}

std::string graph_text(const OrderedGraph& g, const std::string& format) {
  std::ostringstream out;
  if (format == "edges") {
    out << g.vertex_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  } else {
    write_graph(out, g);
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// bound

int run_bound_ramsey(const std::string& family_name_arg, int n) {
  Family f = parse_family(family_name_arg);
  validate_spec(PathSpec{f, n});
  switch (f) {
    case Family::ap:
    case Family::pgl: {
      int v = ramsey_upper_bound_ap(n);
      int sign = (n % 2 == 0) ? 1 : -1;
      std::cout << v << '\n';
      std::cerr << "  = 2*" << n << "-2 + floor((isqrt(2*(" << n << "-2)^2 " << (sign > 0 ? "+" : "-")
                << " 1) - 1)/2)\n";
      return 0;
    }
    case Family::pll:
    case Family::pgg: {
      std::cout << ramsey_upper_bound_half(n) << '\n';
      std::cerr << "  = 3*" << n << " - 4\n";
      return 0;
    }
    case Family::mono:
      fail(errc::invalid_argument, "no closed-form bound wired up for the increasing path; use search");
  }
  return 0;
}

int run_bound_turan(const std::string& family_name_arg, int N, int n) {
  Family f = parse_family(family_name_arg);
  if (f != Family::ap && f != Family::pgl)
    fail(errc::invalid_argument, "the closed form covers ap and pgl only; other families need search");
  validate_spec(PathSpec{f, n});
  std::cout << turan_number_ap(N, n) << '\n';
  std::cerr << "  = C(" << n - 1 << ",2) + (" << n << "-2)*(" << N << "-" << n << "+1)\n";
  return 0;
}

int run_bound_turan_bipartite(int N, int n) {
  std::cout << bipartite_turan_number(N, n) << '\n';
  std::cerr << "  = (k-1)*(N-k+1) with k=" << n / 2 << '\n';
  return 0;
}

int run_bound_turan_log(int N, int n) {
  LogBoundAudit audit = turan_log_bound(N, n);
  std::cout << audit.bound << '\n';
  std::cerr << "  t = " << audit.t << " halvings, closed form 2^(t-1) * n^2 * (t+1)\n";
  if (audit.refined) std::cerr << "  refined " << *audit.refined << " = n*N*t/2, N being exactly 2^(t-1)*n\n";
  std::cerr << "  recursion unrolled at the power-of-two ceiling:\n";
  for (const LogBoundLevel& lv : audit.levels)
    std::cerr << "    " << lv.subproblems << " x bipartite split of order " << lv.size << " -> " << lv.bipartite_each
              << " edges each\n";
  std::cerr << "    " << audit.leaf_subproblems << " x leaf of order " << audit.n << " -> " << audit.leaf_each
            << " edges each\n";
  std::cerr << "  total " << audit.recursion_total << " <= " << audit.bound << '\n';
  return 0;
}

// ---------------------------------------------------------------------------
// find

struct FindArgs {
  std::string host_path;
  std::string family;
  int n = 0;
  std::string type;
  bool bipartite = false;
  bool best_effort = false;
  bool check_claims = false;
  bool render = false;
  std::string cert_path;
  std::string trace_path;
};

int run_find(const FindArgs& args) {
  Family f = parse_family(args.family);
  PathSpec spec{f, args.n};
  validate_spec(spec);
  Host host = load_host(args.host_path, args.type);
  FindOptions opt;
  opt.best_effort = args.best_effort;
  opt.check_claims = args.check_claims;

  FindResult res;
  if (host.coloring) {
    res = find_mono(*host.coloring, spec, opt);
  } else if (args.bipartite) {
    res = find_path_bipartite(*host.graph, f, args.n, opt);
  } else if (f == Family::ap) {
    res = find_ap_in_dense(*host.graph, args.n, opt);
  } else if (f == Family::pgl) {
    // The dense engine is written for ap; a pgl copy is an ap copy of the
    // reversed host. The trace keeps the reversed coordinates.
    res = find_ap_in_dense(host.graph->reversed(), args.n, opt);
    res.trace.engine += "-reversed";
    if (res.certificate) {
      res.certificate = reversed_certificate(*res.certificate, host.order());
      validate_certificate(*res.certificate, *host.graph);
    }
  } else {
    fail(errc::invalid_argument,
         "graph hosts support ap and pgl; pass --bipartite for the cross-edge engine of " + args.family);
  }

  const DeletionTrace& tr = res.trace;
  std::cerr << "engine " << tr.engine << ": scope=" << tr.scope_edges << " grey=" << tr.grey_present
            << " removed=" << tr.removed_count << " survivors=" << tr.survivor_count
            << " guarantee=" << (tr.guarantee ? "yes" : "no") << '\n';
  if (!args.trace_path.empty()) {
    std::ostringstream out;
    write_trace(out, tr);
    spew_file(args.trace_path, out.str());
  }
  if (args.render) std::cerr << render_matrix(tr);
  if (!res.certificate) {
    std::cerr << "no certificate: every scope edge was grey or removed before the survivor scan\n";
    return 1;
  }
  std::ostringstream cert_out;
  write_certificate(cert_out, *res.certificate, host.order());
  std::cout << cert_out.str();
  if (!args.cert_path.empty()) spew_file(args.cert_path, cert_out.str());
  return 0;
}

// ---------------------------------------------------------------------------
// construct

int run_construct(const std::string& kind, int N, int n, const std::string& family, std::uint64_t seed,
                  const std::string& out_path, const std::string& format) {
  if (kind == "random-coloring") {
    OrderedColoring c = OrderedColoring::random(N, seed);
    std::ostringstream out;
    write_coloring(out, c);
    emit(out_path, out.str());
    std::cerr << "random coloring on " << N << " vertices, seed " << seed << '\n';
    return 0;
  }
  OrderedGraph g;
  if (kind == "extremal-star" || kind == "extremal-band") {
    Family f = family.empty() ? Family::ap : parse_family(family);
    if (f != Family::ap && f != Family::pgl)
      fail(errc::invalid_argument, kind + " exists for ap and pgl (by reversal) only");
    g = (kind == "extremal-star") ? extremal_star(N, n) : extremal_band(N, n);
    if (f == Family::pgl) g = g.reversed();
  } else if (kind == "extremal-bipartite") {
    if (family.empty()) fail(errc::invalid_argument, "extremal-bipartite needs --family");
    g = extremal_bipartite(N, n, parse_family(family));
  } else {
    fail(errc::invalid_argument, "unknown construction '" + kind + "'");
  }
  emit(out_path, graph_text(g, format));
  std::cerr << kind << " on " << N << " vertices avoiding length " << n << ": " << g.edge_count() << " edges\n";
  return 0;
}

// ---------------------------------------------------------------------------
// search

struct SearchArgs {
  std::string family;
  int n = 0;
  int N = -1;  // ramsey mode: -1 scans for the exact value
  std::uint64_t budget = 1'000'000'000;
  int threads = 1;
  int split_depth = 8;
  bool full_recheck = false;
  std::string witness_path;
};

SearchOptions search_options(const SearchArgs& args) {
  SearchOptions opt;
  opt.node_budget = args.budget;
  opt.threads = args.threads;
  opt.split_depth = args.split_depth;
  opt.full_recheck = args.full_recheck;
  return opt;
}

int run_search_ramsey(const SearchArgs& args) {
  PathSpec spec{parse_family(args.family), args.n};
  validate_spec(spec);
  SearchOptions opt = search_options(args);
  if (args.N >= 0) {
    RamseySearchResult res = search_ramsey_witness(args.N, spec, opt);
    std::cerr << "nodes " << res.nodes << '\n';
    std::cout << outcome_name(res.outcome) << '\n';
    if (res.outcome == SearchOutcome::resource_limit) return 3;
    if (res.outcome == SearchOutcome::exhausted) return 1;
    if (!args.witness_path.empty()) {
      std::ostringstream out;
      write_coloring(out, res.witness->coloring);
      spew_file(args.witness_path, out.str());
    }
    return 0;
  }
  ExactRamsey res = compute_ramsey_exact(spec, opt);
  std::cout << res.value << '\n';
  std::cerr << "exact over " << res.nodes << " nodes";
  if (res.witness) {
    std::cerr << "; witness on " << res.value - 1 << " vertices";
    if (!args.witness_path.empty()) {
      std::ostringstream out;
      write_coloring(out, res.witness->coloring);
      spew_file(args.witness_path, out.str());
    }
  }
  std::cerr << '\n';
  return 0;
}

int run_search_turan(const SearchArgs& args, bool bipartite) {
  PathSpec spec{parse_family(args.family), args.n};
  validate_spec(spec);
  if (args.N < 0) fail(errc::invalid_argument, "search turan needs --N");
  SearchOptions opt = search_options(args);
  TuranSearchResult res =
      bipartite ? search_turan_max_bipartite(args.N, spec, opt) : search_turan_max(args.N, spec, opt);
  std::cout << res.max_edges << '\n';
  std::cerr << "nodes " << res.nodes << ", " << outcome_name(res.outcome) << '\n';
  if (!args.witness_path.empty()) emit(args.witness_path, graph_text(res.best, "matrix"));
  return res.outcome == SearchOutcome::resource_limit ? 3 : 0;
}

// ---------------------------------------------------------------------------
// encode / decode / verify / render

int run_encode(const std::string& family, int n, int N, const std::string& out_path) {
  CnfInstance inst = encode_ramsey_cnf(N, PathSpec{parse_family(family), n});
  emit(out_path, to_dimacs(inst));
  std::cerr << "p cnf " << inst.n_vars << ' ' << inst.clauses.size() << '\n';
  return 0;
}

int run_decode(const std::string& family, int n, int N, const std::string& model_path, const std::string& out_path) {
  CnfInstance inst = encode_ramsey_cnf(N, PathSpec{parse_family(family), n});
  std::istringstream model_in(read_input(model_path));
  std::vector<int> model = parse_model(model_in, inst.n_vars);
  for (int v = 1; v <= inst.n_vars; ++v)
    if (model[v] == 0) fail(errc::incomplete_model, "variable " + std::to_string(v) + " is unassigned");
  if (!model_satisfies(inst, model)) {
    std::cerr << "model does not satisfy the encoding\n";
    return 1;
  }
  OrderedColoring c = decode_model(inst, model);
  std::ostringstream out;
  write_coloring(out, c);
  emit(out_path, out.str());
  std::cerr << "model ok: witness coloring on " << N << " vertices\n";
  return 0;
}

int run_verify(const std::string& host_path, const std::string& cert_path, const std::string& type) {
  Host host = load_host(host_path, type);
  std::istringstream cert_in(read_input(cert_path));
  CertificateFile file = read_certificate(cert_in);
  if (file.N != host.order())
    fail(errc::invalid_argument, "certificate names a host on " + std::to_string(file.N) + " vertices, file has " +
                                     std::to_string(host.order()));
  try {
    if (host.coloring)
      validate_certificate(file.cert, *host.coloring);
    else
      validate_certificate(file.cert, *host.graph);
  } catch (const error& e) {
    if (e.code() != errc::encoding_bug) throw;
    std::cerr << "certificate invalid: " << e.what() << '\n';
    return 1;
  }
  std::cerr << "certificate ok: " << family_name(file.cert.spec.family) << "_" << file.cert.spec.n << " in "
            << host_path << '\n';
  return 0;
}

int run_render(const std::string& host_path, const std::string& type) {
  Host host = load_host(host_path, type);
  std::cout << (host.coloring ? render_matrix(*host.coloring) : render_matrix(*host.graph));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ordered Ramsey and Turan numbers of alternating paths"};
  app.require_subcommand(1);
  int code = 0;

  // bound ------------------------------------------------------------------
  auto* bound = app.add_subcommand("bound", "closed-form bounds and their instantiation");
  bound->require_subcommand(1);
  static std::string b_family;
  static int b_n = 0, b_N = 0;

  auto* b_ramsey = bound->add_subcommand("ramsey", "Ramsey upper bound for a family");
  b_ramsey->add_option("--family", b_family, "ap, pll, pgg, pgl")->required();
  b_ramsey->add_option("--n", b_n, "path length")->required();
  b_ramsey->callback([&] { code = run_bound_ramsey(b_family, b_n); });

  auto* b_turan = bound->add_subcommand("turan", "exact Turan number (ap, pgl)");
  b_turan->add_option("--family", b_family, "ap or pgl")->required();
  b_turan->add_option("--N", b_N, "host order")->required();
  b_turan->add_option("--n", b_n, "path length")->required();
  b_turan->callback([&] { code = run_bound_turan(b_family, b_N, b_n); });

  auto* b_bip = bound->add_subcommand("turan-bipartite", "exact bipartite Turan number (all families)");
  b_bip->add_option("--N", b_N, "host order, even")->required();
  b_bip->add_option("--n", b_n, "path length, even")->required();
  b_bip->callback([&] { code = run_bound_turan_bipartite(b_N, b_n); });

  auto* b_log = bound->add_subcommand("turan-log", "halving-recursion upper bound with its audit");
  b_log->add_option("--N", b_N, "host order")->required();
  b_log->add_option("--n", b_n, "path length, even")->required();
  b_log->callback([&] { code = run_bound_turan_log(b_N, b_n); });

  // find ---------------------------------------------------------------
  static FindArgs find_args;
  auto* find = app.add_subcommand("find", "run a deletion engine on a host file, emit a certificate");
  find->add_option("host", find_args.host_path, "coloring or graph file, - for stdin")->required();
  find->add_option("--family", find_args.family, "ap, pll, pgg, pgl")->required();
  find->add_option("--n", find_args.n, "path length")->required();
  find->add_option("--type", find_args.type, "coloring|graph (default: sniff)");
  find->add_flag("--bipartite", find_args.bipartite, "use the cross-edge engine (graph hosts)");
  find->add_flag("--best-effort", find_args.best_effort, "run below the guarantee threshold");
  find->add_flag("--check-claims", find_args.check_claims, "verify per-step coverage claims while walking");
  find->add_flag("--render", find_args.render, "print the trace picture to stderr");
  find->add_option("--cert", find_args.cert_path, "also write the certificate here");
  find->add_option("--trace", find_args.trace_path, "write the removal trace here");
  find->callback([&] { code = run_find(find_args); });

  // construct ----------------------------------------------------------
  static std::string c_kind, c_family, c_out, c_format = "matrix";
  static int c_N = 0, c_n = 0;
  static std::uint64_t c_seed = 0;
  auto* construct = app.add_subcommand("construct", "write an extremal construction or a random coloring");
  construct->add_option("kind", c_kind, "extremal-star | extremal-band | extremal-bipartite | random-coloring")
      ->required();
  construct->add_option("--N", c_N, "host order")->required();
  construct->add_option("--n", c_n, "path length to avoid");
  construct->add_option("--family", c_family, "pattern family");
  construct->add_option("--seed", c_seed, "random-coloring seed");
  construct->add_option("--out", c_out, "output path (default stdout)");
  construct->add_option("--format", c_format, "matrix|edges")->check(CLI::IsMember({"matrix", "edges"}));
  construct->callback([&] { code = run_construct(c_kind, c_N, c_n, c_family, c_seed, c_out, c_format); });

  // search ---------------------------------------------------------------
  static SearchArgs s_args;
  auto* search = app.add_subcommand("search", "exhaustive engines for exact small values");
  search->require_subcommand(1);
  auto add_search_common = [&](CLI::App* sub, bool need_N) {
    sub->add_option("--family", s_args.family, "pattern family")->required();
    sub->add_option("--n", s_args.n, "path length")->required();
    auto* N_opt = sub->add_option("--N", s_args.N, "host order");
    if (need_N) N_opt->required();
    sub->add_option("--budget", s_args.budget, "node budget")->envname("ORDPATH_NODE_BUDGET");
    sub->add_option("--threads", s_args.threads, "worker threads (witness search only)");
    sub->add_option("--split-depth", s_args.split_depth, "frontier depth for --threads");
    sub->add_flag("--full-recheck", s_args.full_recheck, "re-verify leaves with the containment scan");
    sub->add_option("--witness", s_args.witness_path, "save the witness here");
  };
  auto* s_ramsey = search->add_subcommand("ramsey", "witness search at --N, exact value without it");
  add_search_common(s_ramsey, false);
  s_ramsey->callback([&] { code = run_search_ramsey(s_args); });
  auto* s_turan = search->add_subcommand("turan", "maximum pattern-free edge count at --N");
  add_search_common(s_turan, true);
  s_turan->callback([&] { code = run_search_turan(s_args, false); });
  auto* s_turan_bip = search->add_subcommand("turan-bipartite", "same, edges restricted to the half split");
  add_search_common(s_turan_bip, true);
  s_turan_bip->callback([&] { code = run_search_turan(s_args, true); });

  // encode / decode ------------------------------------------------------
  static std::string e_family, e_out, e_model;
  static int e_n = 0, e_N = 0;
  auto* encode = app.add_subcommand("encode", "DIMACS export of the witness question at --N");
  encode->add_option("--family", e_family, "pattern family")->required();
  encode->add_option("--n", e_n, "path length")->required();
  encode->add_option("--N", e_N, "host order")->required();
  encode->add_option("--out", e_out, "output path (default stdout)");
  encode->callback([&] { code = run_encode(e_family, e_n, e_N, e_out); });

  auto* decode = app.add_subcommand("decode", "turn a solver model back into a checked coloring");
  decode->add_option("--family", e_family, "pattern family")->required();
  decode->add_option("--n", e_n, "path length")->required();
  decode->add_option("--N", e_N, "host order")->required();
  decode->add_option("--model", e_model, "model file, - for stdin")->required();
  decode->add_option("--out", e_out, "coloring output path (default stdout)");
  decode->callback([&] { code = run_decode(e_family, e_n, e_N, e_model, e_out); });

  // verify / render --------------------------------------------------------
  static std::string v_host, v_cert, v_type;
  auto* verify = app.add_subcommand("verify", "validate a certificate file against its host");
  verify->add_option("host", v_host, "coloring or graph file")->required();
  verify->add_option("--cert", v_cert, "certificate file, - for stdin")->required();
  verify->add_option("--type", v_type, "coloring|graph (default: sniff)");
  verify->callback([&] { code = run_verify(v_host, v_cert, v_type); });

  static std::string r_host, r_type;
  auto* render = app.add_subcommand("render", "print the upper-triangle picture of a host file");
  render->add_option("host", r_host, "coloring or graph file, - for stdin")->required();
  render->add_option("--type", r_type, "coloring|graph (default: sniff)");
  render->callback([&] { code = run_render(r_host, r_type); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int cli_code = app.exit(e);
    return cli_code == 0 ? 0 : 2;
  } catch (const ordpath::error& e) {
    std::cerr << "ordpath: " << e.what() << '\n';
    switch (e.code()) {
      case errc::resource_limit: return 3;
      case errc::internal:
      case errc::encoding_bug: return 4;
      default: return 2;
    }
  } catch (const std::exception& e) {
    std::cerr << "ordpath: unexpected: " << e.what() << '\n';
    return 4;
  }
  return code;
}
