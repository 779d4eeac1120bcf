#include "ordpath/turan.hpp"

#include <algorithm>

#include "ordpath/contain.hpp"
#include "ordpath/errors.hpp"
#include "ordpath/mathutil.hpp"
#include "ordpath/ramsey.hpp"

namespace ordpath {

long long turan_number_ap(int N, int n) {
  if (n < 2) fail(errc::invalid_argument, "path needs at least 2 vertices");
  if (N < 1) fail(errc::invalid_argument, "host needs at least one vertex");
  if (N < n) return cell_count(N);  // too few vertices for any copy
  return choose2(n - 1) + static_cast<long long>(n - 2) * (N - n + 1);
}

std::vector<std::pair<int, int>> dense_grey_edges(int N, int n) {
  std::vector<std::pair<int, int>> g;
  // A nested fan at each end of the vertex line: short cells around the low
  // vertices, mirrored around the high ones.
  for (int i = 1; i <= n / 2; ++i)
    for (int j = i + 1; j <= n - i; ++j) g.emplace_back(i, j);
  for (int i = 1; i <= (n + 1) / 2 - 1; ++i)
    for (int j = i + 1; j <= n - 1 - i; ++j) g.emplace_back(N + 1 - j, N + 1 - i);
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  return g;
}

StepSchedule dense_schedule(int N, int n) {
  StepSchedule steps;
  for (int s = 1; s <= n - 2; ++s) {
    Step st;
    st.index = s;
    st.toward_lo = 1;
    st.toward_hi = N;  // partners on either side
    if (s % 2 == 1) {
      int i = (s + 1) / 2;
      st.lo = n - i + 1;
      st.hi = N - i + 1;
      st.dir = Dir::leftmost;
    } else {
      int i = s / 2;
      st.lo = i + 1;
      st.hi = N - n + i + 1;
      st.dir = Dir::rightmost;
    }
    steps.push_back(st);
  }
  return steps;
}

namespace {

std::vector<ClaimWindow> dense_claims(int N, int n) {
  std::vector<ClaimWindow> claims;
  for (int s = 1; s <= n - 2; ++s) {
    if (s % 2 == 1)
      claims.push_back({true, 1, (s + 1) / 2});
    else
      claims.push_back({false, N - s / 2 + 1, N});
  }
  return claims;
}

}  // namespace

FindResult find_ap_in_dense(const OrderedGraph& host, int n, const FindOptions& opt) {
  if (n < 2) fail(errc::invalid_argument, "path needs at least 2 vertices");
  const int N = host.vertex_count();
  if (N < n)
    fail(errc::host_too_small, "host has " + std::to_string(N) + " vertices, path needs " + std::to_string(n));

  DeletionSetup setup;
  setup.engine = "turan-dense";
  setup.spec = {Family::ap, n};
  setup.N = N;
  setup.low_hi = N;  // the whole line; every cell is in scope
  setup.high_lo = 1;
  setup.grey = dense_grey_edges(N, n);
  setup.steps = dense_schedule(N, n);
  setup.claims = dense_claims(N, n);
  setup.last_vertex_low = (n % 2 == 1);
  setup.guarantee = host.edge_count() > turan_number_ap(N, n);
  if (!setup.guarantee && !opt.best_effort)
    fail(errc::too_sparse, "needs more than " + std::to_string(turan_number_ap(N, n)) +
                               " edges; pass best_effort to try anyway");
  return run_deletion(setup, host, opt);
}

OrderedGraph extremal_star(int N, int n) {
  if (n < 2 || N < n) fail(errc::invalid_argument, "need N >= n >= 2");
  OrderedGraph g(N);
  const int x_hi = (n + 1) / 2 - 1;      // low block [1, x_hi]
  const int y_lo = N - n / 2 + 2;        // high block [y_lo, N]
  for (int u = 1; u < N; ++u)
    for (int v = u + 1; v <= N; ++v)
      if (u <= x_hi || v >= y_lo) g.add_edge(u, v);
  return g;
}

OrderedGraph extremal_band(int N, int n) {
  if (n < 2 || N < n) fail(errc::invalid_argument, "need N >= n >= 2");
  OrderedGraph g(N);
  for (int u = 1; u < N; ++u)
    for (int v = u + 1; v <= std::min(N, u + n - 2); ++v) g.add_edge(u, v);
  return g;
}

long long bipartite_turan_number(int N, int n) {
  if (n < 2 || n % 2 != 0) fail(errc::invalid_argument, "two-sided families need an even path");
  if (N < n || N % 2 != 0) fail(errc::invalid_argument, "need an even host order N >= n");
  const long long k = n / 2;
  return (k - 1) * (N - k + 1);
}

OrderedGraph extremal_bipartite(int N, int n, Family f) {
  bipartite_turan_number(N, n);  // validates N, n
  const int M = N / 2;
  const int k = n / 2;
  OrderedGraph g(N);
  // k-1 full rows and k-1 full columns of the A x B grid. The rows sit at
  // whichever end of A the family's odd traversal positions leave last, and
  // similarly for the columns in B.
  bool rows_low, cols_low;
  switch (f) {
    case Family::pll: rows_low = true;  cols_low = true;  break;
    case Family::pgg: rows_low = false; cols_low = false; break;
    case Family::ap:  rows_low = true;  cols_low = false; break;
    case Family::pgl: rows_low = false; cols_low = true;  break;
    default: fail(errc::invalid_argument, "no bipartite construction for the increasing path");
  }
  for (int x = 1; x <= M; ++x)
    for (int y = M + 1; y <= N; ++y) {
      bool full_row = rows_low ? (x <= k - 1) : (x >= M - k + 2);
      bool full_col = cols_low ? (y <= M + k - 1) : (y >= N - k + 2);
      if (full_row || full_col) g.add_edge(x, y);
    }
  return g;
}

FindResult find_path_bipartite(const OrderedGraph& host, Family f, int n, const FindOptions& opt) {
  if (f == Family::mono) fail(errc::invalid_argument, "no bipartite engine for the increasing path");
  if (n < 2 || n % 2 != 0) fail(errc::invalid_argument, "two-sided families need an even path");
  const int N = host.vertex_count();
  if (N % 2 != 0)
    fail(errc::invalid_argument, "bipartite engine needs an even host order, got " + std::to_string(N));
  if (N < n)
    fail(errc::host_too_small, "host has " + std::to_string(N) + " vertices, path needs " + std::to_string(n));
  const int M = N / 2;
  for (auto [x, y] : host.edges())
    if (y <= M || x > M)
      fail(errc::not_bipartite, "edge (" + std::to_string(x) + ", " + std::to_string(y) +
                                    ") lies inside a half");

  DeletionSetup setup;
  setup.engine = "turan-bipartite";
  setup.spec = {f, n};
  setup.N = N;
  setup.low_hi = M;
  setup.high_lo = M + 1;
  setup.grey = half_grey_edges(f, n, M);
  setup.steps = half_schedule(f, n, M);
  setup.claims = half_claims(f, n, M);
  setup.last_vertex_low = false;
  setup.guarantee = host.edge_count() > bipartite_turan_number(N, n);
  if (!setup.guarantee && !opt.best_effort)
    fail(errc::too_sparse, "needs more than " + std::to_string(bipartite_turan_number(N, n)) +
                               " cross edges; pass best_effort to try anyway");
  return run_deletion(setup, host, opt);
}

LogBoundAudit turan_log_bound(int N, int n) {
  if (n < 2 || n % 2 != 0) fail(errc::invalid_argument, "the halving bound needs an even path");
  if (N < n) fail(errc::invalid_argument, "need N >= n");
  LogBoundAudit a;
  a.N = N;
  a.n = n;
  // Largest t with 2^(t-1) n <= N.
  int t = 1;
  while (ipow2(t) * n <= N) ++t;
  a.t = t;
  a.bound = ipow2(t - 1) * n * static_cast<long long>(n) * (t + 1);
  if (ipow2(t - 1) * n == N) a.refined = static_cast<long long>(n) * N * t / 2;

  // Unroll the halving recursion at the smallest power-of-two multiple of n
  // that covers N. Each split of a size-m graph pays the bipartite term
  // between its halves; the leaves fall back to the trivial cap.
  int levels = 0;
  while (ipow2(levels) * n < N) ++levels;
  const long long k = n / 2;
  long long total = 0;
  for (int s = 0; s < levels; ++s) {
    LogBoundLevel lv;
    lv.subproblems = static_cast<int>(ipow2(s));
    lv.size = static_cast<int>(ipow2(levels - s)) * n;
    lv.bipartite_each = (k - 1) * (lv.size - k + 1);
    total += static_cast<long long>(lv.subproblems) * lv.bipartite_each;
    a.levels.push_back(lv);
  }
  a.leaf_subproblems = static_cast<int>(ipow2(levels));
  a.leaf_each = choose2(n);
  total += a.leaf_subproblems * a.leaf_each;
  a.recursion_total = total;
  if (a.recursion_total > a.bound)
    fail(errc::internal, "halving audit exceeded its closed-form cap");
  return a;
}

}  // namespace ordpath
