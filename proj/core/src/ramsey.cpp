#include "ordpath/ramsey.hpp"

#include <algorithm>

#include "ordpath/errors.hpp"
#include "ordpath/mathutil.hpp"

namespace ordpath {

namespace {

// Keep only cells that exist and sit inside the scope windows. At guarantee
// size nothing is dropped; undersized best-effort hosts clip the corners.
std::vector<std::pair<int, int>> clip_cells(std::vector<std::pair<int, int>> cells, int N, int low_hi,
                                            int high_lo) {
  std::vector<std::pair<int, int>> out;
  out.reserve(cells.size());
  for (auto [x, y] : cells)
    if (1 <= x && x < y && y <= N && x <= low_hi && y >= high_lo) out.emplace_back(x, y);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

int ramsey_upper_bound_ap(int n) {
  if (n < 2) fail(errc::invalid_argument, "path needs at least 2 vertices");
  long long inner = 2LL * (n - 2) * (n - 2) + ((n % 2 == 0) ? 1 : -1);
  return static_cast<int>(2 * n - 2 + (isqrt_floor(inner) - 1) / 2);
}

OverlapConfig overlap_config(int n, int N) {
  if (n < 2) fail(errc::invalid_argument, "path needs at least 2 vertices");
  if (N < n) fail(errc::invalid_argument, "host smaller than the path");
  OverlapConfig c;
  c.n = n;
  c.N = N;
  c.a = (n % 2 == 0) ? N - n + 1 : N - n + 2;
  return c;
}

std::vector<std::pair<int, int>> overlap_grey_edges(int n, int N, int a) {
  std::vector<std::pair<int, int>> g;
  // Low rows against the inner slice of the high window.
  for (int i = 1; i <= n / 2 - 1; ++i)
    for (int b = n; b <= n + n / 2 - i - 1; ++b) g.emplace_back(i, b);
  // High columns against the top slice of the low window.
  for (int i = 1; i <= (n + 1) / 2 - 2; ++i)
    for (int ap = a - (n + 1) / 2 + i + 2; ap <= a; ++ap) g.emplace_back(ap, N - i + 1);
  return clip_cells(std::move(g), N, a, n);
}

long long overlap_grey_count(int n) {
  return (n % 2 == 0) ? static_cast<long long>(n - 2) * (n - 2) / 4
                      : static_cast<long long>(n - 1) * (n - 3) / 4;
}

long long overlap_cross_edges(int n, int N, int a) {
  long long total = 0;
  for (int x = 1; x <= a; ++x) {
    int lo = std::max(x + 1, n);
    if (lo <= N) total += N - lo + 1;
  }
  return total;
}

StepSchedule overlap_schedule(int n, int N, int a) {
  StepSchedule steps;
  const int odd_count = (n + 1) / 2 - 1;
  const int even_count = n / 2 - 1;
  for (int s = 1; s <= n - 2; ++s) {
    Step st;
    st.index = s;
    if (s % 2 == 1) {
      int i = (s + 1) / 2;
      if (i > odd_count) fail(errc::internal, "overlap schedule ran past its odd steps");
      st.lo = 3 * n / 2 - i;
      st.hi = N - i + 1;
      st.toward_lo = 1;
      st.toward_hi = a;
      st.dir = Dir::leftmost;
    } else {
      int i = s / 2;
      if (i > even_count) fail(errc::internal, "overlap schedule ran past its even steps");
      st.lo = i + 1;
      st.hi = a - (n + 1) / 2 + i + 1;
      st.toward_lo = n;
      st.toward_hi = N;
      st.dir = Dir::rightmost;
    }
    steps.push_back(st);
  }
  return steps;
}

long long overlap_removal_bound(int n, int N, int a) {
  return schedule_removal_bound(overlap_schedule(n, N, a), 2);
}

namespace {

std::vector<ClaimWindow> overlap_claims(int n, int N) {
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

FindResult find_mono_ap(const OrderedColoring& host, int n, const FindOptions& opt) {
  const int N = host.vertex_count();
  if (n < 2) fail(errc::invalid_argument, "path needs at least 2 vertices");
  if (N < n)
    fail(errc::host_too_small, "host has " + std::to_string(N) + " vertices, path needs " + std::to_string(n));
  OverlapConfig cfg = overlap_config(n, N);

  DeletionSetup setup;
  setup.engine = "ramsey-overlap";
  setup.spec = {Family::ap, n};
  setup.N = N;
  setup.low_hi = cfg.a;
  setup.high_lo = n;
  setup.grey = overlap_grey_edges(n, N, cfg.a);
  setup.steps = overlap_schedule(n, N, cfg.a);
  setup.claims = overlap_claims(n, N);
  setup.last_vertex_low = (n % 2 == 1);
  setup.guarantee = overlap_removal_bound(n, N, cfg.a) + static_cast<long long>(setup.grey.size()) <
                    overlap_cross_edges(n, N, cfg.a);
  if (!setup.guarantee && !opt.best_effort)
    fail(errc::host_too_small, "guaranteed from " + std::to_string(ramsey_upper_bound_ap(n)) +
                                   " vertices; pass best_effort to try anyway");
  return run_deletion(setup, host, opt);
}

int ramsey_upper_bound_half(int n) {
  if (n < 2 || n % 2 != 0) fail(errc::invalid_argument, "half-split families need an even path");
  return 3 * n - 4;
}

std::vector<std::pair<int, int>> half_grey_edges(Family f, int n, int M) {
  const int k = n / 2;
  const int N = 2 * M;
  std::vector<std::pair<int, int>> g;
  // Two staircase corners of the A x B grid; which two depends on where the
  // family's traversal enters and leaves the halves.
  auto low_up = [&](int rows, int width_off) {  // rows near 1, columns near M+1
    for (int i = 1; i <= rows; ++i)
      for (int j = 1; j <= k - i - width_off; ++j) g.emplace_back(i, M + j);
  };
  auto low_down = [&](int rows, int width_off) {  // rows near 1, columns near N
    for (int i = 1; i <= rows; ++i)
      for (int j = 1; j <= k - i - width_off; ++j) g.emplace_back(i, N + 1 - j);
  };
  auto high_up = [&](int rows, int width_off) {  // rows near M, columns near M+1
    for (int i = 1; i <= rows; ++i)
      for (int j = 1; j <= k - i - width_off; ++j) g.emplace_back(M + 1 - i, M + j);
  };
  auto high_down = [&](int rows, int width_off) {  // rows near M, columns near N
    for (int i = 1; i <= rows; ++i)
      for (int j = 1; j <= k - i - width_off; ++j) g.emplace_back(M + 1 - i, N + 1 - j);
  };
  switch (f) {
    case Family::pll:
      low_down(k - 1, 0);
      high_up(k - 2, 1);
      break;
    case Family::pgg:
      low_down(k - 2, 1);
      high_up(k - 1, 0);
      break;
    case Family::ap:
      low_up(k - 1, 0);
      high_down(k - 2, 1);
      break;
    case Family::pgl:
      high_down(k - 1, 0);
      low_up(k - 2, 1);
      break;
    case Family::mono:
      fail(errc::invalid_argument, "no half-split layout for the increasing path");
  }
  return clip_cells(std::move(g), N, M, M + 1);
}

long long half_grey_count(int n) {
  long long km1 = n / 2 - 1;
  return km1 * km1;
}

StepSchedule half_schedule(Family f, int n, int M) {
  const int k = n / 2;
  const int N = 2 * M;
  StepSchedule steps;
  for (int s = 1; s <= n - 2; ++s) {
    Step st;
    st.index = s;
    if (s % 2 == 1) {
      int i = (s + 1) / 2;
      st.toward_lo = 1;
      st.toward_hi = M;
      switch (f) {
        case Family::pll:
          st.lo = M + i, st.hi = N - k + i, st.dir = Dir::leftmost;
          break;
        case Family::pgg:
          st.lo = M + k - i + 1, st.hi = N - i + 1, st.dir = Dir::rightmost;
          break;
        case Family::ap:
          st.lo = M + k - i + 1, st.hi = N - i + 1, st.dir = Dir::leftmost;
          break;
        case Family::pgl:
          st.lo = M + i, st.hi = N - k + i, st.dir = Dir::rightmost;
          break;
        case Family::mono:
          fail(errc::invalid_argument, "no half-split layout for the increasing path");
      }
    } else {
      int i = s / 2;
      st.toward_lo = M + 1;
      st.toward_hi = N;
      switch (f) {
        case Family::pll:
          st.lo = i + 1, st.hi = M - k + i + 1, st.dir = Dir::leftmost;
          break;
        case Family::pgg:
          st.lo = k - i, st.hi = M - i, st.dir = Dir::rightmost;
          break;
        case Family::ap:
          st.lo = i + 1, st.hi = M - k + i + 1, st.dir = Dir::rightmost;
          break;
        case Family::pgl:
          st.lo = k - i, st.hi = M - i, st.dir = Dir::leftmost;
          break;
        case Family::mono:
          fail(errc::invalid_argument, "no half-split layout for the increasing path");
      }
    }
    steps.push_back(st);
  }
  return steps;
}

std::vector<ClaimWindow> half_claims(Family f, int n, int M) {
  const int N = 2 * M;
  std::vector<ClaimWindow> claims;
  for (int s = 1; s <= n - 2; ++s) {
    int i = (s + 1) / 2;
    bool odd = (s % 2 == 1);
    ClaimWindow cw;
    if (odd) {
      cw.low_side = true;
      // Which end of the low half the removals clear first.
      bool from_bottom = (f == Family::pll || f == Family::ap);
      cw.lo = from_bottom ? 1 : M - i + 1;
      cw.hi = from_bottom ? i : M;
    } else {
      i = s / 2;
      cw.low_side = false;
      bool from_top = (f == Family::pgg || f == Family::ap);
      cw.lo = from_top ? N - i + 1 : M + 1;
      cw.hi = from_top ? N : M + i;
    }
    claims.push_back(cw);
  }
  return claims;
}

FindResult find_mono_half(const OrderedColoring& host, Family f, int n, const FindOptions& opt) {
  if (f != Family::pll && f != Family::pgg)
    fail(errc::invalid_argument, "the half-split color engine handles pll and pgg");
  if (n < 2 || n % 2 != 0) fail(errc::invalid_argument, "half-split families need an even path");
  const int N = host.vertex_count();
  if (N % 2 != 0)
    fail(errc::invalid_argument, "half-split engine needs an even host order, got " + std::to_string(N));
  if (N < n)
    fail(errc::host_too_small, "host has " + std::to_string(N) + " vertices, path needs " + std::to_string(n));
  const int M = N / 2;

  DeletionSetup setup;
  setup.engine = "ramsey-halves";
  setup.spec = {f, n};
  setup.N = N;
  setup.low_hi = M;
  setup.high_lo = M + 1;
  setup.grey = half_grey_edges(f, n, M);
  setup.steps = half_schedule(f, n, M);
  setup.claims = half_claims(f, n, M);
  setup.last_vertex_low = false;
  long long cross = static_cast<long long>(M) * M;
  setup.guarantee = schedule_removal_bound(setup.steps, 2) + half_grey_count(n) < cross;
  if (!setup.guarantee && !opt.best_effort)
    fail(errc::host_too_small, "guaranteed from " + std::to_string(ramsey_upper_bound_half(n)) +
                                   " vertices; pass best_effort to try anyway");
  return run_deletion(setup, host, opt);
}

FindResult find_mono(const OrderedColoring& host, const PathSpec& spec, const FindOptions& opt) {
  validate_spec(spec);
  switch (spec.family) {
    case Family::ap:
      return find_mono_ap(host, spec.n, opt);
    case Family::pll:
    case Family::pgg:
      return find_mono_half(host, spec.family, spec.n, opt);
    case Family::pgl: {
      // Order reversal turns pgl into ap. The trace keeps the reversed
      // coordinates; the certificate is mapped back to the original host.
      FindResult r = find_mono_ap(host.reversed(), spec.n, opt);
      r.trace.engine = "ramsey-overlap-reversed";
      if (r.certificate) {
        PathCertificate mapped = reversed_certificate(*r.certificate, host.vertex_count());
        validate_certificate(mapped, host);
        r.certificate = mapped;
      }
      return r;
    }
    case Family::mono:
      fail(errc::invalid_argument,
           "no deletion engine for the increasing path; use containment or search instead");
  }
  fail(errc::internal, "unhandled family");
}

}  // namespace ordpath
