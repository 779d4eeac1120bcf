#include "ordpath/contain.hpp"

#include <algorithm>

#include "ordpath/bits.hpp"
#include "ordpath/errors.hpp"

namespace ordpath {

namespace {

// A copy of a family path is a chain of n-1 cells in the upper triangle:
// consecutive cells share one coordinate while the other one steps in a
// fixed direction. The direction alternates between the "after an odd
// position" move and the "after an even position" move of the family.
enum class Move : std::uint8_t { row_inc, row_dec, col_inc, col_dec };

struct MovePair {
  Move a;  // move following cells c_1, c_3, ...
  Move b;  // move following cells c_2, c_4, ...
};

MovePair moves_for(Family f) {
  switch (f) {
    case Family::ap: return {Move::row_inc, Move::col_dec};
    case Family::pll: return {Move::row_inc, Move::col_inc};
    case Family::pgg: return {Move::row_dec, Move::col_dec};
    case Family::pgl: return {Move::row_dec, Move::col_inc};
    case Family::mono: break;
  }
  fail(errc::internal, "no cell moves for this family");
}

// Cells kept in both orientations so row moves scan columns and column
// moves scan rows without transposing.
struct CellSet {
  int N = 0, W = 0;
  std::vector<std::uint64_t> col;  // col[y]: bits x with (x, y) in the set
  std::vector<std::uint64_t> row;  // row[x]: bits y with (x, y) in the set

  CellSet(int N_, int W_) : N(N_), W(W_), col(std::size_t(N_) * W_, 0), row(std::size_t(N_) * W_, 0) {}

  std::uint64_t* col_of(int y) { return col.data() + std::size_t(y - 1) * W; }
  const std::uint64_t* col_of(int y) const { return col.data() + std::size_t(y - 1) * W; }
  std::uint64_t* row_of(int x) { return row.data() + std::size_t(x - 1) * W; }
  const std::uint64_t* row_of(int x) const { return row.data() + std::size_t(x - 1) * W; }

  void insert(int x, int y) {
    bits::set(col_of(y), x - 1);
    bits::set(row_of(x), y - 1);
  }

  bool empty() const { return !bits::any(col.data(), static_cast<int>(col.size())); }
};

// Host cells, optionally restricted to x <= split < y.
CellSet host_cells(const OrderedGraph& g, int split) {
  const int N = g.vertex_count();
  CellSet e(N, bits::words_for(N));
  for (int x = 1; x < N; ++x) {
    if (split && x > split) break;
    bits::for_each(g.row(x), g.words_per_row(), [&](int b) {
      int y = b + 1;
      if (y > x && (!split || y > split)) e.insert(x, y);
    });
  }
  return e;
}

// next = E intersected with the cells that reach `cur` by one move.
CellSet apply_move(const CellSet& e, const CellSet& cur, Move m) {
  CellSet next(e.N, e.W);
  const int N = e.N, W = e.W;
  std::vector<std::uint64_t> tmp(W);
  if (m == Move::row_inc || m == Move::row_dec) {
    // (x, y) -> (x', y): per column, keep host cells below the highest or
    // above the lowest current entry.
    for (int y = 2; y <= N; ++y) {
      const std::uint64_t* c = cur.col_of(y);
      if (!bits::any(c, W)) continue;
      if (m == Move::row_inc) {
        int top = bits::highest(c, W);
        bits::and_below(tmp.data(), e.col_of(y), W, top);
      } else {
        int bot = bits::lowest(c, W);
        bits::and_above(tmp.data(), e.col_of(y), W, bot);
      }
      bits::for_each(tmp.data(), W, [&](int xb) { next.insert(xb + 1, y); });
    }
  } else {
    // (x, y) -> (x, y'): per row this time.
    for (int x = 1; x < N; ++x) {
      const std::uint64_t* r = cur.row_of(x);
      if (!bits::any(r, W)) continue;
      if (m == Move::col_inc) {
        int top = bits::highest(r, W);
        bits::and_below(tmp.data(), e.row_of(x), W, top);
      } else {
        int bot = bits::lowest(r, W);
        bits::and_above(tmp.data(), e.row_of(x), W, bot);
      }
      bits::for_each(tmp.data(), W, [&](int yb) { next.insert(x, yb + 1); });
    }
  }
  return next;
}

// Move that follows the chain cell at position n - L; level L holds cells
// starting a chain suffix of length L.
Move level_move(const MovePair& mp, int n, int L) { return ((n - L) % 2 == 1) ? mp.a : mp.b; }

std::optional<std::pair<int, int>> lex_least(const CellSet& s) {
  for (int x = 1; x < s.N; ++x) {
    int b = bits::lowest(s.row_of(x), s.W);
    if (b >= 0) return std::make_pair(x, b + 1);
  }
  return std::nullopt;
}

// Reconstruct the chain from the per-level sets, then read the traversal
// off it: each cell contributes the coordinate it changed.
std::vector<int> extract_chain(const std::vector<CellSet>& levels, const MovePair& mp, int n) {
  auto start = lex_least(levels.back());
  if (!start) fail(errc::internal, "extraction started from an empty level");
  std::vector<std::pair<int, int>> chain{*start};
  for (int L = n - 1; L >= 2; --L) {
    auto [x, y] = chain.back();
    const CellSet& prev = levels[L - 2];  // level L-1
    Move m = level_move(mp, n, L);
    int nx = x, ny = y;
    switch (m) {
      case Move::row_inc: {
        std::vector<std::uint64_t> t(prev.W);
        bits::and_above(t.data(), prev.col_of(y), prev.W, x - 1);
        int b = bits::lowest(t.data(), prev.W);
        if (b < 0) fail(errc::internal, "chain step lost its witness");
        nx = b + 1;
        break;
      }
      case Move::row_dec: {
        std::vector<std::uint64_t> t(prev.W);
        bits::and_below(t.data(), prev.col_of(y), prev.W, x - 1);
        int b = bits::highest(t.data(), prev.W);
        if (b < 0) fail(errc::internal, "chain step lost its witness");
        nx = b + 1;
        break;
      }
      case Move::col_inc: {
        std::vector<std::uint64_t> t(prev.W);
        bits::and_above(t.data(), prev.row_of(x), prev.W, y - 1);
        int b = bits::lowest(t.data(), prev.W);
        if (b < 0) fail(errc::internal, "chain step lost its witness");
        ny = b + 1;
        break;
      }
      case Move::col_dec: {
        std::vector<std::uint64_t> t(prev.W);
        bits::and_below(t.data(), prev.row_of(x), prev.W, y - 1);
        int b = bits::highest(t.data(), prev.W);
        if (b < 0) fail(errc::internal, "chain step lost its witness");
        ny = b + 1;
        break;
      }
    }
    chain.emplace_back(nx, ny);
  }
  std::vector<int> verts;
  verts.reserve(n);
  verts.push_back(chain[0].first);
  verts.push_back(chain[0].second);
  for (std::size_t t = 1; t < chain.size(); ++t) {
    if (chain[t].first != chain[t - 1].first)
      verts.push_back(chain[t].first);
    else
      verts.push_back(chain[t].second);
  }
  return verts;
}

std::optional<std::vector<int>> chain_search(const OrderedGraph& g, const PathSpec& spec, int split) {
  const int n = spec.n;
  MovePair mp = moves_for(spec.family);
  std::vector<CellSet> levels;
  levels.reserve(n - 1);
  levels.push_back(host_cells(g, split));
  if (levels[0].empty()) return std::nullopt;
  for (int L = 2; L <= n - 1; ++L) {
    levels.push_back(apply_move(levels[0], levels.back(), level_move(mp, n, L)));
    if (levels.back().empty()) return std::nullopt;
  }
  return extract_chain(levels, mp, n);
}

std::optional<std::vector<int>> find_mono_increasing(const OrderedGraph& g, int n) {
  const int N = g.vertex_count();
  std::vector<int> len(N + 1, 1), prev(N + 1, 0);
  int hit = 0;
  for (int v = 1; v <= N && !hit; ++v) {
    bits::for_each(g.row(v), g.words_per_row(), [&](int b) {
      int u = b + 1;
      if (u < v && len[u] + 1 > len[v]) {
        len[v] = len[u] + 1;
        prev[v] = u;
      }
    });
    if (len[v] >= n) hit = v;
  }
  if (!hit) return std::nullopt;
  std::vector<int> verts(n);
  int v = hit;
  for (int i = n - 1; i >= 0; --i) {
    verts[i] = v;
    v = prev[v];
  }
  return verts;
}

}  // namespace

std::optional<PathCertificate> contains_path(const OrderedGraph& g, const PathSpec& spec) {
  validate_spec(spec);
  const int N = g.vertex_count();
  const int n = spec.n;
  if (N < n) return std::nullopt;

  std::optional<std::vector<int>> verts;
  if (spec.family == Family::mono) {
    verts = find_mono_increasing(g, n);
  } else if (spec.family == Family::ap || spec.family == Family::pgl) {
    verts = chain_search(g, spec, 0);
  } else {
    // One-sided families need every row vertex below every column vertex;
    // enumerate the split point.
    const int k = n / 2;
    for (int m = k; m <= N - k && !verts; ++m) verts = chain_search(g, spec, m);
  }
  if (!verts) return std::nullopt;
  PathCertificate cert{spec, std::move(*verts), std::nullopt};
  validate_certificate(cert, g);
  return cert;
}

std::optional<PathCertificate> find_in_color(const OrderedColoring& c, Color color, const PathSpec& spec) {
  auto cert = contains_path(c.color_class(color), spec);
  if (cert) {
    cert->color = color;
    validate_certificate(*cert, c);
  }
  return cert;
}

std::optional<std::vector<int>> embed_generic(const OrderedGraph& host, const OrderedGraph& pattern,
                                              int vertex_cap) {
  const int p = pattern.vertex_count();
  const int N = host.vertex_count();
  if (p > vertex_cap) fail(errc::size_limit, "pattern too large for the generic embedder");
  if (p > N) return std::nullopt;

  std::vector<std::vector<int>> back_edges(p + 1);
  for (auto [u, v] : pattern.edges()) back_edges[v].push_back(u);

  std::vector<int> image(p + 1, 0);
  auto dfs = [&](auto&& self, int d) -> bool {  // d = pattern vertex to place
    if (d > p) return true;
    int lo = (d == 1) ? 1 : image[d - 1] + 1;
    for (int c = lo; c <= N - (p - d); ++c) {
      bool ok = true;
      for (int q : back_edges[d])
        if (!host.has_edge(image[q], c)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      image[d] = c;
      if (self(self, d + 1)) return true;
    }
    return false;
  };
  if (!dfs(dfs, 1)) return std::nullopt;
  return std::vector<int>(image.begin() + 1, image.end());
}

void for_each_placement(int N, const PathSpec& spec, const std::function<void(const std::vector<int>&)>& fn) {
  validate_spec(spec);
  const int n = spec.n;
  if (N < n) return;
  std::vector<int> support(n);
  for (int i = 0; i < n; ++i) support[i] = i + 1;
  while (true) {
    fn(support);
    // Next combination in lexicographic order.
    int i = n - 1;
    while (i >= 0 && support[i] == N - (n - 1 - i)) --i;
    if (i < 0) break;
    ++support[i];
    for (int j = i + 1; j < n; ++j) support[j] = support[j - 1] + 1;
  }
}

long long count_copies(const OrderedGraph& g, const PathSpec& spec) {
  std::vector<std::pair<int, int>> pat = path_edges(spec);
  long long total = 0;
  for_each_placement(g.vertex_count(), spec, [&](const std::vector<int>& s) {
    for (auto [i, j] : pat)
      if (!g.has_edge(s[i - 1], s[j - 1])) return;
    ++total;
  });
  return total;
}

}  // namespace ordpath
