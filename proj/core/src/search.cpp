#include "ordpath/search.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <numeric>
#include <thread>

#include "ordpath/contain.hpp"
#include "ordpath/errors.hpp"
#include "ordpath/ramsey.hpp"
#include "ordpath/turan.hpp"

namespace ordpath {

const char* outcome_name(SearchOutcome o) {
  switch (o) {
    case SearchOutcome::witness_found: return "witness-found";
    case SearchOutcome::exhausted: return "exhausted";
    case SearchOutcome::resource_limit: return "resource-limit";
  }
  fail(errc::internal, "unknown search outcome");
}

namespace {

// Every placement of the pattern, stored as cell-id lists with a reverse
// index. Deciding a cell then touches only the placements through it.
struct CopyTable {
  int N = 0, n = 0;
  long long n_cells = 0;
  int copies = 0;
  int cells_per_copy = 0;
  std::vector<std::int32_t> copy_cells;  // flattened, cells_per_copy each
  std::vector<std::int32_t> cell_start;  // CSR offsets, n_cells + 1
  std::vector<std::int32_t> cell_list;   // copy ids through each cell

  const std::int32_t* cells_of(int copy) const { return copy_cells.data() + std::size_t(copy) * cells_per_copy; }
};

CopyTable build_copy_table(int N, const PathSpec& spec, const std::function<bool(int, int)>& keep_cell) {
  CopyTable t;
  t.N = N;
  t.n = spec.n;
  t.n_cells = cell_count(N);
  t.cells_per_copy = spec.n - 1;
  std::vector<std::pair<int, int>> pat = path_edges(spec);
  for_each_placement(N, spec, [&](const std::vector<int>& s) {
    std::int32_t ids[64];
    int w = 0;
    for (auto [i, j] : pat) {
      int u = s[i - 1], v = s[j - 1];
      if (keep_cell && !keep_cell(u, v)) return;
      ids[w++] = static_cast<std::int32_t>(edge_id(N, u, v));
    }
    t.copy_cells.insert(t.copy_cells.end(), ids, ids + w);
    ++t.copies;
  });
  t.cell_start.assign(t.n_cells + 1, 0);
  for (std::int32_t c : t.copy_cells) ++t.cell_start[c + 1];
  std::partial_sum(t.cell_start.begin(), t.cell_start.end(), t.cell_start.begin());
  t.cell_list.resize(t.copy_cells.size());
  std::vector<std::int32_t> fill(t.cell_start.begin(), t.cell_start.end() - 1);
  for (int copy = 0; copy < t.copies; ++copy)
    for (int e = 0; e < t.cells_per_copy; ++e) t.cell_list[fill[t.copy_cells[std::size_t(copy) * t.cells_per_copy + e]]++] = copy;
  return t;
}

// Decision order: cells that appear in many placements first, lexicographic
// on ties. Cells in no placement are not decisions at all.
std::vector<std::int32_t> decision_order(const CopyTable& t) {
  std::vector<std::int32_t> order;
  for (std::int32_t c = 0; c < t.n_cells; ++c)
    if (t.cell_start[c + 1] > t.cell_start[c]) order.push_back(c);
  std::stable_sort(order.begin(), order.end(), [&](std::int32_t a, std::int32_t b) {
    return t.cell_start[a + 1] - t.cell_start[a] > t.cell_start[b + 1] - t.cell_start[b];
  });
  return order;
}

constexpr int kExhausted = 0;
constexpr int kFound = 1;
constexpr int kBudget = 2;

// ---------------------------------------------------------------------------
// Witness search: 2-color the cells so no placement is monochromatic.

struct RamseyState {
  const CopyTable* t = nullptr;
  std::vector<std::int8_t> val;       // -1 open, 0 red, 1 blue
  std::vector<std::int16_t> cnt[2];   // per copy, cells of each color
  std::vector<std::int16_t> open;     // per copy, undecided cells
  std::vector<std::int32_t> trail;    // assigned cells, in order
  long long unassigned = 0;           // over all cells

  explicit RamseyState(const CopyTable& table) : t(&table) {
    val.assign(table.n_cells, -1);
    cnt[0].assign(table.copies, 0);
    cnt[1].assign(table.copies, 0);
    open.assign(table.copies, static_cast<std::int16_t>(table.cells_per_copy));
    unassigned = table.n_cells;
    // Cells in no placement never matter; pin them red up front.
    for (std::int32_t c = 0; c < table.n_cells; ++c)
      if (table.cell_start[c + 1] == table.cell_start[c]) {
        val[c] = 0;
        --unassigned;
      }
  }

  // False on a monochromatic copy. Bookkeeping always completes so undo_to
  // stays an exact inverse.
  bool assign(std::int32_t cell, int color) {
    val[cell] = static_cast<std::int8_t>(color);
    --unassigned;
    trail.push_back(cell);
    bool ok = true;
    for (std::int32_t i = t->cell_start[cell]; i < t->cell_start[cell + 1]; ++i) {
      int copy = t->cell_list[i];
      --open[copy];
      if (++cnt[color][copy] == t->cells_per_copy) ok = false;
    }
    return ok;
  }

  // Process the trail as a queue: any copy one cell short of monochromatic
  // forces that cell to the other color.
  bool propagate(std::size_t qhead) {
    while (qhead < trail.size()) {
      std::int32_t cell = trail[qhead++];
      for (std::int32_t i = t->cell_start[cell]; i < t->cell_start[cell + 1]; ++i) {
        int copy = t->cell_list[i];
        if (open[copy] != 1) continue;
        int forced_color;
        if (cnt[0][copy] == t->cells_per_copy - 1)
          forced_color = 1;
        else if (cnt[1][copy] == t->cells_per_copy - 1)
          forced_color = 0;
        else
          continue;
        std::int32_t last = -1;
        for (int e = 0; e < t->cells_per_copy; ++e)
          if (val[t->cells_of(copy)[e]] == -1) last = t->cells_of(copy)[e];
        if (last < 0) fail(errc::internal, "open count out of sync with assignments");
        if (!assign(last, forced_color)) return false;
      }
    }
    return true;
  }

  void undo_to(std::size_t mark) {
    while (trail.size() > mark) {
      std::int32_t cell = trail.back();
      trail.pop_back();
      int color = val[cell];
      val[cell] = -1;
      ++unassigned;
      for (std::int32_t i = t->cell_start[cell]; i < t->cell_start[cell + 1]; ++i) {
        int copy = t->cell_list[i];
        ++open[copy];
        --cnt[color][copy];
      }
    }
  }

  OrderedColoring to_coloring() const {
    OrderedColoring c(t->N);
    for (std::int32_t id = 0; id < t->n_cells; ++id)
      if (val[id] == 0) {
        auto [u, v] = edge_from_id(t->N, id);
        c.set_color(u, v, Color::red);
      }
    return c;
  }
};

struct RamseyDfs {
  const CopyTable& t;
  const std::vector<std::int32_t>& order;
  const SearchOptions& opt;
  const PathSpec& spec;
  std::atomic<std::uint64_t>& nodes;
  std::atomic<bool>* stop = nullptr;  // set when another worker found a witness

  int run(RamseyState& st, std::size_t order_pos, bool first_decision,
          std::optional<OrderedColoring>& witness) {
    while (order_pos < order.size() && st.val[order[order_pos]] != -1) ++order_pos;
    if (st.unassigned == 0) {
      if (opt.full_recheck) {
        OrderedColoring c = st.to_coloring();
        if (find_in_color(c, Color::red, spec) || find_in_color(c, Color::blue, spec))
          fail(errc::internal, "placement bookkeeping accepted a monochromatic coloring");
      }
      witness = st.to_coloring();
      return kFound;
    }
    if (order_pos >= order.size()) fail(errc::internal, "cells left open with no decisions left");
    if (nodes.fetch_add(1, std::memory_order_relaxed) + 1 > opt.node_budget) return kBudget;
    if (stop && stop->load(std::memory_order_relaxed)) return kExhausted;

    std::int32_t cell = order[order_pos];
    // Swapping the two colors maps witnesses to witnesses, so the first
    // branched cell only needs one color.
    const int color_count = first_decision ? 1 : 2;
    for (int color = 0; color < color_count; ++color) {
      std::size_t mark = st.trail.size();
      if (st.assign(cell, color) && st.propagate(mark)) {
        int r = run(st, order_pos + 1, false, witness);
        if (r != kExhausted) return r;
      }
      st.undo_to(mark);
    }
    return kExhausted;
  }
};

}  // namespace

RamseySearchResult search_ramsey_witness(int N, const PathSpec& spec, const SearchOptions& opt) {
  validate_spec(spec);
  if (N < 1) fail(errc::invalid_argument, "host needs at least one vertex");
  RamseySearchResult res;
  CopyTable t = build_copy_table(N, spec, nullptr);
  std::vector<std::int32_t> order = decision_order(t);
  std::atomic<std::uint64_t> nodes{0};

  if (opt.threads <= 1 || order.size() <= std::size_t(opt.split_depth)) {
    RamseyState st(t);
    RamseyDfs dfs{t, order, opt, spec, nodes, nullptr};
    std::optional<OrderedColoring> witness;
    int r = dfs.run(st, 0, true, witness);
    res.nodes = nodes.load();
    if (r == kFound) {
      res.outcome = SearchOutcome::witness_found;
      res.witness = RamseyWitness{std::move(*witness)};
    } else {
      res.outcome = (r == kBudget) ? SearchOutcome::resource_limit : SearchOutcome::exhausted;
    }
    return res;
  }

  // Frontier split: enumerate consistent decision prefixes of fixed depth,
  // then hand the subtrees to a pool of workers.
  std::vector<std::vector<std::pair<std::int32_t, int>>> seeds;
  {
    RamseyState st(t);
    std::vector<std::pair<std::int32_t, int>> prefix;
    std::function<int(std::size_t, int)> gen = [&](std::size_t order_pos, int depth) -> int {
      while (order_pos < order.size() && st.val[order[order_pos]] != -1) ++order_pos;
      if (st.unassigned == 0 || order_pos >= order.size() || depth == opt.split_depth) {
        seeds.push_back(prefix);
        return kExhausted;
      }
      if (nodes.fetch_add(1, std::memory_order_relaxed) + 1 > opt.node_budget) return kBudget;
      std::int32_t cell = order[order_pos];
      const int color_count = (depth == 0) ? 1 : 2;
      for (int color = 0; color < color_count; ++color) {
        std::size_t mark = st.trail.size();
        prefix.emplace_back(cell, color);
        if (st.assign(cell, color) && st.propagate(mark)) {
          int r = gen(order_pos + 1, depth + 1);
          if (r == kBudget) return r;
        }
        st.undo_to(mark);
        prefix.pop_back();
      }
      return kExhausted;
    };
    if (gen(0, 0) == kBudget) {
      res.outcome = SearchOutcome::resource_limit;
      res.nodes = nodes.load();
      return res;
    }
  }

  std::atomic<std::size_t> next_seed{0};
  std::atomic<bool> stop{false};
  std::atomic<bool> out_of_budget{false};
  std::mutex witness_mu;
  std::optional<OrderedColoring> witness;
  auto worker = [&]() {
    RamseyState st(t);
    RamseyDfs dfs{t, order, opt, spec, nodes, &stop};
    for (;;) {
      std::size_t s = next_seed.fetch_add(1);
      if (s >= seeds.size() || stop.load()) return;
      st.undo_to(0);
      bool ok = true;
      for (auto [cell, color] : seeds[s]) {
        std::size_t mark = st.trail.size();
        if (!st.assign(cell, color) || !st.propagate(mark)) {
          ok = false;
          break;
        }
      }
      if (!ok) fail(errc::internal, "frontier prefix failed to replay");
      std::optional<OrderedColoring> w;
      int r = dfs.run(st, 0, false, w);
      if (r == kFound) {
        std::lock_guard<std::mutex> lk(witness_mu);
        if (!witness) witness = std::move(w);
        stop.store(true);
      } else if (r == kBudget) {
        out_of_budget.store(true);
        stop.store(true);
      }
    }
  };
  std::vector<std::thread> pool;
  for (int i = 0; i < opt.threads; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  res.nodes = nodes.load();
  if (witness) {
    res.outcome = SearchOutcome::witness_found;
    res.witness = RamseyWitness{std::move(*witness)};
  } else if (out_of_budget.load()) {
    res.outcome = SearchOutcome::resource_limit;
  } else {
    res.outcome = SearchOutcome::exhausted;
  }
  return res;
}

ExactRamsey compute_ramsey_exact(const PathSpec& spec, const SearchOptions& opt) {
  validate_spec(spec);
  const int n = spec.n;
  int lo = 2, hi = 2;
  switch (spec.family) {
    case Family::ap:
    case Family::pgl:
      lo = std::max(2, 5 * (n / 2) - 4);  // below this a stacked witness always exists
      hi = ramsey_upper_bound_ap(n);
      break;
    case Family::pll:
    case Family::pgg:
      lo = std::max(2, n - 1);
      hi = ramsey_upper_bound_half(n);
      break;
    case Family::mono:
      lo = std::max(2, n - 1);
      hi = (n - 1) * (n - 1) + 1;  // pigeonhole on longest-path labels
      break;
  }

  ExactRamsey out;
  std::optional<RamseyWitness> last_witness;
  auto probe = [&](int N) -> SearchOutcome {
    RamseySearchResult r = search_ramsey_witness(N, spec, opt);
    out.nodes += r.nodes;
    if (r.outcome == SearchOutcome::resource_limit)
      fail(errc::resource_limit, "witness search ran out of budget at " + std::to_string(N) + " vertices");
    if (r.outcome == SearchOutcome::witness_found) last_witness = std::move(r.witness);
    return r.outcome;
  };

  for (int N = lo; N <= hi; ++N) {
    if (probe(N) == SearchOutcome::witness_found) continue;
    if (N > lo) {
      out.value = N;
      out.witness = std::move(last_witness);
      return out;
    }
    // The window floor already has no witness; walk down to the transition.
    for (int M = lo - 1; M >= 1; --M) {
      if (probe(M) == SearchOutcome::witness_found) {
        out.value = M + 1;
        out.witness = std::move(last_witness);
        return out;
      }
    }
    out.value = 2;  // no coloring on one vertex has any path
    out.witness = std::nullopt;
    return out;
  }
  fail(errc::window_miss, "no exhausted order up to " + std::to_string(hi) +
                              "; the scan window must contain the transition");
}

// ---------------------------------------------------------------------------
// Extremal search: largest edge set with no placement fully present.

namespace {

struct TuranState {
  const CopyTable* t = nullptr;
  std::vector<std::int8_t> val;        // -1 open, 0 out, 1 in
  std::vector<std::int32_t> cnt_in;    // per copy
  std::vector<std::int32_t> undec;     // per copy
  std::vector<std::int32_t> trail;
  long long included = 0;
  long long open_cells = 0;

  TuranState(const CopyTable& table, const std::function<bool(int, int)>& keep_cell) : t(&table) {
    val.assign(table.n_cells, -1);
    cnt_in.assign(table.copies, 0);
    undec.assign(table.copies, table.cells_per_copy);
    open_cells = table.n_cells;
    for (std::int32_t c = 0; c < table.n_cells; ++c) {
      auto [u, v] = edge_from_id(table.N, c);
      if (keep_cell && !keep_cell(u, v)) {
        val[c] = 0;  // banned cells stay out and are not decisions
        --open_cells;
      } else if (table.cell_start[c + 1] == table.cell_start[c]) {
        val[c] = 1;  // cells in no placement are always safe to take
        ++included;
        --open_cells;
      }
    }
  }

  // False when an inclusion completes a placement. Bookkeeping always
  // completes so undo_to stays an exact inverse.
  bool assign(std::int32_t cell, int value) {
    val[cell] = static_cast<std::int8_t>(value);
    --open_cells;
    if (value == 1) ++included;
    trail.push_back(cell);
    bool ok = true;
    if (value == 1) {
      for (std::int32_t i = t->cell_start[cell]; i < t->cell_start[cell + 1]; ++i) {
        int copy = t->cell_list[i];
        --undec[copy];
        if (++cnt_in[copy] == t->cells_per_copy) ok = false;
      }
    } else {
      for (std::int32_t i = t->cell_start[cell]; i < t->cell_start[cell + 1]; ++i) --undec[t->cell_list[i]];
    }
    return ok;
  }

  // A placement with all but one cell included cannot take its last cell.
  bool propagate(std::size_t qhead) {
    while (qhead < trail.size()) {
      std::int32_t cell = trail[qhead++];
      for (std::int32_t i = t->cell_start[cell]; i < t->cell_start[cell + 1]; ++i) {
        int copy = t->cell_list[i];
        if (undec[copy] != 1 || cnt_in[copy] != t->cells_per_copy - 1) continue;
        std::int32_t last = -1;
        for (int e = 0; e < t->cells_per_copy; ++e)
          if (val[t->cells_of(copy)[e]] == -1) last = t->cells_of(copy)[e];
        if (last < 0) fail(errc::internal, "undecided count out of sync with assignments");
        if (!assign(last, 0)) return false;
      }
    }
    return true;
  }

  void undo_to(std::size_t mark) {
    while (trail.size() > mark) {
      std::int32_t cell = trail.back();
      trail.pop_back();
      int value = val[cell];
      val[cell] = -1;
      ++open_cells;
      if (value == 1) --included;
      for (std::int32_t i = t->cell_start[cell]; i < t->cell_start[cell + 1]; ++i) {
        int copy = t->cell_list[i];
        ++undec[copy];
        if (value == 1) --cnt_in[copy];
      }
    }
  }

  OrderedGraph to_graph() const {
    OrderedGraph g(t->N);
    for (std::int32_t id = 0; id < t->n_cells; ++id)
      if (val[id] == 1) {
        auto [u, v] = edge_from_id(t->N, id);
        g.add_edge(u, v);
      }
    return g;
  }
};

struct TuranDfs {
  const CopyTable& t;
  const std::vector<std::int32_t>& order;
  const SearchOptions& opt;
  const PathSpec& spec;
  std::uint64_t nodes = 0;
  long long best = -1;
  OrderedGraph best_graph;

  int run(TuranState& st, std::size_t order_pos) {
    if (st.included + st.open_cells <= best) return kExhausted;  // cannot beat the incumbent
    while (order_pos < order.size() && st.val[order[order_pos]] != -1) ++order_pos;
    if (st.open_cells == 0) {
      if (st.included > best) {
        OrderedGraph g = st.to_graph();
        if (opt.full_recheck && contains_path(g, spec))
          fail(errc::internal, "placement bookkeeping accepted a graph with a copy");
        best = st.included;
        best_graph = std::move(g);
      }
      return kExhausted;
    }
    if (order_pos >= order.size()) fail(errc::internal, "cells left open with no decisions left");
    if (++nodes > opt.node_budget) return kBudget;

    std::int32_t cell = order[order_pos];
    for (int value : {1, 0}) {
      std::size_t mark = st.trail.size();
      if (st.assign(cell, value) && st.propagate(mark)) {
        int r = run(st, order_pos + 1);
        if (r == kBudget) return r;
      }
      st.undo_to(mark);
    }
    return kExhausted;
  }
};

TuranSearchResult turan_search(int N, const PathSpec& spec, const SearchOptions& opt,
                               const std::function<bool(int, int)>& keep_cell,
                               const std::vector<OrderedGraph>& seeds) {
  validate_spec(spec);
  if (N < 1) fail(errc::invalid_argument, "host needs at least one vertex");
  CopyTable t = build_copy_table(N, spec, keep_cell);
  std::vector<std::int32_t> order = decision_order(t);
  TuranState st(t, keep_cell);
  TuranDfs dfs{t, order, opt, spec, 0, -1, OrderedGraph(N)};
  for (const OrderedGraph& seed : seeds) {
    if (contains_path(seed, spec))
      fail(errc::internal, "seed construction contains the pattern it should avoid");
    if (seed.edge_count() > dfs.best) {
      dfs.best = seed.edge_count();
      dfs.best_graph = seed;
    }
  }

  int r = dfs.run(st, 0);
  TuranSearchResult res;
  res.outcome = (r == kBudget) ? SearchOutcome::resource_limit : SearchOutcome::exhausted;
  res.max_edges = std::max(dfs.best, 0LL);
  if (dfs.best < 0) dfs.best_graph = OrderedGraph(N);  // empty graph is always valid
  res.best = std::move(dfs.best_graph);
  res.nodes = dfs.nodes;
  return res;
}

}  // namespace

TuranSearchResult search_turan_max(int N, const PathSpec& spec, const SearchOptions& opt) {
  std::vector<OrderedGraph> seeds;
  if (N >= spec.n) {
    if (spec.family == Family::ap) {
      seeds.push_back(extremal_star(N, spec.n));
      seeds.push_back(extremal_band(N, spec.n));
    } else if (spec.family == Family::pgl) {
      seeds.push_back(extremal_star(N, spec.n).reversed());
      seeds.push_back(extremal_band(N, spec.n).reversed());
    }
  }
  return turan_search(N, spec, opt, nullptr, seeds);
}

TuranSearchResult search_turan_max_bipartite(int N, const PathSpec& spec, const SearchOptions& opt) {
  if (N % 2 != 0) fail(errc::invalid_argument, "bipartite search needs an even host order");
  const int M = N / 2;
  auto cross = [M](int u, int v) { return u <= M && v > M; };
  std::vector<OrderedGraph> seeds;
  if (N >= spec.n && spec.family != Family::mono && spec.n % 2 == 0)
    seeds.push_back(extremal_bipartite(N, spec.n, spec.family));
  return turan_search(N, spec, opt, cross, seeds);
}

}  // namespace ordpath
