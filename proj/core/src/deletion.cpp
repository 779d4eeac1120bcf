#include "ordpath/deletion.hpp"

#include <algorithm>
#include <array>

#include "ordpath/bits.hpp"
#include "ordpath/errors.hpp"

namespace ordpath {

namespace {

// Host-agnostic walk. Slot 0 holds red or the plain edge set; slot 1 holds
// blue when the host is a coloring. rem[s] keeps the remaining candidate
// cells of slot s as a symmetric adjacency: scope cells that are host edges,
// minus grey, minus removals so far.
struct Runner {
  const DeletionSetup& setup;
  int N, W, nslots;
  std::vector<std::uint64_t> rem[2];
  DeletionTrace trace;
  std::vector<char> grey_mask;               // by edge_id
  std::vector<std::array<int, 2>> rm_other;  // (step, vertex) -> partner per slot

  Runner(const Runner&) = delete;

  Runner(const DeletionSetup& s, int slots)
      : setup(s), N(s.N), W(bits::words_for(s.N)), nslots(slots) {
    trace.engine = s.engine;
    trace.spec = s.spec;
    trace.N = N;
    trace.low_hi = s.low_hi;
    trace.high_lo = s.high_lo;
    trace.cell_state.assign(cell_count(N), CellState::out_of_scope);
    trace.removal_index.assign(cell_count(N), -1);
    trace.guarantee = s.guarantee;
    grey_mask.assign(cell_count(N), 0);
    for (auto [x, y] : s.grey) {
      if (!(x <= s.low_hi && y >= s.high_lo))
        fail(errc::internal, "grey cell outside the scope windows");
      grey_mask[edge_id(N, x, y)] = 1;
    }
    rm_other.assign(std::size_t(s.steps.size()) * N, {0, 0});
    for (int k = 0; k < nslots; ++k) rem[k].assign(std::size_t(N) * W, 0);
  }

  std::uint64_t* rrow(int slot, int v) { return rem[slot].data() + std::size_t(v - 1) * W; }

  bool in_scope(int x, int y) const { return x <= setup.low_hi && y >= setup.high_lo; }

  // Called during construction for every host edge and its slot.
  void seed_cell(int x, int y, int slot) {
    if (!in_scope(x, y)) return;
    long long id = edge_id(N, x, y);
    if (grey_mask[id]) {
      trace.cell_state[id] = CellState::grey;
      ++trace.grey_present;
    } else {
      trace.cell_state[id] = CellState::survived;  // provisional
      bits::set(rrow(slot, x), y - 1);
      bits::set(rrow(slot, y), x - 1);
    }
    ++trace.scope_edges;
  }

  void remove_cell(const Step& st, int v, int partner, int slot, std::optional<Color> color) {
    int x = std::min(v, partner), y = std::max(v, partner);
    bits::clear(rrow(slot, x), y - 1);
    bits::clear(rrow(slot, y), x - 1);
    long long id = edge_id(N, x, y);
    trace.cell_state[id] = CellState::removed;
    trace.removal_index[id] = static_cast<int>(trace.removals.size());
    trace.removals.push_back(Removal{st.index, v, partner, color});
    rm_other[std::size_t(st.index - 1) * N + (v - 1)][slot] = partner;
    ++trace.removed_count;
  }

  void check_claim(const ClaimWindow& cw, int step_index) {
    if (cw.lo > cw.hi) return;
    std::vector<std::uint64_t> mask(W, 0);
    if (cw.low_side)
      bits::set_range(mask.data(), setup.high_lo - 1, N - 1);
    else
      bits::set_range(mask.data(), 0, setup.low_hi - 1);
    for (int v = cw.lo; v <= cw.hi; ++v)
      for (int s = 0; s < nslots; ++s)
        if (bits::lowest_common(rrow(s, v), mask.data(), W) >= 0)
          fail(errc::internal, "coverage claim violated after step " + std::to_string(step_index));
  }

  void walk(const FindOptions& opt, const std::optional<Color> slot_colors[2]) {
    if (setup.claims.size() != setup.steps.size() && !setup.claims.empty())
      fail(errc::internal, "claim list out of step with the schedule");
    std::vector<std::uint64_t> toward(W);
    for (const Step& st : setup.steps) {
      bits::clear_all(toward.data(), W);
      bits::set_range(toward.data(), st.toward_lo - 1, st.toward_hi - 1);
      for (int v = st.lo; v <= st.hi; ++v) {
        for (int s = 0; s < nslots; ++s) {
          int partner = (st.dir == Dir::leftmost)
                            ? bits::lowest_common(rrow(s, v), toward.data(), W)
                            : bits::highest_common(rrow(s, v), toward.data(), W);
          if (partner >= 0) remove_cell(st, v, partner + 1, s, slot_colors[s]);
        }
      }
      if (opt.check_claims && !setup.claims.empty())
        check_claim(setup.claims[st.index - 1], st.index);
    }
  }

  // Lexicographically least surviving cell and its slot.
  std::optional<std::pair<std::pair<int, int>, int>> first_survivor() {
    std::optional<std::pair<std::pair<int, int>, int>> best;
    for (int x = 1; x <= std::min(setup.low_hi, N - 1); ++x) {
      for (int s = 0; s < nslots; ++s) {
        std::vector<std::uint64_t> above(W);
        bits::and_above(above.data(), rrow(s, x), W, x - 1);
        int b = bits::lowest(above.data(), W);
        if (b < 0) continue;
        std::pair<int, int> cell{x, b + 1};
        if (!best || cell < best->first) best = {cell, s};
      }
      if (best && best->first.first == x) break;  // nothing later can beat row x
    }
    return best;
  }

  long long count_survivors() {
    long long c = 0;
    for (long long id = 0; id < static_cast<long long>(trace.cell_state.size()); ++id)
      if (trace.cell_state[id] == CellState::survived) ++c;
    return c;
  }

  // Walk the removal log back from the surviving cell. Position p's vertex
  // removed its partner at step p-1; that partner is position p-1.
  PathCertificate backtrack(std::pair<int, int> cell, int slot, std::optional<Color> color) {
    const int n = setup.spec.n;
    std::vector<int> verts(n + 1, 0);
    verts[n] = setup.last_vertex_low ? cell.first : cell.second;
    verts[n - 1] = setup.last_vertex_low ? cell.second : cell.first;
    for (int p = n - 1; p >= 2; --p) {
      int partner = rm_other[std::size_t(p - 2) * N + (verts[p] - 1)][slot];
      if (partner == 0)
        fail(errc::internal, "backtrack found no removal for position " + std::to_string(p));
      verts[p - 1] = partner;
    }
    PathCertificate cert;
    cert.spec = setup.spec;
    cert.vertices.assign(verts.begin() + 1, verts.end());
    cert.color = color;
    return cert;
  }
};

}  // namespace

long long schedule_removal_bound(const StepSchedule& steps, int slots) {
  long long total = 0;
  for (const Step& st : steps)
    if (st.hi >= st.lo) total += static_cast<long long>(slots) * (st.hi - st.lo + 1);
  return total;
}

FindResult run_deletion(const DeletionSetup& setup, const OrderedColoring& host, const FindOptions& opt) {
  if (host.vertex_count() != setup.N) fail(errc::internal, "setup built for a different host order");
  if (static_cast<int>(setup.steps.size()) != setup.spec.n - 2)
    fail(errc::internal, "schedule length does not match the path length");
  Runner r(setup, 2);
  for (int x = 1; x < setup.N; ++x)
    for (int y = x + 1; y <= setup.N; ++y)
      r.seed_cell(x, y, host.color(x, y) == Color::red ? 0 : 1);
  const std::optional<Color> slot_colors[2] = {Color::red, Color::blue};
  r.walk(opt, slot_colors);
  r.trace.survivor_count = r.count_survivors();

  FindResult out;
  auto survivor = r.first_survivor();
  if (survivor) {
    auto [cell, slot] = *survivor;
    r.trace.start_cell = cell;
    out.certificate = r.backtrack(cell, slot, slot_colors[slot]);
    try {
      validate_certificate(*out.certificate, host);
    } catch (const error& e) {
      fail(errc::internal, std::string("backtracked certificate failed validation: ") + e.what());
    }
  }
  out.trace = std::move(r.trace);
  return out;
}

FindResult run_deletion(const DeletionSetup& setup, const OrderedGraph& host, const FindOptions& opt) {
  if (host.vertex_count() != setup.N) fail(errc::internal, "setup built for a different host order");
  if (static_cast<int>(setup.steps.size()) != setup.spec.n - 2)
    fail(errc::internal, "schedule length does not match the path length");
  Runner r(setup, 1);
  for (auto [x, y] : host.edges()) r.seed_cell(x, y, 0);
  const std::optional<Color> slot_colors[2] = {std::nullopt, std::nullopt};
  r.walk(opt, slot_colors);
  r.trace.survivor_count = r.count_survivors();

  FindResult out;
  auto survivor = r.first_survivor();
  if (survivor) {
    auto [cell, slot] = *survivor;
    r.trace.start_cell = cell;
    out.certificate = r.backtrack(cell, slot, std::nullopt);
    try {
      validate_certificate(*out.certificate, host);
    } catch (const error& e) {
      fail(errc::internal, std::string("backtracked certificate failed validation: ") + e.what());
    }
  }
  out.trace = std::move(r.trace);
  return out;
}

}  // namespace ordpath
