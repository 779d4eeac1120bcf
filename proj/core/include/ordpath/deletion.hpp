#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ordpath/path_spec.hpp"

// Shared machinery for the constructive engines. Each engine fixes two
// vertex windows (low = [1, low_hi], high = [high_lo, N]; they may overlap),
// declares a grey set of protected cells, and walks a schedule of steps.
// A step sweeps one window ascending; each processed vertex deletes, per
// color slot, its extremal remaining non-grey edge toward the other window.
// Removals are recorded, and once every step ran, any surviving non-grey
// scope edge backtracks through the removal log to a full path certificate.

namespace ordpath {

enum class Dir : std::uint8_t { leftmost, rightmost };

struct Step {
  int index = 0;        // 1-based position in the schedule
  int lo = 0, hi = 0;   // vertices processed by this step, ascending
  int toward_lo = 0;    // partners are chosen inside [toward_lo, toward_hi]
  int toward_hi = 0;
  Dir dir = Dir::leftmost;  // which remaining partner the vertex deletes
};

using StepSchedule = std::vector<Step>;

// After step k the processed removals must have cleared every scope edge
// with an endpoint in [lo, hi] on the stated side. The claim checker
// verifies this invariant on demand; engines derive certificates from it.
struct ClaimWindow {
  bool low_side = true;
  int lo = 0, hi = 0;
};

enum class CellState : std::uint8_t { out_of_scope, grey, removed, survived };

struct Removal {
  int step = 0;     // schedule index
  int remover = 0;  // the processed vertex
  int other = 0;    // the deleted partner
  std::optional<Color> color;  // slot, for colored hosts
};

struct DeletionTrace {
  std::string engine;  // which engine produced this trace
  PathSpec spec;
  int N = 0;
  int low_hi = 0;   // low window [1, low_hi]
  int high_lo = 0;  // high window [high_lo, N]
  std::vector<CellState> cell_state;  // by edge_id; out_of_scope includes non-edges
  std::vector<int> removal_index;     // edge_id -> index into removals, or -1
  std::vector<Removal> removals;
  long long scope_edges = 0;    // host edges inside the window product
  long long grey_present = 0;   // grey cells that are host edges
  long long removed_count = 0;
  long long survivor_count = 0;
  bool guarantee = false;       // counting inequality held, so a survivor was forced
  std::optional<std::pair<int, int>> start_cell;  // survivor the backtrack started from
};

struct FindOptions {
  // Run even when the counting guarantee fails; the result may then carry
  // no certificate. Without it, engines throw host_too_small / too_sparse.
  bool best_effort = false;
  // Verify the per-step coverage claims during the walk (slow path, used by
  // tests and the stress harness).
  bool check_claims = false;
};

struct FindResult {
  std::optional<PathCertificate> certificate;
  DeletionTrace trace;
};

// Everything an engine must fix up front. The runner is host-agnostic: a
// coloring host uses two slots (red, blue), a graph host one uncolored slot.
struct DeletionSetup {
  std::string engine;
  PathSpec spec;        // the path each survivor certifies
  int N = 0;
  int low_hi = 0;
  int high_lo = 0;
  std::vector<std::pair<int, int>> grey;  // protected cells, any order
  StepSchedule steps;
  std::vector<ClaimWindow> claims;  // one per step, aligned with steps
  // Orientation of the survivor cell (x, y) in the certificate: when true
  // the last traversal vertex is x, otherwise y.
  bool last_vertex_low = false;
  bool guarantee = false;  // computed by the engine for this host
};

FindResult run_deletion(const DeletionSetup& setup, const OrderedColoring& host, const FindOptions& opt);
FindResult run_deletion(const DeletionSetup& setup, const OrderedGraph& host, const FindOptions& opt);

// Most removals the schedule can make: one per processed vertex per step
// and slot (2 slots over a coloring, 1 over a graph). Empty windows count 0.
long long schedule_removal_bound(const StepSchedule& steps, int slots);

}  // namespace ordpath
