#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "ordpath/graph.hpp"

// The path families. Each family fixes, for every length n, one ordered
// pattern on [n]: a Hamiltonian path whose traversal alternates between the
// low and the high half of the vertex line. The names record how each half
// is swept: 'l' for left-to-right, 'g' for right-to-left.
//
//   ap   zigzag that nests inward: 1, n, 2, n-1, ...     (low up, high down)
//   pll  both halves swept up:     1, k+1, 2, k+2, ...   (n = 2k)
//   pgg  both halves swept down:   k, 2k, k-1, 2k-1, ...
//   pgl  low down, high up:        k, k+1, k-1, k+2, ...  (reverse of ap)
//   mono the increasing path:      1, 2, ..., n
//
// ap and mono exist for every n >= 2; the other three need n even.

namespace ordpath {

enum class Family : std::uint8_t { ap, pll, pgg, pgl, mono };

const char* family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);
bool family_needs_even(Family f);

struct PathSpec {
  Family family = Family::ap;
  int n = 0;

  bool operator==(const PathSpec&) const = default;
};

// Throws errc::invalid_argument unless n >= 2 and the parity fits the family.
void validate_spec(const PathSpec& spec);

// The defining traversal on [n]: vertex visited at position t (1-based).
std::vector<int> traversal(const PathSpec& spec);

// The n-1 cells of the pattern, lexicographic.
std::vector<std::pair<int, int>> path_edges(const PathSpec& spec);

// A concrete copy in some host: vertices in traversal order, optionally the
// color class it lives in.
struct PathCertificate {
  PathSpec spec;
  std::vector<int> vertices;
  std::optional<Color> color;

  bool operator==(const PathCertificate&) const = default;
};

std::vector<std::pair<int, int>> certificate_edges(const PathCertificate& cert);

// Check the certificate bottom-up: vertex count and range, the traversal
// shape (sorted support re-traversed by the family must reproduce it), and
// every edge present in the host (with the stated color, for colorings).
// Throws errc::encoding_bug with a precise message on the first violation.
void validate_certificate(const PathCertificate& cert, const OrderedGraph& host);
void validate_certificate(const PathCertificate& cert, const OrderedColoring& host);

// Map a certificate through the order reversal v -> N+1-v of its host.
// Reversal turns ap into pgl and back; pll, pgg and mono keep their family.
PathCertificate reversed_certificate(const PathCertificate& cert, int N);

}  // namespace ordpath
