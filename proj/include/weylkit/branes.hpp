#pragma once

#include <string>
#include <utility>
#include <vector>

namespace weylkit {

enum class Brane { D5, NS5 };

// A type-A brane diagram: alternating brane markers with nonnegative integer
// multiplicities in between. The regions outside the first and last brane
// carry implicit multiplicity 0.
struct BraneDiagram {
  std::vector<Brane> branes;  // length >= 1
  std::vector<long long> gaps;  // length = branes.size() - 1, all >= 0

  bool operator==(const BraneDiagram& o) const = default;
};

// Grammar: marker (INT marker)*, marker = "D" | "N", single spaces.
BraneDiagram parse_diagram(const std::string& text);
std::string format_diagram(const BraneDiagram& d);

// Hanany-Witten transition at brane positions i, i+1 (an opposite-color
// pair): swaps the markers and replaces the middle gap d2 by d1 + d3 + 1 - d2
// with the flanking gaps read as 0 at the boundary. A negative result is an
// error, not clamped.
BraneDiagram hw_move(const BraneDiagram& d, int i);

// Moves every D5 to the right of every NS5 by HW transitions; throws if a
// required move would go negative.
BraneDiagram normalize_separated(const BraneDiagram& d);

// Swap D5 <-> NS5, gaps unchanged.
BraneDiagram mirror_dual(const BraneDiagram& d);

// For a separated diagram (all NS5 left of all D5), the two charge lists
// sharing the boundary gap m0: m^- = (m0, m_{-1}, ...) read leftwards over
// the NS5 side, m^+ = (m0, m_1, ...) read rightwards over the D5 side.
std::pair<std::vector<long long>, std::vector<long long>> split_separated(
    const BraneDiagram& d);

// One-color diagrams have no NS5/D5 boundary; split at an explicit pivot gap
// k (0-based), sharing gaps[k].
std::pair<std::vector<long long>, std::vector<long long>> split_at(
    const BraneDiagram& d, int k);

}  // namespace weylkit
