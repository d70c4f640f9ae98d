#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace weylkit {

// A subset of the simple roots, as a bitmask over 0-based Bourbaki indices.
// External text form is 1-based ("1,3"); "all" and "none" are accepted.
using SimpleSet = std::uint32_t;

inline bool set_contains(SimpleSet s, int i) { return (s >> i) & 1u; }
inline SimpleSet full_set(int rank) { return (SimpleSet{1} << rank) - 1; }
inline int set_size(SimpleSet s) { return std::popcount(s); }
inline bool set_subset(SimpleSet a, SimpleSet b) { return (a & ~b) == 0; }

std::vector<int> set_indices(SimpleSet s);

SimpleSet parse_simple_set(const std::string& text, int rank);
std::string format_simple_set(SimpleSet s);

// All submasks of `universe`, ascending as integers (starts with 0).
std::vector<SimpleSet> all_subsets(SimpleSet universe);

}  // namespace weylkit
