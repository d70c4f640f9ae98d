#pragma once

#include <optional>
#include <string>

#include "weylkit/weyl.hpp"

namespace weylkit {

// The brane table: parabolic <-> slice, levi <-> whittaker,
// borel-of-levi <-> unipotent-radical. "whittaker" is the full unipotent
// group twisted by e_I; its descriptor keeps the subset for the twist even
// though the group itself does not depend on it.
enum class BraneKind {
  Parabolic,       // P_I
  Levi,            // L_I
  BorelOfLevi,     // B_{L_I}
  Slice,           // U_{e_I} slice
  Whittaker,       // U with e_I twist
  UnipotentRadical // U_{P_I}
};

struct BraneDescriptor {
  BraneKind kind = BraneKind::Parabolic;
  SimpleSet subset = 0;
  bool dual_side = false;  // lives over the Langlands dual group

  bool operator==(const BraneDescriptor& o) const = default;
};

std::string brane_kind_name(BraneKind k);
BraneKind parse_brane_kind(const std::string& name);

// Row-wise table swap; flips the side marker. Involutive.
BraneDescriptor mirror_of(const BraneDescriptor& d);

// Langlands dual type label: B_n <-> C_n, everything else self-dual at the
// Weyl-group level.
std::string dual_label(const std::string& label);

// Fixed point count of the intersection of the two branes, for the pairs
// with a known formula: (slice L, parabolic I), (slice L, levi I),
// (slice L, borel-of-levi I), (whittaker, parabolic I). nullopt otherwise.
std::optional<long long> fixed_point_count(const WeylGroup& W,
                                           const BraneDescriptor& d1,
                                           const BraneDescriptor& d2);

struct MirrorReport {
  long long count_left = 0;
  long long count_right = 0;
  bool matched = false;
};

// Compares fixed-point counts of (d1, d2) over W with those of the mirrored
// pair over the dual Weyl group. Throws when either side has no formula.
MirrorReport mirror_report(const WeylGroup& W, const WeylGroup& Wdual,
                           const BraneDescriptor& d1, const BraneDescriptor& d2);
MirrorReport mirror_report(const std::string& label, const BraneDescriptor& d1,
                           const BraneDescriptor& d2,
                           long long max_weyl_order = kDefaultWeylGuard);

}  // namespace weylkit
