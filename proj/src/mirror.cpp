#include "weylkit/mirror.hpp"

#include <stdexcept>

#include "weylkit/fixedpoints.hpp"

namespace weylkit {

std::string brane_kind_name(BraneKind k) {
  switch (k) {
    case BraneKind::Parabolic: return "parabolic";
    case BraneKind::Levi: return "levi";
    case BraneKind::BorelOfLevi: return "borel-of-levi";
    case BraneKind::Slice: return "slice";
    case BraneKind::Whittaker: return "whittaker";
    case BraneKind::UnipotentRadical: return "unipotent-radical";
  }
  throw std::logic_error("unreachable");
}

BraneKind parse_brane_kind(const std::string& name) {
  if (name == "parabolic") return BraneKind::Parabolic;
  if (name == "levi") return BraneKind::Levi;
  if (name == "borel-of-levi") return BraneKind::BorelOfLevi;
  if (name == "slice") return BraneKind::Slice;
  if (name == "whittaker") return BraneKind::Whittaker;
  if (name == "unipotent-radical") return BraneKind::UnipotentRadical;
  throw std::invalid_argument("unknown brane kind '" + name + "'");
}

BraneDescriptor mirror_of(const BraneDescriptor& d) {
  BraneDescriptor out = d;
  out.dual_side = !d.dual_side;
  switch (d.kind) {
    case BraneKind::Parabolic: out.kind = BraneKind::Slice; break;
    case BraneKind::Slice: out.kind = BraneKind::Parabolic; break;
    case BraneKind::Levi: out.kind = BraneKind::Whittaker; break;
    case BraneKind::Whittaker: out.kind = BraneKind::Levi; break;
    case BraneKind::BorelOfLevi: out.kind = BraneKind::UnipotentRadical; break;
    case BraneKind::UnipotentRadical: out.kind = BraneKind::BorelOfLevi; break;
  }
  return out;
}

std::string dual_label(const std::string& label) {
  if (label.empty()) return label;
  std::string out = label;
  if (out[0] == 'B')
    out[0] = 'C';
  else if (out[0] == 'C')
    out[0] = 'B';
  return out;
}

std::optional<long long> fixed_point_count(const WeylGroup& W,
                                           const BraneDescriptor& d1,
                                           const BraneDescriptor& d2) {
  // The patterns are symmetric in the two branes; normalize so the slice or
  // whittaker descriptor comes first.
  auto is_flavor = [](BraneKind k) {
    return k == BraneKind::Slice || k == BraneKind::Whittaker;
  };
  if (!is_flavor(d1.kind) && is_flavor(d2.kind))
    return fixed_point_count(W, d2, d1);

  if (d1.kind == BraneKind::Slice) {
    SimpleSet L = d1.subset, I = d2.subset;
    switch (d2.kind) {
      case BraneKind::Parabolic: {
        CosetSpace cs = coset_space(W, I, Side::Right);
        return static_cast<long long>(
            free_double_cosets(W, cs, L, Sign::Plus).size());
      }
      case BraneKind::Levi:
        return static_cast<long long>(levi_fixed_points(W, L, I).size());
      case BraneKind::BorelOfLevi:
        // B_{L_I} has root set Phi^+_I = Gamma(0, I, 0).
        return static_cast<long long>(
            fixed_points_theorem(W, L, 0, I, 0).size());
      default:
        return std::nullopt;
    }
  }
  if (d1.kind == BraneKind::Whittaker && d1.subset == 0 &&
      d2.kind == BraneKind::Parabolic)
    return static_cast<long long>(coset_space(W, d2.subset, Side::Right).size());
  return std::nullopt;
}

MirrorReport mirror_report(const WeylGroup& W, const WeylGroup& Wdual,
                           const BraneDescriptor& d1, const BraneDescriptor& d2) {
  auto left = fixed_point_count(W, d1, d2);
  auto right = fixed_point_count(Wdual, mirror_of(d1), mirror_of(d2));
  if (!left || !right)
    throw std::invalid_argument("no fixed-point formula for this brane pair");
  return {*left, *right, *left == *right};
}

MirrorReport mirror_report(const std::string& label, const BraneDescriptor& d1,
                           const BraneDescriptor& d2, long long max_weyl_order) {
  RootSystem sys = build_root_system(label, max_weyl_order);
  WeylGroup W = WeylGroup::enumerate(sys);
  std::string dual = dual_label(label);
  if (dual == label) return mirror_report(W, W, d1, d2);
  RootSystem dsys = build_root_system(dual, max_weyl_order);
  WeylGroup Wd = WeylGroup::enumerate(dsys);
  return mirror_report(W, Wd, d1, d2);
}

}  // namespace weylkit
