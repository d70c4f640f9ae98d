#include "weylkit/fixedpoints.hpp"

#include <algorithm>
#include <stdexcept>

namespace weylkit {

namespace {

// Partition W into right cosets w * <subgroup>; returns the minimal element
// id of each coset plus an element -> coset-min lookup.
std::vector<int> coset_mins(const WeylGroup& W, const std::vector<int>& subgroup,
                            std::vector<int>& min_of) {
  min_of.assign(W.size(), -1);
  std::vector<int> mins;
  for (int w = 0; w < W.size(); ++w) {
    if (min_of[w] >= 0) continue;
    int best = w;
    std::vector<int> coset;
    for (int v : subgroup) {
      int x = W.multiply(w, v);
      coset.push_back(x);
      best = std::min(best, x);
    }
    for (int x : coset) min_of[x] = best;
    mins.push_back(best);
  }
  std::sort(mins.begin(), mins.end());
  return mins;
}

}  // namespace

FixedPointSet fixed_points_bruteforce(const WeylGroup& W, SimpleSet L,
                                      const RootSubset& gamma,
                                      bool check_all_reps) {
  const RootSystem& sys = W.system();
  if (!is_closed(sys, gamma))
    throw std::invalid_argument("fixed_points_bruteforce requires a closed subset");
  std::vector<int> subgroup = weyl_of_subgroup(W, gamma);
  RootSubset perp = perp_complement(gamma);
  auto idxs = set_indices(L);

  auto condition = [&](int w) {
    for (int j : idxs)
      if (!perp.contains(W.apply_inverse(w, sys.simple_root(j)))) return false;
    return true;
  };

  std::vector<int> min_of;
  std::vector<int> mins = coset_mins(W, subgroup, min_of);

  FixedPointSet out;
  out.provenance = Provenance::Brute;
  out.L = L;
  for (int rep : mins) {
    bool val = condition(rep);
    if (check_all_reps) {
      for (int v : subgroup)
        if (condition(W.multiply(rep, v)) != val)
          throw std::logic_error("fixed point condition not constant on a coset");
    }
    if (val) out.members.push_back(rep);
  }
  return out;
}

TheoremSets theorem_sets(const WeylGroup& W, const CosetSpace& cs,
                         const GammaTriple& gamma, SimpleSet L1, SimpleSet L2,
                         SimpleSet L3, bool crosscheck_fiber) {
  const RootSystem& sys = W.system();
  if (!gamma.witness)
    throw std::invalid_argument("theorem_sets requires a closedness witness");
  RootSubset phiI = root_subsystem(sys, gamma.I);
  RootSubset phiJ = root_subsystem(sys, gamma.J);
  RootSubset phiK = root_subsystem(sys, gamma.K);

  TheoremSets out;
  for (int w : cs.reps) {
    bool inA = true, inAbar = true, inBbar = true;
    for (int j : set_indices(L1)) {
      int img = W.apply_inverse(w, sys.simple_root(j));
      if (!sys.is_positive(img) || phiI.contains(img)) inA = false;
    }
    for (int j : set_indices(L2)) {
      int img = W.apply_inverse(w, sys.simple_root(j));
      if (sys.is_positive(img) || phiJ.contains(img)) inAbar = false;
    }
    for (int j : set_indices(L3)) {
      int img = W.apply_inverse(w, sys.simple_root(j));
      if (sys.is_positive(img) || !phiK.contains(img) || phiI.contains(img))
        inBbar = false;
    }
    if (inA) out.A.push_back(w);
    if (inAbar) out.Abar.push_back(w);
    if (inBbar) out.Bbar.push_back(w);
  }

  if (crosscheck_fiber) {
    // Abar as the fiber product with (Wbar_{L2} \ W / W_J)^free over W/W_J.
    CosetSpace csJ = coset_space(W, gamma.J, Side::Right);
    std::vector<int> freeJ = free_double_cosets(W, csJ, L2, Sign::Minus);
    std::vector<char> goodJ(csJ.size(), 0);
    for (int rep : freeJ) goodJ[csJ.coset_of[rep]] = 1;
    std::vector<int> abar2;
    for (int w : cs.reps)
      if (goodJ[csJ.coset_of[w]]) abar2.push_back(w);
    if (abar2 != out.Abar)
      throw std::logic_error("Abar fiber-product formulation disagrees");

    // Bbar as (Wbar_{L3} \ W / W_I)^free intersected with the fiber product
    // over W/W_{I u K} of the W_{L3}-fixed points of W/W_Y modulo W_X.
    auto [X, Y] = *gamma.witness;
    std::vector<int> bbar1 = free_double_cosets(W, cs, L3, Sign::Minus);
    CosetSpace csY = coset_space(W, Y, Side::Right);
    CosetSpace csIK = coset_space(W, gamma.I | gamma.K, Side::Right);
    std::vector<char> goodIK(csIK.size(), 0);
    for (int c = 0; c < csY.size(); ++c) {
      int rep = csY.reps[c];
      bool fixed = true;
      for (int j : set_indices(L3))
        if (csY.coset_of[W.lmul(rep, j)] != c) fixed = false;
      // Projecting W/W_Y -> W/W_{I u K} is the quotient by W_X.
      if (fixed) goodIK[csIK.coset_of[rep]] = 1;
    }
    std::vector<int> bbar2;
    for (int w : bbar1)
      if (goodIK[csIK.coset_of[w]]) bbar2.push_back(w);
    if (bbar2 != out.Bbar)
      throw std::logic_error("Bbar fiber-product formulation disagrees");
  }
  return out;
}

FixedPointSet fixed_points_theorem(const WeylGroup& W, SimpleSet L, SimpleSet I,
                                   SimpleSet J, SimpleSet K,
                                   bool crosscheck_fiber) {
  const RootSystem& sys = W.system();
  GammaTriple gamma = build_gamma(sys, I, J, K);
  gamma.witness = gamma_closedness_criterion(sys, I, J, K);
  if (!gamma.witness)
    throw std::invalid_argument("Gamma(I,J,K) is not closed");

  CosetSpace cs = coset_space(W, I, Side::Right);
  auto idxs = set_indices(L);
  const int nl = static_cast<int>(idxs.size());
  int npart = 1;
  for (int i = 0; i < nl; ++i) npart *= 3;

  std::vector<char> taken(W.size(), 0);
  FixedPointSet out;
  out.provenance = Provenance::Theorem;
  out.L = L;
  for (int code = 0; code < npart; ++code) {
    SimpleSet L1 = 0, L2 = 0, L3 = 0;
    int c = code;
    for (int i = 0; i < nl; ++i) {
      SimpleSet bit = SimpleSet{1} << idxs[i];
      switch (c % 3) {
        case 0: L1 |= bit; break;
        case 1: L2 |= bit; break;
        default: L3 |= bit; break;
      }
      c /= 3;
    }
    TheoremSets sets = theorem_sets(W, cs, gamma, L1, L2, L3, crosscheck_fiber);
    std::vector<int> block;
    std::set_intersection(sets.A.begin(), sets.A.end(), sets.Abar.begin(),
                          sets.Abar.end(), std::back_inserter(block));
    std::vector<int> block2;
    std::set_intersection(block.begin(), block.end(), sets.Bbar.begin(),
                          sets.Bbar.end(), std::back_inserter(block2));
    for (int w : block2) {
      if (taken[w]) throw std::logic_error("theorem blocks are not disjoint");
      taken[w] = 1;
      out.members.push_back(w);
    }
  }
  std::sort(out.members.begin(), out.members.end());
  return out;
}

FixedPointSet levi_fixed_points(const WeylGroup& W, SimpleSet L, SimpleSet I) {
  const RootSystem& sys = W.system();
  CosetSpace cs = coset_space(W, I, Side::Right);
  RootSubset phiI = root_subsystem(sys, I);
  auto idxs = set_indices(L);

  FixedPointSet out;
  out.provenance = Provenance::Theorem;
  out.L = L;
  for (int w : cs.reps) {
    bool ok = true;
    // Each j lands in the L1 block (positive) or the L2 block (negative);
    // only Phi_I membership can fail.
    for (int j : idxs)
      if (phiI.contains(W.apply_inverse(w, sys.simple_root(j)))) ok = false;
    if (ok) out.members.push_back(w);
  }
  return out;
}

std::vector<WeylBlock> weyl_decomposition(const WeylGroup& W, SimpleSet L) {
  const RootSystem& sys = W.system();
  auto idxs = set_indices(L);
  std::vector<WeylBlock> blocks;
  std::vector<char> taken(W.size(), 0);
  for (SimpleSet L1 : all_subsets(L)) {
    WeylBlock b;
    b.L1 = L1;
    b.L2 = L & ~L1;
    for (int w = 0; w < W.size(); ++w) {
      bool ok = true;
      for (int j : idxs) {
        int img = W.apply_inverse(w, sys.simple_root(j));
        if (sys.is_positive(img) != set_contains(L1, j)) ok = false;
      }
      if (ok) {
        if (taken[w]) throw std::logic_error("Weyl decomposition blocks overlap");
        taken[w] = 1;
        b.members.push_back(w);
      }
    }
    blocks.push_back(std::move(b));
  }
  std::size_t total = 0;
  for (const auto& b : blocks) total += b.members.size();
  if (total != static_cast<std::size_t>(W.size()))
    throw std::logic_error("Weyl decomposition blocks do not cover W");
  return blocks;
}

std::vector<int> projection_image(const WeylGroup& W, SimpleSet I, SimpleSet L) {
  const RootSystem& sys = W.system();
  CosetSpace cs = coset_space(W, I, Side::Left);
  RootSubset phiI = root_subsystem(sys, I);
  std::vector<int> out;
  for (int w : cs.reps) {
    bool ok = true;
    for (int i : set_indices(L)) {
      int img = sys.negate(W.apply(w, sys.simple_root(i)));  // w(-alpha_i)
      if (!sys.is_positive(img) || phiI.contains(img)) ok = false;
    }
    if (ok) out.push_back(w);
  }
  return out;
}

CosetSpace z_fixed_points(const WeylGroup& W, SimpleSet I) {
  return coset_space(W, I, Side::Right);
}

}  // namespace weylkit
