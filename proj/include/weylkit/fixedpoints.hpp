#pragma once

#include <vector>

#include "weylkit/closedsets.hpp"
#include "weylkit/weyl.hpp"

namespace weylkit {

enum class Provenance { Brute, Theorem };

// A torus-fixed-point set inside a coset space of W. Members are canonical
// representative element ids, sorted; for parabolic ambients these are the
// minimal-length coset representatives.
struct FixedPointSet {
  Provenance provenance = Provenance::Brute;
  SimpleSet L = 0;
  std::vector<int> members;

  int size() const { return static_cast<int>(members.size()); }
};

// Defining description: cosets w W_{Gamma_s} such that every representative
// satisfies w^{-1}(alpha_j) in Phi \ (-Gamma) for all j in L. Requires Gamma
// closed. With check_all_reps, a coset on which the condition is not
// constant raises std::logic_error instead of being canonicalized away.
FixedPointSet fixed_points_bruteforce(const WeylGroup& W, SimpleSet L,
                                      const RootSubset& gamma,
                                      bool check_all_reps = true);

// The three block ingredients over W/W_I for one ordered partition
// (L1, L2, L3) of L: A by the Phi^+ \ Phi_I condition, Abar by
// Phi^- \ Phi_J, Bbar by Phi^-_K \ Phi_I. With crosscheck_fiber, the
// fiber-product formulations of Abar and Bbar are evaluated as well and a
// disagreement raises std::logic_error.
struct TheoremSets {
  std::vector<int> A, Abar, Bbar;  // rep element ids in W/W_I
};
TheoremSets theorem_sets(const WeylGroup& W, const CosetSpace& cs,
                         const GammaTriple& gamma, SimpleSet L1, SimpleSet L2,
                         SimpleSet L3, bool crosscheck_fiber = false);

// Decomposition over all 3^|L| ordered partitions of L; blocks are checked
// pairwise disjoint. Requires Gamma(I,J,K) closed (a witness must exist).
FixedPointSet fixed_points_theorem(const WeylGroup& W, SimpleSet L, SimpleSet I,
                                   SimpleSet J, SimpleSet K,
                                   bool crosscheck_fiber = false);

// Levi specialization (Gamma = Phi_I): two-block decomposition over W/W_I.
FixedPointSet levi_fixed_points(const WeylGroup& W, SimpleSet L, SimpleSet I);

// W = disjoint union over L = L1 u L2 of sign-pattern blocks.
struct WeylBlock {
  SimpleSet L1 = 0, L2 = 0;
  std::vector<int> members;  // element ids
};
std::vector<WeylBlock> weyl_decomposition(const WeylGroup& W, SimpleSet L);

// {w in W_I \ W : w(-alpha_i) in Phi^+ \ Phi_I for i in L}, as left-coset
// representative ids.
std::vector<int> projection_image(const WeylGroup& W, SimpleSet I, SimpleSet L);

// (Z_{I,0})^T = W/W_I.
CosetSpace z_fixed_points(const WeylGroup& W, SimpleSet I);

}  // namespace weylkit
