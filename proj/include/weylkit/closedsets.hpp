#pragma once

#include <optional>
#include <utility>

#include "weylkit/rootsys.hpp"
#include "weylkit/weyl.hpp"

namespace weylkit {

// Closedness: alpha, beta in Gamma and alpha + beta in Phi imply
// alpha + beta in Gamma. Brute-force pair scan; this is the authority,
// the Gamma(I,J,K) criterion below is the cross-checked fast path.
bool is_closed(const RootSystem& sys, const RootSubset& gamma);

// Gamma_s = Gamma cap (-Gamma) and Gamma_u = Gamma \ Gamma_s.
RootSubset symmetric_part(const RootSubset& gamma);
RootSubset unipotent_part(const RootSubset& gamma);

// Ideal: alpha in Gamma, beta in J, alpha + beta in Gamma imply
// alpha + beta in J. Requires J subset of Gamma.
bool is_ideal(const RootSystem& sys, const RootSubset& J, const RootSubset& gamma);

// Invertibility of a closed subset: Phi \ Gamma is closed.
bool is_invertible(const RootSystem& sys, const RootSubset& gamma);

// A witness split for Gamma(I,J,K) closedness: I u K = X disjoint-union Y,
// X orthogonal to Y, X contains I\K, Y contains K\I.
using ClosednessWitness = std::pair<SimpleSet, SimpleSet>;

struct GammaTriple {
  const RootSystem* system = nullptr;
  SimpleSet I = 0, J = 0, K = 0;
  RootSubset gamma;  // Phi_I u (Phi^+_J \ Phi_K)
  std::optional<ClosednessWitness> witness;
};

// Gamma(I,J,K) = Phi_I u (Phi^+_J \ Phi_K); requires I, K subset of J.
GammaTriple build_gamma(const RootSystem& sys, SimpleSet I, SimpleSet J, SimpleSet K);

// Constructive closedness criterion: iterates
//   I_{k+1} = {a in I_k cap K_k : a orthogonal to K_k \ I_k}
//   K_{k+1} = {a in I_k cap K_k : a orthogonal to I_k \ K_k}
// accumulating X from the I-side differences and Y from the K-side ones,
// assigns the stable leftover by Dynkin components, and returns (X, Y) iff
// the three witness conditions hold. some(X,Y) iff Gamma(I,J,K) is closed.
std::optional<ClosednessWitness> gamma_closedness_criterion(const RootSystem& sys,
                                                            SimpleSet I,
                                                            SimpleSet J,
                                                            SimpleSet K);

// Gamma(I,K) (J = Pi) is invertible iff I is orthogonal to K \ I.
bool invertibility_criterion(const RootSystem& sys, SimpleSet I, SimpleSet K);

// Weyl group of H_Gamma: the reflection subgroup of the symmetric part.
std::vector<int> weyl_of_subgroup(const WeylGroup& W, const RootSubset& gamma);

// Phi \ (-Gamma), the root support of the perpendicular complement.
RootSubset perp_complement(const RootSubset& gamma);

}  // namespace weylkit
