#include "weylkit/closedsets.hpp"

#include <algorithm>
#include <stdexcept>

namespace weylkit {

namespace {

int sum_index(const RootSystem& sys, int a, int b) {
  std::vector<int> v = sys.root(a);
  const auto& w = sys.root(b);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += w[i];
  return sys.index_of(v);
}

}  // namespace

bool is_closed(const RootSystem& sys, const RootSubset& gamma) {
  std::vector<char> in(sys.num_roots(), 0);
  for (int r : gamma.members) in[r] = 1;
  for (int a : gamma.members) {
    for (int b : gamma.members) {
      int s = sum_index(sys, a, b);
      if (s >= 0 && !in[s]) return false;
    }
  }
  return true;
}

RootSubset symmetric_part(const RootSubset& gamma) {
  return subset_intersect(gamma, subset_negate(gamma));
}

RootSubset unipotent_part(const RootSubset& gamma) {
  return subset_minus(gamma, symmetric_part(gamma));
}

bool is_ideal(const RootSystem& sys, const RootSubset& J, const RootSubset& gamma) {
  for (int r : J.members)
    if (!gamma.contains(r))
      throw std::invalid_argument("is_ideal: J is not contained in Gamma");
  std::vector<char> inG(sys.num_roots(), 0), inJ(sys.num_roots(), 0);
  for (int r : gamma.members) inG[r] = 1;
  for (int r : J.members) inJ[r] = 1;
  for (int a : gamma.members) {
    for (int b : J.members) {
      int s = sum_index(sys, a, b);
      if (s >= 0 && inG[s] && !inJ[s]) return false;
    }
  }
  return true;
}

bool is_invertible(const RootSystem& sys, const RootSubset& gamma) {
  if (!is_closed(sys, gamma))
    throw std::invalid_argument("is_invertible requires a closed subset");
  return is_closed(sys, subset_minus(full_root_set(sys), gamma));
}

GammaTriple build_gamma(const RootSystem& sys, SimpleSet I, SimpleSet J, SimpleSet K) {
  SimpleSet pi = full_set(sys.rank());
  if (!set_subset(I, pi) || !set_subset(J, pi) || !set_subset(K, pi))
    throw std::invalid_argument("Gamma subsets outside the simple roots");
  if (!set_subset(I, J) || !set_subset(K, J))
    throw std::invalid_argument("Gamma(I,J,K) requires I, K contained in J");
  GammaTriple t;
  t.system = &sys;
  t.I = I;
  t.J = J;
  t.K = K;
  t.gamma = subset_union(
      root_subsystem(sys, I),
      subset_minus(positive_subsystem(sys, J), root_subsystem(sys, K)));
  return t;
}

std::optional<ClosednessWitness> gamma_closedness_criterion(const RootSystem& sys,
                                                            SimpleSet I,
                                                            SimpleSet J,
                                                            SimpleSet K) {
  SimpleSet pi = full_set(sys.rank());
  if (!set_subset(I, pi) || !set_subset(J, pi) || !set_subset(K, pi))
    throw std::invalid_argument("Gamma subsets outside the simple roots");
  if (!set_subset(I, J) || !set_subset(K, J))
    throw std::invalid_argument("Gamma(I,J,K) requires I, K contained in J");

  auto orthogonal_to_all = [&](int i, SimpleSet s) {
    for (int j : set_indices(s))
      if (sys.pairing(sys.simple_root(i), sys.simple_root(j)) != 0) return false;
    return true;
  };

  SimpleSet X = 0, Y = 0;
  SimpleSet Ik = I, Kk = K;
  for (;;) {
    X |= Ik & ~Kk;
    Y |= Kk & ~Ik;
    SimpleSet core = Ik & Kk;
    SimpleSet In = 0, Kn = 0;
    for (int i : set_indices(core)) {
      if (orthogonal_to_all(i, Kk & ~Ik)) In |= SimpleSet{1} << i;
      if (orthogonal_to_all(i, Ik & ~Kk)) Kn |= SimpleSet{1} << i;
    }
    if (In == Ik && Kn == Kk) break;
    Ik = In;
    Kk = Kn;
  }

  // Stable leftover: assign whole Dynkin components of I u K; a component
  // joins X when it meets the accumulated X-part, otherwise Y.
  SimpleSet leftover = (I | K) & ~(X | Y);
  if (leftover) {
    SimpleSet universe = I | K;
    SimpleSet unassigned = leftover;
    while (unassigned) {
      int seed = set_indices(unassigned).front();
      SimpleSet comp = SimpleSet{1} << seed;
      for (;;) {
        SimpleSet grown = comp;
        for (int i : set_indices(universe & ~comp))
          for (int j : set_indices(comp))
            if (sys.pairing(sys.simple_root(i), sys.simple_root(j)) != 0)
              grown |= SimpleSet{1} << i;
        if (grown == comp) break;
        comp = grown;
      }
      if (comp & X)
        X |= comp & leftover;
      else
        Y |= comp & leftover;
      unassigned &= ~comp;
    }
  }

  // Verbatim conditions of the closedness criterion.
  bool ok = ((X | Y) == (I | K)) && ((X & Y) == 0) &&
            simple_sets_orthogonal(sys, X, Y) && set_subset(I & ~K, X) &&
            set_subset(K & ~I, Y);
  if (!ok) return std::nullopt;
  return ClosednessWitness{X, Y};
}

bool invertibility_criterion(const RootSystem& sys, SimpleSet I, SimpleSet K) {
  return simple_sets_orthogonal(sys, I, K & ~I);
}

std::vector<int> weyl_of_subgroup(const WeylGroup& W, const RootSubset& gamma) {
  if (!is_closed(W.system(), gamma))
    throw std::invalid_argument("weyl_of_subgroup requires a closed subset");
  return reflection_subgroup(W, symmetric_part(gamma));
}

RootSubset perp_complement(const RootSubset& gamma) {
  return subset_minus(full_root_set(*gamma.system), subset_negate(gamma));
}

}  // namespace weylkit
