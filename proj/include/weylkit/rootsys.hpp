#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "weylkit/subsets.hpp"

namespace weylkit {

// Default bound on |W|: large enough for every type in the standard rank
// guard (A1-A7, B2-B5, C2-C5, D4-D6, E6, F4, G2), small enough to reject
// E7/E8. Overridable via build_root_system's max_weyl_order argument or the
// WEYLKIT_WEYL_GUARD environment variable in the CLI.
inline constexpr long long kDefaultWeylGuard = 2'000'000;

// A finite root system in the simple-root basis, Bourbaki numbering.
// Roots are exact integer coordinate vectors; everything downstream works
// with root *indices* into this table. Immutable after construction.
class RootSystem {
 public:
  const std::string& label() const { return label_; }
  char family() const { return family_; }
  int rank() const { return rank_; }
  int num_roots() const { return static_cast<int>(roots_.size()); }
  int num_positive() const { return num_roots() / 2; }
  long long weyl_order() const { return weyl_order_; }

  const std::vector<int>& root(int r) const { return roots_[r]; }
  bool is_positive(int r) const { return r < num_positive(); }
  int negate(int r) const { return negation_[r]; }
  int simple_root(int i) const { return simple_index_[i]; }

  // s_i acting on root index r.
  int simple_reflect(int i, int r) const { return reflect_[i][r]; }

  // Symmetrized Cartan pairing (alpha, beta), scaled to integers. Only the
  // sign/zero pattern is meaningful across types.
  long long pairing(int r1, int r2) const;
  bool orthogonal(int r1, int r2) const { return pairing(r1, r2) == 0; }

  // <alpha_j, alpha_i^vee>; s_i(alpha_j) = alpha_j - cartan(i,j) alpha_i.
  int cartan(int i, int j) const { return cartan_[i][j]; }

  // Root index for a coordinate vector, or -1.
  int index_of(const std::vector<int>& coords) const;

  // Reflection s_alpha through an arbitrary root, as a permutation target:
  // returns the index of s_alpha(beta).
  int reflect_root(int alpha, int beta) const;

  friend RootSystem build_root_system(const std::string& label,
                                      long long max_weyl_order);

 private:
  RootSystem() = default;

  std::string label_;
  char family_ = 0;
  int rank_ = 0;
  long long weyl_order_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<long long> symmetrizer_;  // d_i with d_i * cartan(i,j) symmetric
  std::vector<std::vector<int>> roots_;
  std::vector<int> negation_;
  std::vector<int> simple_index_;
  std::vector<std::vector<int>> reflect_;
  std::map<std::vector<int>, int> index_;
};

// Builds the root system for a type label like "A3" or "F4". Throws
// std::invalid_argument for unknown labels and types whose Weyl order
// exceeds the guard.
RootSystem build_root_system(const std::string& label,
                             long long max_weyl_order = kDefaultWeylGuard);

// An arbitrary subset of roots of a fixed system, as sorted indices.
struct RootSubset {
  const RootSystem* system = nullptr;
  std::vector<int> members;  // sorted, duplicate-free

  bool contains(int r) const;
  int size() const { return static_cast<int>(members.size()); }
  bool empty() const { return members.empty(); }
  bool operator==(const RootSubset& o) const = default;
};

RootSubset make_subset(const RootSystem& sys, std::vector<int> members);
RootSubset subset_union(const RootSubset& a, const RootSubset& b);
RootSubset subset_intersect(const RootSubset& a, const RootSubset& b);
RootSubset subset_minus(const RootSubset& a, const RootSubset& b);
RootSubset subset_negate(const RootSubset& a);
RootSubset full_root_set(const RootSystem& sys);
RootSubset positive_roots(const RootSystem& sys);

// Phi_S: all roots lying in the integer span of the simple roots in S.
RootSubset root_subsystem(const RootSystem& sys, SimpleSet S);
// Positive part of Phi_S.
RootSubset positive_subsystem(const RootSystem& sys, SimpleSet S);

// True iff (alpha, beta) = 0 for all alpha in A, beta in B.
bool is_orthogonal(const RootSystem& sys, const RootSubset& A,
                   const RootSubset& B);
// Orthogonality of two sets of simple roots.
bool simple_sets_orthogonal(const RootSystem& sys, SimpleSet A, SimpleSet B);

}  // namespace weylkit
