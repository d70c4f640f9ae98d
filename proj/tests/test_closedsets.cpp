#include <optional>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "weylkit/closedsets.hpp"

using namespace weylkit;

namespace {

// Exhaustive oracle: does any split (X, Y) of I u K satisfy the witness
// conditions?
bool split_exists(const RootSystem& sys, SimpleSet I, SimpleSet K) {
  SimpleSet u = I | K;
  for (SimpleSet X : all_subsets(u)) {
    SimpleSet Y = u & ~X;
    if (!set_subset(I & ~K, X)) continue;
    if (!set_subset(K & ~I, Y)) continue;
    if (simple_sets_orthogonal(sys, X, Y)) return true;
  }
  return false;
}

// All closed subsets of Phi, by brute enumeration (small systems only).
std::vector<RootSubset> all_closed_subsets(const RootSystem& sys) {
  std::vector<RootSubset> out;
  int nr = sys.num_roots();
  for (unsigned mask = 0; mask < (1u << nr); ++mask) {
    std::vector<int> members;
    for (int r = 0; r < nr; ++r)
      if ((mask >> r) & 1u) members.push_back(r);
    RootSubset g = make_subset(sys, std::move(members));
    if (is_closed(sys, g)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

TEST_CASE("closedness pair scan") {
  RootSystem a2 = build_root_system("A2");
  CHECK(is_closed(a2, positive_roots(a2)));
  // {alpha1, alpha2} misses alpha1+alpha2
  CHECK_FALSE(is_closed(a2, make_subset(a2, {a2.simple_root(0), a2.simple_root(1)})));
  // {+-alpha1, alpha1+alpha2}: -alpha1 + (alpha1+alpha2) = alpha2 is missing
  std::vector<int> coords{1, 1};
  int hi = a2.index_of(coords);
  REQUIRE(hi >= 0);
  CHECK_FALSE(is_closed(
      a2, make_subset(a2, {a2.simple_root(0), a2.negate(a2.simple_root(0)), hi})));
  CHECK(is_closed(a2, full_root_set(a2)));
  CHECK(is_closed(a2, make_subset(a2, {})));
}

TEST_CASE("symmetric and unipotent parts") {
  RootSystem a3 = build_root_system("A3");
  RootSubset phi1 = root_subsystem(a3, 0b001);
  CHECK(symmetric_part(phi1) == phi1);
  CHECK(unipotent_part(phi1).empty());
  RootSubset pos = positive_roots(a3);
  CHECK(symmetric_part(pos).empty());
  CHECK(unipotent_part(pos) == pos);
  GammaTriple t = build_gamma(a3, 0b001, 0b111, 0b100);
  CHECK(symmetric_part(t.gamma) == phi1);
}

TEST_CASE("unipotent part is an ideal of every closed subset") {
  for (const char* label : {"A2", "B2", "A3"}) {
    RootSystem sys = build_root_system(label);
    for (const RootSubset& g : all_closed_subsets(sys)) {
      CHECK(is_ideal(sys, unipotent_part(g), g));
      CHECK(is_ideal(sys, g, g));
      CHECK(is_closed(sys, subset_negate(g)));
    }
  }
}

TEST_CASE("is_ideal examples and precondition") {
  RootSystem a2 = build_root_system("A2");
  RootSubset pos = positive_roots(a2);
  RootSubset j = make_subset(a2, {a2.simple_root(0)});
  CHECK_FALSE(is_ideal(a2, j, pos));
  CHECK_THROWS_AS(is_ideal(a2, make_subset(a2, {a2.negate(a2.simple_root(0))}), pos),
                  std::invalid_argument);
}

TEST_CASE("invertibility") {
  RootSystem a2 = build_root_system("A2");
  CHECK(is_invertible(a2, positive_roots(a2)));
  // P({alpha1}) = Phi_{alpha1} u Phi^+: complement {-alpha2, -alpha1-alpha2}
  // is closed, so the parabolic is invertible (K \ I is empty)
  GammaTriple p1 = build_gamma(a2, 0b01, 0b11, 0b01);
  CHECK(is_invertible(a2, p1.gamma));
  // the Levi Phi_{alpha1} is not: its complement contains -alpha2 and
  // alpha1+alpha2 but not their sum alpha1
  GammaTriple l1 = build_gamma(a2, 0b01, 0b11, 0b11);
  CHECK_FALSE(is_invertible(a2, l1.gamma));
  CHECK_THROWS_AS(
      is_invertible(a2, make_subset(a2, {a2.simple_root(0), a2.simple_root(1)})),
      std::invalid_argument);

  RootSystem a3 = build_root_system("A3");
  GammaTriple t = build_gamma(a3, 0b001, 0b111, 0b101);
  CHECK(is_invertible(a3, t.gamma));
  CHECK(invertibility_criterion(a3, 0b001, 0b101));
  CHECK_FALSE(invertibility_criterion(a2, 0b01, 0b11));
  CHECK(invertibility_criterion(a2, 0, 0b11));
}

TEST_CASE("Gamma(I,J,K) construction") {
  RootSystem a3 = build_root_system("A3");
  SimpleSet pi = full_set(3);
  // K = Pi gives Phi_I
  GammaTriple levi = build_gamma(a3, 0b001, pi, pi);
  CHECK(levi.gamma == root_subsystem(a3, 0b001));
  // K = I gives the parabolic Phi_I u Phi^+
  GammaTriple par = build_gamma(a3, 0b001, pi, 0b001);
  CHECK(par.gamma == subset_union(root_subsystem(a3, 0b001), positive_roots(a3)));
  GammaTriple ex = build_gamma(a3, 0b001, pi, 0b100);
  CHECK(ex.gamma ==
        subset_union(root_subsystem(a3, 0b001),
                     subset_minus(positive_roots(a3), root_subsystem(a3, 0b100))));
  CHECK_THROWS_AS(build_gamma(a3, 0b001, 0b010, 0b010), std::invalid_argument);
  CHECK_THROWS_AS(build_gamma(a3, 0b001, 0b001, 0b010), std::invalid_argument);
}

TEST_CASE("closedness criterion witnesses") {
  RootSystem a3 = build_root_system("A3");
  auto w = gamma_closedness_criterion(a3, 0b001, 0b111, 0b100);
  REQUIRE(w.has_value());
  CHECK(w->first == 0b001u);
  CHECK(w->second == 0b100u);

  RootSystem a2 = build_root_system("A2");
  CHECK_FALSE(gamma_closedness_criterion(a2, 0b01, 0b11, 0b10).has_value());
  CHECK_FALSE(split_exists(a2, 0b01, 0b10));

  // I = K is always closed (a parabolic subset of Phi_J)
  for (SimpleSet I : all_subsets(full_set(3)))
    CHECK(gamma_closedness_criterion(a3, I, 0b111, I).has_value());
}

TEST_CASE("criterion agrees with the pair scan exhaustively") {
  for (const char* label : {"A2", "B2", "G2", "A3", "B3"}) {
    RootSystem sys = build_root_system(label);
    SimpleSet pi = full_set(sys.rank());
    for (SimpleSet J : all_subsets(pi)) {
      for (SimpleSet I : all_subsets(J)) {
        for (SimpleSet K : all_subsets(J)) {
          GammaTriple t = build_gamma(sys, I, J, K);
          bool closed = is_closed(sys, t.gamma);
          auto w = gamma_closedness_criterion(sys, I, J, K);
          CHECK(closed == w.has_value());
          if (w) {
            auto [X, Y] = *w;
            CHECK((X | Y) == (I | K));
            CHECK((X & Y) == 0u);
            CHECK(simple_sets_orthogonal(sys, X, Y));
            CHECK(set_subset(I & ~K, X));
            CHECK(set_subset(K & ~I, Y));
          }
          // witness existence matches the exhaustive split search when J = Pi
          if (J == pi) CHECK(w.has_value() == split_exists(sys, I, K));
        }
      }
    }
  }
}

TEST_CASE("Weyl group of H_Gamma") {
  RootSystem a2 = build_root_system("A2");
  WeylGroup W = WeylGroup::enumerate(a2);
  GammaTriple par = build_gamma(a2, 0b01, 0b11, 0b01);
  CHECK(weyl_of_subgroup(W, par.gamma).size() == 2);
  CHECK(weyl_of_subgroup(W, positive_roots(a2)).size() == 1);
  CHECK(weyl_of_subgroup(W, full_root_set(a2)).size() == 6);
}

TEST_CASE("perp complement") {
  RootSystem a3 = build_root_system("A3");
  CHECK(perp_complement(full_root_set(a3)).empty());
  RootSubset phi1 = root_subsystem(a3, 0b001);
  CHECK(perp_complement(phi1) == subset_minus(full_root_set(a3), phi1));

  // Gamma(I,J,K): three-part disjoint union
  SimpleSet pi = full_set(3);
  for (SimpleSet J : all_subsets(pi)) {
    for (SimpleSet I : all_subsets(J)) {
      for (SimpleSet K : all_subsets(J)) {
        GammaTriple t = build_gamma(a3, I, J, K);
        RootSubset p1 = subset_minus(positive_roots(a3), root_subsystem(a3, I));
        RootSubset neg = subset_negate(positive_roots(a3));
        RootSubset p2 = subset_minus(neg, root_subsystem(a3, J));
        RootSubset p3 = subset_minus(subset_intersect(root_subsystem(a3, K), neg),
                                     root_subsystem(a3, I));
        CHECK(subset_intersect(p1, p2).empty());
        CHECK(subset_intersect(p1, p3).empty());
        CHECK(subset_intersect(p2, p3).empty());
        CHECK(perp_complement(t.gamma) == subset_union(subset_union(p1, p2), p3));
      }
    }
  }
}
