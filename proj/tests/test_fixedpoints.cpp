#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "weylkit/fixedpoints.hpp"

using namespace weylkit;

TEST_CASE("brute force fixed points, small cases") {
  RootSystem a2 = build_root_system("A2");
  WeylGroup W = WeylGroup::enumerate(a2);

  // Gamma = empty: H = T, every element survives
  FixedPointSet all = fixed_points_bruteforce(W, 0b11, make_subset(a2, {}));
  CHECK(all.size() == 6);

  // Levi of alpha2: {e, s1} survive for L = {alpha1}
  FixedPointSet levi = fixed_points_bruteforce(W, 0b01, root_subsystem(a2, 0b10));
  REQUIRE(levi.size() == 2);
  CHECK(W.word_string(levi.members[0]) == "e");
  CHECK(W.word_string(levi.members[1]) == "s1");

  // parabolic P({alpha1}): reduces to the free double coset {s2}
  GammaTriple par = build_gamma(a2, 0b01, 0b11, 0b01);
  CHECK(fixed_points_bruteforce(W, 0b01, par.gamma).size() == 1);

  CHECK_THROWS_AS(
      fixed_points_bruteforce(
          W, 0b01, make_subset(a2, {a2.simple_root(0), a2.simple_root(1)})),
      std::invalid_argument);
}

TEST_CASE("theorem decomposition on the worked example") {
  RootSystem a2 = build_root_system("A2");
  WeylGroup W = WeylGroup::enumerate(a2);
  FixedPointSet fp = fixed_points_theorem(W, 0b01, 0b10, 0b11, 0b11, true);
  REQUIRE(fp.size() == 2);
  CHECK(W.word_string(fp.members[0]) == "e");
  CHECK(W.word_string(fp.members[1]) == "s1");

  // L = empty: all of W/W_I
  CHECK(fixed_points_theorem(W, 0, 0b10, 0b11, 0b11).size() == 3);
  // not closed: rejected
  CHECK_THROWS_AS(fixed_points_theorem(W, 0b01, 0b01, 0b11, 0b10),
                  std::invalid_argument);
}

TEST_CASE("theorem equals brute force with fiber cross-checks, rank 2") {
  for (const char* label : {"A2", "B2", "G2"}) {
    RootSystem sys = build_root_system(label);
    WeylGroup W = WeylGroup::enumerate(sys);
    SimpleSet pi = full_set(sys.rank());
    for (SimpleSet J : all_subsets(pi)) {
      for (SimpleSet I : all_subsets(J)) {
        for (SimpleSet K : all_subsets(J)) {
          if (!gamma_closedness_criterion(sys, I, J, K)) continue;
          GammaTriple t = build_gamma(sys, I, J, K);
          for (SimpleSet L : all_subsets(pi)) {
            FixedPointSet brute = fixed_points_bruteforce(W, L, t.gamma);
            FixedPointSet theorem = fixed_points_theorem(W, L, I, J, K, true);
            CHECK(brute.members == theorem.members);
          }
        }
      }
    }
  }
}

TEST_CASE("parabolic specialization J=Pi, K subset of I") {
  RootSystem sys = build_root_system("A3");
  WeylGroup W = WeylGroup::enumerate(sys);
  SimpleSet pi = full_set(3);
  for (SimpleSet I : all_subsets(pi)) {
    for (SimpleSet K : all_subsets(I)) {
      if (!gamma_closedness_criterion(sys, I, pi, K)) continue;
      CosetSpace cs = coset_space(W, I, Side::Right);
      for (SimpleSet L : all_subsets(pi)) {
        CHECK(fixed_points_theorem(W, L, I, pi, K).members ==
              free_double_cosets(W, cs, L, Sign::Plus));
      }
    }
  }
}

TEST_CASE("Levi specialization") {
  for (const char* label : {"A2", "B2", "A3"}) {
    RootSystem sys = build_root_system(label);
    WeylGroup W = WeylGroup::enumerate(sys);
    SimpleSet pi = full_set(sys.rank());
    for (SimpleSet I : all_subsets(pi)) {
      for (SimpleSet L : all_subsets(pi)) {
        FixedPointSet levi = levi_fixed_points(W, L, I);
        CHECK(levi.members == fixed_points_theorem(W, L, I, pi, pi).members);
        CHECK(levi.members ==
              fixed_points_bruteforce(W, L, root_subsystem(sys, I)).members);
      }
    }
  }
}

TEST_CASE("Weyl decomposition blocks") {
  RootSystem a1 = build_root_system("A1");
  WeylGroup W1 = WeylGroup::enumerate(a1);
  auto blocks1 = weyl_decomposition(W1, 0b1);
  REQUIRE(blocks1.size() == 2);
  // L1 = empty block holds s1, L1 = {alpha1} block holds e
  for (const auto& b : blocks1) {
    REQUIRE(b.members.size() == 1);
    if (b.L1 == 0b1u)
      CHECK(W1.word_string(b.members[0]) == "e");
    else
      CHECK(W1.word_string(b.members[0]) == "s1");
  }

  RootSystem a2 = build_root_system("A2");
  WeylGroup W2 = WeylGroup::enumerate(a2);
  auto blocks2 = weyl_decomposition(W2, 0b01);
  REQUIRE(blocks2.size() == 2);
  CHECK(blocks2[0].members.size() == 3);
  CHECK(blocks2[1].members.size() == 3);

  auto single = weyl_decomposition(W2, 0);
  REQUIRE(single.size() == 1);
  CHECK(single[0].members.size() == 6);

  for (const char* label : {"A3", "B3", "F4"}) {
    RootSystem sys = build_root_system(label);
    WeylGroup W = WeylGroup::enumerate(sys);
    for (SimpleSet L : all_subsets(full_set(sys.rank()))) {
      auto blocks = weyl_decomposition(W, L);  // asserts partition internally
      std::size_t total = 0;
      for (const auto& b : blocks) total += b.members.size();
      CHECK(total == static_cast<std::size_t>(W.size()));
    }
  }
}

TEST_CASE("projection image") {
  RootSystem a2 = build_root_system("A2");
  WeylGroup W = WeylGroup::enumerate(a2);
  std::vector<int> img = projection_image(W, 0b01, 0b10);
  CHECK(img.size() == 1);
  CHECK(projection_image(W, 0b01, 0).size() == 3);
  CHECK(projection_image(W, 0, 0b01).size() == 3);

  for (const char* label : {"A2", "B2", "A3"}) {
    RootSystem sys = build_root_system(label);
    WeylGroup Wn = WeylGroup::enumerate(sys);
    for (SimpleSet I : all_subsets(full_set(sys.rank()))) {
      CosetSpace cs = coset_space(Wn, I, Side::Right);
      for (SimpleSet L : all_subsets(full_set(sys.rank()))) {
        CHECK(projection_image(Wn, I, L).size() ==
              free_double_cosets(Wn, cs, L, Sign::Plus).size());
      }
    }
  }
}

TEST_CASE("Z fixed points") {
  RootSystem a2 = build_root_system("A2");
  WeylGroup W2 = WeylGroup::enumerate(a2);
  CHECK(z_fixed_points(W2, 0b01).size() == 3);
  CHECK(z_fixed_points(W2, 0).size() == 6);
  RootSystem a3 = build_root_system("A3");
  WeylGroup W3 = WeylGroup::enumerate(a3);
  CHECK(z_fixed_points(W3, 0b101).size() == 6);

  // matching with the Gamma = empty count holds exactly when I is empty
  RootSubset empty = make_subset(a2, {});
  int full = fixed_points_bruteforce(W2, 0b11, empty).size();
  for (SimpleSet I : all_subsets(full_set(2)))
    CHECK((z_fixed_points(W2, I).size() == full) == (I == 0u));
}
