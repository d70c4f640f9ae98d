#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "weylkit/rootsys.hpp"

using namespace weylkit;

namespace {

// Independent oracle for Phi_S: close +/-S under root addition.
std::set<int> subsystem_by_closure(const RootSystem& sys, SimpleSet S) {
  std::set<int> out;
  for (int i : set_indices(S)) {
    out.insert(sys.simple_root(i));
    out.insert(sys.negate(sys.simple_root(i)));
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(out.begin(), out.end());
    for (int a : cur)
      for (int b : cur) {
        std::vector<int> v = sys.root(a);
        for (int i = 0; i < sys.rank(); ++i) v[i] += sys.root(b)[i];
        int s = sys.index_of(v);
        if (s >= 0 && out.insert(s).second) grew = true;
      }
  }
  return out;
}

}  // namespace

TEST_CASE("root counts per type") {
  CHECK(build_root_system("A2").num_roots() == 6);
  CHECK(build_root_system("A2").num_positive() == 3);
  CHECK(build_root_system("G2").num_roots() == 12);
  CHECK(build_root_system("A3").num_roots() == 12);
  CHECK(build_root_system("B3").num_roots() == 18);
  CHECK(build_root_system("C3").num_roots() == 18);
  CHECK(build_root_system("D4").num_roots() == 24);
  CHECK(build_root_system("F4").num_roots() == 48);
  CHECK(build_root_system("E6").num_roots() == 72);
}

TEST_CASE("label validation and the Weyl order guard") {
  CHECK_THROWS_AS(build_root_system("Z9"), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system("A0"), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system("B1"), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system("D3"), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system("F5"), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system("E7"), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system("E8"), std::invalid_argument);
  CHECK_NOTHROW(build_root_system("E6"));
  CHECK_THROWS_AS(build_root_system("A3", 20), std::invalid_argument);
  CHECK_NOTHROW(build_root_system("E7", 3'000'000));
}

TEST_CASE("A3 Cartan pairings") {
  RootSystem sys = build_root_system("A3");
  CHECK(sys.pairing(sys.simple_root(0), sys.simple_root(1)) != 0);
  CHECK(sys.pairing(sys.simple_root(0), sys.simple_root(2)) == 0);
  CHECK(sys.pairing(sys.simple_root(0), sys.simple_root(0)) > 0);
}

TEST_CASE("reflection tables are involutions and respect negation") {
  for (const char* label : {"A2", "B2", "G2", "A3", "B3", "F4"}) {
    RootSystem sys = build_root_system(label);
    for (int i = 0; i < sys.rank(); ++i) {
      for (int r = 0; r < sys.num_roots(); ++r) {
        CHECK(sys.simple_reflect(i, sys.simple_reflect(i, r)) == r);
        CHECK(sys.simple_reflect(i, sys.negate(r)) ==
              sys.negate(sys.simple_reflect(i, r)));
      }
      int si = sys.simple_root(i);
      CHECK(sys.simple_reflect(i, si) == sys.negate(si));
    }
  }
}

TEST_CASE("positivity and negation pair up") {
  RootSystem sys = build_root_system("B3");
  for (int r = 0; r < sys.num_roots(); ++r) {
    CHECK(sys.negate(sys.negate(r)) == r);
    CHECK(sys.is_positive(r) != sys.is_positive(sys.negate(r)));
  }
}

TEST_CASE("root subsystems") {
  RootSystem a3 = build_root_system("A3");
  CHECK(root_subsystem(a3, 0b001).size() == 2);
  CHECK(root_subsystem(a3, 0b011).size() == 6);
  RootSystem a2 = build_root_system("A2");
  CHECK(root_subsystem(a2, 0).size() == 0);
  CHECK_THROWS_AS(root_subsystem(a2, 0b100), std::invalid_argument);
}

TEST_CASE("span membership matches additive closure") {
  for (const char* label : {"A3", "B3", "G2"}) {
    RootSystem sys = build_root_system(label);
    for (SimpleSet S : all_subsets(full_set(sys.rank()))) {
      RootSubset sub = root_subsystem(sys, S);
      std::set<int> oracle = subsystem_by_closure(sys, S);
      CHECK(std::set<int>(sub.members.begin(), sub.members.end()) == oracle);
    }
  }
}

TEST_CASE("orthogonality of subsets") {
  RootSystem a3 = build_root_system("A3");
  RootSubset a1 = make_subset(a3, {a3.simple_root(0)});
  RootSubset a3s = make_subset(a3, {a3.simple_root(2)});
  RootSubset empty = make_subset(a3, {});
  CHECK(is_orthogonal(a3, a1, a3s));
  CHECK(is_orthogonal(a3, a1, empty));
  RootSystem a2 = build_root_system("A2");
  CHECK_FALSE(is_orthogonal(a2, make_subset(a2, {a2.simple_root(0)}),
                            make_subset(a2, {a2.simple_root(1)})));
  CHECK(simple_sets_orthogonal(a3, 0b001, 0b100));
  CHECK_FALSE(simple_sets_orthogonal(a3, 0b001, 0b010));
}

TEST_CASE("subset parsing round-trips") {
  CHECK(parse_simple_set("1,3", 3) == 0b101u);
  CHECK(parse_simple_set("all", 3) == 0b111u);
  CHECK(parse_simple_set("none", 3) == 0u);
  CHECK(format_simple_set(0b101) == "1,3");
  CHECK_THROWS_AS(parse_simple_set("4", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_simple_set("x", 3), std::invalid_argument);
}
