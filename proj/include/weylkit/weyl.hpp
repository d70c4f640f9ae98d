#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "weylkit/rootsys.hpp"

namespace weylkit {

// A Weyl group element, stored as the permutation it induces on the root
// index table. Reduced words are recovered from the BFS parent chain.
struct WeylElement {
  std::vector<std::uint8_t> perm;  // perm[r] = index of w(alpha_r)
  int length = 0;
  int parent = -1;  // id of w * s_letter^{-1} in the enumeration
  int letter = -1;
};

enum class Side { Left, Right };     // W_I \ W  vs  W / W_I
enum class Sign { Plus, Minus };

class WeylGroup {
 public:
  static WeylGroup enumerate(const RootSystem& sys);

  const RootSystem& system() const { return sys_; }
  int size() const { return static_cast<int>(elems_.size()); }
  const WeylElement& element(int id) const { return elems_[id]; }
  int length(int id) const { return elems_[id].length; }

  int apply(int id, int root) const { return elems_[id].perm[root]; }
  int apply_inverse(int id, int root) const { return elems_[inverse_[id]].perm[root]; }
  int inverse(int id) const { return inverse_[id]; }

  int multiply(int a, int b) const;        // id of a*b
  int rmul(int id, int i) const { return rmul_[id * rank_ + i]; }  // w * s_i
  int lmul(int id, int i) const;           // s_i * w
  int id_of(const std::vector<std::uint8_t>& perm) const;

  int simple_reflection(int i) const { return rmul(0, i); }
  // Element id of s_alpha for an arbitrary root index.
  int reflection(int root) const;

  std::vector<int> reduced_word(int id) const;      // 0-based letters
  std::string word_string(int id) const;            // "s1 s2 s1", identity "e"
  std::vector<int> length_census() const;           // census[l] = #elements

 private:
  explicit WeylGroup(RootSystem sys) : sys_(std::move(sys)) {}

  RootSystem sys_;  // owned copy, so the group never outlives its system
  int rank_ = 0;
  std::vector<WeylElement> elems_;
  std::vector<int> inverse_;
  std::vector<int> rmul_;
  std::unordered_map<std::string, int> index_;

  static std::string perm_key(const std::vector<std::uint8_t>& p);
};

// Subgroup generated by the reflections through the roots of A, as a sorted
// list of element ids.
std::vector<int> reflection_subgroup(const WeylGroup& W, const RootSubset& A);
// Parabolic subgroup W_I.
std::vector<int> parabolic_subgroup(const WeylGroup& W, SimpleSet I);

// W/W_I or W_I\W by minimal-length representatives, with a full
// element -> coset lookup.
struct CosetSpace {
  Side side = Side::Right;
  SimpleSet parabolic = 0;
  std::vector<int> reps;      // element ids, ordered by (length, id)
  std::vector<int> coset_of;  // element id -> index into reps

  int size() const { return static_cast<int>(reps.size()); }
};

CosetSpace coset_space(const WeylGroup& W, SimpleSet I, Side side);

// {w in W/W_I : w^{-1}(alpha_j) in Phi^+ \ Phi_I (Plus) or Phi^- \ Phi_I
// (Minus) for all j in L}, as sorted rep element ids. With verify_all_reps,
// checks the condition is constant across each coset.
std::vector<int> free_double_cosets(const WeylGroup& W, const CosetSpace& cs,
                                    SimpleSet L, Sign sign,
                                    bool verify_all_reps = false);

// Independent oracle: true iff |W_L . w . W_I| = |W_L| * |W_I| by direct
// orbit enumeration.
bool orbit_freeness(const WeylGroup& W, SimpleSet L, SimpleSet I, int w);

// Census of the free W_L x W_I orbits in W by direct enumeration; for each
// free orbit returns its minimal-length element (ties broken by id).
std::vector<int> free_orbit_census(const WeylGroup& W, SimpleSet L, SimpleSet I);

}  // namespace weylkit
