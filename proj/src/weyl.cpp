#include "weylkit/weyl.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace weylkit {

std::string WeylGroup::perm_key(const std::vector<std::uint8_t>& p) {
  return std::string(reinterpret_cast<const char*>(p.data()), p.size());
}

WeylGroup WeylGroup::enumerate(const RootSystem& sys) {
  WeylGroup W(sys);
  W.rank_ = sys.rank();
  const int nr = sys.num_roots();
  const int np = sys.num_positive();

  std::vector<std::vector<std::uint8_t>> gens(W.rank_);
  for (int i = 0; i < W.rank_; ++i) {
    gens[i].resize(nr);
    for (int r = 0; r < nr; ++r) gens[i][r] = static_cast<std::uint8_t>(sys.simple_reflect(i, r));
  }

  WeylElement id;
  id.perm.resize(nr);
  for (int r = 0; r < nr; ++r) id.perm[r] = static_cast<std::uint8_t>(r);
  W.elems_.push_back(std::move(id));
  W.index_[perm_key(W.elems_[0].perm)] = 0;

  // BFS closure under right multiplication by simple reflections; elements
  // come out ordered by length, then by discovery (parent order, letter asc),
  // which is lexicographic in the stored reduced words.
  for (std::size_t head = 0; head < W.elems_.size(); ++head) {
    for (int i = 0; i < W.rank_; ++i) {
      // (w s_i)(alpha_r) = w(s_i(alpha_r))
      std::vector<std::uint8_t> np_(nr);
      const auto& wp = W.elems_[head].perm;
      for (int r = 0; r < nr; ++r) np_[r] = wp[gens[i][r]];
      std::string key = perm_key(np_);
      auto [it, fresh] = W.index_.try_emplace(key, static_cast<int>(W.elems_.size()));
      if (fresh) {
        WeylElement e;
        e.perm = std::move(np_);
        e.parent = static_cast<int>(head);
        e.letter = i;
        int len = 0;
        for (int r = 0; r < np; ++r)
          if (e.perm[r] >= np) ++len;
        e.length = len;
        W.elems_.push_back(std::move(e));
      }
    }
  }
  if (static_cast<long long>(W.elems_.size()) != sys.weyl_order())
    throw std::logic_error("Weyl enumeration produced the wrong order");

  W.rmul_.resize(W.elems_.size() * W.rank_);
  W.inverse_.resize(W.elems_.size());
  std::vector<std::uint8_t> buf(nr);
  for (int id_ = 0; id_ < W.size(); ++id_) {
    const auto& wp = W.elems_[id_].perm;
    for (int i = 0; i < W.rank_; ++i) {
      for (int r = 0; r < nr; ++r) buf[r] = wp[gens[i][r]];
      W.rmul_[id_ * W.rank_ + i] = W.index_.at(perm_key(buf));
    }
    for (int r = 0; r < nr; ++r) buf[wp[r]] = static_cast<std::uint8_t>(r);
    W.inverse_[id_] = W.index_.at(perm_key(buf));
  }
  return W;
}

int WeylGroup::multiply(int a, int b) const {
  const auto& pa = elems_[a].perm;
  const auto& pb = elems_[b].perm;
  std::vector<std::uint8_t> p(pa.size());
  for (std::size_t r = 0; r < pa.size(); ++r) p[r] = pa[pb[r]];
  return index_.at(perm_key(p));
}

int WeylGroup::lmul(int id, int i) const {
  const int nr = sys_.num_roots();
  std::vector<std::uint8_t> p(nr);
  const auto& wp = elems_[id].perm;
  for (int r = 0; r < nr; ++r) p[r] = static_cast<std::uint8_t>(sys_.simple_reflect(i, wp[r]));
  return index_.at(perm_key(p));
}

int WeylGroup::id_of(const std::vector<std::uint8_t>& perm) const {
  auto it = index_.find(perm_key(perm));
  if (it == index_.end()) throw std::invalid_argument("permutation is not a Weyl element");
  return it->second;
}

int WeylGroup::reflection(int root) const {
  const int nr = sys_.num_roots();
  std::vector<std::uint8_t> p(nr);
  for (int r = 0; r < nr; ++r) p[r] = static_cast<std::uint8_t>(sys_.reflect_root(root, r));
  return index_.at(perm_key(p));
}

std::vector<int> WeylGroup::reduced_word(int id) const {
  std::vector<int> word;
  while (id != 0) {
    word.push_back(elems_[id].letter);
    id = elems_[id].parent;
  }
  std::reverse(word.begin(), word.end());
  return word;
}

std::string WeylGroup::word_string(int id) const {
  if (id == 0) return "e";
  std::string out;
  for (int letter : reduced_word(id)) {
    if (!out.empty()) out += ' ';
    out += 's' + std::to_string(letter + 1);
  }
  return out;
}

std::vector<int> WeylGroup::length_census() const {
  int maxlen = 0;
  for (const auto& e : elems_) maxlen = std::max(maxlen, e.length);
  std::vector<int> census(maxlen + 1, 0);
  for (const auto& e : elems_) ++census[e.length];
  return census;
}

std::vector<int> reflection_subgroup(const WeylGroup& W, const RootSubset& A) {
  std::vector<int> gens;
  for (int r : A.members) gens.push_back(W.reflection(r));
  std::vector<char> in(W.size(), 0);
  std::vector<int> out;
  std::queue<int> work;
  in[0] = 1;
  out.push_back(0);
  work.push(0);
  while (!work.empty()) {
    int w = work.front();
    work.pop();
    for (int g : gens) {
      int x = W.multiply(w, g);
      if (!in[x]) {
        in[x] = 1;
        out.push_back(x);
        work.push(x);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> parabolic_subgroup(const WeylGroup& W, SimpleSet I) {
  std::vector<int> roots;
  for (int i : set_indices(I)) roots.push_back(W.system().simple_root(i));
  return reflection_subgroup(W, make_subset(W.system(), roots));
}

CosetSpace coset_space(const WeylGroup& W, SimpleSet I, Side side) {
  const RootSystem& sys = W.system();
  if (!set_subset(I, full_set(sys.rank())))
    throw std::invalid_argument("parabolic subset outside the simple roots");
  auto idxs = set_indices(I);

  CosetSpace cs;
  cs.side = side;
  cs.parabolic = I;
  cs.coset_of.assign(W.size(), -1);

  std::vector<int> rep_of(W.size(), -1);
  for (int w = 0; w < W.size(); ++w) {
    int cur = w;
    for (;;) {
      if (rep_of[cur] >= 0) break;
      bool descended = false;
      for (int i : idxs) {
        int img = side == Side::Right ? W.apply(cur, sys.simple_root(i))
                                      : W.apply_inverse(cur, sys.simple_root(i));
        if (!sys.is_positive(img)) {
          cur = side == Side::Right ? W.rmul(cur, i) : W.lmul(cur, i);
          descended = true;
          break;
        }
      }
      if (!descended) break;  // cur is the minimal-length representative
    }
    int rep = rep_of[cur] >= 0 ? rep_of[cur] : cur;
    // Mark the whole descent path next time around; cheap to just record w.
    rep_of[w] = rep;
    rep_of[cur] = rep;
  }

  std::vector<int> reps;
  for (int w = 0; w < W.size(); ++w)
    if (rep_of[w] == w) reps.push_back(w);
  // Element ids are already ordered by (length, word lex).
  cs.reps = std::move(reps);
  for (int w = 0; w < W.size(); ++w) {
    int rep = rep_of[w];
    int idx = static_cast<int>(std::lower_bound(cs.reps.begin(), cs.reps.end(), rep) -
                               cs.reps.begin());
    cs.coset_of[w] = idx;
  }
  return cs;
}

std::vector<int> free_double_cosets(const WeylGroup& W, const CosetSpace& cs,
                                    SimpleSet L, Sign sign, bool verify_all_reps) {
  if (cs.side != Side::Right)
    throw std::invalid_argument("free_double_cosets expects a right coset space W/W_I");
  const RootSystem& sys = W.system();
  RootSubset phiI = root_subsystem(sys, cs.parabolic);
  auto idxs = set_indices(L);

  auto condition = [&](int w) {
    for (int j : idxs) {
      int img = W.apply_inverse(w, sys.simple_root(j));
      if (sign == Sign::Plus ? !sys.is_positive(img) : sys.is_positive(img)) return false;
      if (phiI.contains(img)) return false;
    }
    return true;
  };

  std::vector<int> out;
  for (int rep : cs.reps)
    if (condition(rep)) out.push_back(rep);

  if (verify_all_reps) {
    std::vector<int> sub = parabolic_subgroup(W, cs.parabolic);
    for (int rep : cs.reps) {
      bool expected = condition(rep);
      for (int v : sub)
        if (condition(W.multiply(rep, v)) != expected)
          throw std::logic_error("free double coset condition not constant on a coset");
    }
  }
  return out;
}

bool orbit_freeness(const WeylGroup& W, SimpleSet L, SimpleSet I, int w) {
  std::vector<int> wl = parabolic_subgroup(W, L);
  std::vector<int> wi = parabolic_subgroup(W, I);
  std::vector<char> seen(W.size(), 0);
  std::size_t count = 0;
  for (int a : wl) {
    int aw = W.multiply(a, w);
    for (int b : wi) {
      int x = W.multiply(aw, b);
      if (!seen[x]) {
        seen[x] = 1;
        ++count;
      }
    }
  }
  return count == wl.size() * wi.size();
}

std::vector<int> free_orbit_census(const WeylGroup& W, SimpleSet L, SimpleSet I) {
  std::vector<int> wl = parabolic_subgroup(W, L);
  std::vector<int> wi = parabolic_subgroup(W, I);
  std::vector<char> visited(W.size(), 0);
  std::vector<int> mins;
  for (int w = 0; w < W.size(); ++w) {
    if (visited[w]) continue;
    std::vector<int> orbit;
    std::vector<char> in_orbit(W.size(), 0);
    for (int a : wl) {
      int aw = W.multiply(a, w);
      for (int b : wi) {
        int x = W.multiply(aw, b);
        if (!in_orbit[x]) {
          in_orbit[x] = 1;
          orbit.push_back(x);
        }
      }
    }
    int best = orbit.front();
    for (int x : orbit) {
      visited[x] = 1;
      if (W.length(x) < W.length(best) || (W.length(x) == W.length(best) && x < best))
        best = x;
    }
    if (orbit.size() == wl.size() * wi.size()) mins.push_back(best);
  }
  std::sort(mins.begin(), mins.end());
  return mins;
}

}  // namespace weylkit
