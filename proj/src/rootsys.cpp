#include "weylkit/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace weylkit {

std::vector<int> set_indices(SimpleSet s) {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (set_contains(s, i)) out.push_back(i);
  return out;
}

SimpleSet parse_simple_set(const std::string& text, int rank) {
  if (text.empty() || text == "none" || text == "empty") return 0;
  if (text == "all") return full_set(rank);
  SimpleSet s = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t next = text.find(',', pos);
    std::string tok = text.substr(
        pos, next == std::string::npos ? std::string::npos : next - pos);
    if (tok.empty()) throw std::invalid_argument("empty index in subset list");
    for (char c : tok)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw std::invalid_argument("bad subset token '" + tok + "'");
    int idx = std::stoi(tok);
    if (idx < 1 || idx > rank)
      throw std::invalid_argument("simple-root index " + tok +
                                  " out of range 1.." + std::to_string(rank));
    s |= SimpleSet{1} << (idx - 1);
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return s;
}

std::string format_simple_set(SimpleSet s) {
  std::string out;
  for (int i : set_indices(s)) {
    if (!out.empty()) out += ',';
    out += std::to_string(i + 1);
  }
  return out;
}

std::vector<SimpleSet> all_subsets(SimpleSet universe) {
  std::vector<SimpleSet> out;
  for (SimpleSet m = 0; m <= universe; ++m)
    if (set_subset(m, universe)) out.push_back(m);
  return out;
}

namespace {

struct TypeInfo {
  char family;
  int rank;
};

TypeInfo parse_label(const std::string& label) {
  if (label.size() < 2) throw std::invalid_argument("bad type label '" + label + "'");
  char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(label[0])));
  for (std::size_t i = 1; i < label.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(label[i])))
      throw std::invalid_argument("bad type label '" + label + "'");
  int rank = std::stoi(label.substr(1));
  switch (fam) {
    case 'A':
      if (rank < 1) throw std::invalid_argument("A_n needs n >= 1");
      break;
    case 'B':
    case 'C':
      if (rank < 2) throw std::invalid_argument("B_n/C_n need n >= 2");
      break;
    case 'D':
      if (rank < 4) throw std::invalid_argument("D_n needs n >= 4");
      break;
    case 'E':
      if (rank < 6 || rank > 8) throw std::invalid_argument("E_n needs n in 6..8");
      break;
    case 'F':
      if (rank != 4) throw std::invalid_argument("F_n needs n = 4");
      break;
    case 'G':
      if (rank != 2) throw std::invalid_argument("G_n needs n = 2");
      break;
    default:
      throw std::invalid_argument("unknown family '" + std::string(1, fam) + "'");
  }
  if (rank > 16) throw std::invalid_argument("rank too large");
  return {fam, rank};
}

long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

long long weyl_order_of(char fam, int n) {
  switch (fam) {
    case 'A': return factorial(n + 1);
    case 'B':
    case 'C': return (1LL << n) * factorial(n);
    case 'D': return (1LL << (n - 1)) * factorial(n);
    case 'E': return n == 6 ? 51840LL : n == 7 ? 2903040LL : 696729600LL;
    case 'F': return 1152;
    case 'G': return 12;
  }
  return 0;
}

// Cartan matrix C with C[i][j] = <alpha_j, alpha_i^vee>, Bourbaki numbering.
std::vector<std::vector<int>> cartan_matrix(char fam, int n) {
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto edge = [&](int i, int j) { c[i][j] = -1; c[j][i] = -1; };
  switch (fam) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      break;
    case 'B':  // alpha_n short
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      c[n - 1][n - 2] = -2;
      break;
    case 'C':  // alpha_n long
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      c[n - 2][n - 1] = -2;
      break;
    case 'D':
      for (int i = 0; i + 1 < n - 1; ++i) edge(i, i + 1);
      edge(n - 3, n - 1);
      break;
    case 'E':
      edge(0, 2); edge(2, 3); edge(3, 4); edge(4, 5);
      if (n >= 7) edge(5, 6);
      if (n >= 8) edge(6, 7);
      edge(1, 3);
      break;
    case 'F':
      edge(0, 1); edge(1, 2); edge(2, 3);
      c[2][1] = -2;
      break;
    case 'G':
      c[0][1] = -3;
      c[1][0] = -1;
      break;
  }
  return c;
}

// d_i > 0 integers with d_i * C[i][j] symmetric, by propagation along the
// Dynkin graph (connected for all supported types).
std::vector<long long> symmetrizer_of(const std::vector<std::vector<int>>& c) {
  int n = static_cast<int>(c.size());
  // rational d_i = num/den
  std::vector<long long> num(n, 0), den(n, 1);
  num[0] = 1;
  std::queue<int> q;
  q.push(0);
  while (!q.empty()) {
    int i = q.front();
    q.pop();
    for (int j = 0; j < n; ++j) {
      if (i == j || c[i][j] == 0 || num[j] != 0) continue;
      // d_j = d_i * C[i][j] / C[j][i]
      num[j] = num[i] * c[i][j];
      den[j] = den[i] * c[j][i];
      if (num[j] < 0 && den[j] < 0) { num[j] = -num[j]; den[j] = -den[j]; }
      long long g = std::gcd(std::abs(num[j]), std::abs(den[j]));
      num[j] /= g;
      den[j] /= g;
      q.push(j);
    }
  }
  long long scale = 1;
  for (int i = 0; i < n; ++i) scale = std::lcm(scale, den[i]);
  std::vector<long long> d(n);
  for (int i = 0; i < n; ++i) d[i] = num[i] * (scale / den[i]);
  return d;
}

}  // namespace

long long RootSystem::pairing(int r1, int r2) const {
  const auto& a = roots_[r1];
  const auto& b = roots_[r2];
  long long acc = 0;
  for (int i = 0; i < rank_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank_; ++j) {
      if (b[j] == 0 || cartan_[i][j] == 0) continue;
      acc += static_cast<long long>(a[i]) * b[j] * symmetrizer_[i] * cartan_[i][j];
    }
  }
  return acc;
}

int RootSystem::index_of(const std::vector<int>& coords) const {
  auto it = index_.find(coords);
  return it == index_.end() ? -1 : it->second;
}

int RootSystem::reflect_root(int alpha, int beta) const {
  // s_alpha(beta) = beta - <beta, alpha^vee> alpha
  long long n = 2 * pairing(beta, alpha);
  long long d = pairing(alpha, alpha);
  if (n % d != 0) throw std::logic_error("non-integral reflection coefficient");
  long long coef = n / d;
  std::vector<int> v = roots_[beta];
  const auto& a = roots_[alpha];
  for (int i = 0; i < rank_; ++i) v[i] -= static_cast<int>(coef) * a[i];
  int idx = index_of(v);
  if (idx < 0) throw std::logic_error("reflection left the root system");
  return idx;
}

RootSystem build_root_system(const std::string& label, long long max_weyl_order) {
  TypeInfo t = parse_label(label);
  long long order = weyl_order_of(t.family, t.rank);
  if (order > max_weyl_order)
    throw std::invalid_argument("type " + label + " exceeds the Weyl order guard (|W|=" +
                                std::to_string(order) + " > " +
                                std::to_string(max_weyl_order) + ")");

  RootSystem sys;
  sys.label_ = std::string(1, t.family) + std::to_string(t.rank);
  sys.family_ = t.family;
  sys.rank_ = t.rank;
  sys.weyl_order_ = order;
  sys.cartan_ = cartan_matrix(t.family, t.rank);
  sys.symmetrizer_ = symmetrizer_of(sys.cartan_);

  const int n = t.rank;
  // Closure of the simple roots under simple reflections.
  std::set<std::vector<int>> seen;
  std::queue<std::vector<int>> work;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    seen.insert(e);
    work.push(e);
  }
  while (!work.empty()) {
    std::vector<int> v = work.front();
    work.pop();
    for (int i = 0; i < n; ++i) {
      long long coef = 0;
      for (int k = 0; k < n; ++k) coef += static_cast<long long>(v[k]) * sys.cartan_[i][k];
      std::vector<int> w = v;
      w[i] -= static_cast<int>(coef);
      if (seen.insert(w).second) work.push(w);
    }
  }

  std::vector<std::vector<int>> pos;
  for (const auto& v : seen) {
    bool nonneg = std::all_of(v.begin(), v.end(), [](int c) { return c >= 0; });
    if (nonneg) pos.push_back(v);
  }
  auto height = [](const std::vector<int>& v) {
    return std::accumulate(v.begin(), v.end(), 0);
  };
  std::sort(pos.begin(), pos.end(), [&](const auto& a, const auto& b) {
    int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  if (2 * pos.size() != seen.size())
    throw std::logic_error("positive/negative split failed for " + label);

  int np = static_cast<int>(pos.size());
  sys.roots_.reserve(2 * np);
  for (const auto& v : pos) sys.roots_.push_back(v);
  for (const auto& v : pos) {
    std::vector<int> m(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) m[i] = -v[i];
    sys.roots_.push_back(m);
  }
  for (int r = 0; r < 2 * np; ++r) sys.index_[sys.roots_[r]] = r;

  sys.negation_.resize(2 * np);
  for (int r = 0; r < np; ++r) {
    sys.negation_[r] = r + np;
    sys.negation_[r + np] = r;
  }

  sys.simple_index_.resize(n);
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    sys.simple_index_[i] = sys.index_.at(e);
  }

  sys.reflect_.assign(n, std::vector<int>(2 * np));
  for (int i = 0; i < n; ++i) {
    for (int r = 0; r < 2 * np; ++r) {
      const auto& v = sys.roots_[r];
      long long coef = 0;
      for (int k = 0; k < n; ++k) coef += static_cast<long long>(v[k]) * sys.cartan_[i][k];
      std::vector<int> w = v;
      w[i] -= static_cast<int>(coef);
      sys.reflect_[i][r] = sys.index_.at(w);
    }
  }
  return sys;
}

bool RootSubset::contains(int r) const {
  return std::binary_search(members.begin(), members.end(), r);
}

RootSubset make_subset(const RootSystem& sys, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (!members.empty() &&
      (members.front() < 0 || members.back() >= sys.num_roots()))
    throw std::invalid_argument("root index out of range");
  return RootSubset{&sys, std::move(members)};
}

namespace {
void check_same_system(const RootSubset& a, const RootSubset& b) {
  if (a.system != b.system)
    throw std::invalid_argument("root subsets belong to different systems");
}
}  // namespace

RootSubset subset_union(const RootSubset& a, const RootSubset& b) {
  check_same_system(a, b);
  std::vector<int> out;
  std::set_union(a.members.begin(), a.members.end(), b.members.begin(),
                 b.members.end(), std::back_inserter(out));
  return RootSubset{a.system, std::move(out)};
}

RootSubset subset_intersect(const RootSubset& a, const RootSubset& b) {
  check_same_system(a, b);
  std::vector<int> out;
  std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(),
                        b.members.end(), std::back_inserter(out));
  return RootSubset{a.system, std::move(out)};
}

RootSubset subset_minus(const RootSubset& a, const RootSubset& b) {
  check_same_system(a, b);
  std::vector<int> out;
  std::set_difference(a.members.begin(), a.members.end(), b.members.begin(),
                      b.members.end(), std::back_inserter(out));
  return RootSubset{a.system, std::move(out)};
}

RootSubset subset_negate(const RootSubset& a) {
  std::vector<int> out;
  out.reserve(a.members.size());
  for (int r : a.members) out.push_back(a.system->negate(r));
  std::sort(out.begin(), out.end());
  return RootSubset{a.system, std::move(out)};
}

RootSubset full_root_set(const RootSystem& sys) {
  std::vector<int> all(sys.num_roots());
  std::iota(all.begin(), all.end(), 0);
  return RootSubset{&sys, std::move(all)};
}

RootSubset positive_roots(const RootSystem& sys) {
  std::vector<int> p(sys.num_positive());
  std::iota(p.begin(), p.end(), 0);
  return RootSubset{&sys, std::move(p)};
}

RootSubset root_subsystem(const RootSystem& sys, SimpleSet S) {
  if (!set_subset(S, full_set(sys.rank())))
    throw std::invalid_argument("subset indices outside the simple roots");
  std::vector<int> out;
  for (int r = 0; r < sys.num_roots(); ++r) {
    const auto& v = sys.root(r);
    bool in_span = true;
    for (int i = 0; i < sys.rank(); ++i)
      if (v[i] != 0 && !set_contains(S, i)) { in_span = false; break; }
    if (in_span) out.push_back(r);
  }
  return RootSubset{&sys, std::move(out)};
}

RootSubset positive_subsystem(const RootSystem& sys, SimpleSet S) {
  RootSubset sub = root_subsystem(sys, S);
  std::vector<int> out;
  for (int r : sub.members)
    if (sys.is_positive(r)) out.push_back(r);
  return RootSubset{&sys, std::move(out)};
}

bool is_orthogonal(const RootSystem& sys, const RootSubset& A,
                   const RootSubset& B) {
  if ((A.system && A.system != &sys) || (B.system && B.system != &sys))
    throw std::invalid_argument("root subsets belong to a different system");
  for (int a : A.members)
    for (int b : B.members)
      if (sys.pairing(a, b) != 0) return false;
  return true;
}

bool simple_sets_orthogonal(const RootSystem& sys, SimpleSet A, SimpleSet B) {
  for (int i : set_indices(A))
    for (int j : set_indices(B))
      if (sys.pairing(sys.simple_root(i), sys.simple_root(j)) != 0) return false;
  return true;
}

}  // namespace weylkit
