#include "weylkit/quivers.hpp"

#include <numeric>
#include <stdexcept>

namespace weylkit {

namespace {

long long check_composition(const std::vector<long long>& comp) {
  long long n = 0;
  for (long long c : comp) {
    if (c <= 0) throw std::invalid_argument("composition parts must be positive");
    n += c;
  }
  if (n < 2) throw std::invalid_argument("composition must sum to at least 2");
  return n;
}

}  // namespace

QuiverDatum linear_quiver(const std::vector<long long>& v) {
  if (v.size() < 2) throw std::invalid_argument("linear quiver needs at least two entries");
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i] <= v[i + 1])
      throw std::invalid_argument("linear quiver entries must strictly decrease");
  if (v.back() <= 0) throw std::invalid_argument("dimensions must be positive");

  const int ng = static_cast<int>(v.size()) - 1;
  QuiverDatum Q;
  Q.n.resize(ng);
  Q.m.assign(ng, 0);
  for (int i = 0; i < ng; ++i) Q.n[i] = v[v.size() - 1 - i];  // v_1, ..., v_n
  for (int i = 0; i + 1 < ng; ++i) Q.edges.emplace_back(i, i + 1);
  Q.m[ng - 1] = v[0];
  return Q;
}

QuiverDatum star_quiver(const std::vector<long long>& comp) {
  long long n = check_composition(comp);
  QuiverDatum Q;
  const int chain = static_cast<int>(n) - 1;
  for (int i = 1; i <= chain; ++i) Q.n.push_back(i);
  for (int i = 0; i + 1 < chain; ++i) Q.edges.emplace_back(i, i + 1);
  for (long long part : comp) {
    int leg = static_cast<int>(Q.n.size());
    Q.n.push_back(part);
    Q.edges.emplace_back(chain - 1, leg);
  }
  Q.m.assign(Q.n.size(), 0);
  return Q;
}

QuiverDatum full_star_quiver(const std::vector<long long>& comp) {
  long long n = check_composition(comp);
  QuiverDatum Q;
  const int chain = static_cast<int>(n) - 1;
  for (int i = 1; i <= chain; ++i) Q.n.push_back(i);
  for (int i = 0; i + 1 < chain; ++i) Q.edges.emplace_back(i, i + 1);
  for (long long part : comp) {
    int prev = chain - 1;
    for (long long d = part; d >= 1; --d) {
      int v = static_cast<int>(Q.n.size());
      Q.n.push_back(d);
      Q.edges.emplace_back(prev, v);
      prev = v;
    }
  }
  Q.m.assign(Q.n.size(), 0);
  return Q;
}

QuiverDatum intersect(const QuiverDatum& Q, int i, const QuiverDatum& Qp, int ip) {
  if (i < 0 || i >= Q.num_vertices() || ip < 0 || ip >= Qp.num_vertices())
    throw std::invalid_argument("intersection vertex out of range");
  if (Q.m[i] == 0 || Qp.m[ip] == 0)
    throw std::invalid_argument("intersection needs framed vertices");
  if (Q.m[i] > Qp.m[ip])
    throw std::invalid_argument("intersection orientation: m_i must not exceed m'_{i'}");

  const int off = Q.num_vertices();
  QuiverDatum out = Q;
  out.n.insert(out.n.end(), Qp.n.begin(), Qp.n.end());
  out.m.insert(out.m.end(), Qp.m.begin(), Qp.m.end());
  for (auto [a, b] : Qp.edges) out.edges.emplace_back(a + off, b + off);
  out.edges.emplace_back(i, ip + off);
  out.m[i] = Qp.m[ip] - Q.m[i];
  out.m[ip + off] = 0;
  return out;
}

long long higgs_dim(const QuiverDatum& Q) {
  long long sum = 0;
  for (auto [a, b] : Q.edges) sum += Q.n[a] * Q.n[b];
  for (int v = 0; v < Q.num_vertices(); ++v) sum += Q.n[v] * (Q.m[v] - Q.n[v]);
  return 2 * sum;
}

long long coulomb_dim(const QuiverDatum& Q) {
  return 2 * std::accumulate(Q.n.begin(), Q.n.end(), 0LL);
}

bool coulomb_crosscheck(const std::vector<long long>& comp) {
  long long n = check_composition(comp);
  return coulomb_dim(star_quiver(comp)) == n * n + n;
}

std::vector<int> psi_character(const std::vector<long long>& comp) {
  long long n = check_composition(comp);
  std::vector<char> is_partial(n, 0);
  long long acc = 0;
  for (long long part : comp) {
    acc += part;
    if (acc < n) is_partial[acc] = 1;
  }
  std::vector<int> psi;
  for (long long i = 1; i <= n - 1; ++i) psi.push_back(is_partial[i] ? 0 : 1);
  return psi;
}

}  // namespace weylkit
