#pragma once

#include <utility>
#include <vector>

namespace weylkit {

// A quiver gauge theory datum: undirected edges (arrow directions are
// immaterial once the representation space is doubled), gauge dimensions n
// and framing dimensions m per vertex. Vertices are 0-based ids.
struct QuiverDatum {
  std::vector<std::pair<int, int>> edges;  // multiset of unordered pairs
  std::vector<long long> n;                // gauge dims, n_v >= 1
  std::vector<long long> m;                // framings, m_v >= 0

  int num_vertices() const { return static_cast<int>(n.size()); }
  bool operator==(const QuiverDatum& o) const = default;
};

// Chain quiver for a strictly decreasing tuple (v_{n+1}, ..., v_1): gauge
// vertices v_1 < ... < v_n in a path, framing v_{n+1} at the top vertex.
// Needs at least two entries.
QuiverDatum linear_quiver(const std::vector<long long>& v);

// Q* for a composition (n_1, ..., n_k) of n >= 2: central chain 1..(n-1)
// with k leg vertices of dims n_1..n_k all attached to the chain top.
QuiverDatum star_quiver(const std::vector<long long>& comp);

// The full-tailed variant: each leg extends as n_i, n_i - 1, ..., 1.
QuiverDatum full_star_quiver(const std::vector<long long>& comp);

// Intersection of two quiver gauge theories at framed vertices i of Q and
// i' of Q' with m_i <= m'_{i'}: disjoint union plus an edge (i, i'); the
// junction framing m'_{i'} - m_i sits at vertex i and vertex i' loses its
// framing. Q' vertex ids are shifted by Q's vertex count.
QuiverDatum intersect(const QuiverDatum& Q, int i, const QuiverDatum& Qp, int ip);

// higgs = 2 (sum over edges n_i n_j + sum n_v m_v - sum n_v^2); can be
// negative and is reported as-is. coulomb = 2 sum n_v.
long long higgs_dim(const QuiverDatum& Q);
long long coulomb_dim(const QuiverDatum& Q);

// coulomb_dim(Q*_comp) against n^2 + n, the dimension of the twisted
// cotangent quotient it is the Coulomb branch of.
bool coulomb_crosscheck(const std::vector<long long>& comp);

// psi(e_i) = 0 iff i is a partial sum n_1 + ... + n_j; length n - 1.
std::vector<int> psi_character(const std::vector<long long>& comp);

}  // namespace weylkit
