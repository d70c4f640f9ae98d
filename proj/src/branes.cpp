#include "weylkit/branes.hpp"

#include <sstream>
#include <stdexcept>

namespace weylkit {

BraneDiagram parse_diagram(const std::string& text) {
  std::istringstream in(text);
  BraneDiagram d;
  std::string tok;
  bool expect_marker = true;
  while (in >> tok) {
    if (expect_marker) {
      if (tok == "D")
        d.branes.push_back(Brane::D5);
      else if (tok == "N")
        d.branes.push_back(Brane::NS5);
      else
        throw std::invalid_argument("expected brane marker, got '" + tok + "'");
    } else {
      std::size_t pos = 0;
      long long gap = 0;
      try {
        gap = std::stoll(tok, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos != tok.size() || gap < 0)
        throw std::invalid_argument("expected nonnegative gap, got '" + tok + "'");
      d.gaps.push_back(gap);
    }
    expect_marker = !expect_marker;
  }
  if (d.branes.empty() || expect_marker)
    throw std::invalid_argument("diagram must match marker (INT marker)*");
  return d;
}

std::string format_diagram(const BraneDiagram& d) {
  std::string out;
  for (std::size_t i = 0; i < d.branes.size(); ++i) {
    if (i) out += ' ' + std::to_string(d.gaps[i - 1]) + ' ';
    out += d.branes[i] == Brane::D5 ? 'D' : 'N';
  }
  return out;
}

BraneDiagram hw_move(const BraneDiagram& d, int i) {
  const int n = static_cast<int>(d.branes.size());
  if (i < 0 || i + 1 >= n) throw std::invalid_argument("HW position out of range");
  if (d.branes[i] == d.branes[i + 1])
    throw std::invalid_argument("HW move needs an opposite-color brane pair");
  long long d1 = i > 0 ? d.gaps[i - 1] : 0;
  long long d2 = d.gaps[i];
  long long d3 = i + 2 < n ? d.gaps[i + 1] : 0;
  long long d2t = d1 + d3 + 1 - d2;
  if (d2t < 0)
    throw std::invalid_argument("HW move would produce a negative multiplicity");
  BraneDiagram out = d;
  std::swap(out.branes[i], out.branes[i + 1]);
  out.gaps[i] = d2t;
  return out;
}

BraneDiagram normalize_separated(const BraneDiagram& d) {
  BraneDiagram cur = d;
  for (;;) {
    int pos = -1;
    for (std::size_t i = 0; i + 1 < cur.branes.size(); ++i) {
      if (cur.branes[i] == Brane::D5 && cur.branes[i + 1] == Brane::NS5) {
        pos = static_cast<int>(i);
        break;
      }
    }
    if (pos < 0) return cur;
    cur = hw_move(cur, pos);
  }
}

BraneDiagram mirror_dual(const BraneDiagram& d) {
  BraneDiagram out = d;
  for (auto& b : out.branes) b = b == Brane::D5 ? Brane::NS5 : Brane::D5;
  return out;
}

std::pair<std::vector<long long>, std::vector<long long>> split_at(
    const BraneDiagram& d, int k) {
  if (k < 0 || k >= static_cast<int>(d.gaps.size()))
    throw std::invalid_argument("split pivot out of range");
  std::vector<long long> minus, plus;
  for (int i = k; i >= 0; --i) minus.push_back(d.gaps[i]);
  for (int i = k; i < static_cast<int>(d.gaps.size()); ++i) plus.push_back(d.gaps[i]);
  return {minus, plus};
}

std::pair<std::vector<long long>, std::vector<long long>> split_separated(
    const BraneDiagram& d) {
  int first_d5 = -1;
  for (std::size_t i = 0; i < d.branes.size(); ++i) {
    if (d.branes[i] == Brane::D5) {
      first_d5 = static_cast<int>(i);
      break;
    }
  }
  if (first_d5 <= 0)
    throw std::invalid_argument("split needs a separated diagram with both colors");
  for (std::size_t i = first_d5; i < d.branes.size(); ++i)
    if (d.branes[i] != Brane::D5)
      throw std::invalid_argument("diagram is not separated");
  return split_at(d, first_d5 - 1);
}

}  // namespace weylkit
