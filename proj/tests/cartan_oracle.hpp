#pragma once
// Independent root-system oracle: Cartan matrices from Dynkin diagrams and
// positive roots by closing the simple roots under simple reflections.

#include <cstdint>
#include <set>
#include <vector>

#include "lendepth/rootdata.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<int>>;

inline Matrix cartan(lendepth::SimpleType t) {
  using lendepth::Family;
  const int r = static_cast<int>(t.rank);
  Matrix a(r, std::vector<int>(r, 0));
  for (int i = 0; i < r; ++i) a[i][i] = 2;
  auto bond = [&](int i, int j, int mult) {  // i long, j short when mult > 1
    a[i][j] = -1;
    a[j][i] = -mult;
  };
  switch (t.family) {
    case Family::A:
      for (int i = 0; i + 1 < r; ++i) bond(i, i + 1, 1);
      break;
    case Family::B:
      for (int i = 0; i + 2 < r; ++i) bond(i, i + 1, 1);
      bond(r - 2, r - 1, 2);
      break;
    case Family::C:
      for (int i = 0; i + 2 < r; ++i) bond(i, i + 1, 1);
      bond(r - 1, r - 2, 2);
      break;
    case Family::D:
      for (int i = 0; i + 2 < r; ++i) bond(i, i + 1, 1);
      bond(r - 3, r - 1, 1);
      break;
    case Family::E:
      bond(0, 2, 1);
      bond(1, 3, 1);
      for (int i = 2; i + 1 < r; ++i) bond(i, i + 1, 1);
      break;
    case Family::F:
      bond(0, 1, 1);
      bond(1, 2, 2);
      bond(2, 3, 1);
      break;
    case Family::G:
      bond(0, 1, 3);
      break;
  }
  return a;
}

inline Matrix delete_node(const Matrix& a, int k) {
  Matrix b;
  for (int i = 0; i < static_cast<int>(a.size()); ++i) {
    if (i == k) continue;
    std::vector<int> row;
    for (int j = 0; j < static_cast<int>(a.size()); ++j)
      if (j != k) row.push_back(a[i][j]);
    b.push_back(row);
  }
  return b;
}

inline std::uint64_t positive_roots(const Matrix& a) {
  const int r = static_cast<int>(a.size());
  std::set<std::vector<int>> roots;
  std::vector<std::vector<int>> todo;
  for (int i = 0; i < r; ++i) {
    std::vector<int> e(r, 0);
    e[i] = 1;
    roots.insert(e);
    todo.push_back(e);
  }
  while (!todo.empty()) {
    auto b = todo.back();
    todo.pop_back();
    for (int i = 0; i < r; ++i) {
      int pairing = 0;
      for (int j = 0; j < r; ++j) pairing += b[j] * a[i][j];
      auto c = b;
      c[i] -= pairing;
      bool positive = true;
      for (int x : c) positive &= x >= 0;
      if (positive && roots.insert(c).second) todo.push_back(c);
    }
  }
  return roots.size();
}

}  // namespace oracle
