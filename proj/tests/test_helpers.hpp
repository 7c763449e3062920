#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "blockfact/matrix.hpp"

namespace blockfact {
namespace testing {

/// Build a matrix from rational literals, row by row.
inline Matrix mat(std::initializer_list<std::initializer_list<const char*>> rows) {
  const int r = int(rows.size());
  const int c = r == 0 ? 0 : int(rows.begin()->size());
  Matrix m(r, c);
  int i = 0;
  for (const auto& row : rows) {
    int j = 0;
    for (const char* s : row) m.at(i, j++) = parse_rational(s);
    ++i;
  }
  return m;
}

inline Vec vec(std::initializer_list<const char*> entries) {
  Vec v;
  for (const char* s : entries) v.push_back(parse_rational(s));
  return v;
}

}  // namespace testing
}  // namespace blockfact
