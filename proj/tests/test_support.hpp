// Small fixtures shared by the unit tests.

#pragma once

#include <vector>

#include "hyperplanar/table_algebra.hpp"

namespace testing_support {

/// Group algebra of Z/k with the inversion involution; basis index = exponent.
inline hyperplanar::TableAlgebra cyclic_group(int k) {
  std::vector<hyperplanar::StructureConstant> cs;
  std::vector<hyperplanar::BasisIndex> inv;
  for (int i = 0; i < k; ++i) {
    inv.push_back((k - i) % k);
    for (int j = 0; j < k; ++j) cs.push_back({i, j, (i + j) % k, 1});
  }
  return hyperplanar::TableAlgebra(k, 0, inv, cs);
}

/// Group algebra of S_3 (non-commutative); elements as permutations of
/// {0,1,2} listed in lexicographic order, involution = group inverse.
inline hyperplanar::TableAlgebra symmetric_group_s3() {
  const std::vector<std::vector<int>> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  auto index = [&](const std::vector<int>& p) {
    for (int i = 0; i < 6; ++i)
      if (perms[static_cast<std::size_t>(i)] == p) return i;
    return -1;
  };
  std::vector<hyperplanar::StructureConstant> cs;
  std::vector<hyperplanar::BasisIndex> inv(6);
  for (int i = 0; i < 6; ++i) {
    const auto& a = perms[static_cast<std::size_t>(i)];
    std::vector<int> ai(3);
    for (int x = 0; x < 3; ++x) ai[static_cast<std::size_t>(a[static_cast<std::size_t>(x)])] = x;
    inv[static_cast<std::size_t>(i)] = index(ai);
    for (int j = 0; j < 6; ++j) {
      const auto& b = perms[static_cast<std::size_t>(j)];
      // (a b)(x) = a(b(x))
      std::vector<int> ab(3);
      for (int x = 0; x < 3; ++x) ab[static_cast<std::size_t>(x)] = a[static_cast<std::size_t>(b[static_cast<std::size_t>(x)])];
      cs.push_back({i, j, index(ab), 1});
    }
  }
  return hyperplanar::TableAlgebra(6, 0, inv, cs);
}

}  // namespace testing_support
