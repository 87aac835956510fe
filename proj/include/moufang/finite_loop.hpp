#ifndef MOUFANG_FINITE_LOOP_HPP
#define MOUFANG_FINITE_LOOP_HPP

#include <optional>
#include <string>
#include <vector>

#include "moufang/errors.hpp"

namespace moufang {

/// Finite loop given by its Cayley table. Entry table[i * order + j] is the
/// index of the product (element i) * (element j).
struct FiniteLoop {
  int order = 0;
  int unit = 0;
  std::vector<int> table;

  int mul(int i, int j) const { return table[i * order + j]; }

  bool is_quasigroup() const {
    // every row and every column is a permutation
    for (int i = 0; i < order; ++i) {
      std::vector<bool> row(order, false), col(order, false);
      for (int j = 0; j < order; ++j) {
        const int r = mul(i, j);
        const int c = mul(j, i);
        if (r < 0 || r >= order || c < 0 || c >= order) return false;
        if (row[r] || col[c]) return false;
        row[r] = col[c] = true;
      }
    }
    return true;
  }

  bool has_unit() const {
    for (int j = 0; j < order; ++j) {
      if (mul(unit, j) != j || mul(j, unit) != j) return false;
    }
    return true;
  }

  /// (gh)(kg) == g((hk)g) over all triples.
  bool is_moufang() const {
    for (int g = 0; g < order; ++g)
      for (int h = 0; h < order; ++h)
        for (int k = 0; k < order; ++k)
          if (mul(mul(g, h), mul(k, g)) != mul(g, mul(mul(h, k), g))) return false;
    return true;
  }

  /// First triple with (gh)k != g(hk), if any.
  std::optional<std::array<int, 3>> associativity_witness() const {
    for (int g = 0; g < order; ++g)
      for (int h = 0; h < order; ++h)
        for (int k = 0; k < order; ++k)
          if (mul(mul(g, h), k) != mul(g, mul(h, k))) return std::array<int, 3>{g, h, k};
    return std::nullopt;
  }

  bool is_group() const {
    return is_quasigroup() && has_unit() && !associativity_witness();
  }

  int left_inverse(int g) const {
    for (int x = 0; x < order; ++x)
      if (mul(x, g) == unit) return x;
    return -1;
  }

  int right_inverse(int g) const {
    for (int x = 0; x < order; ++x)
      if (mul(g, x) == unit) return x;
    return -1;
  }
};

/// Chein double M(G, 2): elements (g, 0) and (g, 1) with
///   (g,0)(h,0) = (gh, 0)      (g,0)(h,1) = (hg, 1)
///   (g,1)(h,0) = (g h^-1, 1)  (g,1)(h,1) = (h^-1 g, 0)
/// The result is a Moufang loop of order 2|G|, nonassociative exactly when G
/// is nonabelian.
inline FiniteLoop chein_double(const FiniteLoop& group) {
  if (!group.is_group()) {
    throw ConstructionError("chein_double requires a group as input");
  }
  const int n = group.order;
  FiniteLoop out;
  out.order = 2 * n;
  out.unit = group.unit;
  out.table.assign(out.order * out.order, 0);
  auto idx = [n](int g, int bar) { return g + bar * n; };
  std::vector<int> inv(n);
  for (int g = 0; g < n; ++g) inv[g] = group.left_inverse(g);
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h) {
      out.table[idx(g, 0) * out.order + idx(h, 0)] = idx(group.mul(g, h), 0);
      out.table[idx(g, 0) * out.order + idx(h, 1)] = idx(group.mul(h, g), 1);
      out.table[idx(g, 1) * out.order + idx(h, 0)] = idx(group.mul(g, inv[h]), 1);
      out.table[idx(g, 1) * out.order + idx(h, 1)] = idx(group.mul(inv[h], g), 0);
    }
  }
  return out;
}

/// Symmetric group S3 as permutations of {0,1,2} in lexicographic order.
inline FiniteLoop symmetric_group_s3() {
  const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  auto find = [&](const int p[3]) {
    for (int i = 0; i < 6; ++i)
      if (perms[i][0] == p[0] && perms[i][1] == p[1] && perms[i][2] == p[2]) return i;
    return -1;
  };
  FiniteLoop g;
  g.order = 6;
  g.unit = 0;
  g.table.assign(36, 0);
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      // composition (i*j)(x) = perms[i][perms[j][x]]
      int comp[3];
      for (int x = 0; x < 3; ++x) comp[x] = perms[i][perms[j][x]];
      g.table[i * 6 + j] = find(comp);
    }
  }
  return g;
}

inline FiniteLoop cyclic_group_z2() {
  FiniteLoop g;
  g.order = 2;
  g.unit = 0;
  g.table = {0, 1, 1, 0};
  return g;
}

}

#endif
