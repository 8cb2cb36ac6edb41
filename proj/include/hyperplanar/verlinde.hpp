// Verlinde algebras V_r = Z[x] / (U_r(x)) with the basis of Chebyshev images.

#pragma once

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperplanar/coeff.hpp"
#include "hyperplanar/table_algebra.hpp"

namespace hyperplanar {

/// Dense integer polynomial, coefficient of x^k at index k, no trailing zeros.
using IntPolynomial = std::vector<BigInt>;

namespace detail {

inline void trim(IntPolynomial& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.empty() || b.empty()) return {};
  IntPolynomial r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

}  // namespace detail

/// U_0 = 1, U_1 = x, U_{k+1} = x U_k - U_{k-1}.
inline IntPolynomial chebyshev(int n) {
  if (n < 0) throw std::invalid_argument("chebyshev index must be nonnegative");
  IntPolynomial prev{1};
  if (n == 0) return prev;
  IntPolynomial cur{0, 1};
  for (int k = 1; k < n; ++k) {
    IntPolynomial next(cur.size() + 1);
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
    detail::trim(next);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

struct VerlindeAlgebra {
  int r = 0;
  TableAlgebra algebra;
};

/// Structure constants from the Clebsch-Gordan rule: for n <= n',
/// u_n u_n' = sum_{i=0}^{min(n, r-n'-1)} u_{n'-n+2i}; symmetric otherwise.
inline VerlindeAlgebra verlinde_make(int r) {
  if (r < 1) throw std::invalid_argument("Verlinde algebra needs r >= 1");
  std::vector<StructureConstant> cs;
  for (int a = 0; a < r; ++a) {
    for (int b = 0; b < r; ++b) {
      const int n = std::min(a, b);
      const int np = std::max(a, b);
      for (int i = 0; i <= std::min(n, r - np - 1); ++i) cs.push_back({a, b, np - n + 2 * i, 1});
    }
  }
  std::vector<BasisIndex> inv(static_cast<std::size_t>(r));
  std::vector<std::string> labels;
  for (int i = 0; i < r; ++i) {
    inv[static_cast<std::size_t>(i)] = i;
    labels.push_back("u" + std::to_string(i));
  }
  return {r, TableAlgebra(r, 0, std::move(inv), cs, std::move(labels))};
}

/// Independent construction: multiply U_a U_b in Z[x], reduce modulo the
/// monic U_r, and rewrite in the basis u_0..u_{r-1} by back substitution.
inline TableAlgebra verlinde_by_reduction(int r) {
  if (r < 1) throw std::invalid_argument("Verlinde algebra needs r >= 1");
  std::vector<IntPolynomial> u;
  for (int i = 0; i <= r; ++i) u.push_back(chebyshev(i));
  const IntPolynomial& modulus = u[static_cast<std::size_t>(r)];
  std::vector<StructureConstant> cs;
  for (int a = 0; a < r; ++a) {
    for (int b = 0; b < r; ++b) {
      IntPolynomial p = detail::poly_mul(u[static_cast<std::size_t>(a)], u[static_cast<std::size_t>(b)]);
      // reduce: leading coefficient of U_r is 1
      while (static_cast<int>(p.size()) > r) {
        const std::size_t shift = p.size() - modulus.size();
        const BigInt lead = p.back();
        for (std::size_t i = 0; i < modulus.size(); ++i) p[i + shift] -= lead * modulus[i];
        detail::trim(p);
      }
      // U_k is monic of degree k, so peel off from the top degree down
      for (int k = static_cast<int>(p.size()) - 1; k >= 0; --k) {
        if (static_cast<int>(p.size()) <= k) continue;
        const BigInt c = p[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        const auto& uk = u[static_cast<std::size_t>(k)];
        for (std::size_t i = 0; i < uk.size(); ++i) p[i] -= c * uk[i];
        detail::trim(p);
        cs.push_back({a, b, k, c.convert_to<std::int64_t>()});
      }
    }
  }
  std::vector<BasisIndex> inv(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) inv[static_cast<std::size_t>(i)] = i;
  return TableAlgebra(r, 0, std::move(inv), cs);
}

/// u_i * u_{r-1} == u_{r-1-i} for every i, and (u_{r-1})^2 == 1.
inline bool verlinde_w_verify(int r) {
  const auto v = verlinde_make(r);
  const auto& alg = v.algebra;
  const BasisIndex w = r - 1;
  for (BasisIndex i = 0; i < r; ++i)
    if (alg.mul_basis(i, w) != alg.basis_element(r - 1 - i)) return false;
  return alg.mul_basis(w, w) == alg.one();
}

/// The candidate homomorphism V_3 -> V_2 over Q(sqrt 2):
/// 1 -> 1', y -> (z' + 1') / sqrt 2, z -> z'.
struct PhiV3V2 {
  /// Element of V_2 over Q(sqrt 2) as (coefficient of 1', coefficient of z').
  using V2Element = std::array<QSqrt2, 2>;

  static V2Element mul(const V2Element& a, const V2Element& b) {
    // z'^2 = 1'
    return {a[0] * b[0] + a[1] * b[1], a[0] * b[1] + a[1] * b[0]};
  }
  static V2Element image(BasisIndex i) {
    const QSqrt2 inv_sqrt2 = QSqrt2(1) / QSqrt2::sqrt2();
    switch (i) {
      case 0: return {QSqrt2(1), QSqrt2(0)};
      case 1: return {inv_sqrt2, inv_sqrt2};
      case 2: return {QSqrt2(0), QSqrt2(1)};
      default: throw std::out_of_range("V_3 basis index");
    }
  }
  static V2Element image(const TAElement& a) {
    V2Element r{QSqrt2(0), QSqrt2(0)};
    for (const auto& [i, c] : a) {
      if (c.degree() && *c.degree() != 0) throw std::domain_error("phi is defined on integer combinations");
      const QSqrt2 k(Rational(c.constant_term()));
      const auto im = image(i);
      r[0] = r[0] + k * im[0];
      r[1] = r[1] + k * im[1];
    }
    return r;
  }
};

/// phi respects y^2 = 1 + z, yz = zy = y, z^2 = 1; checked as phi(ab) = phi(a)phi(b)
/// for every pair of basis elements of V_3.
inline bool phi_v3_v2_verify() {
  const auto v3 = verlinde_make(3).algebra;
  for (BasisIndex a = 0; a < 3; ++a)
    for (BasisIndex b = 0; b < 3; ++b)
      if (PhiV3V2::image(v3.mul_basis(a, b)) != PhiV3V2::mul(PhiV3V2::image(a), PhiV3V2::image(b))) return false;
  return true;
}

/// Recognises V_r up to equality of structure constants and involution.
inline bool is_verlinde(const TableAlgebra& alg) {
  return alg.identity() == 0 && alg == verlinde_make(alg.rank()).algebra;
}

}  // namespace hyperplanar
