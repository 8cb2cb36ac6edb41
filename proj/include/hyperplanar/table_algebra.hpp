// Normalized table algebras (discrete hypergroups): structure constants,
// axiom checks, trace, support, tensor products and a plain-text file format.

#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hyperplanar/coeff.hpp"
#include "hyperplanar/linear_combination.hpp"

namespace hyperplanar {

using BasisIndex = int;
/// Element of a table algebra, expanded in its distinguished basis.
using TAElement = LinearCombination<BasisIndex>;

/// One nonzero structure constant kappa(b_m, b_i b_j) = value.
struct StructureConstant {
  BasisIndex i = 0;
  BasisIndex j = 0;
  BasisIndex m = 0;
  std::int64_t value = 0;
};

class TableAlgebra {
 public:
  using ProductTerm = std::pair<BasisIndex, std::int64_t>;

  TableAlgebra() = default;

  /// Builds the algebra from its nonzero structure constants. Repeated
  /// (i, j, m) entries are summed. Axioms are not checked here.
  TableAlgebra(int rank, BasisIndex identity, std::vector<BasisIndex> involution,
               const std::vector<StructureConstant>& constants, std::vector<std::string> labels = {})
      : rank_(rank), identity_(identity), involution_(std::move(involution)), labels_(std::move(labels)) {
    if (rank_ <= 0) throw std::invalid_argument("table algebra rank must be positive");
    if (identity_ < 0 || identity_ >= rank_) throw std::out_of_range("identity index out of range");
    if (static_cast<int>(involution_.size()) != rank_)
      throw std::invalid_argument("involution must list one image per basis element");
    for (auto p : involution_)
      if (p < 0 || p >= rank_) throw std::out_of_range("involution image out of range");
    if (!labels_.empty() && static_cast<int>(labels_.size()) != rank_)
      throw std::invalid_argument("labels must name every basis element");
    products_.assign(static_cast<std::size_t>(rank_) * static_cast<std::size_t>(rank_), {});
    for (const auto& c : constants) {
      check_index(c.i);
      check_index(c.j);
      check_index(c.m);
      if (c.value == 0) continue;
      auto& row = products_[slot(c.i, c.j)];
      auto it = std::lower_bound(row.begin(), row.end(), c.m,
                                 [](const ProductTerm& t, BasisIndex m) { return t.first < m; });
      if (it != row.end() && it->first == c.m) {
        it->second += c.value;
        if (it->second == 0) row.erase(it);
      } else {
        row.insert(it, {c.m, c.value});
      }
    }
  }

  int rank() const { return rank_; }
  BasisIndex identity() const { return identity_; }
  BasisIndex bar(BasisIndex i) const {
    check_index(i);
    return involution_[static_cast<std::size_t>(i)];
  }
  const std::vector<BasisIndex>& involution() const { return involution_; }
  bool has_labels() const { return !labels_.empty(); }
  std::string label(BasisIndex i) const {
    check_index(i);
    return labels_.empty() ? "b" + std::to_string(i) : labels_[static_cast<std::size_t>(i)];
  }

  /// Product b_i b_j as (m, kappa) pairs sorted by m.
  const std::vector<ProductTerm>& product(BasisIndex i, BasisIndex j) const {
    check_index(i);
    check_index(j);
    return products_[slot(i, j)];
  }
  /// kappa(b_m, b_i b_j)
  std::int64_t kappa(BasisIndex m, BasisIndex i, BasisIndex j) const {
    for (const auto& [k, c] : product(i, j))
      if (k == m) return c;
    return 0;
  }
  std::vector<StructureConstant> structure_constants() const {
    std::vector<StructureConstant> out;
    for (BasisIndex i = 0; i < rank_; ++i)
      for (BasisIndex j = 0; j < rank_; ++j)
        for (const auto& [m, c] : products_[slot(i, j)]) out.push_back({i, j, m, c});
    return out;
  }

  TAElement basis_element(BasisIndex i) const {
    check_index(i);
    return TAElement(i);
  }
  TAElement one() const { return TAElement(identity_); }

  TAElement mul(const TAElement& a, const TAElement& b) const {
    TAElement r;
    for (const auto& [i, ca] : a) {
      for (const auto& [j, cb] : b) {
        const LaurentInt cab = ca * cb;
        for (const auto& [m, k] : product(i, j)) r.add(m, cab * LaurentInt(k));
      }
    }
    return r;
  }
  TAElement mul_basis(BasisIndex i, BasisIndex j) const {
    TAElement r;
    for (const auto& [m, k] : product(i, j)) r.add(m, LaurentInt(k));
    return r;
  }
  /// The anti-automorphism extended linearly (coefficients untouched).
  TAElement bar(const TAElement& a) const {
    TAElement r;
    for (const auto& [i, c] : a) r.add(bar(i), c);
    return r;
  }
  /// t(a) = kappa(1, a).
  LaurentInt trace(const TAElement& a) const { return a.coefficient(identity_); }
  std::set<BasisIndex> support(const TAElement& a) const {
    std::set<BasisIndex> s;
    for (const auto& [i, c] : a) s.insert(i);
    return s;
  }

  friend bool operator==(const TableAlgebra& a, const TableAlgebra& b) {
    return a.rank_ == b.rank_ && a.identity_ == b.identity_ && a.involution_ == b.involution_ &&
           a.products_ == b.products_;
  }
  friend bool operator!=(const TableAlgebra& a, const TableAlgebra& b) { return !(a == b); }

  /// `rank k identity i`, `inv: p0 ... p(k-1)`, then `i j m c` lines in
  /// lexicographic (i, j, m) order.
  std::string to_text() const {
    std::ostringstream os;
    os << "rank " << rank_ << " identity " << identity_ << "\n";
    os << "inv:";
    for (auto p : involution_) os << ' ' << p;
    os << "\n";
    for (const auto& c : structure_constants()) os << c.i << ' ' << c.j << ' ' << c.m << ' ' << c.value << "\n";
    return os.str();
  }
  static TableAlgebra parse(std::istream& in);
  static TableAlgebra parse(const std::string& text) {
    std::istringstream is(text);
    return parse(is);
  }

 private:
  std::size_t slot(BasisIndex i, BasisIndex j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(rank_) + static_cast<std::size_t>(j);
  }
  void check_index(BasisIndex i) const {
    if (i < 0 || i >= rank_) throw std::out_of_range("basis index " + std::to_string(i) + " out of range");
  }

  int rank_ = 0;
  BasisIndex identity_ = 0;
  std::vector<BasisIndex> involution_;
  std::vector<std::string> labels_;
  std::vector<std::vector<ProductTerm>> products_;
};

inline TableAlgebra TableAlgebra::parse(std::istream& in) {
  std::string line;
  std::optional<int> rank;
  std::optional<BasisIndex> identity;
  std::optional<std::vector<BasisIndex>> inv;
  std::vector<StructureConstant> constants;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    auto fail = [&](const std::string& why) {
      throw ParseError("table algebra line " + std::to_string(lineno) + ": " + why);
    };
    if (head == "rank") {
      int k = 0;
      std::string word;
      BasisIndex id = 0;
      if (!(ls >> k >> word >> id) || word != "identity") fail("expected `rank k identity i`");
      rank = k;
      identity = id;
    } else if (head == "inv:") {
      std::vector<BasisIndex> p;
      BasisIndex x = 0;
      while (ls >> x) p.push_back(x);
      inv = std::move(p);
    } else {
      if (!rank || !inv) fail("structure constants before header");
      StructureConstant c;
      std::istringstream row(line);
      long long value = 0;
      if (!(row >> c.i >> c.j >> c.m >> value)) fail("expected `i j m c`");
      std::string extra;
      if (row >> extra) fail("trailing tokens");
      c.value = value;
      constants.push_back(c);
    }
  }
  if (!rank || !identity || !inv) throw ParseError("table algebra: missing header or involution line");
  try {
    return TableAlgebra(*rank, *identity, *inv, constants);
  } catch (const std::logic_error& e) {
    throw ParseError(std::string("table algebra: ") + e.what());
  }
}

/// Witness of a violated axiom: the failing index triple.
struct AxiomWitness {
  std::string axiom;
  BasisIndex i = 0;
  BasisIndex j = 0;
  BasisIndex m = 0;
};

struct TableCheckReport {
  bool t1 = true;
  bool t2 = true;
  bool t3_normalized = true;
  bool identity = true;
  bool associativity = true;
  std::vector<AxiomWitness> witnesses;

  bool ok() const { return t1 && t2 && t3_normalized && identity && associativity; }
};

/// Checks (T1), (T2), normalized (T3), the identity axiom and associativity
/// over all index triples. Every failure is recorded; nothing aborts.
inline TableCheckReport ta_check(const TableAlgebra& alg, std::size_t max_witnesses = 16) {
  TableCheckReport rep;
  const int k = alg.rank();
  auto fail = [&](bool& flag, const char* name, BasisIndex i, BasisIndex j, BasisIndex m) {
    flag = false;
    if (rep.witnesses.size() < max_witnesses) rep.witnesses.push_back({name, i, j, m});
  };

  for (BasisIndex i = 0; i < k; ++i) {
    const BasisIndex ib = alg.bar(i);
    if (alg.bar(ib) != i) fail(rep.t2, "T2", i, ib, alg.bar(ib));
  }
  if (alg.bar(alg.identity()) != alg.identity()) fail(rep.t2, "T2", alg.identity(), 0, 0);

  for (BasisIndex i = 0; i < k; ++i) {
    for (BasisIndex j = 0; j < k; ++j) {
      for (BasisIndex m = 0; m < k; ++m) {
        const auto c = alg.kappa(m, i, j);
        if (c < 0) fail(rep.t1, "T1", i, j, m);
        // bar is an anti-automorphism: kappa(m, ij) = kappa(m-bar, j-bar i-bar)
        if (c != alg.kappa(alg.bar(m), alg.bar(j), alg.bar(i))) fail(rep.t2, "T2", i, j, m);
        if (c != alg.kappa(i, m, alg.bar(j))) fail(rep.t3_normalized, "T3", i, j, m);
      }
    }
  }

  const BasisIndex one = alg.identity();
  for (BasisIndex j = 0; j < k; ++j) {
    for (BasisIndex m = 0; m < k; ++m) {
      const std::int64_t want = m == j ? 1 : 0;
      if (alg.kappa(m, one, j) != want || alg.kappa(m, j, one) != want) fail(rep.identity, "identity", one, j, m);
    }
  }

  // (b_i b_j) b_l == b_i (b_j b_l), compared as dense integer vectors.
  std::vector<std::int64_t> left(static_cast<std::size_t>(k));
  std::vector<std::int64_t> right(static_cast<std::size_t>(k));
  for (BasisIndex i = 0; i < k; ++i) {
    for (BasisIndex j = 0; j < k; ++j) {
      for (BasisIndex l = 0; l < k; ++l) {
        std::fill(left.begin(), left.end(), 0);
        std::fill(right.begin(), right.end(), 0);
        for (const auto& [p, c1] : alg.product(i, j))
          for (const auto& [m, c2] : alg.product(p, l)) left[static_cast<std::size_t>(m)] += c1 * c2;
        for (const auto& [p, c1] : alg.product(j, l))
          for (const auto& [m, c2] : alg.product(i, p)) right[static_cast<std::size_t>(m)] += c1 * c2;
        if (left != right) fail(rep.associativity, "associativity", i, j, l);
      }
    }
  }
  return rep;
}

/// Kronecker product; basis pair (i1, i2) gets index i1 * rank(a2) + i2.
inline TableAlgebra ta_tensor(const TableAlgebra& a1, const TableAlgebra& a2) {
  const int r1 = a1.rank();
  const int r2 = a2.rank();
  auto idx = [r2](BasisIndex x, BasisIndex y) { return x * r2 + y; };
  std::vector<BasisIndex> inv(static_cast<std::size_t>(r1 * r2));
  for (BasisIndex x = 0; x < r1; ++x)
    for (BasisIndex y = 0; y < r2; ++y) inv[static_cast<std::size_t>(idx(x, y))] = idx(a1.bar(x), a2.bar(y));
  std::vector<StructureConstant> cs;
  for (BasisIndex i1 = 0; i1 < r1; ++i1)
    for (BasisIndex j1 = 0; j1 < r1; ++j1)
      for (const auto& [m1, c1] : a1.product(i1, j1))
        for (BasisIndex i2 = 0; i2 < r2; ++i2)
          for (BasisIndex j2 = 0; j2 < r2; ++j2)
            for (const auto& [m2, c2] : a2.product(i2, j2))
              cs.push_back({idx(i1, i2), idx(j1, j2), idx(m1, m2), c1 * c2});
  std::vector<std::string> labels;
  if (a1.has_labels() || a2.has_labels()) {
    for (BasisIndex x = 0; x < r1; ++x)
      for (BasisIndex y = 0; y < r2; ++y) labels.push_back(a1.label(x) + "(x)" + a2.label(y));
  }
  return TableAlgebra(r1 * r2, idx(a1.identity(), a2.identity()), std::move(inv), cs, std::move(labels));
}

/// The rank-1 algebra Z with basis {1}.
inline TableAlgebra trivial_table_algebra() { return TableAlgebra(1, 0, {0}, {{0, 0, 0, 1}}); }

/// k-fold tensor power, ((A (x) A) (x) A) ...; the 0-th power is trivial.
/// Index of (i_1, ..., i_k) is the base-rank number i_1 i_2 ... i_k.
inline TableAlgebra tensor_power(const TableAlgebra& a, int k) {
  TableAlgebra r = trivial_table_algebra();
  for (int i = 0; i < k; ++i) r = i == 0 ? a : ta_tensor(r, a);
  return r;
}

}  // namespace hyperplanar
