// Finite Coxeter groups of types A, B, H and I_2(m), enumerated by
// breadth-first closure of an exact faithful representation.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace hyperplanar {

/// a + b*phi in Z[phi], phi^2 = phi + 1.
struct Zphi {
  std::int64_t a = 0;
  std::int64_t b = 0;
  friend Zphi operator+(Zphi x, Zphi y) { return {x.a + y.a, x.b + y.b}; }
  friend Zphi operator-(Zphi x, Zphi y) { return {x.a - y.a, x.b - y.b}; }
  friend Zphi operator*(Zphi x, Zphi y) { return {x.a * y.a + x.b * y.b, x.a * y.b + x.b * y.a + x.b * y.b}; }
  friend bool operator==(Zphi, Zphi) = default;
};

enum class CoxeterType { A, B, H, I };

inline std::string to_string(CoxeterType t) {
  switch (t) {
    case CoxeterType::A: return "A";
    case CoxeterType::B: return "B";
    case CoxeterType::H: return "H";
    default: return "I";
  }
}

inline CoxeterType parse_coxeter_type(const std::string& s) {
  if (s == "A") return CoxeterType::A;
  if (s == "B") return CoxeterType::B;
  if (s == "H") return CoxeterType::H;
  if (s == "I") return CoxeterType::I;
  throw std::invalid_argument("unknown Coxeter type `" + s + "`");
}

using Element = int;     // index into the enumerated element list
using Generator = int;   // 0-based; displayed as s1, s2, ...
using Word = std::vector<Generator>;

struct CoxeterOptions {
  bool allow_h4 = false;
};

class CoxeterGroup {
 public:
  /// Type and rank; for type I the rank is 2 and `m` is the bond.
  CoxeterGroup(CoxeterType type, int rank, int m = 0, CoxeterOptions opt = {}) : type_(type), rank_(rank) {
    build_bonds(m, opt);
    enumerate();
  }

  CoxeterType type() const { return type_; }
  int rank() const { return rank_; }
  /// Display name such as A3, B2, H3, I2(5).
  std::string name() const {
    if (type_ == CoxeterType::I) return "I2(" + std::to_string(bond(0, 1)) + ")";
    return to_string(type_) + std::to_string(rank_);
  }
  int bond(Generator s, Generator t) const { return bonds_[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)]; }
  int highest_bond() const {
    int m = 1;
    for (int s = 0; s < rank_; ++s)
      for (int t = 0; t < rank_; ++t) m = std::max(m, s == t ? 1 : bond(s, t));
    return m;
  }

  int size() const { return static_cast<int>(length_.size()); }
  Element identity() const { return 0; }
  Element longest() const { return size() - 1; }
  int length(Element w) const { return length_[static_cast<std::size_t>(w)]; }
  Element left_mul(Generator s, Element w) const { return lmul_[static_cast<std::size_t>(w)][static_cast<std::size_t>(s)]; }
  Element right_mul(Element w, Generator s) const { return rmul_[static_cast<std::size_t>(w)][static_cast<std::size_t>(s)]; }
  Element generator(Generator s) const { return left_mul(s, identity()); }
  bool is_left_descent(Generator s, Element w) const { return length(left_mul(s, w)) < length(w); }
  bool is_right_descent(Element w, Generator s) const { return length(right_mul(w, s)) < length(w); }
  std::vector<Generator> left_descents(Element w) const {
    std::vector<Generator> d;
    for (Generator s = 0; s < rank_; ++s)
      if (is_left_descent(s, w)) d.push_back(s);
    return d;
  }
  std::vector<Generator> right_descents(Element w) const {
    std::vector<Generator> d;
    for (Generator s = 0; s < rank_; ++s)
      if (is_right_descent(w, s)) d.push_back(s);
    return d;
  }
  /// Lexicographically least reduced word.
  const Word& normal_form(Element w) const { return nf_[static_cast<std::size_t>(w)]; }
  Element inverse(Element w) const { return inverse_[static_cast<std::size_t>(w)]; }
  Element multiply(Element x, Element y) const {
    for (Generator s : normal_form(y)) x = right_mul(x, s);
    return x;
  }
  /// Product of an arbitrary (not necessarily reduced) word.
  Element from_word(const Word& w) const {
    Element x = identity();
    for (Generator s : w) {
      if (s < 0 || s >= rank_) throw std::out_of_range("generator out of range");
      x = right_mul(x, s);
    }
    return x;
  }
  /// Letters occurring in any reduced word.
  std::set<Generator> content(Element w) const {
    const auto& nf = normal_form(w);
    return {nf.begin(), nf.end()};
  }
  std::string element_name(Element w) const {
    if (w == identity()) return "e";
    std::string s;
    for (Generator g : normal_form(w)) s += "s" + std::to_string(g + 1);
    return s;
  }
  /// Longest element of the parabolic subgroup <s, t>.
  Element dihedral_longest(Generator s, Generator t) const {
    Word w;
    for (int i = 0; i < bond(s, t); ++i) w.push_back(i % 2 == 0 ? s : t);
    return from_word(w);
  }
  /// Bruhat order via the subword property on normal forms.
  bool bruhat_leq(Element x, Element w) const {
    if (length(x) > length(w)) return false;
    if (x == w) return true;
    if (w == identity()) return false;
    const Generator s = normal_form(w).front();
    const Element sw = left_mul(s, w);
    const Element sx = left_mul(s, x);
    // s in D_L(w): x <= w iff min(x, sx) <= sw
    return bruhat_leq(length(sx) < length(x) ? sx : x, sw);
  }

  /// Classical order of the group.
  static std::uint64_t classical_order(CoxeterType type, int rank, int m = 0) {
    std::uint64_t f = 1;
    switch (type) {
      case CoxeterType::A:
        for (int i = 2; i <= rank + 1; ++i) f *= static_cast<std::uint64_t>(i);
        return f;
      case CoxeterType::B:
        for (int i = 1; i <= rank; ++i) f *= 2 * static_cast<std::uint64_t>(i);
        return f;
      case CoxeterType::H:
        return rank == 2 ? 10 : rank == 3 ? 120 : 14400;
      default:
        return 2 * static_cast<std::uint64_t>(m);
    }
  }

 private:
  void build_bonds(int m, const CoxeterOptions& opt) {
    switch (type_) {
      case CoxeterType::A:
        if (rank_ < 1 || rank_ > 4) throw std::invalid_argument("type A supported for rank 1..4");
        break;
      case CoxeterType::B:
        if (rank_ < 2 || rank_ > 3) throw std::invalid_argument("type B supported for rank 2..3");
        break;
      case CoxeterType::H:
        if (rank_ == 4 && !opt.allow_h4) throw std::invalid_argument("H4 requires the opt-in flag");
        if (rank_ < 3 || rank_ > 4) throw std::invalid_argument("type H supported for rank 3 (4 opt-in)");
        break;
      case CoxeterType::I:
        if (rank_ != 2) throw std::invalid_argument("type I has rank 2");
        if (m < 3 || m > 12) throw std::invalid_argument("I2(m) supported for 3 <= m <= 12");
        break;
    }
    bonds_.assign(static_cast<std::size_t>(rank_), std::vector<int>(static_cast<std::size_t>(rank_), 2));
    for (int s = 0; s < rank_; ++s) bonds_[static_cast<std::size_t>(s)][static_cast<std::size_t>(s)] = 1;
    for (int s = 0; s + 1 < rank_; ++s) {
      int b = 3;
      if (s == 0 && type_ == CoxeterType::B) b = 4;
      if (s == 0 && type_ == CoxeterType::H) b = 5;
      if (type_ == CoxeterType::I) b = m;
      bonds_[static_cast<std::size_t>(s)][static_cast<std::size_t>(s + 1)] = b;
      bonds_[static_cast<std::size_t>(s + 1)][static_cast<std::size_t>(s)] = b;
    }
  }

  // Generator actions on a flattened representation vector.
  std::vector<std::function<std::vector<std::int64_t>(const std::vector<std::int64_t>&, bool)>> representation(
      std::vector<std::int64_t>& identity_key) const {
    std::vector<std::function<std::vector<std::int64_t>(const std::vector<std::int64_t>&, bool)>> gens;
    if (type_ == CoxeterType::I) {
      // reflections of the regular m-gon acting on Z/m: s1: k -> -k, s2: k -> 1 - k
      const int m = bond(0, 1);
      identity_key.resize(static_cast<std::size_t>(m));
      for (int k = 0; k < m; ++k) identity_key[static_cast<std::size_t>(k)] = k;
      for (int g = 0; g < 2; ++g) {
        gens.push_back([m, g](const std::vector<std::int64_t>& p, bool left) {
          auto refl = [m, g](std::int64_t k) { return ((g == 0 ? -k : 1 - k) % m + m) % m; };
          std::vector<std::int64_t> out(p.size());
          for (std::size_t k = 0; k < p.size(); ++k) {
            // left: refl after p; right: p after refl
            out[k] = left ? refl(p[k]) : p[static_cast<std::size_t>(refl(static_cast<std::int64_t>(k)))];
          }
          return out;
        });
      }
      return gens;
    }
    // Cartan-type matrices: s(alpha_t) = alpha_t - a(s, t) alpha_s over Z[phi]
    const int n = rank_;
    std::vector<std::vector<Zphi>> cartan(static_cast<std::size_t>(n), std::vector<Zphi>(static_cast<std::size_t>(n)));
    for (int s = 0; s < n; ++s) {
      for (int t = 0; t < n; ++t) {
        Zphi& c = cartan[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)];
        const int b = bond(s, t);
        if (s == t) c = {2, 0};
        else if (b == 3) c = {-1, 0};
        else if (b == 4) c = (s == 0) ? Zphi{-2, 0} : Zphi{-1, 0};
        else if (b == 5) c = {0, -1};
      }
    }
    std::vector<std::vector<std::vector<Zphi>>> mats;
    for (int s = 0; s < n; ++s) {
      // column t holds the image of alpha_t
      std::vector<std::vector<Zphi>> mat(static_cast<std::size_t>(n), std::vector<Zphi>(static_cast<std::size_t>(n)));
      for (int t = 0; t < n; ++t) {
        mat[static_cast<std::size_t>(t)][static_cast<std::size_t>(t)] = {1, 0};
        mat[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)] =
            mat[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)] - cartan[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)];
      }
      mats.push_back(std::move(mat));
    }
    identity_key.assign(static_cast<std::size_t>(2 * n * n), 0);
    for (int i = 0; i < n; ++i) identity_key[static_cast<std::size_t>(2 * (i * n + i))] = 1;
    for (int s = 0; s < n; ++s) {
      gens.push_back([n, mat = mats[static_cast<std::size_t>(s)]](const std::vector<std::int64_t>& key, bool left) {
        auto at = [&](int i, int j) {
          return Zphi{key[static_cast<std::size_t>(2 * (i * n + j))], key[static_cast<std::size_t>(2 * (i * n + j) + 1)]};
        };
        std::vector<std::int64_t> out(key.size());
        for (int i = 0; i < n; ++i) {
          for (int j = 0; j < n; ++j) {
            Zphi acc;
            for (int k = 0; k < n; ++k) {
              acc = acc + (left ? mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] * at(k, j)
                                : at(i, k) * mat[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]);
            }
            out[static_cast<std::size_t>(2 * (i * n + j))] = acc.a;
            out[static_cast<std::size_t>(2 * (i * n + j) + 1)] = acc.b;
          }
        }
        return out;
      });
    }
    return gens;
  }

  void enumerate() {
    std::vector<std::int64_t> id;
    const auto gens = representation(id);
    std::map<std::vector<std::int64_t>, int> index;
    std::vector<std::vector<std::int64_t>> keys{id};
    std::vector<int> len{0};
    index.emplace(id, 0);
    std::vector<std::vector<int>> lm;
    std::vector<std::vector<int>> rm;
    for (std::size_t i = 0; i < keys.size(); ++i) {
      lm.emplace_back(static_cast<std::size_t>(rank_));
      rm.emplace_back(static_cast<std::size_t>(rank_));
      for (int s = 0; s < rank_; ++s) {
        for (bool left : {true, false}) {
          auto k = gens[static_cast<std::size_t>(s)](keys[i], left);
          auto [it, fresh] = index.emplace(k, static_cast<int>(keys.size()));
          if (fresh) {
            keys.push_back(std::move(k));
            len.push_back(len[i] + 1);
          }
          (left ? lm : rm)[i][static_cast<std::size_t>(s)] = it->second;
        }
      }
      if (keys.size() > 20000) throw std::logic_error("Coxeter enumeration did not close");
    }
    const std::size_t n = keys.size();
    // normal forms by increasing BFS length
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return len[x] < len[y]; });
    std::vector<Word> nf(n);
    for (std::size_t i : order) {
      if (len[i] == 0) continue;
      for (int s = 0; s < rank_; ++s) {
        const auto sw = static_cast<std::size_t>(lm[i][static_cast<std::size_t>(s)]);
        if (len[sw] < len[i]) {
          nf[i] = {s};
          nf[i].insert(nf[i].end(), nf[sw].begin(), nf[sw].end());
          break;
        }
      }
    }
    // reindex by (length, normal form)
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      return std::tie(len[x], nf[x]) < std::tie(len[y], nf[y]);
    });
    std::vector<int> pos(n);
    for (std::size_t k = 0; k < n; ++k) pos[order[k]] = static_cast<int>(k);
    length_.resize(n);
    nf_.resize(n);
    lmul_.assign(n, std::vector<Element>(static_cast<std::size_t>(rank_)));
    rmul_.assign(n, std::vector<Element>(static_cast<std::size_t>(rank_)));
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t old = order[k];
      length_[k] = len[old];
      nf_[k] = nf[old];
      for (int s = 0; s < rank_; ++s) {
        lmul_[k][static_cast<std::size_t>(s)] = pos[static_cast<std::size_t>(lm[old][static_cast<std::size_t>(s)])];
        rmul_[k][static_cast<std::size_t>(s)] = pos[static_cast<std::size_t>(rm[old][static_cast<std::size_t>(s)])];
      }
    }
    inverse_.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
      Element x = identity();
      const auto& w = nf_[k];
      for (auto it = w.rbegin(); it != w.rend(); ++it) x = right_mul(x, *it);
      inverse_[k] = x;
    }
  }

  CoxeterType type_;
  int rank_;
  std::vector<std::vector<int>> bonds_;
  std::vector<int> length_;
  std::vector<Word> nf_;
  std::vector<std::vector<Element>> lmul_;
  std::vector<std::vector<Element>> rmul_;
  std::vector<Element> inverse_;
};

/// w is complex when some reduced word contains an alternating factor
/// s t s ... of length m(s, t) >= 3. Computed by length: w is complex iff two
/// right descents of w generate such a dihedral subgroup, or w s is complex
/// for some right descent s.
inline std::vector<char> complex_elements(const CoxeterGroup& g) {
  std::vector<char> cx(static_cast<std::size_t>(g.size()), 0);
  for (Element w = 0; w < g.size(); ++w) {
    const auto d = g.right_descents(w);
    bool c = false;
    for (std::size_t i = 0; i < d.size() && !c; ++i)
      for (std::size_t j = i + 1; j < d.size() && !c; ++j)
        if (g.bond(d[i], d[j]) >= 3) c = true;
    for (std::size_t i = 0; i < d.size() && !c; ++i)
      if (cx[static_cast<std::size_t>(g.right_mul(w, d[i]))]) c = true;
    cx[static_cast<std::size_t>(w)] = c;
  }
  return cx;
}

/// Fully commutative elements in group order.
inline std::vector<Element> fully_commutative(const CoxeterGroup& g) {
  const auto cx = complex_elements(g);
  std::vector<Element> out;
  for (Element w = 0; w < g.size(); ++w)
    if (!cx[static_cast<std::size_t>(w)]) out.push_back(w);
  return out;
}

}  // namespace hyperplanar
