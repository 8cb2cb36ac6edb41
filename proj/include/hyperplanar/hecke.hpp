// Iwahori-Hecke algebra of a finite Coxeter group in the T-basis, its
// Kazhdan-Lusztig basis, and the generalized Temperley-Lieb quotient with
// its t-basis, bar involution and canonical basis.

#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hyperplanar/coeff.hpp"
#include "hyperplanar/coxeter.hpp"
#include "hyperplanar/linear_combination.hpp"

namespace hyperplanar {

/// Sparse combination of T_w, q = v^2.
using HeckeElement = LinearCombination<Element>;
/// Sparse combination of t_w, w fully commutative.
using TLElement = LinearCombination<Element>;

inline LaurentInt hecke_q() { return LaurentInt::monomial(2); }

class HeckeAlgebra {
 public:
  explicit HeckeAlgebra(CoxeterGroup g) : g_(std::move(g)) {}

  const CoxeterGroup& group() const { return g_; }
  HeckeElement T(Element w) const { return HeckeElement(w); }
  HeckeElement one() const { return T(g_.identity()); }

  HeckeElement left_mul_T(Generator s, const HeckeElement& x) const {
    HeckeElement out;
    const LaurentInt q = hecke_q();
    const LaurentInt qm1 = q - LaurentInt(1);
    for (const auto& [w, c] : x) {
      const Element sw = g_.left_mul(s, w);
      if (g_.length(sw) > g_.length(w)) {
        out.add(sw, c);
      } else {
        out.add(sw, q * c);
        out.add(w, qm1 * c);
      }
    }
    return out;
  }
  HeckeElement right_mul_T(const HeckeElement& x, Generator s) const {
    HeckeElement out;
    const LaurentInt q = hecke_q();
    const LaurentInt qm1 = q - LaurentInt(1);
    for (const auto& [w, c] : x) {
      const Element ws = g_.right_mul(w, s);
      if (g_.length(ws) > g_.length(w)) {
        out.add(ws, c);
      } else {
        out.add(ws, q * c);
        out.add(w, qm1 * c);
      }
    }
    return out;
  }
  /// T_w x for a basis element.
  HeckeElement left_mul_basis(Element w, HeckeElement x) const {
    const Word& word = g_.normal_form(w);
    for (auto it = word.rbegin(); it != word.rend(); ++it) x = left_mul_T(*it, x);
    return x;
  }
  HeckeElement mul(const HeckeElement& x, const HeckeElement& y) const {
    HeckeElement out;
    for (const auto& [w, c] : x) out.add(left_mul_basis(w, y), c);
    return out;
  }

  /// bar(T_w) = (T_{w^-1})^-1, with bar(T_s) = q^-1 T_s + (q^-1 - 1) T_1.
  const HeckeElement& bar_T(Element w) const {
    if (bar_T_.empty()) {
      bar_T_.resize(static_cast<std::size_t>(g_.size()));
      bar_T_[0] = one();
      const LaurentInt qi = LaurentInt::monomial(-2);
      for (Element y = 1; y < g_.size(); ++y) {
        const Generator s = g_.normal_form(y).front();
        const HeckeElement& rest = bar_T_[static_cast<std::size_t>(g_.left_mul(s, y))];
        HeckeElement out = left_mul_T(s, rest).scaled(qi);
        out.add(rest, qi - LaurentInt(1));
        bar_T_[static_cast<std::size_t>(y)] = std::move(out);
      }
    }
    return bar_T_[static_cast<std::size_t>(w)];
  }
  HeckeElement bar(const HeckeElement& x) const {
    HeckeElement out;
    for (const auto& [w, c] : x) out.add(bar_T(w), c.bar());
    return out;
  }
  /// Anti-automorphism T_w -> T_{w^-1}.
  HeckeElement star(const HeckeElement& x) const {
    return x.map_keys([this](Element w) { return g_.inverse(w); });
  }

  /// C'_w = v^-l(w) sum_y P_{y,w}(q) T_y, all w.
  const std::vector<HeckeElement>& kl_basis() const {
    if (kl_.empty()) build_kl();
    return kl_;
  }
  const HeckeElement& kl(Element w) const { return kl_basis()[static_cast<std::size_t>(w)]; }
  /// P_{y,w} with the exponent of the returned polynomial counting powers of q.
  LaurentInt kl_polynomial(Element y, Element w) const {
    const LaurentInt c = kl(w).coefficient(y).shifted(g_.length(w));
    LaurentInt p;
    for (int k = 0; k <= g_.length(w); ++k) {
      if (c.coefficient(2 * k) != 0) p += LaurentInt::monomial(k, c.coefficient(2 * k));
    }
    return p;
  }
  /// Leading coefficient mu(z, w) of P_{z,w}.
  BigInt mu(Element z, Element w) const {
    return kl(w).coefficient(z).coefficient(-g_.length(z) - 1);
  }
  /// Coordinates of x in the Kazhdan-Lusztig basis.
  LinearCombination<Element> expand_in_kl(HeckeElement x) const {
    LinearCombination<Element> out;
    while (!x.is_zero()) {
      const Element y = x.terms().rbegin()->first;
      const LaurentInt k = x.terms().rbegin()->second.shifted(g_.length(y));
      out.add(y, k);
      x.add(kl(y), -k);
    }
    return out;
  }

  /// C'_s X.
  HeckeElement kl_generator_left(Generator s, const HeckeElement& x) const {
    HeckeElement out = x;
    out.add(left_mul_T(s, x));
    return out.scaled(LaurentInt::monomial(-1));
  }
  HeckeElement kl_generator_right(const HeckeElement& x, Generator s) const {
    HeckeElement out = x;
    out.add(right_mul_T(x, s));
    return out.scaled(LaurentInt::monomial(-1));
  }

 private:
  void build_kl() const {
    const auto n = static_cast<std::size_t>(g_.size());
    kl_.assign(n, HeckeElement());
    kl_[0] = one();
    for (Element w = 1; w < g_.size(); ++w) {
      const Generator s = g_.normal_form(w).front();
      const Element y = g_.left_mul(s, w);
      HeckeElement c = kl_generator_left(s, kl_[static_cast<std::size_t>(y)]);
      // C'_s C'_y = C'_w + sum_{z < y, sz < z} mu(z, y) C'_z
      for (const auto& [z, coeff] : kl_[static_cast<std::size_t>(y)]) {
        if (z == y || !g_.is_left_descent(s, z)) continue;
        const BigInt m = coeff.coefficient(-g_.length(z) - 1);
        if (m != 0) c.add(kl_[static_cast<std::size_t>(z)], LaurentInt(-m));
      }
      kl_[static_cast<std::size_t>(w)] = std::move(c);
    }
  }

  CoxeterGroup g_;
  mutable std::vector<HeckeElement> bar_T_;
  mutable std::vector<HeckeElement> kl_;
};

/// Degree bounds and bar invariance of the computed Kazhdan-Lusztig basis.
inline bool kl_basis_valid(const HeckeAlgebra& h, std::string* witness = nullptr) {
  const auto& g = h.group();
  for (Element w = 0; w < g.size(); ++w) {
    const HeckeElement& c = h.kl(w);
    auto fail = [&](const std::string& why) {
      if (witness) *witness = g.element_name(w) + ": " + why;
      return false;
    };
    if (h.bar(c) != c) return fail("not bar invariant");
    if (c.coefficient(w) != LaurentInt::monomial(-g.length(w))) return fail("leading term");
    for (const auto& [y, coeff] : c) {
      if (y == w) continue;
      if (!g.bruhat_leq(y, w)) return fail("support outside the Bruhat interval");
      // v^-l(w) P(q) with deg_q P <= (l(w) - l(y) - 1) / 2, i.e. coefficients in v^-l(y)-1 A^-
      const auto top = coeff.degree();
      if (top && *top > -g.length(y) - 1) return fail("degree bound at " + g.element_name(y));
    }
  }
  return true;
}

class TLContext {
 public:
  explicit TLContext(CoxeterGroup g) : h_(std::move(g)) {
    const auto& grp = h_.group();
    complex_ = complex_elements(grp);
    wc_index_.assign(static_cast<std::size_t>(grp.size()), -1);
    for (Element w = 0; w < grp.size(); ++w) {
      if (!complex_[static_cast<std::size_t>(w)]) {
        wc_index_[static_cast<std::size_t>(w)] = static_cast<int>(wc_.size());
        wc_.push_back(w);
      }
    }
    verify_ideal();
    build_theta();
  }

  const CoxeterGroup& group() const { return h_.group(); }
  const HeckeAlgebra& hecke() const { return h_; }
  const std::vector<Element>& wc() const { return wc_; }
  bool is_complex(Element w) const { return complex_[static_cast<std::size_t>(w)]; }
  int wc_position(Element w) const { return wc_index_[static_cast<std::size_t>(w)]; }
  int rank() const { return static_cast<int>(wc_.size()); }

  /// Image of T_y in the quotient.
  const TLElement& theta_T(Element y) const { return theta_T_[static_cast<std::size_t>(y)]; }
  TLElement theta(const HeckeElement& x) const {
    TLElement out;
    for (const auto& [y, c] : x) out.add(theta_T(y), c);
    return out;
  }
  TLElement t(Element w) const {
    if (is_complex(w)) throw std::out_of_range("t_w needs a fully commutative w");
    return TLElement(w);
  }
  TLElement one() const { return t(group().identity()); }
  /// b_s = v^-1 (t_1 + t_s).
  TLElement b(Generator s) const { return theta(h_.kl(group().generator(s))); }

  TLElement left_mul_t(Generator s, const TLElement& x) const {
    const auto& g = group();
    TLElement out;
    const LaurentInt q = hecke_q();
    const LaurentInt qm1 = q - LaurentInt(1);
    for (const auto& [w, c] : x) {
      const Element sw = g.left_mul(s, w);
      if (g.length(sw) > g.length(w)) {
        out.add(theta_T(sw), c);
      } else {
        out.add(sw, q * c);
        out.add(w, qm1 * c);
      }
    }
    return out;
  }
  TLElement mul(const TLElement& x, const TLElement& y) const {
    TLElement out;
    for (const auto& [w, c] : x) {
      TLElement p = y;
      const Word& word = group().normal_form(w);
      for (auto it = word.rbegin(); it != word.rend(); ++it) p = left_mul_t(*it, p);
      out.add(p, c);
    }
    return out;
  }

  /// bar(t_w) = theta(bar(T_w)): the Hecke bar descends because J is spanned
  /// by bar-invariant Kazhdan-Lusztig elements.
  const TLElement& bar_t(Element w) const {
    auto& slot = bar_t_[static_cast<std::size_t>(w)];
    if (!slot) slot = theta(h_.bar_T(w));
    return *slot;
  }
  TLElement bar(const TLElement& x) const {
    TLElement out;
    for (const auto& [w, c] : x) out.add(bar_t(w), c.bar());
    return out;
  }
  /// Anti-automorphism t_w -> t_{w^-1}; fixes every b_s.
  TLElement star(const TLElement& x) const {
    return x.map_keys([this](Element w) { return group().inverse(w); });
  }

  /// Coordinates in the basis tilde t_w = v^-l(w) t_w.
  TLElement to_tilde(const TLElement& x) const {
    TLElement out;
    for (const auto& [w, c] : x) out.add(w, c.shifted(group().length(w)));
    return out;
  }
  TLElement from_tilde(const TLElement& x) const {
    TLElement out;
    for (const auto& [w, c] : x) out.add(w, c.shifted(-group().length(w)));
    return out;
  }

  /// Canonical basis element c_w in the t-basis.
  const TLElement& canonical(Element w) const {
    if (canonical_.empty()) canonical_.resize(static_cast<std::size_t>(group().size()));
    auto& slot = canonical_[static_cast<std::size_t>(w)];
    if (!slot) slot = solve_canonical(w);
    return *slot;
  }

  std::string element_name(Element w) const { return group().element_name(w); }

 private:
  void verify_ideal() const {
    const auto& g = group();
    auto inside = [&](const HeckeElement& x) {
      for (const auto& [y, c] : h_.expand_in_kl(x))
        if (!is_complex(y)) return false;
      return true;
    };
    for (Element w = 0; w < g.size(); ++w) {
      if (!is_complex(w)) continue;
      for (Generator s = 0; s < g.rank(); ++s) {
        if (!inside(h_.kl_generator_left(s, h_.kl(w))) || !inside(h_.kl_generator_right(h_.kl(w), s)))
          throw std::logic_error("complex Kazhdan-Lusztig span is not an ideal at " + g.element_name(w));
      }
    }
    for (Generator s = 0; s < g.rank(); ++s) {
      for (Generator t = s + 1; t < g.rank(); ++t) {
        if (g.bond(s, t) < 3) continue;
        if (!inside(dihedral_sum(s, t)))
          throw std::logic_error("ideal generator outside the complex span for s" + std::to_string(s + 1) + ", s" +
                                 std::to_string(t + 1));
      }
    }
  }

 public:
  /// sum of T_w over the parabolic subgroup <s, t>.
  HeckeElement dihedral_sum(Generator s, Generator t) const {
    const auto& g = group();
    HeckeElement x;
    for (Element w = 0; w < g.size(); ++w) {
      bool in = true;
      for (Generator u : g.normal_form(w)) in = in && (u == s || u == t);
      if (in) x.add(w, LaurentInt(1));
    }
    return x;
  }

 private:
  void build_theta() {
    const auto& g = group();
    theta_T_.assign(static_cast<std::size_t>(g.size()), TLElement());
    bar_t_.assign(static_cast<std::size_t>(g.size()), std::nullopt);
    for (Element y = 0; y < g.size(); ++y) {
      if (!is_complex(y)) {
        theta_T_[static_cast<std::size_t>(y)] = TLElement(y);
        continue;
      }
      // T_y = v^l(y) C'_y - sum_{z<y} P_{z,y} T_z and C'_y maps to 0
      TLElement out;
      for (const auto& [z, c] : h_.kl(y)) {
        if (z == y) continue;
        out.add(theta_T_[static_cast<std::size_t>(z)], -c.shifted(g.length(y)));
      }
      theta_T_[static_cast<std::size_t>(y)] = std::move(out);
    }
  }

  // bar(tilde t_y) in tilde coordinates
  const TLElement& bar_tilde(Element y) const {
    if (bar_tilde_.empty()) bar_tilde_.resize(static_cast<std::size_t>(group().size()));
    auto& slot = bar_tilde_[static_cast<std::size_t>(y)];
    if (!slot) slot = to_tilde(bar_t(y).scaled(LaurentInt::monomial(group().length(y))));
    return *slot;
  }

  TLElement solve_canonical(Element w) const {
    if (is_complex(w)) throw std::out_of_range("canonical basis is indexed by fully commutative elements");
    const auto& g = group();
    // p_x: coefficient of tilde t_x; solve p_x - bar(p_x) = sum_{y != x} bar(p_y) r_{x,y}
    // where bar(tilde t_y) = sum_x r_{x,y} tilde t_x.
    std::map<Element, LaurentInt> p;
    p[w] = LaurentInt(1);
    for (auto it = wc_.rbegin(); it != wc_.rend(); ++it) {
      const Element x = *it;
      if (x == w) continue;
      LaurentInt qx;
      for (const auto& [y, py] : p) {
        const LaurentInt r = bar_tilde(y).coefficient(x);
        if (!r.is_zero()) qx += py.bar() * r;
      }
      if (qx.is_zero()) continue;
      if (qx.constant_term() != 0 || qx.bar() != -qx)
        throw std::logic_error("canonical basis solve failed at " + g.element_name(w) + " / " + g.element_name(x));
      p[x] = qx.negative_part();
    }
    TLElement tilde;
    for (const auto& [x, c] : p) tilde.add(x, c);
    TLElement c = from_tilde(tilde);
    if (bar(c) != c) throw std::logic_error("canonical basis element is not bar invariant at " + g.element_name(w));
    return c;
  }

  HeckeAlgebra h_;
  std::vector<char> complex_;
  std::vector<int> wc_index_;
  std::vector<Element> wc_;
  std::vector<TLElement> theta_T_;
  mutable std::vector<std::optional<TLElement>> bar_t_;
  mutable std::vector<std::optional<TLElement>> bar_tilde_;
  mutable std::vector<std::optional<TLElement>> canonical_;
};

/// Checks of the canonical basis against its defining properties and the
/// projection theta(C'_w).
struct CanonicalReport {
  bool bar_invariant = true;
  bool lattice_congruence = true;
  bool projection_agrees = true;
  bool complex_killed = true;
  std::vector<std::string> witnesses;
  bool ok() const { return bar_invariant && lattice_congruence && projection_agrees && complex_killed; }
};

inline CanonicalReport canonical_check(const TLContext& ctx) {
  CanonicalReport rep;
  const auto& g = ctx.group();
  for (Element w : ctx.wc()) {
    const TLElement& c = ctx.canonical(w);
    if (ctx.bar(c) != c) {
      rep.bar_invariant = false;
      rep.witnesses.push_back("bar: " + g.element_name(w));
    }
    for (const auto& [x, coeff] : ctx.to_tilde(c)) {
      const bool good = x == w ? coeff == LaurentInt(1) : coeff.in_vinv_Aminus();
      if (!good) {
        rep.lattice_congruence = false;
        rep.witnesses.push_back("lattice: " + g.element_name(w) + " at " + g.element_name(x));
      }
    }
    if (ctx.theta(ctx.hecke().kl(w)) != c) {
      rep.projection_agrees = false;
      rep.witnesses.push_back("projection: " + g.element_name(w));
    }
  }
  for (Element w = 0; w < g.size(); ++w) {
    if (ctx.is_complex(w) && !ctx.theta(ctx.hecke().kl(w)).is_zero()) {
      rep.complex_killed = false;
      rep.witnesses.push_back("complex image nonzero: " + g.element_name(w));
    }
  }
  return rep;
}

/// Multiplication rules for canonical basis elements of TL(I_2(m)).
inline bool dihedral_recursions_hold(const TLContext& ctx, std::string* witness = nullptr) {
  const auto& g = ctx.group();
  if (g.type() != CoxeterType::I) throw std::invalid_argument("dihedral recursions need type I");
  const int m = g.bond(0, 1);
  const LaurentInt two = LaurentInt::delta();
  for (Generator s = 0; s < 2; ++s) {
    const Generator s2 = 1 - s;
    const TLElement& cs = ctx.canonical(g.generator(s));
    for (Element w : ctx.wc()) {
      const TLElement prod = ctx.mul(cs, ctx.canonical(w));
      TLElement expect;
      const int l = g.length(w);
      if (g.is_left_descent(s, w)) {
        expect = ctx.canonical(w).scaled(two);
      } else if (l == 0) {
        expect = cs;
      } else if (l == 1) {
        expect = ctx.canonical(g.left_mul(s, w));
      } else if (l == m - 1) {
        expect = ctx.canonical(g.left_mul(s2, w));
      } else {
        expect = ctx.canonical(g.left_mul(s, w)) + ctx.canonical(g.left_mul(s2, w));
      }
      if (prod != expect) {
        if (witness) *witness = "c_s" + std::to_string(s + 1) + " c_" + g.element_name(w);
        return false;
      }
    }
  }
  return true;
}

/// One line per term: "<laurent> * t~<word>" in the tilde basis, sorted by element order.
inline std::string tl_to_string_tilde(const TLContext& ctx, const TLElement& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : ctx.to_tilde(x)) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")*t~" << ctx.element_name(w);
  }
  return os.str();
}

}  // namespace hyperplanar
