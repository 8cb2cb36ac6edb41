// Embeddings of generalized Temperley-Lieb algebras into diagram algebras
// P(n, r): admissible diagram sets, the homomorphisms rho, their basis
// bijections, the induced bilinear form, and the Kazhdan-Lusztig image check.

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hyperplanar/hecke.hpp"
#include "hyperplanar/planar.hpp"
#include "hyperplanar/tabular.hpp"

namespace hyperplanar {

// ---------------------------------------------------------------- admissible

enum class AdmissibleFlavor { B, H, I };

inline std::string to_string(AdmissibleFlavor f) {
  switch (f) {
    case AdmissibleFlavor::B: return "B";
    case AdmissibleFlavor::H: return "H";
    default: return "I";
  }
}

/// How "nodes i and i+1 for some i > 1" is scanned in the H conditions:
/// along one boundary row (top for the first clause, bottom for the second),
/// or over every pair of consecutively numbered points.
enum class HReading { row_confined, literal };

struct AdmissibleSet {
  AdmissibleFlavor flavor;
  int n = 0;
  int r = 0;
  std::vector<LabeledDiagram> members;
};

namespace detail {

inline bool has_edge(const LabeledDiagram& d, Point a, Point b, std::optional<BasisIndex> label = std::nullopt) {
  if (a < 1 || b < 1 || a > 2 * d.n() || b > 2 * d.n()) return false;
  if (d.partner(a) != b) return false;
  return !label || d.label(a) == *label;
}

inline bool all_propagating(const LabeledDiagram& d) { return d.propagating_count() == d.n(); }

}  // namespace detail

/// Literal evaluation of the admissibility conditions on one basis diagram.
inline bool is_admissible(AdmissibleFlavor flavor, const PlanarContext& ctx, const LabeledDiagram& d,
                          HReading reading = HReading::row_confined) {
  if (!ctx.exposed(d)) return false;
  const int n = d.n();
  const Point last = 2 * n;
  const auto edges = classify_edges(d);
  switch (flavor) {
    case AdmissibleFlavor::B: {
      if (detail::has_edge(d, 1, last, 0)) return true;
      if (detail::has_edge(d, 1, last, 2) && !detail::all_propagating(d)) return true;
      if (d.partner(1) == last) return false;
      if (d.label(1) != 1 || d.label(last) != 1) return false;
      for (const auto& e : edges) {
        const bool at_end = e.a == 1 || e.b == 1 || e.a == last || e.b == last;
        if (e.label == 1 && !at_end) return false;
      }
      return true;
    }
    case AdmissibleFlavor::H: {
      if (detail::all_propagating(d)) {
        for (const auto& e : edges)
          if (e.label != 0) return false;
        return true;
      }
      for (const auto& e : edges)
        if (e.label != 0 && e.label != 2) return false;
      const bool rows = reading == HReading::row_confined;
      bool first = detail::has_edge(d, 1, 2, 2);
      for (Point i = 2; (rows ? i + 1 <= n : i < last) && !first; ++i) first = detail::has_edge(d, i, i + 1, 0);
      bool second = detail::has_edge(d, last, last - 1, 2);
      for (Point i = 2; (rows ? last - i >= n + 1 : last - i >= 1) && !second; ++i)
        second = detail::has_edge(d, last + 1 - i, last - i, 0);
      return first && second;
    }
    case AdmissibleFlavor::I: {
      if (detail::all_propagating(d)) {
        for (const auto& e : edges)
          if (e.label != 0) return false;
        return true;
      }
      for (const auto& e : edges) {
        if (!e.propagating) {
          if (e.label != (e.transitional ? 1 : 0)) return false;
        } else if (static_cast<int>(e.label % 2) != (e.transitional ? 1 : 0)) {
          return false;
        }
      }
      return true;
    }
  }
  return false;
}

inline AdmissibleSet admissible(AdmissibleFlavor flavor, const PlanarContext& ctx,
                                HReading reading = HReading::row_confined) {
  const auto r = ctx.verlinde_r();
  if (!r) throw std::invalid_argument("admissible sets need a Verlinde context");
  if (flavor == AdmissibleFlavor::B && *r != 3) throw std::invalid_argument("B-admissible needs r = 3");
  if (flavor == AdmissibleFlavor::H && *r != 4) throw std::invalid_argument("H-admissible needs r = 4");
  if (flavor == AdmissibleFlavor::I && ctx.n() != 3) throw std::invalid_argument("I-admissible needs n = 3");
  AdmissibleSet out{flavor, ctx.n(), *r, {}};
  for (const auto& d : ctx.basis())
    if (is_admissible(flavor, ctx, d, reading)) out.members.push_back(d);
  return out;
}

/// Products of members stay in the span of the set.
inline bool admissible_closed(const PlanarContext& ctx, const std::vector<LabeledDiagram>& set) {
  const std::set<LabeledDiagram> members(set.begin(), set.end());
  for (const auto& x : set)
    for (const auto& y : set)
      for (const auto& [d, c] : ctx.mul(x, y))
        if (!members.count(d)) return false;
  return true;
}

// ---------------------------------------------------------------- rho

enum class RhoVariant { A, B, H, I, uniform };

inline std::string to_string(RhoVariant v) {
  switch (v) {
    case RhoVariant::A: return "A";
    case RhoVariant::B: return "B";
    case RhoVariant::H: return "H";
    case RhoVariant::I: return "I";
    default: return "uniform";
  }
}

inline RhoVariant parse_rho_variant(const std::string& s) {
  if (s == "A") return RhoVariant::A;
  if (s == "B") return RhoVariant::B;
  if (s == "H") return RhoVariant::H;
  if (s == "I") return RhoVariant::I;
  if (s == "uniform") return RhoVariant::uniform;
  throw std::invalid_argument("unknown variant `" + s + "`");
}

/// The variant matching the group's type.
inline RhoVariant natural_variant(const CoxeterGroup& g) {
  switch (g.type()) {
    case CoxeterType::A: return RhoVariant::A;
    case CoxeterType::B: return RhoVariant::B;
    case CoxeterType::H: return RhoVariant::H;
    default: return RhoVariant::I;
  }
}

/// Target P(n, r) and the label of E_1's decorated arc.
struct RhoTarget {
  int n = 0;
  int r = 0;
  BasisIndex first_label = 0;
};

inline RhoTarget rho_target(RhoVariant v, const CoxeterGroup& g) {
  const int n = g.rank() + 1;
  const auto need = [&](CoxeterType t) {
    if (g.type() != t) throw std::invalid_argument("variant " + to_string(v) + " does not apply to " + g.name());
  };
  switch (v) {
    case RhoVariant::A: need(CoxeterType::A); return {n, 2, 0};
    case RhoVariant::B: need(CoxeterType::B); return {n, 3, 1};
    case RhoVariant::H: need(CoxeterType::H); return {n, 4, 2};
    case RhoVariant::I: need(CoxeterType::I); return {3, g.bond(0, 1) - 1, 1};
    default:
      if (g.rank() < 2) throw std::invalid_argument("the uniform map needs rank > 1");
      return {n, g.highest_bond() - 1, 1};
  }
}

/// rho: TL(X) -> P(n, r), defined on generators and extended through
/// rho(T_s) = v rho(b_s) - 1 along normal forms.
class Rho {
 public:
  Rho(const TLContext& tl, RhoVariant v)
      : tl_(&tl), variant_(v), target_(rho_target(v, tl.group())), ctx_(PlanarContext::verlinde(target_.n, target_.r)) {
    for (Generator s = 0; s < tl.group().rank(); ++s)
      gens_.push_back(make_Ek(target_.n, s + 1, s == 0 ? target_.first_label : 0, ctx_.algebra()));
    image_T_.assign(static_cast<std::size_t>(tl.group().size()), std::nullopt);
  }

  const TLContext& tl() const { return *tl_; }
  RhoVariant variant() const { return variant_; }
  const RhoTarget& target() const { return target_; }
  const PlanarContext& planar() const { return ctx_; }
  const LabeledDiagram& generator_image(Generator s) const { return gens_[static_cast<std::size_t>(s)]; }

  PlanarElement image_T_generator(Generator s) const {
    PlanarElement x = PlanarElement(generator_image(s)).scaled(LaurentInt::v());
    x.add(ctx_.identity_diagram(), LaurentInt(-1));
    return x;
  }
  /// Image of T_w for any w in W, as a product along the normal form.
  const PlanarElement& image_T(Element w) const {
    auto& slot = image_T_[static_cast<std::size_t>(w)];
    if (!slot) {
      const auto& g = tl_->group();
      if (w == g.identity()) {
        slot = ctx_.one();
      } else {
        const Generator s = g.normal_form(w).front();
        slot = ctx_.mul(image_T_generator(s), image_T(g.left_mul(s, w)));
      }
    }
    return *slot;
  }
  PlanarElement apply(const TLElement& x) const {
    PlanarElement out;
    for (const auto& [w, c] : x) out.add(image_T(w), c);
    return out;
  }
  PlanarElement apply_hecke(const HeckeElement& x) const { return apply(x); }

  const PlanarElement& canonical_image(Element w) const {
    auto it = canonical_images_.find(w);
    if (it == canonical_images_.end()) it = canonical_images_.emplace(w, apply(tl_->canonical(w))).first;
    return it->second;
  }

 private:
  const TLContext* tl_;
  RhoVariant variant_;
  RhoTarget target_;
  PlanarContext ctx_;
  std::vector<LabeledDiagram> gens_;
  mutable std::vector<std::optional<PlanarElement>> image_T_;
  mutable std::map<Element, PlanarElement> canonical_images_;
};

/// Defining relations of TL(X) under rho: the quadratic relation, the braid
/// relations, and the vanishing of every ideal generator.
inline bool rho_relations_hold(const Rho& rho, std::vector<std::string>* witnesses = nullptr) {
  const auto& g = rho.tl().group();
  const auto& ctx = rho.planar();
  bool ok = true;
  auto fail = [&](const std::string& w) {
    ok = false;
    if (witnesses) witnesses->push_back(w);
  };
  for (Generator s = 0; s < g.rank(); ++s) {
    const PlanarElement b(rho.generator_image(s));
    if (ctx.mul(b, b) != b.scaled(LaurentInt::delta())) fail("quadratic s" + std::to_string(s + 1));
  }
  for (Generator s = 0; s < g.rank(); ++s) {
    for (Generator t = s + 1; t < g.rank(); ++t) {
      const int m = g.bond(s, t);
      PlanarElement st = ctx.one();
      PlanarElement ts = ctx.one();
      for (int i = 0; i < m; ++i) {
        st = ctx.mul(st, rho.image_T_generator(i % 2 == 0 ? s : t));
        ts = ctx.mul(ts, rho.image_T_generator(i % 2 == 0 ? t : s));
      }
      const std::string pair = "s" + std::to_string(s + 1) + ",s" + std::to_string(t + 1);
      if (st != ts) fail("braid " + pair);
      if (m >= 3) {
        // sum of T_w over <s, t>, each T_w as a word in T_s, T_t
        PlanarElement sum;
        for (const auto& [w, c] : rho.tl().dihedral_sum(s, t)) {
          PlanarElement p = ctx.one();
          for (Generator u : g.normal_form(w)) p = ctx.mul(p, rho.image_T_generator(u));
          sum.add(p, c);
        }
        if (!sum.is_zero()) fail("ideal generator " + pair);
      }
    }
  }
  return ok;
}

/// rho(c_x) rho(c_y) = rho(c_x c_y) for all pairs of canonical basis elements.
inline bool rho_multiplicative_on_canonical(const Rho& rho, std::string* witness = nullptr) {
  const auto& tl = rho.tl();
  for (Element x : tl.wc()) {
    for (Element y : tl.wc()) {
      const PlanarElement lhs = rho.planar().mul(rho.canonical_image(x), rho.canonical_image(y));
      if (lhs != rho.apply(tl.mul(tl.canonical(x), tl.canonical(y)))) {
        if (witness) *witness = tl.element_name(x) + " * " + tl.element_name(y);
        return false;
      }
    }
  }
  return true;
}

struct EmbeddingReport {
  std::string group;
  RhoVariant variant = RhoVariant::uniform;
  int n = 0;
  int r = 0;
  std::vector<LabeledDiagram> generator_images;
  bool relations = false;
  bool single_diagrams = false;
  bool injective = false;
  bool image_matches = false;   // equals the admissible set, or lies in the exposed basis for uniform
  bool monomial_agrees = true;  // type A only: rho(c_w) equals the product of generator images
  std::optional<bool> multiplicative;
  std::optional<bool> dihedral_descents;
  std::size_t wc_count = 0;
  std::size_t image_count = 0;
  std::size_t expected_count = 0;
  std::vector<std::pair<Element, LabeledDiagram>> bijection;
  std::vector<std::string> witnesses;
  bool ok() const {
    return relations && single_diagrams && injective && image_matches && monomial_agrees && multiplicative.value_or(true) &&
           dihedral_descents.value_or(true);
  }
};

/// Expected image of the canonical basis for a variant.
inline std::vector<LabeledDiagram> expected_image(const Rho& rho) {
  const auto& ctx = rho.planar();
  std::vector<LabeledDiagram> out;
  switch (rho.variant()) {
    case RhoVariant::A:
      for (const auto& d : ctx.basis()) {
        bool plain = true;
        for (const auto& e : d.edges()) plain = plain && e.label == 0;
        if (plain) out.push_back(d);
      }
      return out;
    case RhoVariant::B: return admissible(AdmissibleFlavor::B, ctx).members;
    case RhoVariant::H: return admissible(AdmissibleFlavor::H, ctx).members;
    case RhoVariant::I: return admissible(AdmissibleFlavor::I, ctx).members;
    default: return ctx.exposed_basis();
  }
}

/// Descent pattern of the diagram attached to w in P(3, m - 1).
inline bool dihedral_descents_match(const CoxeterGroup& g, Element w, const LabeledDiagram& d) {
  if (w == g.identity()) return d.propagating_count() == 3;
  if (d.propagating_count() != 1) return false;
  const Element s1 = 0;
  const Element s2 = 1;
  const bool a = g.is_left_descent(s1, w) == detail::has_edge(d, 1, 2);
  const bool b = g.is_left_descent(s2, w) == detail::has_edge(d, 2, 3);
  const bool a2 = g.is_right_descent(w, s1) == detail::has_edge(d, 5, 6);
  const bool b2 = g.is_right_descent(w, s2) == detail::has_edge(d, 4, 5);
  int label = -1;
  for (const auto& e : d.edges())
    if (d.matching().is_top(e.a) != d.matching().is_top(e.b)) label = static_cast<int>(e.label);
  return a && b && a2 && b2 && g.length(w) == label + 1;
}

inline EmbeddingReport rho_build(const Rho& rho, bool check_products = true) {
  const auto& tl = rho.tl();
  const auto& g = tl.group();
  EmbeddingReport rep;
  rep.group = g.name();
  rep.variant = rho.variant();
  rep.n = rho.target().n;
  rep.r = rho.target().r;
  for (Generator s = 0; s < g.rank(); ++s) rep.generator_images.push_back(rho.generator_image(s));
  rep.relations = rho_relations_hold(rho, &rep.witnesses);
  rep.wc_count = tl.wc().size();

  rep.single_diagrams = true;
  std::set<LabeledDiagram> image;
  for (Element w : tl.wc()) {
    const PlanarElement& img = rho.canonical_image(w);
    if (img.size() != 1 || img.begin()->second != LaurentInt(1)) {
      rep.single_diagrams = false;
      rep.witnesses.push_back("not a single diagram: " + tl.element_name(w));
      continue;
    }
    const LabeledDiagram& d = img.begin()->first;
    rep.bijection.emplace_back(w, d);
    image.insert(d);
  }
  rep.image_count = image.size();
  rep.injective = rep.single_diagrams && image.size() == tl.wc().size();
  const auto expected = expected_image(rho);
  rep.expected_count = expected.size();
  if (rho.variant() == RhoVariant::uniform) {
    const std::set<LabeledDiagram> pool(expected.begin(), expected.end());
    rep.image_matches = std::all_of(image.begin(), image.end(), [&](const LabeledDiagram& d) { return pool.count(d) > 0; });
    rep.expected_count = tl.wc().size();
  } else {
    rep.image_matches = image == std::set<LabeledDiagram>(expected.begin(), expected.end());
  }
  if (!rep.image_matches) rep.witnesses.push_back("image differs from the expected diagram set");

  if (g.type() == CoxeterType::A) {
    for (Element w : tl.wc()) {
      PlanarElement mono = rho.planar().one();
      for (Generator s : g.normal_form(w)) mono = rho.planar().mul(mono, PlanarElement(rho.generator_image(s)));
      if (mono != rho.canonical_image(w)) {
        rep.monomial_agrees = false;
        rep.witnesses.push_back("monomial disagreement at " + tl.element_name(w));
      }
    }
  }
  if (rho.variant() == RhoVariant::I && rep.single_diagrams) {
    bool all = true;
    for (const auto& [w, d] : rep.bijection) {
      if (!dihedral_descents_match(g, w, d)) {
        all = false;
        rep.witnesses.push_back("descent pattern at " + tl.element_name(w));
      }
    }
    rep.dihedral_descents = all;
  }
  if (check_products && rep.single_diagrams) {
    std::string why;
    rep.multiplicative = rho_multiplicative_on_canonical(rho, &why);
    if (!*rep.multiplicative) rep.witnesses.push_back("product mismatch: " + why);
  }
  return rep;
}

inline std::string report_to_text(const EmbeddingReport& rep, const TLContext& tl) {
  std::ostringstream os;
  os << "group " << rep.group << " variant " << to_string(rep.variant) << " target P(" << rep.n << "," << rep.r << ")\n";
  for (std::size_t s = 0; s < rep.generator_images.size(); ++s)
    os << "b_s" << s + 1 << " -> " << rep.generator_images[s] << "\n";
  for (const auto& [w, d] : rep.bijection) os << "c_" << tl.element_name(w) << " -> " << d << "\n";
  os << "relations " << (rep.relations ? "pass" : "FAIL") << "\n";
  os << "single_diagrams " << (rep.single_diagrams ? "pass" : "FAIL") << "\n";
  os << "injective " << (rep.injective ? "pass" : "FAIL") << "\n";
  os << "image_matches " << (rep.image_matches ? "pass" : "FAIL") << "\n";
  if (rep.multiplicative) os << "multiplicative " << (*rep.multiplicative ? "pass" : "FAIL") << "\n";
  if (rep.dihedral_descents) os << "dihedral_descents " << (*rep.dihedral_descents ? "pass" : "FAIL") << "\n";
  os << "counts wc=" << rep.wc_count << " image=" << rep.image_count << " expected=" << rep.expected_count << "\n";
  for (const auto& w : rep.witnesses) os << "witness " << w << "\n";
  return os.str();
}

// ---------------------------------------------------------------- omega

/// omega(rho(c_w)) == rho(c_w) for every w.
inline bool omega_fixes_image(const Rho& rho) {
  for (Element w : rho.tl().wc())
    if (rho.planar().omega(rho.canonical_image(w)) != rho.canonical_image(w)) return false;
  return true;
}

/// First w with omega(rho(c_w)) != rho(c_w).
inline std::optional<Element> omega_moves_image(const Rho& rho) {
  for (Element w : rho.tl().wc())
    if (rho.planar().omega(rho.canonical_image(w)) != rho.canonical_image(w)) return w;
  return std::nullopt;
}

/// The uniform map agrees with omega composed with the given map on every c_w.
inline bool uniform_is_omega_of(const Rho& uniform, const Rho& other) {
  for (Element w : uniform.tl().wc())
    if (uniform.canonical_image(w) != other.planar().omega(other.canonical_image(w))) return false;
  return true;
}

// ---------------------------------------------------------------- form

/// Bilinear form on TL(X) pulled back along rho: (x, y) = tau(rho(x) rho(y)^*).
/// Evaluated through the Gram matrix of the canonical diagram images, which span the image.
class TLForm {
 public:
  explicit TLForm(const Rho& rho) : rho_(&rho) {
    const auto& tl = rho.tl();
    for (Element w : tl.wc()) {
      const PlanarElement& img = rho.canonical_image(w);
      if (img.size() != 1) throw std::logic_error("form needs single-diagram canonical images");
      index_.emplace(img.begin()->first, diagrams_.size());
      diagrams_.push_back(img.begin()->first);
    }
    gram_.assign(diagrams_.size(), std::vector<LaurentInt>(diagrams_.size()));
    for (std::size_t i = 0; i < diagrams_.size(); ++i)
      for (std::size_t j = 0; j < diagrams_.size(); ++j)
        gram_[i][j] = bilinear_form(rho.planar(), PlanarElement(diagrams_[i]), PlanarElement(diagrams_[j]));
  }
  const std::vector<std::vector<LaurentInt>>& gram() const { return gram_; }

  LaurentInt operator()(const TLElement& x, const TLElement& y) const {
    const auto cx = coordinates(rho_->apply(x));
    const auto cy = coordinates(rho_->apply(y));
    LaurentInt out;
    for (const auto& [i, a] : cx)
      for (const auto& [j, b] : cy) out += a * b * gram_[i][j];
    return out;
  }

 private:
  std::map<std::size_t, LaurentInt> coordinates(const PlanarElement& x) const {
    std::map<std::size_t, LaurentInt> out;
    for (const auto& [d, c] : x) {
      auto it = index_.find(d);
      if (it == index_.end()) throw std::logic_error("element outside the image of rho");
      out[it->second] += c;
    }
    return out;
  }

  const Rho* rho_;
  std::vector<LabeledDiagram> diagrams_;
  std::map<LabeledDiagram, std::size_t> index_;
  std::vector<std::vector<LaurentInt>> gram_;
};

struct FormReport {
  bool star_compatible = true;   // rho(x^*) = rho(x)^*
  bool adjoint = true;           // (x, yz) = (x z^*, y) on sampled triples
  bool symmetric = true;
  bool canonical_orthonormal = true;
  bool tilde_orthonormal = true;
  bool classification = true;    // +-c_w classified with the right sign
  bool sums_rejected = true;     // c_w + c_w' fails the hypotheses
  std::vector<std::string> witnesses;
  bool ok() const {
    return star_compatible && adjoint && symmetric && canonical_orthonormal && tilde_orthonormal && classification &&
           sums_rejected;
  }
};

inline FormReport form_check(const Rho& rho, int samples = 60, std::uint32_t seed = 4321) {
  const auto& tl = rho.tl();
  const TLForm form(rho);
  FormReport rep;
  std::vector<TLElement> canon;
  for (Element w : tl.wc()) canon.push_back(tl.canonical(w));
  const std::size_t k = canon.size();

  for (std::size_t i = 0; i < k; ++i) {
    if (rho.apply(tl.star(canon[i])) != rho.planar().star(rho.apply(canon[i]))) {
      rep.star_compatible = false;
      rep.witnesses.push_back("star at " + tl.element_name(tl.wc()[i]));
    }
  }
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, k - 1);
  for (int t = 0; t < samples; ++t) {
    const auto& x = canon[pick(rng)];
    const auto& y = canon[pick(rng)];
    const auto& z = canon[pick(rng)];
    if (form(x, tl.mul(y, z)) != form(tl.mul(x, tl.star(z)), y)) {
      rep.adjoint = false;
      rep.witnesses.push_back("adjoint identity fails on a sampled triple");
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const LaurentInt c = form.gram()[i][j];
      if (c != form.gram()[j][i]) rep.symmetric = false;
      if (!c.congruent_mod_vinv_Aminus(i == j ? 1 : 0)) {
        rep.canonical_orthonormal = false;
        rep.witnesses.push_back("canonical pair " + tl.element_name(tl.wc()[i]) + "," + tl.element_name(tl.wc()[j]));
      }
    }
  }
  std::vector<TLElement> tilde;
  for (Element w : tl.wc()) tilde.push_back(tl.from_tilde(TLElement(w)));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (!form(tilde[i], tilde[j]).congruent_mod_vinv_Aminus(i == j ? 1 : 0)) {
        rep.tilde_orthonormal = false;
        rep.witnesses.push_back("tilde pair " + tl.element_name(tl.wc()[i]) + "," + tl.element_name(tl.wc()[j]));
      }
    }
  }
  auto f = [&](const TLElement& a, const TLElement& b) { return form(a, b); };
  auto bar = [&](const TLElement& a) { return tl.bar(a); };
  for (std::size_t i = 0; i < k; ++i) {
    const auto plus = classify_canonical(canon[i], canon, f, bar);
    const auto minus = classify_canonical(TLElement(-canon[i]), canon, f, bar);
    if (!plus.hypotheses_hold || plus.sign != CanonicalSign::plus || !minus.hypotheses_hold ||
        minus.sign != CanonicalSign::minus) {
      rep.classification = false;
      rep.witnesses.push_back("classification at " + tl.element_name(tl.wc()[i]));
    }
    for (std::size_t j = i + 1; j < k; ++j) {
      const auto sum = classify_canonical(TLElement(canon[i] + canon[j]), canon, f, bar);
      if (sum.hypotheses_hold || sum.sign != CanonicalSign::neither) {
        rep.sums_rejected = false;
        rep.witnesses.push_back("sum accepted: " + tl.element_name(tl.wc()[i]) + "+" + tl.element_name(tl.wc()[j]));
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------- Kazhdan-Lusztig images

struct ConjectureReport {
  std::string group;
  std::size_t group_size = 0;
  std::size_t zero_count = 0;
  std::size_t nonzero_count = 0;
  bool all_zero_or_canonical = true;
  bool injective = true;
  bool zero_exactly_on_complex = true;
  bool agrees_with_theta = true;  // rho(C'_w) computed directly equals rho(theta(C'_w))
  std::vector<std::string> witnesses;
  bool ok() const { return all_zero_or_canonical && injective && zero_exactly_on_complex && agrees_with_theta; }
};

/// Extends the uniform map to the Hecke algebra and checks that every
/// Kazhdan-Lusztig element maps to 0 or to a single exposed basis diagram.
inline ConjectureReport conjecture_check(const TLContext& tl) {
  const Rho rho(tl, RhoVariant::uniform);
  const auto& g = tl.group();
  const auto& h = tl.hecke();
  ConjectureReport rep;
  rep.group = g.name();
  rep.group_size = static_cast<std::size_t>(g.size());
  std::set<LabeledDiagram> seen;
  for (Element w = 0; w < g.size(); ++w) {
    const PlanarElement img = rho.apply_hecke(h.kl(w));
    if (img != rho.apply(tl.theta(h.kl(w)))) {
      rep.agrees_with_theta = false;
      rep.witnesses.push_back("theta route differs at " + g.element_name(w));
    }
    if (img.is_zero()) {
      ++rep.zero_count;
      if (!tl.is_complex(w)) rep.zero_exactly_on_complex = false;
      continue;
    }
    ++rep.nonzero_count;
    if (tl.is_complex(w)) rep.zero_exactly_on_complex = false;
    if (img.size() != 1 || img.begin()->second != LaurentInt(1) || !rho.planar().exposed(img.begin()->first)) {
      rep.all_zero_or_canonical = false;
      rep.witnesses.push_back("not a canonical diagram: " + g.element_name(w));
      continue;
    }
    if (!seen.insert(img.begin()->first).second) {
      rep.injective = false;
      rep.witnesses.push_back("repeated image at " + g.element_name(w));
    }
  }
  return rep;
}

// ---------------------------------------------------------------- ranks

/// Ranks of the exposed subalgebras D(n, r) for n = 1..n_max.
inline std::vector<BigInt> drank_sequence(int r, int n_max) {
  if (r < 1 || n_max < 1) throw std::invalid_argument("drank needs r >= 1 and n_max >= 1");
  if (n_max > 13) throw std::out_of_range("drank budget exceeded: n_max > 13");
  std::vector<BigInt> out;
  for (int n = 1; n <= n_max; ++n) out.push_back(exposed_rank(n, r));
  return out;
}

}  // namespace hyperplanar
