// The diagram algebra P_n^A over Z[v, v^-1]: products, star, traces, the
// relabelling automorphism omega, the tensor embedding and the exposed
// subalgebra D_n^A.

#pragma once

#include <cstdint>
#include <istream>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hyperplanar/coeff.hpp"
#include "hyperplanar/diagram.hpp"
#include "hyperplanar/linear_combination.hpp"
#include "hyperplanar/table_algebra.hpp"
#include "hyperplanar/verlinde.hpp"

namespace hyperplanar {

using PlanarElement = LinearCombination<LabeledDiagram>;

/// Value of a label read along a segment: bar applied when walked backwards.
inline BasisIndex segment_value(const Segment& s, const TableAlgebra& alg) {
  return s.against ? alg.bar(s.label) : s.label;
}

/// Product of segment values with the most recently walked segment leftmost.
inline TAElement path_product(const std::vector<Segment>& segs, const TableAlgebra& alg) {
  TAElement acc = alg.one();
  for (const auto& s : segs) acc = alg.mul(alg.basis_element(segment_value(s, alg)), acc);
  return acc;
}

/// delta * t(product around the loop). `start` rotates the traversal and
/// `reverse` walks it the other way; both leave the value unchanged.
inline LaurentInt loop_scalar(const std::vector<Segment>& loop, const TableAlgebra& alg, std::size_t start = 0,
                              bool reverse = false) {
  std::vector<Segment> segs;
  const std::size_t k = loop.size();
  for (std::size_t i = 0; i < k; ++i) {
    Segment s = loop[(start + i) % k];
    segs.push_back(s);
  }
  if (reverse) {
    std::reverse(segs.begin(), segs.end());
    for (auto& s : segs) s.against = !s.against;
  }
  return LaurentInt::delta() * alg.trace(path_product(segs, alg));
}

class PlanarContext {
 public:
  PlanarContext(int n, TableAlgebra alg) : n_(n), alg_(std::move(alg)) {
    if (n_ < 0) throw std::invalid_argument("strand count must be nonnegative");
    if (is_verlinde(alg_)) verlinde_r_ = alg_.rank();
  }
  PlanarContext(const PlanarContext& o) : n_(o.n_), alg_(o.alg_), verlinde_r_(o.verlinde_r_) {}

  static PlanarContext verlinde(int n, int r) { return PlanarContext(n, verlinde_make(r).algebra); }

  int n() const { return n_; }
  const TableAlgebra& algebra() const { return alg_; }
  /// r when the algebra is V_r.
  std::optional<int> verlinde_r() const { return verlinde_r_; }

  /// Every labeling of every matching: Catalan(n) * rank^n diagrams.
  std::vector<LabeledDiagram> basis() const {
    std::vector<LabeledDiagram> out;
    const int k = alg_.rank();
    for (const auto& m : enumerate_matchings(n_)) {
      std::vector<BasisIndex> labels(static_cast<std::size_t>(n_), 0);
      LabeledDiagram d(m);
      const auto edges = d.edges();
      while (true) {
        for (std::size_t e = 0; e < edges.size(); ++e) d.set_label(edges[e].a, labels[e]);
        out.push_back(d);
        std::size_t i = 0;
        while (i < labels.size() && ++labels[i] == k) labels[i++] = 0;
        if (i == labels.size()) break;
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  LabeledDiagram identity_diagram() const { return hyperplanar::identity_diagram(n_, alg_); }
  PlanarElement one() const { return PlanarElement(identity_diagram()); }

  /// Product of two basis diagrams (memoized).
  PlanarElement mul(const LabeledDiagram& x, const LabeledDiagram& y) const {
    if (x.n() != n_ || y.n() != n_) throw std::invalid_argument("diagram does not belong to this context");
    const Key key{x, y};
    {
      std::lock_guard<std::mutex> lock(memo_mutex_);
      if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    PlanarElement r = mul_uncached(x, y);
    std::lock_guard<std::mutex> lock(memo_mutex_);
    memo_.emplace(key, r);
    return r;
  }
  PlanarElement mul(const PlanarElement& x, const PlanarElement& y) const {
    PlanarElement r;
    for (const auto& [dx, cx] : x)
      for (const auto& [dy, cy] : y) r.add(mul(dx, dy), cx * cy);
    return r;
  }

  PlanarElement mul_uncached(const LabeledDiagram& x, const LabeledDiagram& y) const {
    const auto comp = compose_matchings(x, y);
    LaurentInt scalar(1);
    for (const auto& loop : comp.loops) {
      scalar *= loop_scalar(loop, alg_);
      if (scalar.is_zero()) return {};
    }
    std::vector<TAElement> edge_labels;
    edge_labels.reserve(comp.through_paths.size());
    for (const auto& path : comp.through_paths) {
      edge_labels.push_back(path_product(path, alg_));
      if (edge_labels.back().is_zero()) return {};
    }
    LabeledDiagram base(comp.matching);
    const auto edges = base.edges();
    PlanarElement out;
    expand_labels(base, edges, edge_labels, 0, scalar, out);
    return out;
  }

  PlanarElement star(const PlanarElement& x) const {
    return x.map_keys([this](const LabeledDiagram& d) { return reflect_diagram(d, alg_); });
  }
  LabeledDiagram star(const LabeledDiagram& d) const { return reflect_diagram(d, alg_); }

  /// Closure trace: point i joined to 2n+1-i, every curve closes into a loop.
  LaurentInt tr(const LabeledDiagram& d) const {
    const int np = 2 * n_;
    std::vector<char> seen(static_cast<std::size_t>(np + 1), 0);
    LaurentInt result(1);
    for (Point p0 = 1; p0 <= np; ++p0) {
      if (seen[static_cast<std::size_t>(p0)]) continue;
      std::vector<Segment> loop;
      Point p = p0;
      do {
        const Point q = d.partner(p);
        seen[static_cast<std::size_t>(p)] = seen[static_cast<std::size_t>(q)] = 1;
        loop.push_back({d.label(p), p % 2 == 1});
        p = np + 1 - q;
      } while (p != p0);
      result *= loop_scalar(loop, alg_);
      if (result.is_zero()) break;
    }
    return result;
  }
  LaurentInt tr(const PlanarElement& x) const {
    LaurentInt r;
    for (const auto& [d, c] : x) r += c * tr(d);
    return r;
  }
  /// tau = v^-n tr
  LaurentInt tau(const PlanarElement& x) const { return tr(x).shifted(-n_); }
  LaurentInt tau(const LabeledDiagram& d) const { return tr(d).shifted(-n_); }

  /// Transitional edges relabelled u_i -> u_{r-1-i}; requires a Verlinde algebra.
  LabeledDiagram omega(const LabeledDiagram& d) const {
    if (!verlinde_r_) throw std::domain_error("omega needs a Verlinde algebra");
    LabeledDiagram out = d;
    for (const auto& e : d.edges())
      if (is_transitional(d.matching(), e.a)) out.set_label(e.a, *verlinde_r_ - 1 - e.label);
    return out;
  }
  PlanarElement omega(const PlanarElement& x) const {
    return x.map_keys([this](const LabeledDiagram& d) { return omega(d); });
  }

  /// Exposed: every edge with a non-identity label borders the left face.
  bool exposed(const LabeledDiagram& d) const {
    const auto principal = principal_points(d.matching());
    for (const auto& e : d.edges())
      if (e.label != alg_.identity() && !principal[static_cast<std::size_t>(e.a)]) return false;
    return true;
  }
  std::vector<LabeledDiagram> exposed_basis() const {
    std::vector<LabeledDiagram> out;
    for (auto& d : basis())
      if (exposed(d)) out.push_back(std::move(d));
    return out;
  }

  /// All-propagating diagram for b_1 (x) ... (x) b_n; the k-th edge carries
  /// b_k for odd k and bar(b_k) for even k.
  LabeledDiagram tensor_embed(const std::vector<BasisIndex>& b) const {
    if (static_cast<int>(b.size()) != n_) throw std::invalid_argument("tensor_embed needs n labels");
    HalfDiagram h;
    h.n = n_;
    for (Point p = 1; p <= n_; ++p) h.defects.push_back(p);
    return half_join(h, b, h, alg_);
  }

  std::size_t memo_size() const {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    return memo_.size();
  }

 private:
  struct Key {
    LabeledDiagram x;
    LabeledDiagram y;
    friend bool operator==(const Key& a, const Key& b) { return a.x == b.x && a.y == b.y; }
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const { return k.x.hash() * 1000003u ^ k.y.hash(); }
  };

  void expand_labels(LabeledDiagram& d, const std::vector<Edge>& edges, const std::vector<TAElement>& labels,
                     std::size_t i, const LaurentInt& coeff, PlanarElement& out) const {
    if (i == edges.size()) {
      out.add(d, coeff);
      return;
    }
    for (const auto& [b, c] : labels[i]) {
      d.set_label(edges[i].a, b);
      expand_labels(d, edges, labels, i + 1, coeff * c, out);
    }
  }

  int n_;
  TableAlgebra alg_;
  std::optional<int> verlinde_r_;
  mutable std::mutex memo_mutex_;
  mutable std::unordered_map<Key, PlanarElement, KeyHash> memo_;
};

/// Decodes a tensor-power index into its n base-rank digits, most significant first.
inline std::vector<BasisIndex> tensor_digits(BasisIndex idx, int rank, int n) {
  std::vector<BasisIndex> d(static_cast<std::size_t>(n), 0);
  for (int k = n - 1; k >= 0; --k) {
    d[static_cast<std::size_t>(k)] = idx % rank;
    idx /= rank;
  }
  return d;
}

/// rho(b) rho(b') == rho(b b') over every pair of basis tensors of A^(x)n.
inline bool verify_tensor_iso(const PlanarContext& ctx) {
  const TableAlgebra power = tensor_power(ctx.algebra(), ctx.n());
  const int rank = ctx.algebra().rank();
  const int n = ctx.n();
  auto embed = [&](BasisIndex i) { return ctx.tensor_embed(tensor_digits(i, rank, n)); };
  for (BasisIndex i = 0; i < power.rank(); ++i) {
    for (BasisIndex j = 0; j < power.rank(); ++j) {
      PlanarElement want;
      for (const auto& [m, c] : power.product(i, j)) want.add(embed(m), LaurentInt(c));
      if (ctx.mul(embed(i), embed(j)) != want) return false;
    }
  }
  return true;
}

/// Products of exposed basis elements stay in the span of exposed ones.
inline bool verify_exposed_closure(const PlanarContext& ctx) {
  const auto ex = ctx.exposed_basis();
  for (const auto& x : ex)
    for (const auto& y : ex)
      for (const auto& [d, c] : ctx.mul(x, y))
        if (!ctx.exposed(d)) return false;
  return true;
}

/// |D(n, r)| via a sum over matchings of r^(number of principal edges).
inline BigInt exposed_rank(int n, int r) {
  BigInt total = 0;
  for (const auto& m : enumerate_matchings(n)) {
    const auto principal = principal_points(m);
    int k = 0;
    for (Point p = 1; p <= m.points(); ++p)
      if (m.partner(p) > p && principal[static_cast<std::size_t>(p)]) ++k;
    BigInt term = 1;
    for (int i = 0; i < k; ++i) term *= r;
    total += term;
  }
  return total;
}

/// One term per line, `<laurent> * <diagram>`, sorted by diagram; zero is `0`.
inline std::string element_to_string(const PlanarElement& x) {
  if (x.is_zero()) return "0\n";
  std::ostringstream os;
  for (const auto& [d, c] : x) os << c.to_string() << " * " << d.to_string() << "\n";
  return os.str();
}

inline PlanarElement element_parse(std::istream& in, const PlanarContext& ctx) {
  PlanarElement x;
  std::string line;
  bool saw_zero = false;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto star = line.find('*');
    if (star == std::string::npos) {
      if (LaurentInt::parse(line).is_zero()) {
        saw_zero = true;
        continue;
      }
      throw ParseError("element: expected `<laurent> * <diagram>`");
    }
    const LaurentInt c = LaurentInt::parse(line.substr(0, star));
    const LabeledDiagram d = LabeledDiagram::parse(line.substr(star + 1), ctx.algebra().rank());
    if (d.n() != ctx.n()) throw ParseError("element: diagram strand count differs from context");
    x.add(d, c);
  }
  if (x.is_zero() && !saw_zero) throw ParseError("element: no terms");
  return x;
}

inline PlanarElement element_parse(const std::string& text, const PlanarContext& ctx) {
  std::istringstream is(text);
  return element_parse(is, ctx);
}

}  // namespace hyperplanar
