// Combinatorial model of the standard n-box.
//
// Marked points are 1..2n: top points 1..n left to right, bottom points
// n+1..2n right to left, so point p sits at x = p for p <= n and at
// x = 2n + 1 - p otherwise. A diagram is a non-crossing perfect matching of
// the points. Every edge joins an odd point to an even point; its canonical
// direction runs from the even endpoint (tail) to the odd endpoint (head),
// and each edge's label is a basis index of a table algebra stored relative
// to that direction.

#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "hyperplanar/coeff.hpp"
#include "hyperplanar/table_algebra.hpp"

namespace hyperplanar {

using Point = int;

struct Edge {
  Point a = 0;  // min endpoint
  Point b = 0;
  BasisIndex label = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Unlabeled non-crossing perfect matching on 2n boundary points.
class PlanarMatching {
 public:
  PlanarMatching() = default;
  explicit PlanarMatching(int n) : n_(n), partner_(static_cast<std::size_t>(2 * n), 0) {}
  /// Builds from a pair list; throws if not a non-crossing perfect matching.
  PlanarMatching(int n, const std::vector<std::pair<Point, Point>>& pairs) : PlanarMatching(n) {
    for (auto [a, b] : pairs) connect(a, b);
    validate();
  }

  int n() const { return n_; }
  int points() const { return 2 * n_; }
  Point partner(Point p) const { return partner_[static_cast<std::size_t>(p - 1)]; }
  std::vector<std::pair<Point, Point>> pairs() const {
    std::vector<std::pair<Point, Point>> out;
    for (Point p = 1; p <= points(); ++p)
      if (partner(p) > p) out.emplace_back(p, partner(p));
    return out;
  }
  bool is_top(Point p) const { return p <= n_; }
  bool propagating(Point p) const { return is_top(p) != is_top(partner(p)); }
  /// x-coordinate of a marked point.
  int x_of(Point p) const { return p <= n_ ? p : 2 * n_ + 1 - p; }

  void connect(Point a, Point b) {
    if (a < 1 || b < 1 || a > points() || b > points() || a == b)
      throw std::invalid_argument("edge endpoint out of range");
    if (partner(a) != 0 || partner(b) != 0) throw std::invalid_argument("point used twice");
    partner_[static_cast<std::size_t>(a - 1)] = b;
    partner_[static_cast<std::size_t>(b - 1)] = a;
  }
  /// Perfect, non-crossing, odd-even.
  void validate() const {
    for (Point p = 1; p <= points(); ++p)
      if (partner(p) == 0) throw std::invalid_argument("matching is not perfect");
    for (Point p = 1; p <= points(); ++p) {
      const Point q = partner(p);
      if (q < p) continue;
      if ((p + q) % 2 == 0) throw std::invalid_argument("edge joins points of equal parity");
      for (Point r = p + 1; r < q; ++r)
        if (partner(r) < p || partner(r) > q) throw std::invalid_argument("matching has crossing edges");
    }
  }

  const std::vector<Point>& partner_table() const { return partner_; }
  friend bool operator==(const PlanarMatching&, const PlanarMatching&) = default;
  friend bool operator<(const PlanarMatching& x, const PlanarMatching& y) {
    if (x.n_ != y.n_) return x.n_ < y.n_;
    return x.pairs() < y.pairs();
  }

 private:
  int n_ = 0;
  std::vector<Point> partner_;
};

/// Basis element of P_n^A: a matching with one label per edge.
class LabeledDiagram {
 public:
  LabeledDiagram() = default;
  LabeledDiagram(PlanarMatching m, BasisIndex fill = 0)  // NOLINT(google-explicit-constructor)
      : m_(std::move(m)), label_(static_cast<std::size_t>(m_.points()), fill) {}
  LabeledDiagram(int n, const std::vector<Edge>& edges) : m_(n), label_(static_cast<std::size_t>(2 * n), 0) {
    for (const auto& e : edges) {
      m_.connect(e.a, e.b);
      set_label(e.a, e.label);
    }
    m_.validate();
  }

  int n() const { return m_.n(); }
  int points() const { return m_.points(); }
  const PlanarMatching& matching() const { return m_; }
  Point partner(Point p) const { return m_.partner(p); }
  BasisIndex label(Point p) const { return label_[static_cast<std::size_t>(p - 1)]; }
  void set_label(Point p, BasisIndex b) {
    label_[static_cast<std::size_t>(p - 1)] = b;
    label_[static_cast<std::size_t>(partner(p) - 1)] = b;
  }
  bool propagating(Point p) const { return m_.propagating(p); }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Point p = 1; p <= points(); ++p)
      if (partner(p) > p) out.push_back({p, partner(p), label(p)});
    return out;
  }
  int propagating_count() const {
    int c = 0;
    for (Point p = 1; p <= n(); ++p)
      if (!m_.is_top(partner(p))) ++c;
    return c;
  }
  /// Non-propagating edges on the top line; equals (n - propagating) / 2.
  int top_arc_count() const { return (n() - propagating_count()) / 2; }

  /// Order: pair list first, then labels in edge order.
  friend bool operator<(const LabeledDiagram& x, const LabeledDiagram& y) {
    if (x.n() != y.n()) return x.n() < y.n();
    const int np = x.points();
    Point px = 1;
    Point py = 1;
    while (px <= np && py <= np) {
      while (px <= np && x.partner(px) < px) ++px;
      while (py <= np && y.partner(py) < py) ++py;
      if (px > np || py > np) break;
      if (px != py) return px < py;
      if (x.partner(px) != y.partner(py)) return x.partner(px) < y.partner(py);
      ++px;
      ++py;
    }
    for (Point p = 1; p <= np; ++p) {
      if (x.partner(p) < p) continue;
      if (x.label(p) != y.label(p)) return x.label(p) < y.label(p);
    }
    return false;
  }
  friend bool operator==(const LabeledDiagram& x, const LabeledDiagram& y) {
    return x.m_ == y.m_ && x.label_ == y.label_;
  }
  friend bool operator!=(const LabeledDiagram& x, const LabeledDiagram& y) { return !(x == y); }

  std::size_t hash() const {
    std::size_t h = static_cast<std::size_t>(n()) * 0x9e3779b97f4a7c15ULL;
    for (Point p = 1; p <= points(); ++p) {
      h ^= static_cast<std::size_t>(partner(p) * 131 + label(p)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }

  /// `n=<n> | a-b:<label> ...`, edges sorted by min endpoint.
  std::string to_string() const {
    std::ostringstream os;
    os << "n=" << n() << " |";
    for (const auto& e : edges()) os << ' ' << e.a << '-' << e.b << ':' << e.label;
    return os.str();
  }
  /// Parses the text form; `rank` > 0 bounds the labels.
  static LabeledDiagram parse(std::string_view text, int rank = 0);

  friend std::ostream& operator<<(std::ostream& os, const LabeledDiagram& d) { return os << d.to_string(); }

 private:
  PlanarMatching m_;
  std::vector<BasisIndex> label_;
};

struct LabeledDiagramHash {
  std::size_t operator()(const LabeledDiagram& d) const { return d.hash(); }
};

inline LabeledDiagram LabeledDiagram::parse(std::string_view text, int rank) {
  std::string s(text);
  const auto bar = s.find('|');
  if (bar == std::string::npos) throw ParseError("diagram: missing '|'");
  std::string head = s.substr(0, bar);
  head.erase(std::remove_if(head.begin(), head.end(), [](unsigned char c) { return std::isspace(c); }), head.end());
  if (head.rfind("n=", 0) != 0) throw ParseError("diagram: expected `n=<n>`");
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(head.substr(2), &used);
    if (used != head.size() - 2 || n < 0) throw ParseError("diagram: bad strand count");
  } catch (const std::logic_error&) {
    throw ParseError("diagram: bad strand count");
  }
  std::istringstream es(s.substr(bar + 1));
  std::vector<Edge> edges;
  std::string tok;
  while (es >> tok) {
    Edge e;
    char dash = 0;
    char colon = 0;
    std::istringstream ts(tok);
    if (!(ts >> e.a >> dash >> e.b >> colon >> e.label) || dash != '-' || colon != ':')
      throw ParseError("diagram: bad edge token `" + tok + "`");
    std::string rest;
    if (ts >> rest) throw ParseError("diagram: bad edge token `" + tok + "`");
    if (e.a > e.b) std::swap(e.a, e.b);
    if (e.label < 0 || (rank > 0 && e.label >= rank)) throw ParseError("diagram: label out of range in `" + tok + "`");
    edges.push_back(e);
  }
  try {
    return LabeledDiagram(n, edges);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("diagram: ") + e.what());
  }
}

inline std::uint64_t catalan(int n) {
  std::uint64_t c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * static_cast<std::uint64_t>(k) + 1) / (static_cast<std::uint64_t>(k) + 2);
  return c;
}

namespace detail {

// Perfect non-crossing matchings of the interval [lo, hi]; hi - lo + 1 even.
inline void interval_matchings(Point lo, Point hi, std::vector<std::pair<Point, Point>>& cur,
                               const std::function<void()>& emit) {
  if (lo > hi) {
    emit();
    return;
  }
  for (Point q = lo + 1; q <= hi; q += 2) {
    cur.emplace_back(lo, q);
    interval_matchings(lo + 1, q - 1, cur, [&] { interval_matchings(q + 1, hi, cur, emit); });
    cur.pop_back();
  }
}

}  // namespace detail

/// All Catalan(n) non-crossing perfect matchings, sorted by pair list.
inline std::vector<PlanarMatching> enumerate_matchings(int n) {
  if (n < 0) throw std::invalid_argument("strand count must be nonnegative");
  std::vector<PlanarMatching> out;
  std::vector<std::pair<Point, Point>> cur;
  detail::interval_matchings(1, 2 * n, cur, [&] { out.emplace_back(n, cur); });
  std::sort(out.begin(), out.end());
  return out;
}

/// One traversed piece of a curve: the stored label of the edge and whether
/// it was walked against its canonical direction.
struct Segment {
  BasisIndex label = 0;
  bool against = false;
};

struct CompositionResult {
  PlanarMatching matching;
  /// One entry per result edge, in order of min endpoint; segments listed
  /// from tail to head of the result edge.
  std::vector<std::vector<Segment>> through_paths;
  /// Closed curves, each starting at a middle arc of the top factor and
  /// following that arc's direction.
  std::vector<std::vector<Segment>> loops;
};

/// Stacks `top` over `bottom`: bottom point n+j of `top` is glued to top
/// point n+1-j of `bottom`.
inline CompositionResult compose_matchings(const LabeledDiagram& top, const LabeledDiagram& bottom) {
  const int n = top.n();
  if (bottom.n() != n) throw std::invalid_argument("strand-count mismatch in composition");
  const int np = 2 * n;
  // node ids: top point p -> p-1, bottom point p -> np + p - 1
  std::vector<char> visited(static_cast<std::size_t>(2 * np), 0);
  auto node = [np](bool in_bottom, Point p) { return (in_bottom ? np : 0) + p - 1; };

  struct WalkOut {
    std::vector<Segment> segs;
    Point end = 0;
  };
  // Walk from a node; stops at a result boundary point or back at `start`.
  auto walk = [&](bool in_bottom, Point p, bool closed) {
    WalkOut out;
    const bool start_bottom = in_bottom;
    const Point start_p = p;
    while (true) {
      const LabeledDiagram& d = in_bottom ? bottom : top;
      const Point q = d.partner(p);
      visited[static_cast<std::size_t>(node(in_bottom, p))] = 1;
      visited[static_cast<std::size_t>(node(in_bottom, q))] = 1;
      out.segs.push_back({d.label(p), p % 2 == 1});
      const bool boundary = in_bottom ? q > n : q <= n;
      if (boundary) {
        out.end = q;
        return out;
      }
      // cross the middle line
      in_bottom = !in_bottom;
      p = np + 1 - q;
      if (closed && in_bottom == start_bottom && p == start_p) return out;
    }
  };

  CompositionResult res;
  res.matching = PlanarMatching(n);
  std::vector<std::pair<Point, std::vector<Segment>>> paths;
  for (Point p = 1; p <= np; ++p) {
    const bool in_bottom = p > n;
    if (visited[static_cast<std::size_t>(node(in_bottom, p))]) continue;
    if (p % 2 == 1) continue;  // start each curve at its even (tail) endpoint
    auto w = walk(in_bottom, p, false);
    res.matching.connect(p, w.end);
    paths.emplace_back(std::min(p, w.end), std::move(w.segs));
  }
  std::sort(paths.begin(), paths.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  for (auto& [k, segs] : paths) res.through_paths.push_back(std::move(segs));

  for (Point p = n + 1; p <= np; ++p) {
    if (visited[static_cast<std::size_t>(node(false, p))]) continue;
    const Point q = top.partner(p);
    const Point tail = p % 2 == 0 ? p : q;
    res.loops.push_back(walk(false, tail, true).segs);
  }
  return res;
}

struct EdgeClass {
  Point a = 0;
  Point b = 0;
  bool propagating = false;
  bool transitional = false;
  bool principal = false;
  BasisIndex label = 0;
};

/// Edges bordering the face that contains the boundary gap between 2n and 1,
/// found by walking that face: at point p take the chord to partner(p), then
/// the boundary gap after it, until the walk returns to the starting gap.
/// Result is indexed by point: true iff that point's edge is principal.
inline std::vector<char> principal_points(const PlanarMatching& m) {
  std::vector<char> principal(static_cast<std::size_t>(m.points() + 1), 0);
  if (m.n() == 0) return principal;
  Point p = 1;
  while (true) {
    const Point q = m.partner(p);
    principal[static_cast<std::size_t>(p)] = 1;
    principal[static_cast<std::size_t>(q)] = 1;
    if (q == m.points()) break;
    p = q + 1;
  }
  return principal;
}

inline bool is_transitional(const PlanarMatching& m, Point p) {
  const Point q = m.partner(p);
  const int edge_pts = m.points();
  const bool pa = p == 1 || p == edge_pts;
  const bool pb = q == 1 || q == edge_pts;
  return pa != pb;
}

inline std::vector<EdgeClass> classify_edges(const LabeledDiagram& d) {
  const auto& m = d.matching();
  const auto principal = principal_points(m);
  std::vector<EdgeClass> out;
  for (const auto& e : d.edges())
    out.push_back({e.a, e.b, m.propagating(e.a), is_transitional(m, e.a), principal[static_cast<std::size_t>(e.a)] != 0,
                   e.label});
  return out;
}

/// E_k(x): vertical edges i -- 2n+1-i except arcs (k, k+1) labeled x and
/// (2n-k, 2n+1-k) labeled bar(x); all other labels are the identity.
inline LabeledDiagram make_Ek(int n, int k, BasisIndex x, const TableAlgebra& alg) {
  if (n <= 1 || k < 1 || k >= n) throw std::out_of_range("E_k needs n > 1 and 1 <= k < n");
  std::vector<Edge> edges;
  for (Point i = 1; i <= n; ++i) {
    if (i == k || i == k + 1) continue;
    edges.push_back({i, 2 * n + 1 - i, alg.identity()});
  }
  edges.push_back({k, k + 1, x});
  edges.push_back({2 * n - k, 2 * n + 1 - k, alg.bar(x)});
  return LabeledDiagram(n, edges);
}

inline LabeledDiagram identity_diagram(int n, const TableAlgebra& alg) {
  std::vector<Edge> edges;
  for (Point i = 1; i <= n; ++i) edges.push_back({i, 2 * n + 1 - i, alg.identity()});
  return LabeledDiagram(n, edges);
}

/// Reflection in y = 1/2 with every label replaced by its bar.
inline LabeledDiagram reflect_diagram(const LabeledDiagram& d, const TableAlgebra& alg) {
  const int np = d.points();
  std::vector<Edge> edges;
  for (const auto& e : d.edges()) {
    Point a = np + 1 - e.a;
    Point b = np + 1 - e.b;
    if (a > b) std::swap(a, b);
    edges.push_back({a, b, alg.bar(e.label)});
  }
  return LabeledDiagram(d.n(), edges);
}

/// Configuration of top-line arcs plus defect (propagating) positions.
struct HalfDiagram {
  int n = 0;
  std::vector<Edge> arcs;      // positions 1..n, sorted by min endpoint
  std::vector<Point> defects;  // increasing

  int defect_count() const { return static_cast<int>(defects.size()); }
  friend bool operator==(const HalfDiagram&, const HalfDiagram&) = default;
  friend bool operator<(const HalfDiagram& x, const HalfDiagram& y) {
    auto key = [](const HalfDiagram& h) {
      std::vector<std::pair<Point, Point>> a;
      std::vector<BasisIndex> l;
      for (const auto& e : h.arcs) {
        a.emplace_back(e.a, e.b);
        l.push_back(e.label);
      }
      return std::tuple(h.n, h.defects, a, l);
    };
    return key(x) < key(y);
  }
  std::string to_string() const {
    std::ostringstream os;
    os << "n=" << n << " arcs:";
    for (const auto& e : arcs) os << ' ' << e.a << '-' << e.b << ':' << e.label;
    os << " defects:";
    for (auto p : defects) os << ' ' << p;
    return os.str();
  }
};

/// Unlabeled half-diagrams with `defects` propagating points (arc labels 0).
inline std::vector<HalfDiagram> enumerate_half_diagrams(int n, int defects) {
  std::vector<HalfDiagram> out;
  if (defects < 0 || defects > n || (n - defects) % 2 != 0) return out;
  HalfDiagram cur;
  cur.n = n;
  std::vector<std::pair<Point, Point>> arcs;
  std::function<void(Point)> rec = [&](Point p) {
    if (p > n) {
      if (cur.defect_count() == defects) {
        HalfDiagram h = cur;
        for (auto [a, b] : arcs) h.arcs.push_back({a, b, 0});
        std::sort(h.arcs.begin(), h.arcs.end(), [](const Edge& x, const Edge& y) { return x.a < y.a; });
        out.push_back(std::move(h));
      }
      return;
    }
    if (cur.defect_count() < defects) {
      cur.defects.push_back(p);
      rec(p + 1);
      cur.defects.pop_back();
    }
    // an arc (p, q) enclosing a perfectly matched interval
    for (Point q = p + 1; q <= n; q += 2) {
      arcs.emplace_back(p, q);
      detail::interval_matchings(p + 1, q - 1, arcs, [&] { rec(q + 1); });
      arcs.pop_back();
    }
  };
  rec(1);
  std::sort(out.begin(), out.end());
  return out;
}

/// Every labeling of every half-diagram with the given defect count.
inline std::vector<HalfDiagram> enumerate_labeled_half_diagrams(int n, int defects, int rank) {
  std::vector<HalfDiagram> out;
  for (const auto& h : enumerate_half_diagrams(n, defects)) {
    const std::size_t k = h.arcs.size();
    std::vector<BasisIndex> labels(k, 0);
    while (true) {
      HalfDiagram x = h;
      for (std::size_t i = 0; i < k; ++i) x.arcs[i].label = labels[i];
      out.push_back(std::move(x));
      std::size_t i = 0;
      while (i < k && ++labels[i] == rank) labels[i++] = 0;
      if (i == k) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Builds C(S, b, T): arcs of S on top; T turned upside down with labels
/// barred; the k-th propagating edge (k from 1) carries b_k for odd k and
/// bar(b_k) for even k.
inline LabeledDiagram half_join(const HalfDiagram& top, const std::vector<BasisIndex>& b, const HalfDiagram& bottom,
                                const TableAlgebra& alg) {
  if (top.n != bottom.n) throw std::invalid_argument("half_join: strand-count mismatch");
  if (top.defect_count() != bottom.defect_count()) throw std::invalid_argument("half_join: defect count mismatch");
  if (static_cast<int>(b.size()) != top.defect_count()) throw std::invalid_argument("half_join: label count mismatch");
  const int n = top.n;
  const int np = 2 * n;
  std::vector<Edge> edges;
  for (const auto& e : top.arcs) edges.push_back({e.a, e.b, e.label});
  for (const auto& e : bottom.arcs) edges.push_back({np + 1 - e.b, np + 1 - e.a, alg.bar(e.label)});
  for (std::size_t k = 0; k < b.size(); ++k) {
    const BasisIndex lab = k % 2 == 0 ? b[k] : alg.bar(b[k]);
    edges.push_back({top.defects[k], np + 1 - bottom.defects[k], lab});
  }
  return LabeledDiagram(n, edges);
}

struct HalfSplit {
  HalfDiagram top;
  std::vector<BasisIndex> b;
  HalfDiagram bottom;
};

/// Inverse of half_join.
inline HalfSplit half_split(const LabeledDiagram& d, const TableAlgebra& alg) {
  const int n = d.n();
  const int np = 2 * n;
  HalfSplit s;
  s.top.n = n;
  s.bottom.n = n;
  for (const auto& e : d.edges()) {
    const bool ta = e.a <= n;
    const bool tb = e.b <= n;
    if (ta && tb) {
      s.top.arcs.push_back(e);
    } else if (!ta && !tb) {
      s.bottom.arcs.push_back({np + 1 - e.b, np + 1 - e.a, alg.bar(e.label)});
    }
  }
  std::sort(s.bottom.arcs.begin(), s.bottom.arcs.end(), [](const Edge& x, const Edge& y) { return x.a < y.a; });
  for (Point p = 1; p <= n; ++p) {
    const Point q = d.partner(p);
    if (q <= n) continue;
    const auto k = s.top.defects.size();
    s.top.defects.push_back(p);
    s.bottom.defects.push_back(np + 1 - q);
    s.b.push_back(k % 2 == 0 ? d.label(p) : alg.bar(d.label(p)));
  }
  return s;
}

}  // namespace hyperplanar
