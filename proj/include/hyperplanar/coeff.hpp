// Exact coefficient rings: Laurent polynomials Z[v, v^-1] and the field Q(sqrt 2).

#pragma once

#include <algorithm>
#include <cctype>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hyperplanar {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Laurent polynomial in v with arbitrary-precision integer coefficients.
///
/// Terms are kept sorted by ascending exponent with no zero coefficients, so
/// structural equality is ring equality.
class LaurentInt {
 public:
  using Term = std::pair<int, BigInt>;

  LaurentInt() = default;
  LaurentInt(long long c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.emplace_back(0, BigInt(c));
  }
  explicit LaurentInt(BigInt c) {
    if (c != 0) terms_.emplace_back(0, std::move(c));
  }

  /// c * v^k
  static LaurentInt monomial(int k, BigInt c = 1) {
    LaurentInt r;
    if (c != 0) r.terms_.emplace_back(k, std::move(c));
    return r;
  }
  static LaurentInt v() { return monomial(1); }
  /// delta = [2] = v + v^-1
  static LaurentInt delta() { return monomial(-1) + monomial(1); }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const { return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1; }

  BigInt coefficient(int k) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                               [](const Term& t, int e) { return t.first < e; });
    if (it != terms_.end() && it->first == k) return it->second;
    return 0;
  }
  BigInt constant_term() const { return coefficient(0); }

  /// Highest exponent with a nonzero coefficient; nullopt encodes -infinity.
  std::optional<int> degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.back().first;
  }
  std::optional<int> low_degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.front().first;
  }
  /// Membership in A^- = Z[v^-1].
  bool in_Aminus() const { return terms_.empty() || terms_.back().first <= 0; }
  /// Membership in v^-1 A^-.
  bool in_vinv_Aminus() const { return terms_.empty() || terms_.back().first < 0; }
  /// a == c (mod v^-1 A^-)
  bool congruent_mod_vinv_Aminus(long long c) const { return (*this - LaurentInt(c)).in_vinv_Aminus(); }

  LaurentInt bar() const {
    LaurentInt r;
    r.terms_.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) r.terms_.emplace_back(-it->first, it->second);
    return r;
  }
  /// Multiply by v^k.
  LaurentInt shifted(int k) const {
    LaurentInt r = *this;
    for (auto& t : r.terms_) t.first += k;
    return r;
  }
  /// Terms with exponent < 0 only.
  LaurentInt negative_part() const {
    LaurentInt r;
    for (const auto& t : terms_)
      if (t.first < 0) r.terms_.push_back(t);
    return r;
  }
  /// Substitute v -> x (mod p); used for evaluation-based rank checks.
  unsigned long long eval_mod(unsigned long long x, unsigned long long xinv, unsigned long long p) const;

  LaurentInt operator-() const {
    LaurentInt r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }
  LaurentInt& operator+=(const LaurentInt& o) {
    if (o.terms_.empty()) return *this;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
      if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
        out.push_back(std::move(*a++));
      } else if (a == terms_.end() || b->first < a->first) {
        out.push_back(*b++);
      } else {
        BigInt c = a->second + b->second;
        if (c != 0) out.emplace_back(a->first, std::move(c));
        ++a;
        ++b;
      }
    }
    terms_ = std::move(out);
    return *this;
  }
  LaurentInt& operator-=(const LaurentInt& o) { return *this += -o; }
  LaurentInt& operator*=(const LaurentInt& o) {
    *this = *this * o;
    return *this;
  }

  friend LaurentInt operator+(LaurentInt a, const LaurentInt& b) { return a += b; }
  friend LaurentInt operator-(LaurentInt a, const LaurentInt& b) { return a -= b; }
  friend LaurentInt operator*(const LaurentInt& a, const LaurentInt& b) {
    LaurentInt r;
    if (a.terms_.empty() || b.terms_.empty()) return r;
    if (a.terms_.size() == 1 && a.terms_[0].second == 1) return b.shifted(a.terms_[0].first);
    if (b.terms_.size() == 1 && b.terms_[0].second == 1) return a.shifted(b.terms_[0].first);
    const int lo = a.terms_.front().first + b.terms_.front().first;
    const int hi = a.terms_.back().first + b.terms_.back().first;
    std::vector<BigInt> dense(static_cast<std::size_t>(hi - lo + 1));
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) dense[static_cast<std::size_t>(ea + eb - lo)] += ca * cb;
    for (std::size_t i = 0; i < dense.size(); ++i)
      if (dense[i] != 0) r.terms_.emplace_back(lo + static_cast<int>(i), std::move(dense[i]));
    return r;
  }
  friend LaurentInt operator*(const LaurentInt& a, long long c) { return a * LaurentInt(c); }

  LaurentInt pow(unsigned e) const {
    LaurentInt r(1);
    for (unsigned i = 0; i < e; ++i) r *= *this;
    return r;
  }

  friend bool operator==(const LaurentInt& a, const LaurentInt& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LaurentInt& a, const LaurentInt& b) { return !(a == b); }
  friend bool operator<(const LaurentInt& a, const LaurentInt& b) { return a.terms_ < b.terms_; }

  /// Descending exponents, e.g. `2v^3 - 1 + v^-2`; the zero polynomial prints as `0`.
  std::string to_string() const;
  static LaurentInt parse(std::string_view text);

  friend std::ostream& operator<<(std::ostream& os, const LaurentInt& a) { return os << a.to_string(); }

 private:
  std::vector<Term> terms_;
};

inline unsigned long long LaurentInt::eval_mod(unsigned long long x, unsigned long long xinv,
                                               unsigned long long p) const {
  using u128 = unsigned __int128;
  auto powmod = [p](unsigned long long b, int e) {
    unsigned long long r = 1;
    while (e > 0) {
      if (e & 1) r = static_cast<unsigned long long>(static_cast<u128>(r) * b % p);
      b = static_cast<unsigned long long>(static_cast<u128>(b) * b % p);
      e >>= 1;
    }
    return r;
  };
  unsigned long long acc = 0;
  for (const auto& [e, c] : terms_) {
    BigInt cm = c % p;
    if (cm < 0) cm += p;
    const auto cv = cm.convert_to<unsigned long long>();
    const auto pw = e >= 0 ? powmod(x, e) : powmod(xinv, -e);
    acc = static_cast<unsigned long long>((static_cast<u128>(cv) * pw + acc) % p);
  }
  return acc;
}

inline std::string LaurentInt::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool neg = c < 0;
    const BigInt mag = neg ? BigInt(-c) : c;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag;
    os << 'v';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

inline LaurentInt LaurentInt::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw ParseError("empty Laurent polynomial");
  LaurentInt result;
  std::size_t i = 0;
  auto read_int = [&](std::size_t& pos) -> std::optional<std::string> {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) return std::nullopt;
    return s.substr(start, pos - start);
  };
  bool first = true;
  while (i < s.size()) {
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') {
      neg = s[i] == '-';
      ++i;
    } else if (!first) {
      throw ParseError("expected '+' or '-' in Laurent polynomial: " + s);
    }
    first = false;
    auto digits = read_int(i);
    BigInt coef = digits ? BigInt(*digits) : BigInt(1);
    int exp = 0;
    if (i < s.size() && s[i] == 'v') {
      ++i;
      exp = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        bool eneg = false;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
          eneg = s[i] == '-';
          ++i;
        }
        auto ed = read_int(i);
        if (!ed) throw ParseError("missing exponent in Laurent polynomial: " + s);
        exp = std::stoi(*ed) * (eneg ? -1 : 1);
      }
    } else if (!digits) {
      throw ParseError("malformed term in Laurent polynomial: " + s);
    }
    result += monomial(exp, neg ? BigInt(-coef) : coef);
  }
  return result;
}

/// Element a + b*sqrt(2) of Q(sqrt 2).
class QSqrt2 {
 public:
  QSqrt2() = default;
  QSqrt2(Rational rational, Rational sqrt2 = 0) : a_(std::move(rational)), b_(std::move(sqrt2)) {}  // NOLINT
  static QSqrt2 sqrt2() { return {0, 1}; }

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt2_part() const { return b_; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  friend QSqrt2 operator+(const QSqrt2& x, const QSqrt2& y) { return {x.a_ + y.a_, x.b_ + y.b_}; }
  friend QSqrt2 operator-(const QSqrt2& x, const QSqrt2& y) { return {x.a_ - y.a_, x.b_ - y.b_}; }
  friend QSqrt2 operator*(const QSqrt2& x, const QSqrt2& y) {
    return {x.a_ * y.a_ + 2 * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_};
  }
  QSqrt2 inverse() const {
    const Rational norm = a_ * a_ - 2 * b_ * b_;
    if (norm == 0) throw std::domain_error("QSqrt2: inverse of zero");
    return {a_ / norm, -b_ / norm};
  }
  friend QSqrt2 operator/(const QSqrt2& x, const QSqrt2& y) { return x * y.inverse(); }
  friend bool operator==(const QSqrt2& x, const QSqrt2& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  friend bool operator!=(const QSqrt2& x, const QSqrt2& y) { return !(x == y); }

  friend std::ostream& operator<<(std::ostream& os, const QSqrt2& x) {
    return os << x.a_ << " + " << x.b_ << "*sqrt2";
  }

 private:
  Rational a_ = 0;
  Rational b_ = 0;
};

}  // namespace hyperplanar
