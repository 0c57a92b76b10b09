// The Grothendieck group of Newton polygons.
//
// Every element is a finite combination of generators {alpha}, where
// {m/n} (gcd 1) is the Newton polygon of x^m + y^n, {0} that of x and
// {inf} that of y. Coefficients are integers or rationals.
#pragma once

#include "jacnewton/arith.hpp"

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace jacnewton {

/// A slope in Q_{>0} together with the two markers 0 and infinity.
class Slope {
 public:
  enum class Kind { zero = 0, finite = 1, infinity = 2 };

  /// m/n with m, n > 0, stored reduced.
  Slope(const Int& m, const Int& n);
  explicit Slope(const Rat& value);

  static Slope zero() { return Slope(Kind::zero); }
  static Slope infinity() { return Slope(Kind::infinity); }
  /// "0", "inf", "p" or "p/q".
  static Slope parse(const std::string& text);

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::finite; }
  /// Numerator/denominator of the generator [num; den]. For {0} this is
  /// [1; inf] and for {inf} it is [inf; 1]; the infinite side reads as 0 here.
  const Int& num() const { return num_; }
  const Int& den() const { return den_; }
  Rat value() const;

  std::string str() const;

  friend bool operator==(const Slope& a, const Slope& b) = default;
  friend std::strong_ordering operator<=>(const Slope& a, const Slope& b);

 private:
  explicit Slope(Kind k) : kind_(k), num_(k == Kind::infinity ? 0 : 1), den_(k == Kind::zero ? 0 : 1) {}
  Kind kind_;
  Int num_;
  Int den_;
};

/// Integer or rational value extended by -inf and +inf.
template <class C>
struct Extended {
  enum class Kind { neg_infinity, finite, pos_infinity };
  Kind kind = Kind::finite;
  C value = 0;

  bool is_finite() const { return kind == Kind::finite; }
  std::string str() const {
    switch (kind) {
      case Kind::neg_infinity: return "-inf";
      case Kind::pos_infinity: return "inf";
      default: return to_string(value);
    }
  }
  friend bool operator==(const Extended& a, const Extended& b) {
    return a.kind == b.kind && (a.kind != Kind::finite || a.value == b.value);
  }
};

/// Degree of an element: a slope, or -inf for the zero element.
class Degree {
 public:
  static Degree neg_infinity() { return Degree(); }
  Degree(const Slope& s) : slope_(s) {}  // NOLINT(google-explicit-constructor)

  bool is_neg_infinity() const { return !slope_.has_value(); }
  const Slope& slope() const {
    if (!slope_) throw std::domain_error("degree of the zero element is -inf");
    return *slope_;
  }
  std::string str() const { return slope_ ? slope_->str() : "-inf"; }

  friend bool operator==(const Degree& a, const Degree& b) = default;
  friend std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
    if (!a.slope_ || !b.slope_) return a.slope_.has_value() <=> b.slope_.has_value();
    return *a.slope_ <=> *b.slope_;
  }

 private:
  Degree() = default;
  std::optional<Slope> slope_;
};

template <class C>
class KNElement {
 public:
  using Coeff = C;
  using Terms = std::map<Slope, C>;

  KNElement() = default;

  static KNElement generator(const Slope& alpha, const C& coeff = C(1)) {
    KNElement e;
    e.add_term(alpha, coeff);
    return e;
  }

  /// [m; n] = gcd(m, n) {m/n}; [m; inf] = m {0}; [inf; n] = n {inf}.
  static KNElement from_pair(const ExtNat& m, const ExtNat& n) {
    if (m.is_infinite() && n.is_infinite()) throw std::invalid_argument("[inf; inf] is not a generator");
    if (m.is_infinite()) {
      if (n.value() == 0) throw std::invalid_argument("[inf; 0] is not a generator");
      return generator(Slope::infinity(), C(n.value()));
    }
    if (n.is_infinite()) {
      if (m.value() == 0) throw std::invalid_argument("[0; inf] is not a generator");
      return generator(Slope::zero(), C(m.value()));
    }
    if (m.value() <= 0 || n.value() <= 0) throw std::invalid_argument("[m; n] needs m, n > 0");
    const Int g = gcd(m.value(), n.value());
    return generator(Slope(m.value(), n.value()), C(g));
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  C coeff(const Slope& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? C(0) : it->second;
  }

  KNElement& add_term(const Slope& alpha, const C& coeff) {
    if (coeff == 0) return *this;
    auto [it, inserted] = terms_.try_emplace(alpha, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
    return *this;
  }

  KNElement& operator+=(const KNElement& other) {
    for (const auto& [a, c] : other.terms_) add_term(a, c);
    return *this;
  }
  KNElement& operator-=(const KNElement& other) {
    for (const auto& [a, c] : other.terms_) add_term(a, C(-c));
    return *this;
  }
  friend KNElement operator+(KNElement a, const KNElement& b) { return a += b; }
  friend KNElement operator-(KNElement a, const KNElement& b) { return a -= b; }
  KNElement operator-() const { return scale(C(-1)); }

  KNElement scale(const C& c) const {
    KNElement out;
    if (c == 0) return out;
    for (const auto& [a, x] : terms_) out.terms_.emplace(a, C(x * c));
    return out;
  }

  friend bool operator==(const KNElement& a, const KNElement& b) = default;

  template <class D>
  KNElement<D> cast() const {
    KNElement<D> out;
    for (const auto& [a, c] : terms_) out.add_term(a, D(c));
    return out;
  }

  std::set<Slope> support() const {
    std::set<Slope> s;
    for (const auto& [a, c] : terms_) s.insert(a);
    return s;
  }

  Degree degree() const {
    if (terms_.empty()) return Degree::neg_infinity();
    return Degree(terms_.rbegin()->first);
  }

  const C& leading_coeff() const {
    if (terms_.empty()) throw std::domain_error("leading coefficient of the zero element");
    return terms_.rbegin()->second;
  }

  KNElement truncate_geq(const Slope& alpha) const {
    KNElement out;
    out.terms_.insert(terms_.lower_bound(alpha), terms_.end());
    return out;
  }

  KNElement truncate_lt(const Slope& alpha) const {
    KNElement out;
    out.terms_.insert(terms_.begin(), terms_.lower_bound(alpha));
    return out;
  }

  /// Linear extension of h([m; n]) = n.
  Extended<C> height() const { return extended_sum(Slope::zero(), [](const Slope& s) { return s.den(); }); }
  /// Linear extension of l([m; n]) = m.
  Extended<C> length() const { return extended_sum(Slope::infinity(), [](const Slope& s) { return s.num(); }); }

  /// Points (l(A_{<alpha}), h(A_{>=alpha})) for alpha sweeping (0, inf],
  /// in increasing alpha. Consecutive points are the virtual edges.
  std::vector<std::pair<C, C>> virtual_vertices() const {
    require_finite_extent("virtual_vertices");
    std::vector<std::pair<C, C>> out;
    C len = 0;
    C hgt = height().value;
    out.emplace_back(len, hgt);
    for (const auto& [a, c] : terms_) {
      len += c * C(a.num());
      hgt -= c * C(a.den());
      if (out.back() != std::make_pair(len, hgt)) out.emplace_back(len, hgt);
    }
    return out;
  }

  /// Vertices of the actual Newton polygon sum_alpha a_alpha * Gamma_+(x^m + y^n)
  /// for a nonnegative integral element, computed as a Minkowski sum of
  /// generator polygons followed by a lower-left hull pass.
  std::vector<std::pair<Int, Int>> realize_polygon() const;

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [a, c] = *it;
      std::string cs = to_string(c);
      if (!out.empty()) {
        if (cs.front() == '-') {
          out += " - ";
          cs.erase(0, 1);
        } else {
          out += " + ";
        }
      }
      if (cs == "-1" && out.empty()) out += "-";
      else if (cs != "1") out += cs;
      out += "{" + a.str() + "}";
    }
    return out;
  }

 private:
  template <class F>
  Extended<C> extended_sum(const Slope& infinite_slope, F part) const {
    Extended<C> out;
    const C inf_coeff = coeff(infinite_slope);
    if (inf_coeff != 0) {
      out.kind = inf_coeff > 0 ? Extended<C>::Kind::pos_infinity : Extended<C>::Kind::neg_infinity;
      return out;
    }
    for (const auto& [a, c] : terms_) out.value += c * C(part(a));
    return out;
  }

  void require_finite_extent(const char* what) const {
    if (coeff(Slope::zero()) != 0 || coeff(Slope::infinity()) != 0)
      throw std::domain_error(std::string(what) + " requires finite height and length");
  }

  Terms terms_;
};

using KNInt = KNElement<Int>;
using KNRat = KNElement<Rat>;

namespace detail {
/// Vertices of the compact boundary of conv(points) + R^2_{>=0}, ordered by increasing x.
std::vector<std::pair<Int, Int>> newton_polygon_vertices(std::vector<std::pair<Int, Int>> points);
bool is_integral(const Int&);
bool is_integral(const Rat&);
Int to_int(const Int&);
Int to_int(const Rat&);
}  // namespace detail

template <class C>
std::vector<std::pair<Int, Int>> KNElement<C>::realize_polygon() const {
  std::vector<std::pair<Int, Int>> acc{{Int(0), Int(0)}};
  for (const auto& [a, c] : terms_) {
    if (c < 0) throw std::domain_error("realize_polygon: negative coefficient at {" + a.str() + "}");
    if (!detail::is_integral(c)) throw std::domain_error("realize_polygon: non-integral coefficient");
    const Int k = detail::to_int(c);
    std::vector<std::pair<Int, Int>> gen;
    switch (a.kind()) {
      case Slope::Kind::zero: gen = {{k, Int(0)}}; break;
      case Slope::Kind::infinity: gen = {{Int(0), k}}; break;
      default: gen = {{Int(0), Int(k * a.den())}, {Int(k * a.num()), Int(0)}}; break;
    }
    std::vector<std::pair<Int, Int>> sum;
    for (const auto& p : acc)
      for (const auto& q : gen) sum.emplace_back(p.first + q.first, p.second + q.second);
    acc = detail::newton_polygon_vertices(std::move(sum));
  }
  return acc;
}

}  // namespace jacnewton
