#include "jacnewton/arith.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace jacnewton {

std::string to_string(const Int& value) { return value.get_str(); }

std::string to_string(const Rat& value) {
  // mpq_class prints "p" when the denominator is 1 and "p/q" otherwise.
  return value.get_str();
}

Rat parse_rational(std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  auto strip_plus = [](std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return std::string(s);
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_int(text)) throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
    return Rat(Int(strip_plus(text)));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den.front() == '-' || den.front() == '+')
    throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
  const Int d{std::string(den)};
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rat r(Int(strip_plus(num)), d);
  r.canonicalize();
  return r;
}

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

RatVec to_rational(const IntVec& v) {
  RatVec out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

std::strong_ordering lex_compare(const IntVec& a, const IntVec& b) {
  const auto n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int c = cmp(a[i], b[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return a.size() <=> b.size();
}

ExtNat::ExtNat(const Int& value) : value_(value) {
  if (value < 0) throw std::invalid_argument("ExtNat must be nonnegative");
}

ExtNat::ExtNat(long value) : ExtNat(Int(value)) {}

ExtNat ExtNat::infinity() {
  ExtNat x;
  x.infinite_ = true;
  return x;
}

const Int& ExtNat::value() const {
  if (infinite_) throw std::domain_error("value() of infinite ExtNat");
  return value_;
}

ExtNat ExtNat::times(const Int& c) const {
  if (c < 0) throw std::invalid_argument("ExtNat scaled by a negative integer");
  if (c == 0) return ExtNat(0);
  if (infinite_) return infinity();
  return ExtNat(Int(value_ * c));
}

ExtNat operator+(const ExtNat& a, const ExtNat& b) {
  if (a.infinite_ || b.infinite_) return ExtNat::infinity();
  return ExtNat(Int(a.value_ + b.value_));
}

bool operator==(const ExtNat& a, const ExtNat& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtNat& a, const ExtNat& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
  const int c = cmp(a.value_, b.value_);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::string ExtNat::str() const { return infinite_ ? "inf" : value_.get_str(); }

std::ostream& operator<<(std::ostream& os, const ExtNat& x) { return os << x.str(); }

}  // namespace jacnewton
