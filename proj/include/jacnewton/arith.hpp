// Exact integer/rational scalars and the extended naturals used for weights.
#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace jacnewton {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

/// "p" for integers, "p/q" otherwise. Never scientific or decimal notation.
std::string to_string(const Int& value);
std::string to_string(const Rat& value);

/// Accepts "p" or "p/q" with optional leading sign; throws std::invalid_argument.
Rat parse_rational(std::string_view text);

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);
Int binomial(unsigned long n, unsigned long k);
Int factorial(unsigned long n);

RatVec to_rational(const IntVec& v);

/// Lexicographic comparison of integer vectors (lengths must agree).
std::strong_ordering lex_compare(const IntVec& a, const IntVec& b);

struct IntVecLess {
  bool operator()(const IntVec& a, const IntVec& b) const { return lex_compare(a, b) < 0; }
};

/// A nonnegative integer or +infinity.
class ExtNat {
 public:
  ExtNat() = default;
  ExtNat(const Int& value);  // NOLINT(google-explicit-constructor)
  ExtNat(long value);        // NOLINT(google-explicit-constructor)

  static ExtNat infinity();

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }
  /// Only meaningful for finite values.
  const Int& value() const;

  /// c * inf = inf for c > 0 and 0 * inf = 0.
  ExtNat times(const Int& c) const;
  friend ExtNat operator+(const ExtNat& a, const ExtNat& b);

  friend bool operator==(const ExtNat& a, const ExtNat& b);
  friend std::strong_ordering operator<=>(const ExtNat& a, const ExtNat& b);

  /// "inf" or the decimal integer.
  std::string str() const;

 private:
  bool infinite_ = false;
  Int value_ = 0;
};

std::ostream& operator<<(std::ostream& os, const ExtNat& x);

}  // namespace jacnewton
