#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

namespace levels {

/// Exact rational number, always kept in canonical form (den > 0, gcd = 1).
class Rat {
 public:
  Rat() = default;
  Rat(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rat(long num, long den);
  Rat(const mpz_class& num, const mpz_class& den);
  explicit Rat(const mpz_class& integer) : value_(integer) {}
  explicit Rat(mpq_class value);

  /// Parses "p" or "p/q" (q > 0); the result is reduced.
  static Rat parse(std::string_view text);

  /// Canonical text: "p" for integers, otherwise "p/q".
  std::string str() const { return value_.get_str(); }

  mpz_class num() const { return value_.get_num(); }
  mpz_class den() const { return value_.get_den(); }
  const mpq_class& value() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  Rat operator-() const { return Rat(mpq_class(-value_)); }

  Rat& operator+=(const Rat& other) {
    value_ += other.value_;
    return *this;
  }
  Rat& operator-=(const Rat& other) {
    value_ -= other.value_;
    return *this;
  }
  Rat& operator*=(const Rat& other) {
    value_ *= other.value_;
    return *this;
  }
  /// Throws std::domain_error on division by zero.
  Rat& operator/=(const Rat& other);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

 private:
  mpq_class value_;
};

inline Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

/// Midpoint (a + b) / 2.
inline Rat midpoint(const Rat& a, const Rat& b) { return (a + b) / Rat(2); }

}  // namespace levels
