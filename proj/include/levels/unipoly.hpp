#pragma once

#include <span>
#include <utility>
#include <vector>

#include "levels/rational.hpp"

namespace levels {

/// Univariate polynomial with exact coefficients; coeffs()[i] multiplies t^i.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rat> coeffs);

  static UniPoly constant(const Rat& c) { return UniPoly({c}); }
  /// The polynomial t.
  static UniPoly identity() { return UniPoly({Rat(0), Rat(1)}); }
  /// Lagrange interpolation through (xs[i], ys[i]); xs must be distinct.
  static UniPoly interpolate(std::span<const Rat> xs, std::span<const Rat> ys);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  Rat coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rat(0); }
  const Rat& leading() const { return coeffs_.back(); }

  Rat operator()(const Rat& t) const;
  int sign_at(const Rat& t) const { return (*this)(t).sign(); }
  UniPoly derivative() const;

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Rat& c, const UniPoly& p);
  friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

/// Quotient and remainder; throws std::domain_error when b is zero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

/// Monic greatest common divisor (zero only if both inputs are zero).
UniPoly gcd(UniPoly a, UniPoly b);

/// p / gcd(p, p'), made monic.
UniPoly squarefree_part(const UniPoly& p);

/// Standard Sturm chain p, p', -rem(p, p'), ...
std::vector<UniPoly> sturm_sequence(const UniPoly& p);

int sign_variations(const std::vector<UniPoly>& chain, const Rat& t);

/// Number of distinct real roots of p in the open interval (lo, hi).
/// lo and hi must not be roots of p.
int count_distinct_roots(const UniPoly& p, const Rat& lo, const Rat& hi);

/// Open interval (lo, hi) isolating exactly one real root; lo and hi are
/// certified non-roots.
struct RootInterval {
  Rat lo;
  Rat hi;
  bool simple = true;

  Rat width() const { return hi - lo; }
  friend bool operator==(const RootInterval&, const RootInterval&) = default;
};

/// Isolates the real roots of p in (lo, hi), sorted left to right.
/// Throws DegeneratePolynomialError for p = 0 and BoundaryRootError when
/// p vanishes at lo or hi.
std::vector<RootInterval> isolate_roots(const UniPoly& p, const Rat& lo, const Rat& hi);

/// Halves the isolating interval. p must change sign across it (true for
/// any root of odd multiplicity, in particular for simple roots).
RootInterval refine(const UniPoly& p, const RootInterval& iv);

/// Sign of q at the root of p isolated by iv, refining iv in place until q
/// has constant sign on it. Returns 0 if q vanishes at that root.
int sign_at_root(const UniPoly& p, RootInterval& iv, const UniPoly& q);

}  // namespace levels
