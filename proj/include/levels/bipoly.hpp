#pragma once

#include <map>
#include <string>
#include <utility>

#include "levels/int_matrix.hpp"
#include "levels/rational.hpp"

namespace levels {

enum class Var { x, y };

/// Sparse bivariate polynomial in x, y with exact coefficients.
/// Zero coefficients are never stored, so equality is term-map equality.
class BiPoly {
 public:
  /// (degree in x, degree in y)
  using Monomial = std::pair<int, int>;

  BiPoly() = default;
  BiPoly(const Rat& c);  // NOLINT(google-explicit-constructor)
  BiPoly(long c) : BiPoly(Rat(c)) {}  // NOLINT(google-explicit-constructor)

  static BiPoly x() { return monomial(Rat(1), 1, 0); }
  static BiPoly y() { return monomial(Rat(1), 0, 1); }
  static BiPoly monomial(const Rat& c, int deg_x, int deg_y);

  /// Puts m(i, j) on the monomial row_var^i * col_var^j.
  static BiPoly from_matrix(const IntMatrix& m, Var row_var = Var::x, Var col_var = Var::y);

  const std::map<Monomial, Rat>& terms() const { return terms_; }
  Rat coeff(int deg_x, int deg_y) const;
  bool is_zero() const { return terms_.empty(); }
  int degree_x() const;
  int degree_y() const;

  /// p(sx, sy), fully expanded.
  BiPoly substitute(const BiPoly& sx, const BiPoly& sy) const;

  /// Coefficients as an integer matrix indexed (deg_x, deg_y). Throws
  /// InconsistentInputError if a coefficient is not integral or falls
  /// outside the window.
  IntMatrix to_matrix(std::size_t rows, std::size_t cols) const;

  /// Terms ordered by (deg_x, deg_y) descending, e.g. "30*x^2 + 60*x + 32".
  std::string str() const;

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& other);
  BiPoly& operator-=(const BiPoly& other);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend bool operator==(const BiPoly&, const BiPoly&) = default;

 private:
  void add_term(const Monomial& m, const Rat& c);
  std::map<Monomial, Rat> terms_;
};

BiPoly pow(const BiPoly& p, int e);

}  // namespace levels
