#include "levels/relations.hpp"

#include <stdexcept>

#include "levels/combinatorics.hpp"
#include "levels/errors.hpp"

namespace levels {

std::int64_t total_face_count(int n, int d, int s) {
  if (d < 0 || s < 0 || s > d) throw DimensionError("total_face_count needs 0 <= s <= d");
  if (n < d + 1) throw DimensionError("total_face_count needs n >= d + 1");
  std::int64_t first = 0;
  for (int i = 0; i <= d - s; ++i) first += binom(n - s - 1, i);
  first *= 2 * binom(n, s);
  std::int64_t second = 0;
  for (int i = 0; i <= d; i += 2) second += 2 * binom(n, d - i) * binom(d - i, s);
  if (first != second) throw std::logic_error("closed forms for the face totals disagree");
  return first;
}

RelationReport check_antipodal(const FMatrix& f) {
  RelationReport report{"antipodal", true, std::nullopt};
  for (long s = 0; s <= f.d(); ++s) {
    for (long t = 0; t <= f.n; ++t) {
      const auto lhs = f.at(s, t);
      const auto rhs = f.at(s, f.n - s - t);
      if (lhs != rhs) {
        report.holds = false;
        report.witness = Witness{s, t,
                                 "f[" + std::to_string(s) + "][" + std::to_string(t) + "] = " + std::to_string(lhs) +
                                     " but f[" + std::to_string(s) + "][" + std::to_string(f.n - s - t) +
                                     "] = " + std::to_string(rhs)};
        return report;
      }
    }
  }
  return report;
}

RelationReport check_antipodal(const VectorConfig& v) { return check_antipodal(f_matrix(v)); }

RelationReport check_totals(const FMatrix& f) {
  RelationReport report{"totals", true, std::nullopt};
  for (long s = 0; s <= f.d(); ++s) {
    const auto expected = total_face_count(f.n, f.d(), static_cast<int>(s));
    const auto actual = f.counts.row_sum(static_cast<std::size_t>(s));
    if (expected != actual) {
      report.holds = false;
      report.witness = Witness{s, 0,
                               "row " + std::to_string(s) + " sums to " + std::to_string(actual) + ", expected " +
                                   std::to_string(expected)};
      return report;
    }
  }
  return report;
}

RelationReport check_totals(const VectorConfig& v) { return check_totals(f_matrix(v)); }

DehnSommervilleResiduals dehn_sommerville_residuals(const IntMatrix& f, int n, int d) {
  const auto rows = static_cast<std::size_t>(d + 1);
  const auto cols = static_cast<std::size_t>(n + d + 1);
  const long sign = d % 2 == 0 ? 1 : -1;

  const BiPoly p = BiPoly::from_matrix(f);
  const BiPoly reflected = p.substitute(-(BiPoly::x() + BiPoly::y() + BiPoly(1)), BiPoly::y());
  const BiPoly diff = p - BiPoly(Rat(sign)) * reflected;

  DehnSommervilleResiduals out{diff.to_matrix(rows, cols), IntMatrix(rows, cols)};
  for (long s = 0; s <= d; ++s) {
    for (long t = 0; t < static_cast<long>(cols); ++t) {
      std::int64_t rhs = 0;
      for (long j = s; j <= d; ++j) {
        const std::int64_t parity = (d - j) % 2 == 0 ? 1 : -1;
        for (long l = 0; l <= t; ++l) {
          const auto entry = f.get(j, l);
          if (entry != 0) rhs += parity * binom(j, s) * binom(j - s, t - l) * entry;
        }
      }
      out.coefficient(static_cast<std::size_t>(s), static_cast<std::size_t>(t)) = f.get(s, t) - rhs;
    }
  }
  return out;
}

RelationReport check_dehn_sommerville(const FMatrix& f) {
  RelationReport report{"ds", true, std::nullopt};
  const auto residuals = dehn_sommerville_residuals(f.counts, f.n, f.d());
  const auto& sub = residuals.substitution;
  const auto& coef = residuals.coefficient;
  for (std::size_t s = 0; s < coef.rows(); ++s) {
    for (std::size_t t = 0; t < coef.cols(); ++t) {
      if (sub(s, t) == 0 && coef(s, t) == 0) continue;
      report.holds = false;
      std::string detail = "residual at (" + std::to_string(s) + ", " + std::to_string(t) + "): substitution " +
                           std::to_string(sub(s, t)) + ", coefficient sum " + std::to_string(coef(s, t));
      report.witness = Witness{static_cast<long>(s), static_cast<long>(t), std::move(detail)};
      return report;
    }
  }
  return report;
}

RelationReport check_dehn_sommerville(const VectorConfig& v) { return check_dehn_sommerville(f_matrix(v)); }

BiPoly f_fstar_transform(const BiPoly& p, int n, int r, Direction direction) {
  const bool forward = direction == Direction::f_to_fstar;
  for (const auto& [m, c] : p.terms()) {
    if (m.first + m.second > n || (forward && m.first > r - 1)) {
      throw DimensionError("term x^" + std::to_string(m.first) + " y^" + std::to_string(m.second) +
                           " lies outside the window for n=" + std::to_string(n) + ", r=" + std::to_string(r));
    }
  }
  const BiPoly x = BiPoly::x();
  const BiPoly y = BiPoly::y();
  const BiPoly x1 = x + BiPoly(1);
  const BiPoly xy = x + y;

  BiPoly cleared;
  for (const auto& [m, c] : p.terms()) {
    const auto [a, b] = m;
    BiPoly term = BiPoly(c) * pow(-x, a) * pow(xy, b) * pow(x1, n - a - b);
    cleared += term;
  }
  const int e = forward ? r : n - r;
  const BiPoly xn = pow(x, n);
  return pow(xy + BiPoly(1), n) - (e % 2 == 0 ? xn : -xn) - cleared;
}

}  // namespace levels
