#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "levels/bipoly.hpp"
#include "levels/config.hpp"
#include "levels/faces.hpp"
#include "levels/int_matrix.hpp"

namespace levels {

struct Witness {
  long s = 0;
  long t = 0;
  std::string detail;
};

struct RelationReport {
  std::string relation;
  bool holds = true;
  std::optional<Witness> witness;
};

/// Number of (d-s)-dimensional faces of a simple arrangement of n great
/// spheres in S^d. Both closed forms are evaluated and must agree.
std::int64_t total_face_count(int n, int d, int s);

/// f_{s,t} = f_{s,n-s-t}.
RelationReport check_antipodal(const FMatrix& f);
RelationReport check_antipodal(const VectorConfig& v);

/// Row sums of f against total_face_count.
RelationReport check_totals(const FMatrix& f);
RelationReport check_totals(const VectorConfig& v);

/// Dehn-Sommerville residuals f - (-1)^d f(-(x+y+1), y) on the window
/// 0 <= s <= d, 0 <= t <= n + d, once through polynomial substitution and
/// once through the binomial coefficient sums.
struct DehnSommervilleResiduals {
  IntMatrix substitution;
  IntMatrix coefficient;
};
DehnSommervilleResiduals dehn_sommerville_residuals(const IntMatrix& f, int n, int d);

/// Holds when both residuals vanish. A disagreement between the two forms
/// is reported as a failure too.
RelationReport check_dehn_sommerville(const FMatrix& f);
RelationReport check_dehn_sommerville(const VectorConfig& v);

enum class Direction { f_to_fstar, fstar_to_f };

/// (x+y+1)^n - (-1)^e x^n - (x+1)^n p(-x/(x+1), (x+y)/(x+1)) with e = r for
/// f -> f* and e = n - r for f* -> f. Throws DimensionError when p has a
/// term x^a y^b with a + b > n (or a > d for an f-polynomial).
BiPoly f_fstar_transform(const BiPoly& p, int n, int r, Direction direction);

}  // namespace levels
