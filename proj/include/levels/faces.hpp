#pragma once

#include <cstdint>
#include <vector>

#include "levels/bipoly.hpp"
#include "levels/config.hpp"
#include "levels/int_matrix.hpp"
#include "levels/sign_vector.hpp"

namespace levels {

/// Sorted, duplicate-free list of sign vectors.
using PatternSet = std::vector<SignVector>;

/// f_{s,t}: number of dissection patterns with |F_0| = s and |F_-| = t.
/// Stored in the (d+1) x (n+1) window; at() returns 0 outside it.
struct FMatrix {
  int n = 0;
  int r = 0;
  IntMatrix counts;

  int d() const { return r - 1; }
  std::int64_t at(long s, long t) const { return counts.get(s, t); }
  friend bool operator==(const FMatrix&, const FMatrix&) = default;
};

/// f*_{s,t}: number of dependency patterns with |F_+| + |F_-| = s and
/// |F_-| = t. Stored densely as (n+1) x (n+1); nonzero only for s >= r+1.
struct FStarMatrix {
  int n = 0;
  int r = 0;
  IntMatrix counts;

  std::int64_t at(long s, long t) const { return counts.get(s, t); }
  friend bool operator==(const FStarMatrix&, const FStarMatrix&) = default;
};

/// All sign vectors (sgn<v_1,u>, ..., sgn<v_n,u>) over nonzero u.
///
/// Every face of the (simple) arrangement has a vertex in its closure, so
/// the faces are exactly the sign vectors obtained at a vertex by choosing
/// arbitrary signs on the d hyperplanes through it. The vertices are the
/// two unit normals of each d-subset of the columns.
PatternSet dissection_patterns(const VectorConfig& v);

/// Sign vectors of nontrivial linear dependencies, computed as the
/// dissection patterns of the Gale dual. Empty when n == r.
PatternSet dependency_patterns(const VectorConfig& v);

/// Dependency patterns by the Farkas characterisation: every nonzero F such
/// that no dissection pattern G satisfies F <= G. Enumerates 3^n sign
/// vectors; throws BudgetExceededError for n > kFarkasMaxSize.
PatternSet farkas_complement_oracle(const VectorConfig& v);
inline constexpr int kFarkasMaxSize = 9;

FMatrix f_matrix(const PatternSet& patterns, int n, int r);
FMatrix f_matrix(const VectorConfig& v);
FStarMatrix fstar_matrix(const PatternSet& patterns, int n, int r);
FStarMatrix fstar_matrix(const VectorConfig& v);

/// f_V(x, y) = sum f_{s,t} x^s y^t.
BiPoly f_polynomial(const FMatrix& f);
/// f*_V(x, y) = sum f*_{s,t} x^{n-s} y^t.
BiPoly fstar_polynomial(const FStarMatrix& f);
/// Inverse of fstar_polynomial.
FStarMatrix fstar_from_polynomial(const BiPoly& p, int n, int r);

}  // namespace levels
