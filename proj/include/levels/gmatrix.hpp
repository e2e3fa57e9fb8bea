#pragma once

#include "levels/config.hpp"
#include "levels/faces.hpp"
#include "levels/int_matrix.hpp"
#include "levels/relations.hpp"

namespace levels {

/// g_{j,k}, 0 <= j <= r, 0 <= k <= n - r.
struct GMatrix {
  int n = 0;
  int r = 0;
  IntMatrix entries;

  static GMatrix zero(int n, int r);
  std::int64_t at(long j, long k) const { return entries.get(j, k); }
  /// Rows 0..floor((r-1)/2), columns 0..floor((n-r-1)/2).
  IntMatrix small() const;
  friend bool operator==(const GMatrix&, const GMatrix&) = default;
};

/// Rebuilds the full matrix from the small one by the skew-symmetries.
GMatrix expand_small(const IntMatrix& small, int n, int r);

/// g_{j,k} = -g_{r-j,k} = -g_{j,n-r-k} = g_{r-j,n-r-k}.
bool is_skew_symmetric(const GMatrix& g);

/// Delta f_{s,t} = sum_{j,k} C(j, t-k) C(r-j, s-j+t-k) g_{j,k}, shaped r x (n+1).
/// The binomial sum is checked against the expansion of
/// sum g_{j,k} (x+y)^j (1+x)^{r-j} y^k. Throws InconsistentInputError if the
/// x^r part of that expansion is nonzero (g not skew in j).
IntMatrix apply_T(const GMatrix& g);

/// Delta f* from -sum g_{j,k} (x+y)^k (x+1)^{n-r-k} y^j read as an
/// f*-polynomial; shaped (n+1) x (n+1).
IntMatrix apply_S(const GMatrix& g);

/// The unique skew-symmetric g with apply_T(g) = fW - fV, solved one column
/// at a time. Throws InconsistentInputError if the solution is not
/// integral, not skew-symmetric, or does not reproduce fW - fV.
GMatrix g_from_fmatrices(const FMatrix& fv, const FMatrix& fw);

/// Every entry of the small g-matrix is >= 0. Known to hold for
/// g(coneighborly -> V) at r = 3; only observed elsewhere.
bool small_part_nonnegative(const GMatrix& g);

/// Small g-matrix of any coneighborly -> neighborly pair.
IntMatrix g_closed_form_neighborly(int n, int r);

enum class MinorMode { contract, remove };

/// Compares sum_i g(V/v_i -> W/w_i) (or the deletions V \ v_i) with the
/// weighted combination of g(V -> W) entries, for every index in range.
RelationReport check_contraction_deletion(const VectorConfig& v, const VectorConfig& w, MinorMode mode);

}  // namespace levels
