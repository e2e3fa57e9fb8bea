#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "levels/config.hpp"
#include "levels/gmatrix.hpp"
#include "levels/int_matrix.hpp"
#include "levels/unipoly.hpp"

namespace levels {

/// V(t) = (1 - t) V + t W.
class LinearMotion {
 public:
  LinearMotion(const VectorConfig& start, const VectorConfig& end);

  const VectorConfig& start() const { return start_; }
  const VectorConfig& end() const { return end_; }
  int rank() const { return start_.rank(); }
  int size() const { return start_.size(); }

  /// Columns of V(t); not necessarily in general position.
  Mat at(const Rat& t) const;
  /// det of the columns in subset as a polynomial in t (degree <= r).
  UniPoly det_polynomial(const std::vector<int>& subset) const;

 private:
  VectorConfig start_;
  VectorConfig end_;
};

struct MutationEvent {
  /// 0-based, increasing.
  std::vector<int> subset;
  RootInterval interval;
  /// Canonical representative of (j, k) == (r - j, n - r - k), the smaller pair.
  std::pair<int, int> type;
  /// Sign of det over the subset just before and just after the root.
  int sign_before = 0;
  int sign_after = 0;
  /// Rational point after the root with no other root in between.
  Rat sample;
};

struct MotionPath {
  VectorConfig start;
  VectorConfig end;
  std::vector<MutationEvent> events;
};

/// Finds and classifies every mutation of the straight-line motion from v to
/// w. Throws GenericityError (naming the subsets) when a root is multiple,
/// when two subsets vanish at the same time, or when a vertex of a created
/// simplex degenerates at the root.
MotionPath detect_mutations(const VectorConfig& v, const VectorConfig& w);

/// Type (j, k) of the simplex created by the mutation of subset at the root
/// isolated by interval, read off at sample. With antipodal = true the
/// opposite simplex is used, giving (r - j, n - r - k).
std::pair<int, int> classify_event(const LinearMotion& motion, const std::vector<int>& subset,
                                   const RootInterval& interval, const Rat& sample, bool antipodal = false);

/// g-matrix of a single mutation of type (j, k).
GMatrix mutation_increment(int n, int r, int j, int k);

GMatrix g_from_events(int n, int r, const std::vector<MutationEvent>& events);

/// g by summing mutation increments along the straight-line motion. The
/// result is checked against g_from_fmatrices; a mismatch throws
/// std::logic_error.
GMatrix g_from_motion(const VectorConfig& v, const VectorConfig& w);

/// Every entry moved by a seeded rational of absolute value <= magnitude.
/// Retries until the result is in general position.
VectorConfig perturb(const VectorConfig& w, std::uint64_t seed, const Rat& magnitude = Rat(1, 1000000));

/// f_W - f_V across one mutation of type (j, k), shaped r x (n + 1).
IntMatrix mutation_delta_f(int n, int r, int j, int k);

struct MutationRichPath {
  /// Pointed configurations; consecutive ones differ by one mutation.
  std::vector<VectorConfig> configs;
  /// types[i] is the canonical type of the mutation configs[i] -> configs[i+1].
  std::vector<std::pair<int, int>> types;
};

/// Pointed path whose mutations include every type (j, k) with
/// 1 <= j <= floor((r-1)/2), 0 <= k <= floor((n-r-1)/2). For r < 3 the path
/// is the single configuration cyclic(n, r).
MutationRichPath mutation_rich_path(int n, int r, std::uint64_t seed);

}  // namespace levels
