#pragma once

#include <cstdint>
#include <vector>

#include "levels/matrix.hpp"
#include "levels/rational.hpp"

namespace levels {

/// n vectors in general position in R^r, stored as the columns of an r x n
/// matrix. Column indices are 0-based in this API.
class VectorConfig {
 public:
  /// Validates n >= r >= 1 and general position (every r x r minor nonzero).
  explicit VectorConfig(Mat vectors);

  int rank() const { return static_cast<int>(vectors_.rows()); }
  int size() const { return static_cast<int>(vectors_.cols()); }
  /// d = r - 1, the dimension of the sphere carrying the arrangement.
  int sphere_dim() const { return rank() - 1; }

  const Mat& matrix() const { return vectors_; }
  std::vector<Rat> column(int i) const { return vectors_.column(static_cast<std::size_t>(i)); }

  friend bool operator==(const VectorConfig&, const VectorConfig&) = default;

 private:
  Mat vectors_;
};

/// entries lists the n columns one after another (r values each).
VectorConfig new_config(int r, int n, const std::vector<Rat>& entries);

/// Columns (1, t_i, ..., t_i^{r-1}); params must be strictly increasing.
VectorConfig gen_cyclic(int n, int r, const std::vector<Rat>& params);
/// Same columns with column i (1-based) multiplied by (-1)^i.
VectorConfig gen_cocyclic(int n, int r, const std::vector<Rat>& params);
/// Uses t_i = i - 1.
VectorConfig gen_cyclic(int n, int r);
VectorConfig gen_cocyclic(int n, int r);

/// Seed-deterministic random configuration with integer entries in
/// [-100 n, 100 n]. Pointed configurations are lifts (1, p) of points p.
/// Retries up to 1000 times on general-position failure.
VectorConfig gen_random(int n, int r, std::uint64_t seed, bool pointed);

/// Rank n - r configuration W with V W^T = 0. Throws DimensionError if n == r.
VectorConfig gale_dual(const VectorConfig& v);

/// Deletion: drops column i.
VectorConfig delete_vector(const VectorConfig& v, int i);
/// Contraction: orthogonal projection of the other columns onto v_i^perp,
/// written in coordinates of a rational basis of v_i^perp. Needs r >= 2.
VectorConfig contract(const VectorConfig& v, int i);

/// Applies the invertible r x r matrix a to every column.
VectorConfig transform(const Mat& a, const VectorConfig& v);

/// Contained in an open linear halfspace.
bool is_pointed(const VectorConfig& v);

/// Whether the columns in subset lie on a linear hyperplane with all other
/// columns strictly on one side (checked against the dissection patterns).
bool is_extremal(const VectorConfig& v, const std::vector<int>& subset);
/// Same predicate decided from the dependency patterns instead: no
/// dependency pattern has its negative part inside the subset.
bool is_extremal_via_dependencies(const VectorConfig& v, const std::vector<int>& subset);

/// Largest j such that every subset of size <= j is extremal; -1 if not pointed.
int neighborliness_degree(const VectorConfig& v);
/// Largest k with f_{s,t} = 0 for all t <= k; -1 if pointed.
int coneighborliness_degree(const VectorConfig& v);

bool is_neighborly(const VectorConfig& v);
bool is_coneighborly(const VectorConfig& v);

}  // namespace levels
