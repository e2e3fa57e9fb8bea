#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "levels/config.hpp"
#include "levels/rational.hpp"

namespace levels {

enum class SpanMode { general, pointed };

struct SpanReport {
  int n = 0;
  int r = 0;
  SpanMode mode = SpanMode::general;
  std::size_t samples_used = 0;
  std::size_t achieved_rank = 0;
  std::size_t theoretical_dim = 0;
  /// Skew-symmetry of every sampled g (and a zero top row in pointed mode).
  bool structure_holds = true;
  /// Descriptions of the samples picked by greedy_basis.
  std::vector<std::string> basis_seeds;

  bool reached() const { return achieved_rank == theoretical_dim; }
};

/// floor((r+1)/2) floor((n-r+1)/2), or floor((r-1)/2) floor((n-r+1)/2) when pointed.
std::size_t theoretical_dim(int n, int r, SpanMode mode);

/// Indices of a maximal independent subfamily, chosen greedily in order.
std::vector<std::size_t> greedy_basis(const std::vector<std::vector<Rat>>& vectors);

struct SpanSample {
  VectorConfig config;
  std::string origin;
};

/// The base configuration cyclic(n, r) first, then the cocyclic
/// configuration and the gap configurations of a perturbed cocyclic -> cyclic
/// motion (general mode) or a mutation-rich pointed path (pointed mode),
/// followed by `random` seeded random configurations.
std::vector<SpanSample> span_samples(int n, int r, SpanMode mode, std::size_t random, std::uint64_t seed);

/// Rank of the small g-matrices g(V_0 -> V_i); row 0 is dropped when pointed.
SpanReport g_span_rank(int n, int r, SpanMode mode, std::size_t samples, std::uint64_t seed);
/// Rank of f(V_i) - f(V_0).
SpanReport f_affine_span_rank(int n, int r, SpanMode mode, std::size_t samples, std::uint64_t seed);
/// Rank of f*(V_i) - f*(V_0).
SpanReport fstar_affine_span_rank(int n, int r, SpanMode mode, std::size_t samples, std::uint64_t seed);

}  // namespace levels
