#include "levels/span.hpp"

#include <functional>

#include "levels/errors.hpp"
#include "levels/faces.hpp"
#include "levels/gmatrix.hpp"
#include "levels/motion.hpp"

namespace levels {

namespace {

std::vector<Rat> flatten(const IntMatrix& m, std::size_t first_row = 0) {
  std::vector<Rat> out;
  for (std::size_t i = first_row; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.emplace_back(static_cast<long>(m(i, j)));
  return out;
}

// Gap configurations of the straight-line motion from cocyclic to a
// slightly perturbed cyclic configuration (the unperturbed line passes
// through the origin).
std::vector<SpanSample> cocyclic_path(int n, int r, std::uint64_t seed) {
  const VectorConfig from = gen_cocyclic(n, r);
  for (std::uint64_t attempt = 0; attempt < 20; ++attempt) {
    const VectorConfig to = perturb(gen_cyclic(n, r), seed + attempt);
    try {
      const MotionPath path = detect_mutations(from, to);
      const LinearMotion motion(from, to);
      std::vector<SpanSample> out;
      for (std::size_t i = 0; i < path.events.size(); ++i) {
        out.push_back({VectorConfig(motion.at(path.events[i].sample)), "cocyclic-path[" + std::to_string(i) + "]"});
      }
      return out;
    } catch (const GenericityError&) {
    }
  }
  throw BudgetExceededError("no generic cocyclic -> cyclic motion found");
}

SpanReport rank_report(int n, int r, SpanMode mode, const std::vector<SpanSample>& samples,
                       const std::function<std::vector<Rat>(const VectorConfig&)>& vectorize) {
  SpanReport report;
  report.n = n;
  report.r = r;
  report.mode = mode;
  report.theoretical_dim = theoretical_dim(n, r, mode);
  report.samples_used = samples.size();
  std::vector<std::vector<Rat>> rows;
  for (const SpanSample& s : samples) rows.push_back(vectorize(s.config));
  const auto basis = greedy_basis(rows);
  report.achieved_rank = basis.size();
  for (std::size_t i : basis) report.basis_seeds.push_back(samples[i].origin);
  return report;
}

}  // namespace

std::size_t theoretical_dim(int n, int r, SpanMode mode) {
  const int rows = mode == SpanMode::pointed ? (r - 1) / 2 : (r + 1) / 2;
  return static_cast<std::size_t>(rows * ((n - r + 1) / 2));
}

std::vector<std::size_t> greedy_basis(const std::vector<std::vector<Rat>>& vectors) {
  // Reduced rows kept with their pivot columns.
  std::vector<std::pair<std::vector<Rat>, std::size_t>> echelon;
  std::vector<std::size_t> chosen;
  for (std::size_t idx = 0; idx < vectors.size(); ++idx) {
    std::vector<Rat> v = vectors[idx];
    for (const auto& [row, pivot] : echelon) {
      if (v[pivot].is_zero()) continue;
      const Rat factor = v[pivot];
      for (std::size_t c = 0; c < v.size(); ++c) v[c] -= factor * row[c];
    }
    std::size_t pivot = 0;
    while (pivot < v.size() && v[pivot].is_zero()) ++pivot;
    if (pivot == v.size()) continue;
    const Rat lead = v[pivot];
    for (Rat& c : v) c /= lead;
    for (auto& [row, p] : echelon) {
      if (row[pivot].is_zero()) continue;
      const Rat factor = row[pivot];
      for (std::size_t c = 0; c < row.size(); ++c) row[c] -= factor * v[c];
    }
    echelon.emplace_back(std::move(v), pivot);
    chosen.push_back(idx);
  }
  return chosen;
}

std::vector<SpanSample> span_samples(int n, int r, SpanMode mode, std::size_t random, std::uint64_t seed) {
  if (!(n > r && r >= 1)) throw DimensionError("span sampling needs n > r >= 1");
  std::vector<SpanSample> out{{gen_cyclic(n, r), "cyclic"}};
  if (mode == SpanMode::general) {
    out.push_back({gen_cocyclic(n, r), "cocyclic"});
    for (SpanSample& s : cocyclic_path(n, r, seed)) out.push_back(std::move(s));
  } else if (r >= 3) {
    const MutationRichPath path = mutation_rich_path(n, r, seed);
    for (std::size_t i = 0; i < path.configs.size(); ++i) {
      out.push_back({path.configs[i], "rich-path[" + std::to_string(i) + "]"});
    }
  }
  const bool pointed = mode == SpanMode::pointed;
  for (std::size_t i = 0; i < random; ++i) {
    const std::uint64_t s = seed + 1000 + i;
    out.push_back({gen_random(n, r, s, pointed), std::string(pointed ? "random-pointed" : "random") +
                                                     "(seed=" + std::to_string(s) + ")"});
  }
  return out;
}

SpanReport g_span_rank(int n, int r, SpanMode mode, std::size_t samples, std::uint64_t seed) {
  const auto pool = span_samples(n, r, mode, samples, seed);
  const FMatrix base = f_matrix(pool.front().config);
  const bool pointed = mode == SpanMode::pointed;
  bool structure = true;
  SpanReport report = rank_report(n, r, mode, pool, [&](const VectorConfig& v) {
    const GMatrix g = g_from_fmatrices(base, f_matrix(v));
    if (!is_skew_symmetric(g)) structure = false;
    const IntMatrix small = g.small();
    if (pointed) {
      for (std::size_t k = 0; k < small.cols(); ++k)
        if (small(0, k) != 0) structure = false;
    }
    return flatten(small, pointed ? 1 : 0);
  });
  report.structure_holds = structure;
  return report;
}

SpanReport f_affine_span_rank(int n, int r, SpanMode mode, std::size_t samples, std::uint64_t seed) {
  const auto pool = span_samples(n, r, mode, samples, seed);
  const FMatrix base = f_matrix(pool.front().config);
  return rank_report(n, r, mode, pool,
                     [&](const VectorConfig& v) { return flatten(f_matrix(v).counts - base.counts); });
}

SpanReport fstar_affine_span_rank(int n, int r, SpanMode mode, std::size_t samples, std::uint64_t seed) {
  const auto pool = span_samples(n, r, mode, samples, seed);
  const FStarMatrix base = fstar_matrix(pool.front().config);
  return rank_report(n, r, mode, pool,
                     [&](const VectorConfig& v) { return flatten(fstar_matrix(v).counts - base.counts); });
}

}  // namespace levels
