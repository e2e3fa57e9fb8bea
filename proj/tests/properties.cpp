#include <doctest.h>

#include <map>
#include <vector>

#include "levels/errors.hpp"
#include "levels/faces.hpp"
#include "levels/gmatrix.hpp"
#include "levels/motion.hpp"
#include "levels/random.hpp"
#include "levels/relations.hpp"
#include "levels/span.hpp"

using namespace levels;

namespace {

struct Shape {
  int n;
  int r;
};

Shape random_shape(Rng& rng, int max_n, int max_r) {
  const int r = static_cast<int>(rng.uniform(1, max_r));
  const int n = static_cast<int>(rng.uniform(r, max_n));
  return {n, r};
}

GMatrix random_skew(Rng& rng, int n, int r, long bound) {
  const int rows = (r - 1) / 2 + 1;
  const int cols = n > r ? (n - r - 1) / 2 + 1 : 0;
  IntMatrix small(static_cast<std::size_t>(std::max(rows, 0)), static_cast<std::size_t>(std::max(cols, 0)));
  for (std::size_t i = 0; i < small.rows(); ++i)
    for (std::size_t j = 0; j < small.cols(); ++j) small(i, j) = rng.uniform(-bound, bound);
  return expand_small(small, n, r);
}

std::vector<Rat> flatten(const IntMatrix& m, std::size_t skip_rows = 0) {
  std::vector<Rat> out;
  for (std::size_t i = skip_rows; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.emplace_back(m(i, j));
  return out;
}

}  // namespace

TEST_CASE("face relations hold on random configurations") {
  Rng rng(20261019);
  for (int trial = 0; trial < 120; ++trial) {
    const Shape s = random_shape(rng, 8, 5);
    const bool pointed = rng.uniform(0, 1) == 1;
    const VectorConfig v = gen_random(s.n, s.r, static_cast<std::uint64_t>(trial), pointed);
    CAPTURE(s.n);
    CAPTURE(s.r);
    CAPTURE(trial);
    const FMatrix f = f_matrix(v);
    CHECK(check_antipodal(f).holds);
    CHECK(check_totals(f).holds);
    CHECK(check_dehn_sommerville(f).holds);
  }
}

TEST_CASE("f to f* transform agrees with enumeration") {
  Rng rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const Shape s = random_shape(rng, 8, 5);
    if (s.n == s.r) continue;
    const VectorConfig v = gen_random(s.n, s.r, static_cast<std::uint64_t>(1000 + trial), rng.uniform(0, 1) == 1);
    CAPTURE(trial);
    const BiPoly fstar = f_fstar_transform(f_polynomial(f_matrix(v)), s.n, s.r, Direction::f_to_fstar);
    CHECK(fstar == fstar_polynomial(fstar_matrix(v)));
    CHECK(f_fstar_transform(fstar, s.n, s.r, Direction::fstar_to_f) == f_polynomial(f_matrix(v)));
  }
}

TEST_CASE("dependency patterns match the Farkas oracle") {
  Rng rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const Shape s = random_shape(rng, 7, 4);
    const VectorConfig v = gen_random(s.n, s.r, static_cast<std::uint64_t>(500 + trial), rng.uniform(0, 1) == 1);
    CAPTURE(trial);
    CHECK(dependency_patterns(v) == farkas_complement_oracle(v));
  }
}

TEST_CASE("pattern sets are antipodally closed with bounded zero sets") {
  Rng rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const Shape s = random_shape(rng, 7, 4);
    const VectorConfig v = gen_random(s.n, s.r, static_cast<std::uint64_t>(trial), false);
    const PatternSet diss = dissection_patterns(v);
    for (const SignVector& p : diss) {
      CHECK(std::binary_search(diss.begin(), diss.end(), -p));
      CHECK(p.zeros() <= s.r - 1);
    }
    const PatternSet dep = dependency_patterns(v);
    for (const SignVector& p : dep) {
      CHECK(std::binary_search(dep.begin(), dep.end(), -p));
      CHECK(p.zeros() <= s.n - s.r - 1);
    }
  }
}

TEST_CASE("T is inverted on random skew-symmetric g") {
  Rng rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const Shape s = random_shape(rng, 10, 6);
    const GMatrix g = random_skew(rng, s.n, s.r, 5);
    CAPTURE(trial);
    REQUIRE(is_skew_symmetric(g));
    const FMatrix base = f_matrix(gen_cyclic(s.n, s.r));
    const IntMatrix delta = apply_T(g);
    for (std::size_t i = 0; i < delta.rows(); ++i) CHECK(delta.row_sum(i) == 0);
    FMatrix moved = base;
    moved.counts = base.counts + delta;
    CHECK(g_from_fmatrices(base, moved) == g);
  }
}

TEST_CASE("g is additive along paths and antisymmetric") {
  Rng rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const Shape s = random_shape(rng, 8, 5);
    const bool pointed = rng.uniform(0, 1) == 1;
    const auto seed = static_cast<std::uint64_t>(3 * trial);
    const FMatrix a = f_matrix(gen_random(s.n, s.r, seed, pointed));
    const FMatrix b = f_matrix(gen_random(s.n, s.r, seed + 1, pointed));
    const FMatrix c = f_matrix(gen_random(s.n, s.r, seed + 2, pointed));
    CAPTURE(trial);
    const GMatrix ab = g_from_fmatrices(a, b);
    const GMatrix bc = g_from_fmatrices(b, c);
    CHECK(ab.entries + bc.entries == g_from_fmatrices(a, c).entries);
    CHECK(g_from_fmatrices(b, a).entries == -ab.entries);
    if (pointed)
      for (int k = 0; k <= s.n - s.r; ++k) CHECK(ab.at(0, k) == 0);
  }
}

TEST_CASE("motion route agrees with the algebraic route") {
  Rng rng(5);
  int compared = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const Shape s = random_shape(rng, 7, 4);
    const bool pointed = rng.uniform(0, 1) == 1;
    const VectorConfig v = gen_random(s.n, s.r, static_cast<std::uint64_t>(700 + trial), pointed);
    VectorConfig w = gen_random(s.n, s.r, static_cast<std::uint64_t>(800 + trial), pointed);
    CAPTURE(trial);
    for (std::uint64_t attempt = 0; attempt < 5; ++attempt) {
      try {
        const MotionPath path = detect_mutations(v, w);
        CHECK(g_from_events(s.n, s.r, path.events) == g_from_fmatrices(f_matrix(v), f_matrix(w)));
        ++compared;
        break;
      } catch (const GenericityError&) {
        w = perturb(w, attempt + 1);
      }
    }
  }
  CHECK(compared >= 35);
}

TEST_CASE("achieved g-rank never exceeds the theoretical dimension") {
  // Pools of f-matrices per shape and mode; each trial draws a random family.
  constexpr int kPool = 24;
  std::map<std::tuple<int, int, bool>, std::vector<FMatrix>> pools;
  Rng rng(10000);
  long trials = 0;
  for (; trials < 10000; ++trials) {
    const Shape s = random_shape(rng, 7, 5);
    const bool pointed = rng.uniform(0, 1) == 1;
    auto& pool = pools[{s.n, s.r, pointed}];
    if (pool.empty()) {
      for (int i = 0; i < kPool; ++i) {
        pool.push_back(f_matrix(gen_random(s.n, s.r, static_cast<std::uint64_t>(i + 1) * 7919u + s.n * 31u + s.r,
                                           pointed)));
      }
    }
    const std::size_t base = static_cast<std::size_t>(rng.uniform(0, kPool - 1));
    const long count = rng.uniform(1, 12);
    std::vector<std::vector<Rat>> family;
    for (long i = 0; i < count; ++i) {
      const FMatrix& other = pool[static_cast<std::size_t>(rng.uniform(0, kPool - 1))];
      const GMatrix g = g_from_fmatrices(pool[base], other);
      family.push_back(flatten(g.small(), pointed ? 1 : 0));
    }
    const std::size_t rank = greedy_basis(family).size();
    const std::size_t bound = theoretical_dim(s.n, s.r, pointed ? SpanMode::pointed : SpanMode::general);
    if (rank > bound) {
      CAPTURE(s.n);
      CAPTURE(s.r);
      CAPTURE(pointed);
      FAIL("rank above the theoretical dimension");
    }
  }
  CHECK(trials == 10000);
}

TEST_CASE("f-span rank equals g-span rank on the same samples") {
  for (auto [n, r] : {std::pair{5, 2}, {6, 3}, {7, 3}, {7, 4}}) {
    for (SpanMode mode : {SpanMode::general, SpanMode::pointed}) {
      CAPTURE(n);
      CAPTURE(r);
      const SpanReport g = g_span_rank(n, r, mode, 6, 3);
      const SpanReport f = f_affine_span_rank(n, r, mode, 6, 3);
      CHECK(g.samples_used == f.samples_used);
      CHECK(g.achieved_rank == f.achieved_rank);
      CHECK(g.achieved_rank <= g.theoretical_dim);
      CHECK(g.structure_holds);
    }
  }
}

TEST_CASE("pointed f*-span reaches its dimension") {
  for (auto [n, r] : {std::pair{5, 3}, {6, 3}, {7, 3}, {7, 4}}) {
    CAPTURE(n);
    CAPTURE(r);
    const SpanReport rep = fstar_affine_span_rank(n, r, SpanMode::pointed, 8, 11);
    CHECK(rep.achieved_rank == theoretical_dim(n, r, SpanMode::pointed));
  }
}

TEST_CASE("small g from a coneighborly start is nonnegative in rank 3") {
  for (int n = 4; n <= 8; ++n) {
    const FMatrix co = f_matrix(gen_cocyclic(n, 3));
    for (int i = 0; i < 20; ++i) {
      const VectorConfig v = gen_random(n, 3, static_cast<std::uint64_t>(9000 + 50 * n + i), i % 2 == 0);
      CAPTURE(n);
      CAPTURE(i);
      CHECK(small_part_nonnegative(g_from_fmatrices(co, f_matrix(v))));
    }
  }
}
