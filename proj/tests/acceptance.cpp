// One line per acceptance criterion; exit status is nonzero if any fails.
#include <chrono>
#include <exception>
#include <functional>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
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

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Check {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok && outcome_.pass) {
      outcome_.pass = false;
      outcome_.detail = what;
    }
  }
  Outcome done(std::string summary) {
    if (outcome_.pass) outcome_.detail = std::move(summary);
    return outcome_;
  }

 private:
  Outcome outcome_;
};

std::string shape(int n, int r) { return "(" + std::to_string(n) + "," + std::to_string(r) + ")"; }

Outcome face_totals() {
  Check c;
  const FMatrix f = f_matrix(gen_cyclic(6, 3));
  const std::vector<std::int64_t> expected{32, 60, 30};
  for (std::size_t s = 0; s < 3; ++s) c.require(f.counts.row_sum(s) == expected[s], "row sum mismatch");
  for (int s = 0; s <= 2; ++s) c.require(f.counts.row_sum(static_cast<std::size_t>(s)) == total_face_count(6, 2, s),
                                         "closed form mismatch");
  return c.done("cyclic(6,3) row sums s=2,1,0 are 30, 60, 32");
}

Outcome dehn_sommerville() {
  Check c;
  int count = 0;
  for (int r = 2; r <= 5; ++r) {
    for (int n = r; n <= r + 4; ++n) {
      for (int i = 0; i < 5; ++i, ++count) {
        const auto seed = static_cast<std::uint64_t>(100 * r + 10 * n + i);
        const FMatrix f = f_matrix(gen_random(n, r, seed, i % 2 == 1));
        const DehnSommervilleResiduals res = dehn_sommerville_residuals(f.counts, n, r - 1);
        c.require(res.substitution.is_zero(), "substitution residual nonzero at " + shape(n, r));
        c.require(res.coefficient.is_zero(), "coefficient residual nonzero at " + shape(n, r));
        c.require(check_dehn_sommerville(f).holds, "check failed at " + shape(n, r));
      }
    }
  }
  return c.done(std::to_string(count) + " random configurations, r in 2..5, n in r..r+4");
}

Outcome duality() {
  Check c;
  Rng rng(3);
  int count = 0;
  for (int i = 0; i < 30; ++i) {
    const int r = static_cast<int>(rng.uniform(1, 5));
    const int n = static_cast<int>(rng.uniform(r + 1, 7));
    const VectorConfig v = gen_random(n, r, static_cast<std::uint64_t>(3000 + i), i % 2 == 0);
    c.require(dependency_patterns(v) == farkas_complement_oracle(v), "pattern sets differ at " + shape(n, r));
    const BiPoly f = f_polynomial(f_matrix(v));
    const BiPoly fstar = f_fstar_transform(f, n, r, Direction::f_to_fstar);
    c.require(fstar == fstar_polynomial(fstar_matrix(v)), "f* transform differs at " + shape(n, r));
    c.require(f_fstar_transform(fstar, n, r, Direction::fstar_to_f) == f, "round trip failed at " + shape(n, r));
    ++count;
  }
  return c.done(std::to_string(count) + " configurations with n <= 7");
}

Outcome well_defined() {
  Check c;
  int pairs = 0;
  int perturbed = 0;
  const std::vector<std::pair<int, int>> shapes{{4, 2}, {5, 3}, {6, 3}, {6, 4}};
  for (auto [n, r] : shapes) {
    for (int i = 0; i < 6; ++i) {
      const auto seed = static_cast<std::uint64_t>(4000 + 100 * n + 10 * r + 2 * i);
      const VectorConfig v = i == 0 ? gen_cocyclic(n, r) : gen_random(n, r, seed, i % 2 == 1);
      VectorConfig w = i == 0 ? gen_cyclic(n, r) : gen_random(n, r, seed + 1, i % 2 == 1);
      bool done = false;
      for (std::uint64_t attempt = 1; attempt <= 10 && !done; ++attempt) {
        try {
          const MotionPath path = detect_mutations(v, w);
          c.require(g_from_events(n, r, path.events) == g_from_fmatrices(f_matrix(v), f_matrix(w)),
                    "routes disagree at " + shape(n, r));
          done = true;
        } catch (const GenericityError&) {
          w = perturb(w, attempt);
          ++perturbed;
        }
      }
      c.require(done, "no generic path found at " + shape(n, r));
      if (done) ++pairs;
    }
  }
  c.require(pairs >= 20, "fewer than 20 pairs compared");
  return c.done(std::to_string(pairs) + " pairs agree (" + std::to_string(perturbed) + " perturbations)");
}

Outcome closed_form() {
  Check c;
  for (auto [n, r] : {std::pair{5, 3}, {6, 3}, {7, 3}, {7, 4}}) {
    const GMatrix g = g_from_fmatrices(f_matrix(gen_cocyclic(n, r)), f_matrix(gen_cyclic(n, r)));
    c.require(g.small() == g_closed_form_neighborly(n, r), "mismatch at " + shape(n, r));
  }
  const GMatrix g53 = g_from_fmatrices(f_matrix(gen_cocyclic(5, 3)), f_matrix(gen_cyclic(5, 3)));
  c.require(g53.small() == IntMatrix{{1}, {2}}, "small g at (5,3) is not [[1],[2]]");
  return c.done("cocyclic -> cyclic matches at (5,3), (6,3), (7,3), (7,4)");
}

Outcome contraction_deletion() {
  Check c;
  for (int i = 0; i < 10; ++i) {
    const VectorConfig v = gen_random(6, 3, static_cast<std::uint64_t>(6000 + 2 * i), false);
    const VectorConfig w = gen_random(6, 3, static_cast<std::uint64_t>(6001 + 2 * i), false);
    c.require(check_contraction_deletion(v, w, MinorMode::contract).holds, "contraction identity failed");
    c.require(check_contraction_deletion(v, w, MinorMode::remove).holds, "deletion identity failed");
  }
  return c.done("10 pairs at (6,3), contraction and deletion");
}

Outcome span_dimensions() {
  Check c;
  std::ostringstream summary;
  for (auto [n, r] : {std::pair{6, 3}, {7, 3}, {7, 4}, {8, 5}}) {
    for (SpanMode mode : {SpanMode::general, SpanMode::pointed}) {
      const std::size_t dim = theoretical_dim(n, r, mode);
      const SpanReport g = g_span_rank(n, r, mode, 8, 1);
      const SpanReport f = f_affine_span_rank(n, r, mode, 8, 1);
      const std::string tag = shape(n, r) + (mode == SpanMode::pointed ? " pointed" : " general");
      c.require(g.achieved_rank == dim, "g rank " + std::to_string(g.achieved_rank) + " at " + tag);
      c.require(f.achieved_rank == dim, "f rank " + std::to_string(f.achieved_rank) + " at " + tag);
      c.require(g.structure_holds, "g structure broken at " + tag);
      summary << ' ' << shape(n, r) << (mode == SpanMode::pointed ? "p=" : "g=") << dim;
    }
  }
  return c.done("ranks reach" + summary.str());
}

VectorConfig convex_hexagon(std::uint64_t seed) {
  // Rational points on the unit circle, lifted to (1, x, y).
  Rng rng(seed);
  std::set<Rat> params;
  while (params.size() < 6) params.insert(Rat(rng.uniform(-400, 400), 97));
  std::vector<Rat> entries;
  for (const Rat& s : params) {
    const Rat den = Rat(1) + s * s;
    entries.push_back(Rat(1));
    entries.push_back((Rat(1) - s * s) / den);
    entries.push_back(Rat(2) * s / den);
  }
  return new_config(3, 6, entries);
}

Outcome rigidity() {
  Check c;
  const FMatrix first = f_matrix(convex_hexagon(8000));
  for (std::uint64_t i = 0; i < 10; ++i) {
    const VectorConfig v = convex_hexagon(8000 + i);
    c.require(is_pointed(v) && is_neighborly(v), "sample is not pointed neighborly");
    c.require(f_matrix(v) == first, "neighborly f-matrices differ");
  }
  Rng rng(8100);
  std::optional<FMatrix> co;
  for (int i = 0; i < 5; ++i) {
    std::vector<Rat> params;
    Rat t(rng.uniform(-20, 20));
    for (int j = 0; j < 7; ++j) {
      params.push_back(t);
      t += Rat(rng.uniform(1, 30), rng.uniform(1, 9));
    }
    const VectorConfig v = gen_cocyclic(7, 3, params);
    c.require(is_coneighborly(v), "cocyclic sample is not coneighborly");
    const FMatrix f = f_matrix(v);
    if (!co) co = f;
    c.require(f == *co, "coneighborly f-matrices differ");
  }
  return c.done("10 convex hexagons share one f-matrix; 5 cocyclic(7,3) samples share one f-matrix");
}

Outcome coverage() {
  Check c;
  const MutationRichPath path = mutation_rich_path(8, 5, 1);
  std::set<std::pair<int, int>> seen(path.types.begin(), path.types.end());
  for (int j = 1; j <= 2; ++j)
    for (int k = 0; k <= 1; ++k)
      c.require(seen.count({j, k}) == 1, "type (" + std::to_string(j) + "," + std::to_string(k) + ") missing");
  for (const VectorConfig& v : path.configs) c.require(is_pointed(v), "intermediate configuration not pointed");
  c.require(path.configs.size() == path.types.size() + 1, "path shape mismatch");
  for (std::size_t i = 0; i + 1 < path.configs.size(); ++i) {
    const GMatrix g = g_from_fmatrices(f_matrix(path.configs[i]), f_matrix(path.configs[i + 1]));
    c.require(g == mutation_increment(8, 5, path.types[i].first, path.types[i].second),
              "recorded type does not match the f-matrix change");
  }
  return c.done(std::to_string(path.types.size()) + " events cover (1,0), (1,1), (2,0), (2,1)");
}

Outcome negative_control() {
  Check c;
  const FMatrix base = f_matrix(gen_cyclic(6, 3));
  int corrupted = 0;
  for (std::size_t s = 0; s < base.counts.rows(); ++s) {
    for (std::size_t t = 0; t < base.counts.cols(); ++t) {
      for (int delta : {1, -1}) {
        FMatrix f = base;
        f.counts(s, t) += delta;
        const std::vector<RelationReport> reports{check_antipodal(f), check_totals(f), check_dehn_sommerville(f)};
        bool caught = false;
        for (const RelationReport& rep : reports) caught = caught || (!rep.holds && rep.witness.has_value());
        c.require(caught, "corruption at (" + std::to_string(s) + "," + std::to_string(t) + ") undetected");
        ++corrupted;
      }
    }
  }
  return c.done(std::to_string(corrupted) + " single-entry corruptions all detected");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"face totals", face_totals},
      {"Dehn-Sommerville", dehn_sommerville},
      {"duality", duality},
      {"g well-definedness", well_defined},
      {"closed form", closed_form},
      {"contraction/deletion", contraction_deletion},
      {"span dimensions", span_dimensions},
      {"rigidity", rigidity},
      {"mutation coverage", coverage},
      {"negative control", negative_control},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " (" << criteria[i].first << "): " << o.detail
              << " [" << secs << " s]" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
