#include "levels/motion.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>

#include "levels/bipoly.hpp"
#include "levels/combinatorics.hpp"
#include "levels/errors.hpp"
#include "levels/faces.hpp"
#include "levels/random.hpp"

namespace levels {

namespace {

std::string label(const std::vector<int>& subset) {
  std::string out = "{";
  for (std::size_t i = 0; i < subset.size(); ++i) out += (i ? "," : "") + std::to_string(subset[i] + 1);
  return out + "}";
}

Mat minor_without(const Mat& m, std::size_t row, std::size_t col) {
  const std::size_t n = m.rows();
  Mat out(n - 1, n - 1);
  for (std::size_t i = 0, oi = 0; i < n; ++i) {
    if (i == row) continue;
    for (std::size_t j = 0, oj = 0; j < n; ++j) {
      if (j == col) continue;
      out(oi, oj++) = m(i, j);
    }
    ++oi;
  }
  return out;
}

// Row i is orthogonal to every column of m except column i.
Mat adjugate(const Mat& m) {
  const std::size_t n = m.rows();
  Mat out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) {
      const Rat c = det(minor_without(m, l, i));
      out(i, l) = (i + l) % 2 == 0 ? c : -c;
    }
  return out;
}

std::pair<int, int> canonical(int n, int r, std::pair<int, int> type) {
  return std::min(type, std::pair<int, int>{r - type.first, n - r - type.second});
}

struct Candidate {
  std::vector<int> subset;
  UniPoly poly;
  RootInterval interval;
};

bool overlaps(const RootInterval& a, const RootInterval& b) { return a.lo <= b.hi && b.lo <= a.hi; }

}  // namespace

LinearMotion::LinearMotion(const VectorConfig& start, const VectorConfig& end) : start_(start), end_(end) {
  if (start.rank() != end.rank() || start.size() != end.size()) {
    throw DimensionError("motion endpoints differ in (n, r)");
  }
}

Mat LinearMotion::at(const Rat& t) const {
  const Mat& a = start_.matrix();
  const Mat& b = end_.matrix();
  const Rat s = Rat(1) - t;
  Mat out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = s * a(i, j) + t * b(i, j);
  return out;
}

UniPoly LinearMotion::det_polynomial(const std::vector<int>& subset) const {
  std::vector<Rat> ts;
  std::vector<Rat> values;
  for (int i = 0; i <= rank(); ++i) {
    ts.emplace_back(i);
    values.push_back(det(at(Rat(i)).select_columns(subset)));
  }
  return UniPoly::interpolate(ts, values);
}

std::pair<int, int> classify_event(const LinearMotion& motion, const std::vector<int>& subset,
                                   const RootInterval& interval, const Rat& sample, bool antipodal) {
  const int r = motion.rank();
  const int n = motion.size();
  const auto rr = static_cast<std::size_t>(r);

  // Adjugate rows a_i(t) as polynomials: entries have degree <= r - 1.
  std::vector<Rat> ts;
  std::vector<Mat> adj;
  for (int s = 0; s < r; ++s) {
    ts.emplace_back(s);
    adj.push_back(adjugate(motion.at(Rat(s)).select_columns(subset)));
  }
  std::vector<std::vector<UniPoly>> rows(rr, std::vector<UniPoly>(rr));
  for (std::size_t i = 0; i < rr; ++i)
    for (std::size_t l = 0; l < rr; ++l) {
      std::vector<Rat> ys;
      for (const Mat& a : adj) ys.push_back(a(i, l));
      rows[i][l] = UniPoly::interpolate(ts, ys);
    }

  // At the root every a_i is a multiple of the common normal; orient them
  // all towards the same side as a_0.
  const UniPoly dp = motion.det_polynomial(subset);
  std::vector<int> orientation(rr, 1);
  for (std::size_t i = 1; i < rr; ++i) {
    UniPoly q;
    for (std::size_t l = 0; l < rr; ++l) q = q + rows[i][l] * rows[0][l];
    RootInterval iv = interval;
    orientation[i] = sign_at_root(dp, iv, q);
    if (orientation[i] == 0) {
      throw GenericityError("a vertex of the simplex of " + label(subset) + " degenerates at the mutation",
                            {subset});
    }
  }

  std::vector<Rat> p(rr);
  for (std::size_t i = 0; i < rr; ++i)
    for (std::size_t l = 0; l < rr; ++l) p[l] += Rat(orientation[i]) * rows[i][l](sample);
  if (antipodal)
    for (Rat& c : p) c = -c;

  const Mat vt = motion.at(sample);
  int j = 0;
  int k = 0;
  for (int m = 0; m < n; ++m) {
    const int y = dot(vt.column(static_cast<std::size_t>(m)), p).sign();
    if (y == 0) throw std::logic_error("interior point of a created simplex lies on a hyperplane");
    if (y < 0) (std::binary_search(subset.begin(), subset.end(), m) ? j : k) += 1;
  }
  return {j, k};
}

MotionPath detect_mutations(const VectorConfig& v, const VectorConfig& w) {
  const LinearMotion motion(v, w);
  const int n = v.size();
  const int r = v.rank();

  std::vector<Candidate> found;
  for_each_subset(n, r, [&](const std::vector<int>& subset) {
    UniPoly p = motion.det_polynomial(subset);
    for (const RootInterval& iv : isolate_roots(p, Rat(0), Rat(1))) {
      if (!iv.simple) throw GenericityError("det over " + label(subset) + " has a multiple root", {subset});
      found.push_back({subset, p, iv});
    }
  });

  std::set<std::pair<std::vector<int>, std::vector<int>>> checked;
  for (;;) {
    std::sort(found.begin(), found.end(),
              [](const Candidate& a, const Candidate& b) { return a.interval.lo < b.interval.lo; });
    bool clean = true;
    for (std::size_t a = 0; a < found.size(); ++a) {
      for (std::size_t b = a + 1; b < found.size() && found[b].interval.lo <= found[a].interval.hi; ++b) {
        if (!overlaps(found[a].interval, found[b].interval)) continue;
        clean = false;
        if (checked.emplace(found[a].subset, found[b].subset).second) {
          const UniPoly g = gcd(found[a].poly, found[b].poly);
          const Rat lo = std::max(found[a].interval.lo, found[b].interval.lo);
          const Rat hi = std::min(found[a].interval.hi, found[b].interval.hi);
          if (g.degree() > 0 && count_distinct_roots(g, lo, hi) > 0) {
            throw GenericityError("subsets " + label(found[a].subset) + " and " + label(found[b].subset) +
                                      " become dependent at the same time",
                                  {found[a].subset, found[b].subset});
          }
        }
        found[a].interval = refine(found[a].poly, found[a].interval);
        found[b].interval = refine(found[b].poly, found[b].interval);
      }
    }
    if (clean) break;
  }

  MotionPath path{v, w, {}};
  for (std::size_t i = 0; i < found.size(); ++i) {
    const Candidate& c = found[i];
    const Rat next = i + 1 < found.size() ? found[i + 1].interval.lo : Rat(1);
    MutationEvent e;
    e.subset = c.subset;
    e.interval = c.interval;
    e.sample = midpoint(c.interval.hi, next);
    e.sign_before = c.poly.sign_at(c.interval.lo);
    e.sign_after = c.poly.sign_at(c.interval.hi);
    e.type = canonical(n, r, classify_event(motion, c.subset, c.interval, e.sample));
    path.events.push_back(std::move(e));
  }
  return path;
}

GMatrix mutation_increment(int n, int r, int j, int k) {
  GMatrix g = GMatrix::zero(n, r);
  if (2 * j == r || 2 * k == n - r) return g;
  const auto at = [&](int a, int b) -> std::int64_t& {
    return g.entries(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
  };
  at(j, k) += 1;
  at(r - j, n - r - k) += 1;
  at(r - j, k) -= 1;
  at(j, n - r - k) -= 1;
  return g;
}

GMatrix g_from_events(int n, int r, const std::vector<MutationEvent>& events) {
  GMatrix g = GMatrix::zero(n, r);
  for (const MutationEvent& e : events) {
    g.entries = g.entries + mutation_increment(n, r, e.type.first, e.type.second).entries;
  }
  return g;
}

GMatrix g_from_motion(const VectorConfig& v, const VectorConfig& w) {
  const MotionPath path = detect_mutations(v, w);
  GMatrix g = g_from_events(v.size(), v.rank(), path.events);
  if (g != g_from_fmatrices(f_matrix(v), f_matrix(w))) {
    throw std::logic_error("g-matrix from mutations differs from the algebraic g-matrix");
  }
  return g;
}

VectorConfig perturb(const VectorConfig& w, std::uint64_t seed, const Rat& magnitude) {
  if (magnitude.is_zero()) return w;
  constexpr long kSteps = 1000000;
  Rng rng(seed);
  const Mat& base = w.matrix();
  for (int attempt = 0; attempt < 100; ++attempt) {
    Mat m = base;
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) += abs(magnitude) * Rat(rng.uniform(-kSteps, kSteps), kSteps);
    try {
      return VectorConfig(std::move(m));
    } catch (const GeneralPositionError&) {
    }
  }
  throw BudgetExceededError("perturb: no configuration in general position after 100 attempts");
}

IntMatrix mutation_delta_f(int n, int r, int j, int k) {
  const BiPoly x = BiPoly::x();
  const BiPoly y = BiPoly::y();
  const BiPoly x1 = x + BiPoly(1);
  const BiPoly xy = x + y;
  const BiPoly p = (pow(y, k) - pow(y, n - r - k)) * (pow(x1, r - j) * pow(xy, j) - pow(x1, j) * pow(xy, r - j));
  return p.to_matrix(static_cast<std::size_t>(r), static_cast<std::size_t>(n + 1));
}

namespace {

using Point = std::vector<Rat>;

VectorConfig lift(const std::vector<Point>& points) {
  std::vector<std::vector<Rat>> cols;
  for (const Point& p : points) {
    std::vector<Rat> c{Rat(1)};
    c.insert(c.end(), p.begin(), p.end());
    cols.push_back(std::move(c));
  }
  return VectorConfig(Mat::from_columns(points.front().size() + 1, cols));
}

// Where the line through a and b meets aff(q), as affine coordinates of q
// plus the line parameter; empty if the line is parallel to aff(q).
std::optional<std::pair<std::vector<Rat>, Rat>> meet(const std::vector<Point>& q, const Point& a, const Point& b) {
  const std::size_t d = a.size();
  Mat m(d + 1, d + 1);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t c = 0; c < d; ++c) m(c, i) = q[i][c];
    m(d, i) = Rat(1);
  }
  for (std::size_t c = 0; c < d; ++c) m(c, d) = a[c] - b[c];
  if (det(m).is_zero()) return std::nullopt;
  Mat rhs(d + 1, 1);
  for (std::size_t c = 0; c < d; ++c) rhs(c, 0) = a[c];
  rhs(d, 0) = Rat(1);
  const Mat sol = inverse(m) * rhs;
  std::vector<Rat> beta;
  for (std::size_t i = 0; i < d; ++i) beta.push_back(sol(i, 0));
  return std::pair{beta, sol(d, 0)};
}

}  // namespace

MutationRichPath mutation_rich_path(int n, int r, std::uint64_t seed) {
  if (n < r) throw DimensionError("mutation_rich_path needs n >= r");
  if (r < 3) return {{gen_cyclic(n, r)}, {}};
  const int d = r - 1;
  const auto dd = static_cast<std::size_t>(d);
  constexpr long kGrain = 1000;
  Rng rng(seed);
  Rat eps(1, 20);

  for (int attempt = 0; attempt < 40; ++attempt) {
    // a_i = e_i; the first d - 1 stay put, a cluster of n - d points sits near a_d.
    std::vector<Point> stationary;
    for (std::size_t i = 0; i + 1 < dd; ++i) {
      Point p(dd, Rat(0));
      p[i] = Rat(1);
      stationary.push_back(p);
    }
    std::vector<Point> cluster;
    for (int c = 0; c < n - d; ++c) {
      Point p(dd, Rat(0));
      p[dd - 1] = Rat(1);
      for (Rat& x : p) x += eps * Rat(rng.uniform(-kGrain, kGrain), kGrain);
      cluster.push_back(p);
    }

    // Stage sigma runs along the normal of aff(A) through the point with
    // affine coordinates (1 + d - |sigma|) / |sigma| on sigma and -1 elsewhere.
    std::vector<std::pair<Point, Point>> stages;
    std::vector<unsigned> masks;
    for (unsigned mask = 1; mask < (1U << dd); ++mask) {
      const int size = std::popcount(mask);
      Point base(dd);
      for (std::size_t i = 0; i < dd; ++i) base[i] = (mask >> i & 1U) ? Rat(1 + d - size, size) : Rat(-1);
      Point from = base;
      Point to = base;
      for (std::size_t i = 0; i < dd; ++i) {
        from[i] += Rat(-1) + Rat(rng.uniform(-kGrain, kGrain), kGrain * kGrain);
        to[i] += Rat(1) + Rat(rng.uniform(-kGrain, kGrain), kGrain * kGrain);
      }
      stages.emplace_back(from, to);
      masks.push_back(mask);
    }

    bool valid = true;
    for (std::size_t s = 0; s < stages.size() && valid; ++s) {
      for (const Point& qd : cluster) {
        std::vector<Point> q = stationary;
        q.push_back(qd);
        const auto hit = meet(q, stages[s].first, stages[s].second);
        if (!hit || !(Rat(0) < hit->second && hit->second < Rat(1))) {
          valid = false;
          break;
        }
        for (std::size_t i = 0; i < dd; ++i) {
          const int want = (masks[s] >> i & 1U) ? 1 : -1;
          if (hit->first[i].sign() != want) valid = false;
        }
        if (!valid) break;
      }
    }
    if (!valid) {
      eps = eps / Rat(2);
      continue;
    }

    std::vector<Point> waypoints;
    for (const auto& [from, to] : stages) {
      waypoints.push_back(from);
      waypoints.push_back(to);
    }
    auto config_with = [&](const Point& moving) {
      std::vector<Point> pts = stationary;
      pts.insert(pts.end(), cluster.begin(), cluster.end());
      pts.push_back(moving);
      return lift(pts);
    };

    try {
      MutationRichPath out;
      out.configs.push_back(config_with(waypoints.front()));
      for (std::size_t i = 0; i + 1 < waypoints.size(); ++i) {
        const VectorConfig a = config_with(waypoints[i]);
        const VectorConfig b = config_with(waypoints[i + 1]);
        const MotionPath path = detect_mutations(a, b);
        const LinearMotion motion(a, b);
        for (const MutationEvent& e : path.events) {
          out.configs.emplace_back(motion.at(e.sample));
          out.types.push_back(e.type);
        }
      }
      bool covered = true;
      for (int j = 1; j <= (r - 1) / 2; ++j)
        for (int k = 0; k <= (n - r - 1) / 2; ++k)
          if (std::find(out.types.begin(), out.types.end(), canonical(n, r, {j, k})) == out.types.end()) covered = false;
      if (covered) return out;
    } catch (const GenericityError&) {
    } catch (const GeneralPositionError&) {
    }
  }
  throw BudgetExceededError("mutation_rich_path: no valid construction within 40 attempts");
}

}  // namespace levels
