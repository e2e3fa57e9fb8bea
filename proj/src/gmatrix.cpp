#include "levels/gmatrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "levels/bipoly.hpp"
#include "levels/combinatorics.hpp"
#include "levels/errors.hpp"
#include "levels/unipoly.hpp"

namespace levels {

namespace {

UniPoly upow(const UniPoly& p, int e) {
  UniPoly out = UniPoly::constant(Rat(1));
  for (int i = 0; i < e; ++i) out = out * p;
  return out;
}

void require_same_shape(const FMatrix& a, const FMatrix& b) {
  if (a.n != b.n || a.r != b.r) throw DimensionError("f-matrices come from different (n, r)");
}

}  // namespace

GMatrix GMatrix::zero(int n, int r) {
  return GMatrix{n, r, IntMatrix(static_cast<std::size_t>(r + 1), static_cast<std::size_t>(n - r + 1))};
}

IntMatrix GMatrix::small() const {
  const long rows = floor_div(r - 1, 2) + 1;
  const long cols = floor_div(n - r - 1, 2) + 1;
  IntMatrix out(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  for (long j = 0; j < rows; ++j)
    for (long k = 0; k < cols; ++k) out(static_cast<std::size_t>(j), static_cast<std::size_t>(k)) = at(j, k);
  return out;
}

GMatrix expand_small(const IntMatrix& small, int n, int r) {
  const auto rows = static_cast<std::size_t>(floor_div(r - 1, 2) + 1);
  const auto cols = static_cast<std::size_t>(floor_div(n - r - 1, 2) + 1);
  if (small.rows() != rows || small.cols() != cols) throw DimensionError("small g-matrix has the wrong shape");
  GMatrix g = GMatrix::zero(n, r);
  const auto jr = static_cast<std::size_t>(r);
  const auto kn = static_cast<std::size_t>(n - r);
  for (std::size_t j = 0; j < rows; ++j) {
    for (std::size_t k = 0; k < cols; ++k) {
      const auto v = small(j, k);
      g.entries(j, k) = v;
      g.entries(jr - j, k) = -v;
      g.entries(j, kn - k) = -v;
      g.entries(jr - j, kn - k) = v;
    }
  }
  return g;
}

bool is_skew_symmetric(const GMatrix& g) {
  if (g.entries.rows() != static_cast<std::size_t>(g.r + 1) ||
      g.entries.cols() != static_cast<std::size_t>(g.n - g.r + 1)) {
    return false;
  }
  for (long j = 0; j <= g.r; ++j) {
    for (long k = 0; k <= g.n - g.r; ++k) {
      const auto v = g.at(j, k);
      if (g.at(g.r - j, k) != -v || g.at(j, g.n - g.r - k) != -v || g.at(g.r - j, g.n - g.r - k) != v) return false;
    }
  }
  return true;
}

IntMatrix apply_T(const GMatrix& g) {
  const int n = g.n;
  const int r = g.r;
  IntMatrix df(static_cast<std::size_t>(r), static_cast<std::size_t>(n + 1));
  for (long s = 0; s < r; ++s) {
    for (long t = 0; t <= n; ++t) {
      std::int64_t sum = 0;
      for (long j = 0; j <= r; ++j)
        for (long k = 0; k <= n - r; ++k) {
          const auto v = g.at(j, k);
          if (v != 0) sum += binom(j, t - k) * binom(r - j, s - j + t - k) * v;
        }
      df(static_cast<std::size_t>(s), static_cast<std::size_t>(t)) = sum;
    }
  }

  const BiPoly x = BiPoly::x();
  const BiPoly y = BiPoly::y();
  BiPoly expansion;
  for (int j = 0; j <= r; ++j)
    for (int k = 0; k <= n - r; ++k) {
      const auto v = g.at(j, k);
      if (v != 0) {
        expansion += BiPoly(Rat(static_cast<long>(v))) * pow(x + y, j) * pow(x + BiPoly(1), r - j) * pow(y, k);
      }
    }
  if (expansion.degree_x() >= r) {
    throw InconsistentInputError("g-matrix is not skew in j: the x^r part of T(g) is nonzero");
  }
  if (expansion.to_matrix(static_cast<std::size_t>(r), static_cast<std::size_t>(n + 1)) != df) {
    throw std::logic_error("binomial and polynomial forms of T disagree");
  }
  return df;
}

IntMatrix apply_S(const GMatrix& g) {
  const int n = g.n;
  const int r = g.r;
  const BiPoly x = BiPoly::x();
  const BiPoly y = BiPoly::y();
  BiPoly p;
  for (int j = 0; j <= r; ++j)
    for (int k = 0; k <= n - r; ++k) {
      const auto v = g.at(j, k);
      if (v != 0) {
        p -= BiPoly(Rat(static_cast<long>(v))) * pow(x + y, k) * pow(x + BiPoly(1), n - r - k) * pow(y, j);
      }
    }
  IntMatrix out(static_cast<std::size_t>(n + 1), static_cast<std::size_t>(n + 1));
  for (const auto& [m, c] : p.terms()) {
    const int s = n - m.first;
    if (s < 0 || m.second > n) throw std::logic_error("S(g) has a term outside the f*-window");
    out(static_cast<std::size_t>(s), static_cast<std::size_t>(m.second)) = c.num().get_si();
  }
  return out;
}

GMatrix g_from_fmatrices(const FMatrix& fv, const FMatrix& fw) {
  require_same_shape(fv, fw);
  const int n = fv.n;
  const int r = fv.r;
  const IntMatrix df = fw.counts - fv.counts;
  const UniPoly x = UniPoly::identity();
  const UniPoly one_plus_x = x + UniPoly::constant(Rat(1));
  const UniPoly one_minus_u = UniPoly::constant(Rat(1)) - x;

  std::vector<std::vector<Rat>> g(static_cast<std::size_t>(r + 1), std::vector<Rat>(static_cast<std::size_t>(n - r + 1)));
  for (int t = 0; t <= n - r; ++t) {
    // P_t(x) = sum_j g_{j,t} x^j (1+x)^{r-j} once earlier columns are removed.
    std::vector<Rat> known(static_cast<std::size_t>(r + 1));
    for (int s = 0; s < r; ++s) known[static_cast<std::size_t>(s)] = Rat(static_cast<long>(df.get(s, t)));
    UniPoly p(known);
    for (int j = 0; j <= r; ++j) {
      for (int k = 0; k < t; ++k) {
        const Rat& v = g[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
        const int shift = j - t + k;
        if (v.is_zero() || shift < 0) continue;
        const Rat c = v * Rat(static_cast<long>(binom(j, t - k)));
        p = p - c * (upow(x, shift) * upow(one_plus_x, r - j));
      }
    }
    // With u = x / (1 + x): sum_j g_{j,t} u^j = sum_s [P_t]_s u^s (1 - u)^{r-s}.
    UniPoly column;
    for (int s = 0; s <= p.degree(); ++s) {
      if (s > r) throw InconsistentInputError("f-matrix difference is not in the image of T");
      column = column + p.coeff(static_cast<std::size_t>(s)) * (upow(x, s) * upow(one_minus_u, r - s));
    }
    for (int j = 0; j <= r; ++j) g[static_cast<std::size_t>(j)][static_cast<std::size_t>(t)] = column.coeff(static_cast<std::size_t>(j));
  }

  GMatrix out = GMatrix::zero(n, r);
  for (int j = 0; j <= r; ++j)
    for (int k = 0; k <= n - r; ++k) {
      const Rat& v = g[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
      if (!v.is_integer()) {
        throw InconsistentInputError("g_{" + std::to_string(j) + "," + std::to_string(k) + "} = " + v.str() +
                                     " is not an integer");
      }
      out.entries(static_cast<std::size_t>(j), static_cast<std::size_t>(k)) = v.num().get_si();
    }
  if (!is_skew_symmetric(out)) throw InconsistentInputError("recovered g-matrix violates the skew-symmetries");
  if (apply_T(out) != df) throw InconsistentInputError("recovered g-matrix does not reproduce the f-matrix difference");
  return out;
}

bool small_part_nonnegative(const GMatrix& g) {
  const IntMatrix small = g.small();
  return std::all_of(small.data().begin(), small.data().end(), [](std::int64_t x) { return x >= 0; });
}

IntMatrix g_closed_form_neighborly(int n, int r) {
  if (!(n > r && r >= 1)) throw DimensionError("closed form needs n > r >= 1");
  const long rows = floor_div(r - 1, 2) + 1;
  const long cols = floor_div(n - r - 1, 2) + 1;
  IntMatrix out(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  for (long k = 0; k < cols; ++k) {
    std::int64_t cumulative = 0;
    for (long j = 0; j < rows; ++j) {
      const auto v = binom(n - k - r + j, j) * binom(k + r - 1 - j, k) -
                     binom(n - k - r + j - 1, j - 1) * binom(k + r - j, k);
      if (v <= 0) throw std::logic_error("closed-form g entry is not positive");
      cumulative += v;
      if (cumulative != binom(n - k - r + j, j) * binom(k + r - 1 - j, k)) {
        throw std::logic_error("cumulative closed form disagrees");
      }
      if (j == 0 && v != binom(k + r - 1, r - 1)) throw std::logic_error("g_{0,k} closed form disagrees");
      out(static_cast<std::size_t>(j), static_cast<std::size_t>(k)) = v;
    }
  }
  return out;
}

RelationReport check_contraction_deletion(const VectorConfig& v, const VectorConfig& w, MinorMode mode) {
  const bool contracting = mode == MinorMode::contract;
  if (v.rank() != w.rank() || v.size() != w.size()) throw DimensionError("configurations differ in (n, r)");
  const int n = v.size();
  const int r = v.rank();
  if (contracting && r < 2) throw DimensionError("contraction needs r >= 2");
  if (!contracting && n < r + 1) throw DimensionError("deletion needs n >= r + 1");

  const GMatrix g = g_from_fmatrices(f_matrix(v), f_matrix(w));
  const int minor_r = contracting ? r - 1 : r;
  GMatrix sum = GMatrix::zero(n - 1, minor_r);
  for (int i = 0; i < n; ++i) {
    const VectorConfig vi = contracting ? contract(v, i) : delete_vector(v, i);
    const VectorConfig wi = contracting ? contract(w, i) : delete_vector(w, i);
    sum.entries = sum.entries + g_from_fmatrices(f_matrix(vi), f_matrix(wi)).entries;
  }

  RelationReport report{contracting ? "contraction" : "deletion", true, std::nullopt};
  for (long j = 0; j <= minor_r; ++j) {
    for (long k = 0; k <= n - 1 - minor_r; ++k) {
      const auto expected = contracting ? (r - j) * g.at(j, k) + (j + 1) * g.at(j + 1, k)
                                        : (n - r - k) * g.at(j, k) + (k + 1) * g.at(j, k + 1);
      const auto actual = sum.at(j, k);
      if (expected != actual) {
        report.holds = false;
        report.witness = Witness{j, k,
                                 "sum over minors gives " + std::to_string(actual) + ", expected " +
                                     std::to_string(expected)};
        return report;
      }
    }
  }
  return report;
}

}  // namespace levels
