#include "levels/faces.hpp"

#include <algorithm>

#include "levels/combinatorics.hpp"
#include "levels/errors.hpp"

namespace levels {

namespace {

void sort_unique(PatternSet& patterns) {
  std::sort(patterns.begin(), patterns.end());
  patterns.erase(std::unique(patterns.begin(), patterns.end()), patterns.end());
}

}  // namespace

PatternSet dissection_patterns(const VectorConfig& v) {
  const int n = v.size();
  const int r = v.rank();
  const int d = r - 1;
  std::vector<std::vector<Rat>> cols;
  for (int i = 0; i < n; ++i) cols.push_back(v.column(i));

  int assignments = 1;
  for (int i = 0; i < d; ++i) assignments *= 3;

  PatternSet out;
  for_each_subset(n, d, [&](const std::vector<int>& through) {
    Mat rows(static_cast<std::size_t>(d), static_cast<std::size_t>(r));
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < r; ++b)
        rows(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) = cols[static_cast<std::size_t>(through[static_cast<std::size_t>(a)])][static_cast<std::size_t>(b)];
    const std::vector<Rat> normal = kernel_basis(rows).column(0);

    std::vector<std::int8_t> vertex(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) vertex[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(dot(cols[static_cast<std::size_t>(i)], normal).sign());

    for (int orientation : {1, -1}) {
      std::vector<std::int8_t> signs = vertex;
      for (auto& s : signs) s = static_cast<std::int8_t>(s * orientation);
      for (int code = 0; code < assignments; ++code) {
        int c = code;
        for (int a = 0; a < d; ++a) {
          signs[static_cast<std::size_t>(through[static_cast<std::size_t>(a)])] = static_cast<std::int8_t>(c % 3 - 1);
          c /= 3;
        }
        out.emplace_back(signs);
      }
    }
  });
  sort_unique(out);
  return out;
}

PatternSet dependency_patterns(const VectorConfig& v) {
  if (v.size() == v.rank()) return {};
  return dissection_patterns(gale_dual(v));
}

PatternSet farkas_complement_oracle(const VectorConfig& v) {
  const int n = v.size();
  if (n > kFarkasMaxSize) {
    throw BudgetExceededError("Farkas oracle enumerates 3^n sign vectors; n=" + std::to_string(n) +
                              " exceeds the limit " + std::to_string(kFarkasMaxSize));
  }
  std::vector<std::size_t> place(static_cast<std::size_t>(n));
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) {
    place[static_cast<std::size_t>(i)] = total;
    total *= 3;
  }
  // Base-3 code per coordinate: 0 -> 0, + -> 1, - -> 2.
  auto digit = [](int s) -> std::size_t { return s == 0 ? 0 : (s > 0 ? 1 : 2); };

  std::vector<bool> covered(total, false);
  for (const SignVector& g : dissection_patterns(v)) {
    std::vector<int> support;
    for (int i = 0; i < n; ++i)
      if (g[i] != 0) support.push_back(i);
    const std::size_t subsets = std::size_t{1} << support.size();
    for (std::size_t mask = 0; mask < subsets; ++mask) {
      std::size_t code = 0;
      for (std::size_t b = 0; b < support.size(); ++b) {
        if (mask >> b & 1U) code += digit(g[support[b]]) * place[static_cast<std::size_t>(support[b])];
      }
      covered[code] = true;
    }
  }

  PatternSet out;
  for (std::size_t code = 1; code < total; ++code) {
    if (covered[code]) continue;
    std::vector<std::int8_t> signs(static_cast<std::size_t>(n));
    std::size_t c = code;
    for (int i = 0; i < n; ++i) {
      const std::size_t dgt = c % 3;
      signs[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(dgt == 0 ? 0 : (dgt == 1 ? 1 : -1));
      c /= 3;
    }
    out.emplace_back(std::move(signs));
  }
  sort_unique(out);
  return out;
}

FMatrix f_matrix(const PatternSet& patterns, int n, int r) {
  FMatrix f{n, r, IntMatrix(static_cast<std::size_t>(r), static_cast<std::size_t>(n + 1))};
  for (const SignVector& p : patterns) {
    if (p.size() != n) throw DimensionError("pattern length differs from n");
    if (p.zeros() > r - 1) throw InconsistentInputError("dissection pattern " + p.str() + " has more than d zeros");
    ++f.counts(static_cast<std::size_t>(p.zeros()), static_cast<std::size_t>(p.minuses()));
  }
  return f;
}

FMatrix f_matrix(const VectorConfig& v) { return f_matrix(dissection_patterns(v), v.size(), v.rank()); }

FStarMatrix fstar_matrix(const PatternSet& patterns, int n, int r) {
  FStarMatrix f{n, r, IntMatrix(static_cast<std::size_t>(n + 1), static_cast<std::size_t>(n + 1))};
  for (const SignVector& p : patterns) {
    if (p.size() != n) throw DimensionError("pattern length differs from n");
    ++f.counts(static_cast<std::size_t>(p.pluses() + p.minuses()), static_cast<std::size_t>(p.minuses()));
  }
  return f;
}

FStarMatrix fstar_matrix(const VectorConfig& v) {
  return fstar_matrix(dependency_patterns(v), v.size(), v.rank());
}

BiPoly f_polynomial(const FMatrix& f) { return BiPoly::from_matrix(f.counts); }

BiPoly fstar_polynomial(const FStarMatrix& f) {
  BiPoly p;
  for (int s = 0; s <= f.n; ++s)
    for (int t = 0; t <= f.n; ++t) {
      const auto c = f.at(s, t);
      if (c != 0) p += BiPoly::monomial(Rat(static_cast<long>(c)), f.n - s, t);
    }
  return p;
}

FStarMatrix fstar_from_polynomial(const BiPoly& p, int n, int r) {
  FStarMatrix f{n, r, IntMatrix(static_cast<std::size_t>(n + 1), static_cast<std::size_t>(n + 1))};
  for (const auto& [m, c] : p.terms()) {
    const int s = n - m.first;
    const int t = m.second;
    if (s < 0 || s > n || t < 0 || t > n) {
      throw InconsistentInputError("f*-polynomial term outside the (n+1) x (n+1) window");
    }
    if (!c.is_integer()) throw InconsistentInputError("non-integral f*-coefficient " + c.str());
    f.counts(static_cast<std::size_t>(s), static_cast<std::size_t>(t)) = c.num().get_si();
  }
  return f;
}

}  // namespace levels
