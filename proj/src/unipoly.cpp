#include "levels/unipoly.hpp"

#include <stdexcept>

#include "levels/errors.hpp"

namespace levels {

UniPoly::UniPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UniPoly UniPoly::interpolate(std::span<const Rat> xs, std::span<const Rat> ys) {
  if (xs.size() != ys.size()) throw DimensionError("interpolation needs as many values as nodes");
  UniPoly result;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (ys[i].is_zero()) continue;
    UniPoly basis = constant(Rat(1));
    Rat denom = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis = basis * UniPoly({-xs[j], Rat(1)});
      denom *= xs[i] - xs[j];
    }
    result = result + (ys[i] / denom) * basis;
  }
  return result;
}

Rat UniPoly::operator()(const Rat& t) const {
  Rat acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= t;
    acc += *it;
  }
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rat> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Rat(static_cast<long>(i));
  return UniPoly(std::move(d));
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (Rat& c : r.coeffs_) c = -c;
  return r;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rat> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UniPoly(std::move(c));
}

UniPoly operator*(const Rat& c, const UniPoly& p) {
  UniPoly r = p;
  for (Rat& x : r.coeffs_) x *= c;
  r.trim();
  return r;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {UniPoly(), a};
  std::vector<Rat> rem = a.coeffs();
  std::vector<Rat> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const Rat& lead = b.leading();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    const auto top = static_cast<std::size_t>(k + b.degree());
    const Rat factor = rem[top] / lead;
    quot[static_cast<std::size_t>(k)] = factor;
    if (factor.is_zero()) continue;
    for (int i = 0; i <= b.degree(); ++i) {
      rem[static_cast<std::size_t>(k + i)] -= factor * b.coeffs()[static_cast<std::size_t>(i)];
    }
  }
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return (Rat(1) / a.leading()) * a;
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.degree() <= 0) return p.is_zero() ? p : UniPoly::constant(Rat(1));
  const UniPoly g = gcd(p, p.derivative());
  UniPoly q = divmod(p, g).first;
  return (Rat(1) / q.leading()) * q;
}

std::vector<UniPoly> sturm_sequence(const UniPoly& p) {
  std::vector<UniPoly> chain;
  if (p.is_zero()) return chain;
  chain.push_back(p);
  UniPoly next = p.derivative();
  while (!next.is_zero()) {
    chain.push_back(next);
    next = -divmod(chain[chain.size() - 2], chain.back()).second;
  }
  return chain;
}

int sign_variations(const std::vector<UniPoly>& chain, const Rat& t) {
  int variations = 0;
  int last = 0;
  for (const UniPoly& q : chain) {
    const int s = q.sign_at(t);
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

int count_distinct_roots(const UniPoly& p, const Rat& lo, const Rat& hi) {
  if (p.is_zero()) throw DegeneratePolynomialError("root count of the zero polynomial");
  if (p.degree() == 0) return 0;
  const auto chain = sturm_sequence(p);
  return sign_variations(chain, lo) - sign_variations(chain, hi);
}

std::vector<RootInterval> isolate_roots(const UniPoly& p, const Rat& lo, const Rat& hi) {
  if (p.is_zero()) throw DegeneratePolynomialError("cannot isolate roots of the zero polynomial");
  if (!(lo < hi)) throw std::invalid_argument("isolate_roots needs lo < hi");
  if (p(lo).is_zero() || p(hi).is_zero()) {
    throw BoundaryRootError("polynomial vanishes at an endpoint of the isolation range");
  }
  std::vector<RootInterval> found;
  if (p.degree() == 0) return found;

  const UniPoly q = squarefree_part(p);
  const auto chain = sturm_sequence(q);
  auto count = [&](const Rat& a, const Rat& b) {
    return sign_variations(chain, a) - sign_variations(chain, b);
  };

  // Depth-first bisection, left half first, so output comes out sorted.
  std::vector<std::pair<Rat, Rat>> stack{{lo, hi}};
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    const int c = count(a, b);
    if (c == 0) continue;
    if (c == 1) {
      found.push_back({a, b, true});
      continue;
    }
    const Rat m = midpoint(a, b);
    if (!q(m).is_zero()) {
      stack.emplace_back(m, b);
      stack.emplace_back(a, m);
      continue;
    }
    // m is itself a root: wrap it in its own interval.
    Rat delta = (b - a) / Rat(4);
    while (!(q(m - delta).sign() != 0 && q(m + delta).sign() != 0 && count(m - delta, m + delta) == 1)) {
      delta /= Rat(2);
    }
    stack.emplace_back(m + delta, b);
    stack.push_back({m - delta, m + delta});
    stack.emplace_back(a, m - delta);
  }

  const UniPoly g = gcd(p, p.derivative());
  if (g.degree() >= 1) {
    for (RootInterval& iv : found) iv.simple = count_distinct_roots(g, iv.lo, iv.hi) == 0;
  }
  return found;
}

RootInterval refine(const UniPoly& p, const RootInterval& iv) {
  const Rat m = midpoint(iv.lo, iv.hi);
  const int sm = p.sign_at(m);
  if (sm == 0) {
    const Rat quarter = iv.width() / Rat(4);
    return {m - quarter, m + quarter, iv.simple};
  }
  if (p.sign_at(iv.lo) * sm < 0) return {iv.lo, m, iv.simple};
  return {m, iv.hi, iv.simple};
}

int sign_at_root(const UniPoly& p, RootInterval& iv, const UniPoly& q) {
  if (q.is_zero()) return 0;
  const UniPoly common = gcd(p, q);
  if (common.degree() >= 1 && count_distinct_roots(common, iv.lo, iv.hi) > 0) return 0;
  for (;;) {
    const int slo = q.sign_at(iv.lo);
    const int shi = q.sign_at(iv.hi);
    if (slo != 0 && shi != 0 && count_distinct_roots(q, iv.lo, iv.hi) == 0) return slo;
    iv = refine(p, iv);
  }
}

}  // namespace levels
