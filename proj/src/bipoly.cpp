#include "levels/bipoly.hpp"

#include <sstream>
#include <vector>

#include "levels/errors.hpp"

namespace levels {

BiPoly::BiPoly(const Rat& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{0, 0}, c);
}

BiPoly BiPoly::monomial(const Rat& c, int deg_x, int deg_y) {
  BiPoly p;
  p.add_term({deg_x, deg_y}, c);
  return p;
}

BiPoly BiPoly::from_matrix(const IntMatrix& m, Var row_var, Var col_var) {
  BiPoly p;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j) == 0) continue;
      int dx = 0;
      int dy = 0;
      (row_var == Var::x ? dx : dy) += static_cast<int>(i);
      (col_var == Var::x ? dx : dy) += static_cast<int>(j);
      p.add_term({dx, dy}, Rat(static_cast<long>(m(i, j))));
    }
  }
  return p;
}

void BiPoly::add_term(const Monomial& m, const Rat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Rat BiPoly::coeff(int deg_x, int deg_y) const {
  const auto it = terms_.find({deg_x, deg_y});
  return it == terms_.end() ? Rat(0) : it->second;
}

int BiPoly::degree_x() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.first);
  return d;
}

int BiPoly::degree_y() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.second);
  return d;
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term({ma.first + mb.first, ma.second + mb.second}, ca * cb);
  return r;
}

BiPoly pow(const BiPoly& p, int e) {
  if (e < 0) throw std::invalid_argument("negative polynomial power");
  BiPoly result(1);
  BiPoly base = p;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

BiPoly BiPoly::substitute(const BiPoly& sx, const BiPoly& sy) const {
  const int dx = degree_x();
  const int dy = degree_y();
  std::vector<BiPoly> px{BiPoly(1)};
  std::vector<BiPoly> py{BiPoly(1)};
  for (int i = 1; i <= dx; ++i) px.push_back(px.back() * sx);
  for (int i = 1; i <= dy; ++i) py.push_back(py.back() * sy);
  BiPoly r;
  for (const auto& [m, c] : terms_) {
    r += BiPoly(c) * px[static_cast<std::size_t>(m.first)] * py[static_cast<std::size_t>(m.second)];
  }
  return r;
}

IntMatrix BiPoly::to_matrix(std::size_t rows, std::size_t cols) const {
  IntMatrix out(rows, cols);
  for (const auto& [m, c] : terms_) {
    if (static_cast<std::size_t>(m.first) >= rows || static_cast<std::size_t>(m.second) >= cols) {
      throw InconsistentInputError("term " + c.str() + "*x^" + std::to_string(m.first) + "*y^" +
                                   std::to_string(m.second) + " lies outside the matrix window");
    }
    if (!c.is_integer()) throw InconsistentInputError("non-integral coefficient " + c.str());
    out(static_cast<std::size_t>(m.first), static_cast<std::size_t>(m.second)) = c.num().get_si();
  }
  return out;
}

std::string BiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    const bool constant = m.first == 0 && m.second == 0;
    const Rat mag = abs(c);
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (constant || mag != Rat(1)) {
      os << mag;
      need_star = true;
    }
    auto var = [&](char name, int e) {
      if (e == 0) return;
      if (need_star) os << '*';
      os << name;
      if (e > 1) os << '^' << e;
      need_star = true;
    };
    var('x', m.first);
    var('y', m.second);
  }
  return os.str();
}

}  // namespace levels
