#include <doctest.h>

#include "levels/bipoly.hpp"
#include "levels/random.hpp"

using namespace levels;

namespace {

const BiPoly x = BiPoly::x();
const BiPoly y = BiPoly::y();
const BiPoly ds_x = -(BiPoly::x() + BiPoly::y() + BiPoly(1));

BiPoly random_poly(Rng& rng) {
  BiPoly p;
  const long terms = rng.uniform(0, 5);
  for (long i = 0; i < terms; ++i) {
    p += BiPoly::monomial(Rat(rng.uniform(-5, 5), rng.uniform(1, 3)), static_cast<int>(rng.uniform(0, 3)),
                          static_cast<int>(rng.uniform(0, 3)));
  }
  return p;
}

}  // namespace

TEST_CASE("substitution examples") {
  CHECK((x * y).substitute(x + y + BiPoly(1), y) == x * y + y * y + y);
  CHECK((x * x).substitute(x, y) == x * x);
  CHECK((x + BiPoly(1)).substitute(ds_x, y) == -x - y);
}

TEST_CASE("from_matrix places coefficients") {
  const IntMatrix f{{1, 2, 2, 1}, {2, 2, 2, 0}};
  const BiPoly expected = BiPoly(1) + BiPoly(2) * y + BiPoly(2) * y * y + pow(y, 3) +
                          x * (BiPoly(2) + BiPoly(2) * y + BiPoly(2) * y * y);
  CHECK(BiPoly::from_matrix(f) == expected);
  CHECK(BiPoly::from_matrix(IntMatrix(2, 3)).is_zero());
  CHECK(BiPoly::from_matrix(IntMatrix{{1}}) == BiPoly(1));
  CHECK(BiPoly::from_matrix(f, Var::y, Var::x).coeff(1, 0) == Rat(2));
  CHECK(BiPoly::from_matrix(f).to_matrix(2, 4) == f);
}

TEST_CASE("text form") {
  CHECK((BiPoly(30) * x * x + BiPoly(60) * x + BiPoly(32)).str() == "30*x^2 + 60*x + 32");
  CHECK((x * y - y).str() == "x*y - y");
  CHECK(BiPoly().str() == "0");
}

TEST_CASE("zero coefficients are never stored") {
  const BiPoly p = x + y - x;
  CHECK(p == y);
  CHECK(p.terms().size() == 1);
}

TEST_CASE("substitution laws on random polynomials") {
  Rng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const BiPoly p = random_poly(rng);
    const BiPoly q = random_poly(rng);
    CHECK(p.substitute(x, y) == p);
    CHECK((p * q).substitute(ds_x, y) == p.substitute(ds_x, y) * q.substitute(ds_x, y));
    CHECK((p + q).substitute(y, x * x) == p.substitute(y, x * x) + q.substitute(y, x * x));
    CHECK(p.substitute(ds_x, y).substitute(ds_x, y) == p);
  }
}
