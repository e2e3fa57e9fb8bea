#include <doctest.h>

#include "levels/config.hpp"
#include "levels/errors.hpp"
#include "levels/faces.hpp"
#include "levels/random.hpp"

using namespace levels;

namespace {

VectorConfig cols(int r, std::initializer_list<long> entries) {
  std::vector<Rat> e;
  for (long v : entries) e.emplace_back(v);
  return new_config(r, static_cast<int>(e.size()) / r, e);
}

std::vector<Rat> column(std::initializer_list<long> xs) {
  std::vector<Rat> out;
  for (long v : xs) out.emplace_back(v);
  return out;
}

}  // namespace

TEST_CASE("new_config validates general position") {
  CHECK(cols(2, {1, 0, 0, 1, 1, 1}).size() == 3);
  CHECK(cols(1, {1, -3}).rank() == 1);
  try {
    cols(2, {1, 0, 2, 0});
    FAIL("expected a general position error");
  } catch (const GeneralPositionError& e) {
    CHECK(e.subset() == std::vector<int>{0, 1});
  }
  CHECK_THROWS_AS(new_config(3, 2, std::vector<Rat>(6, Rat(1))), DimensionError);
  CHECK_THROWS_AS(new_config(2, 2, std::vector<Rat>(3, Rat(1))), DimensionError);
}

TEST_CASE("cyclic and cocyclic generators") {
  const VectorConfig c = gen_cyclic(3, 2, {Rat(0), Rat(1), Rat(2)});
  CHECK(c.column(0) == column({1, 0}));
  CHECK(c.column(1) == column({1, 1}));
  CHECK(c.column(2) == column({1, 2}));
  const VectorConfig cc = gen_cocyclic(3, 2, {Rat(0), Rat(1), Rat(2)});
  CHECK(cc.column(0) == column({-1, 0}));
  CHECK(cc.column(1) == column({1, 1}));
  CHECK(cc.column(2) == column({-1, -2}));
  const VectorConfig sq = gen_cyclic(2, 2, {Rat(0), Rat(1)});
  CHECK(sq.column(1) == column({1, 1}));
  CHECK(gen_cyclic(4, 3) == gen_cyclic(4, 3, {Rat(0), Rat(1), Rat(2), Rat(3)}));
  CHECK_THROWS(gen_cyclic(3, 2, {Rat(0), Rat(2), Rat(1)}));
  CHECK_THROWS(gen_cyclic(3, 2, {Rat(0), Rat(1)}));
}

TEST_CASE("random generator") {
  const VectorConfig p = gen_random(5, 3, 1, true);
  for (int i = 0; i < 5; ++i) CHECK(p.column(i)[0] == Rat(1));
  CHECK(gen_random(4, 2, 7, false).size() == 4);
  CHECK(gen_random(6, 3, 42, false) == gen_random(6, 3, 42, false));
  CHECK_FALSE(gen_random(6, 3, 42, false) == gen_random(6, 3, 43, false));
  const long bound = 100 * 6;
  for (int i = 0; i < 6; ++i)
    for (const Rat& x : gen_random(6, 3, 9, false).column(i)) CHECK(abs(x) <= Rat(bound));
}

TEST_CASE("gale dual") {
  const VectorConfig v = cols(2, {1, 0, 0, 1, 1, 1});
  const VectorConfig dual = gale_dual(v);
  CHECK(dual.rank() == 1);
  const Rat s = dual.column(2)[0];
  CHECK(dual.column(0)[0] == -s);
  CHECK(dual.column(1)[0] == -s);
  CHECK_THROWS_AS(gale_dual(gen_cyclic(3, 3)), DimensionError);

  const VectorConfig c4 = gen_cyclic(4, 2);
  const VectorConfig d4 = gale_dual(c4);
  CHECK(d4.rank() == 2);
  CHECK(d4.size() == 4);
  const Mat prod = c4.matrix() * d4.matrix().transpose();
  for (const Rat& x : prod.data()) CHECK(x.is_zero());
  CHECK(f_matrix(gale_dual(gale_dual(gen_cyclic(6, 3)))) == f_matrix(gen_cyclic(6, 3)));
}

TEST_CASE("deletion and contraction") {
  CHECK(delete_vector(gen_cyclic(4, 2), 3) == gen_cyclic(3, 2));
  const VectorConfig line = contract(cols(2, {1, 0, 0, 1, 1, 1}), 0);
  CHECK(line.rank() == 1);
  CHECK(line.size() == 2);
  for (int i = 0; i < 2; ++i) CHECK_FALSE(line.column(i)[0].is_zero());
  CHECK_THROWS_AS(contract(gen_cyclic(3, 1, {Rat(1), Rat(2), Rat(3)}), 0), DimensionError);
  CHECK_THROWS_AS(delete_vector(gen_cyclic(4, 2), 4), DimensionError);

  // (V / v_i)^* and V^* \ v_i^* have the same combinatorics.
  const VectorConfig v = gen_random(6, 3, 5, false);
  for (int i = 0; i < 6; ++i) {
    CHECK(f_matrix(gale_dual(contract(v, i))) == f_matrix(delete_vector(gale_dual(v), i)));
  }
}

TEST_CASE("pointedness and extremal subsets") {
  CHECK(is_pointed(gen_cyclic(5, 3)));
  const VectorConfig around = cols(2, {1, 0, 0, 1, -1, -1});
  CHECK_FALSE(is_pointed(around));
  CHECK(neighborliness_degree(around) == -1);
  for (int i = 0; i < 5; ++i) CHECK(is_extremal(gen_cyclic(5, 3), {i}));
  for (int i = 0; i < 7; ++i) CHECK_FALSE(is_extremal(gen_cocyclic(7, 3), {i}));
  CHECK_FALSE(is_extremal(gen_cyclic(5, 3), {0, 1, 2}));
  const VectorConfig v = gen_random(6, 3, 3, true);
  for (int a = 0; a < 6; ++a) {
    CHECK(is_extremal(v, {a}) == is_extremal_via_dependencies(v, {a}));
    for (int b = a + 1; b < 6; ++b) CHECK(is_extremal(v, {a, b}) == is_extremal_via_dependencies(v, {a, b}));
  }
  CHECK(is_extremal(v, {}) == is_extremal_via_dependencies(v, {}));
}

TEST_CASE("neighborliness degrees") {
  CHECK(is_neighborly(gen_cyclic(6, 3)));
  CHECK(neighborliness_degree(gen_cyclic(6, 3)) >= 1);
  CHECK(coneighborliness_degree(gen_cyclic(6, 3)) == -1);
  CHECK(is_coneighborly(gen_cocyclic(6, 3)));
  CHECK(coneighborliness_degree(gen_cocyclic(6, 3)) >= 1);
  CHECK(neighborliness_degree(gen_cocyclic(6, 3)) == -1);
  CHECK(neighborliness_degree(gen_cyclic(7, 5)) >= 2);
  CHECK(is_neighborly(gen_cyclic(8, 5)));
  CHECK(is_coneighborly(gen_cocyclic(8, 5)));
}

TEST_CASE("invariance under positive scaling and linear maps") {
  Rng rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const VectorConfig v = gen_random(6, 3, static_cast<std::uint64_t>(trial), false);
    Mat scaled = v.matrix();
    for (std::size_t j = 0; j < scaled.cols(); ++j) {
      const Rat c(rng.uniform(1, 9), rng.uniform(1, 9));
      for (std::size_t i = 0; i < scaled.rows(); ++i) scaled(i, j) *= c;
    }
    const VectorConfig sv{scaled};
    CHECK(dissection_patterns(sv) == dissection_patterns(v));
    CHECK(dependency_patterns(sv) == dependency_patterns(v));

    Mat a(3, 3);
    do {
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) a(i, j) = Rat(rng.uniform(-4, 4));
    } while (det(a).is_zero());
    CHECK(f_matrix(transform(a, v)) == f_matrix(v));
  }
}
