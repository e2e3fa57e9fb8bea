#include "levels/config.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "levels/combinatorics.hpp"
#include "levels/errors.hpp"
#include "levels/faces.hpp"
#include "levels/random.hpp"

namespace levels {

namespace {

constexpr int kResampleBudget = 1000;

std::string subset_label(const std::vector<int>& subset) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < subset.size(); ++i) os << (i ? "," : "") << subset[i] + 1;
  os << '}';
  return os.str();
}

void check_general_position(const Mat& m) {
  const int r = static_cast<int>(m.rows());
  const int n = static_cast<int>(m.cols());
  for_each_subset(n, r, [&](const std::vector<int>& subset) {
    if (det(m.select_columns(subset)).is_zero()) {
      throw GeneralPositionError("columns " + subset_label(subset) + " are linearly dependent", subset);
    }
  });
}

bool in_general_position(const Mat& m) {
  try {
    check_general_position(m);
    return true;
  } catch (const GeneralPositionError&) {
    return false;
  }
}

std::vector<Rat> moment_column(const Rat& t, int r) {
  std::vector<Rat> col(static_cast<std::size_t>(r));
  Rat power = 1;
  for (int i = 0; i < r; ++i) {
    col[static_cast<std::size_t>(i)] = power;
    power *= t;
  }
  return col;
}

std::vector<Rat> default_params(int n) {
  std::vector<Rat> t;
  for (int i = 0; i < n; ++i) t.emplace_back(i);
  return t;
}

}  // namespace

VectorConfig::VectorConfig(Mat vectors) : vectors_(std::move(vectors)) {
  if (vectors_.rows() < 1) throw DimensionError("configuration rank must be at least 1");
  if (vectors_.cols() < vectors_.rows()) {
    throw DimensionError("configuration needs n >= r (got n=" + std::to_string(vectors_.cols()) +
                         ", r=" + std::to_string(vectors_.rows()) + ")");
  }
  check_general_position(vectors_);
}

VectorConfig new_config(int r, int n, const std::vector<Rat>& entries) {
  if (r < 1 || n < r) throw DimensionError("configuration needs n >= r >= 1");
  if (entries.size() != static_cast<std::size_t>(r) * static_cast<std::size_t>(n)) {
    throw DimensionError("expected r*n entries");
  }
  Mat m(static_cast<std::size_t>(r), static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < r; ++i)
      m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = entries[static_cast<std::size_t>(j * r + i)];
  return VectorConfig(std::move(m));
}

VectorConfig gen_cyclic(int n, int r, const std::vector<Rat>& params) {
  if (r < 1 || n < r) throw DimensionError("cyclic configuration needs n >= r >= 1");
  if (params.size() != static_cast<std::size_t>(n)) throw DimensionError("need exactly n parameters");
  for (std::size_t i = 1; i < params.size(); ++i) {
    if (!(params[i - 1] < params[i])) throw std::invalid_argument("parameters must be strictly increasing");
  }
  std::vector<std::vector<Rat>> cols;
  for (const Rat& t : params) cols.push_back(moment_column(t, r));
  return VectorConfig(Mat::from_columns(static_cast<std::size_t>(r), cols));
}

VectorConfig gen_cocyclic(int n, int r, const std::vector<Rat>& params) {
  Mat m = gen_cyclic(n, r, params).matrix();
  // 1-based column i gets (-1)^i, so the odd (1-based) columns flip.
  for (std::size_t j = 0; j < m.cols(); j += 2)
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = -m(i, j);
  return VectorConfig(std::move(m));
}

VectorConfig gen_cyclic(int n, int r) { return gen_cyclic(n, r, default_params(n)); }
VectorConfig gen_cocyclic(int n, int r) { return gen_cocyclic(n, r, default_params(n)); }

VectorConfig gen_random(int n, int r, std::uint64_t seed, bool pointed) {
  if (r < 1 || n < r) throw DimensionError("random configuration needs n >= r >= 1");
  Rng rng(seed);
  const long bound = 100L * n;
  for (int attempt = 0; attempt < kResampleBudget; ++attempt) {
    Mat m(static_cast<std::size_t>(r), static_cast<std::size_t>(n));
    for (std::size_t j = 0; j < m.cols(); ++j) {
      for (std::size_t i = 0; i < m.rows(); ++i) {
        m(i, j) = (pointed && i == 0) ? Rat(1) : Rat(rng.uniform(-bound, bound));
      }
    }
    if (in_general_position(m)) return VectorConfig(std::move(m));
  }
  throw BudgetExceededError("no configuration in general position after " + std::to_string(kResampleBudget) +
                            " attempts");
}

VectorConfig gale_dual(const VectorConfig& v) {
  if (v.size() == v.rank()) throw DimensionError("Gale dual of a configuration with n = r is empty");
  return VectorConfig(kernel_basis(v.matrix()).transpose());
}

VectorConfig delete_vector(const VectorConfig& v, int i) {
  if (i < 0 || i >= v.size()) throw DimensionError("vector index out of range");
  std::vector<int> keep;
  for (int j = 0; j < v.size(); ++j)
    if (j != i) keep.push_back(j);
  return VectorConfig(v.matrix().select_columns(keep));
}

VectorConfig contract(const VectorConfig& v, int i) {
  if (i < 0 || i >= v.size()) throw DimensionError("vector index out of range");
  if (v.rank() < 2) throw DimensionError("contraction needs rank at least 2");
  const auto r = static_cast<std::size_t>(v.rank());
  Mat normal(1, r);
  for (std::size_t k = 0; k < r; ++k) normal(0, k) = v.matrix()(k, static_cast<std::size_t>(i));
  const Mat basis = kernel_basis(normal);               // r x (r-1)
  const Mat bt = basis.transpose();
  const Mat coords = inverse(bt * basis) * bt;         // (r-1) x r
  std::vector<int> keep;
  for (int j = 0; j < v.size(); ++j)
    if (j != i) keep.push_back(j);
  return VectorConfig(coords * v.matrix().select_columns(keep));
}

VectorConfig transform(const Mat& a, const VectorConfig& v) { return VectorConfig(a * v.matrix()); }

bool is_pointed(const VectorConfig& v) { return is_extremal(v, {}); }

bool is_extremal(const VectorConfig& v, const std::vector<int>& subset) {
  if (static_cast<int>(subset.size()) >= v.rank()) return false;
  std::vector<std::int8_t> signs(static_cast<std::size_t>(v.size()), 1);
  for (int i : subset) {
    if (i < 0 || i >= v.size()) throw DimensionError("subset index out of range");
    signs[static_cast<std::size_t>(i)] = 0;
  }
  const auto patterns = dissection_patterns(v);
  return std::binary_search(patterns.begin(), patterns.end(), SignVector(std::move(signs)));
}

bool is_extremal_via_dependencies(const VectorConfig& v, const std::vector<int>& subset) {
  if (static_cast<int>(subset.size()) >= v.rank()) return false;
  std::vector<bool> inside(static_cast<std::size_t>(v.size()), false);
  for (int i : subset) inside[static_cast<std::size_t>(i)] = true;
  for (const SignVector& f : dependency_patterns(v)) {
    bool negatives_inside = true;
    for (int i = 0; i < v.size() && negatives_inside; ++i) {
      if (f[i] < 0 && !inside[static_cast<std::size_t>(i)]) negatives_inside = false;
    }
    if (negatives_inside) return false;
  }
  return true;
}

int neighborliness_degree(const VectorConfig& v) {
  const auto patterns = dissection_patterns(v);
  auto extremal = [&](const std::vector<int>& subset) {
    std::vector<std::int8_t> signs(static_cast<std::size_t>(v.size()), 1);
    for (int i : subset) signs[static_cast<std::size_t>(i)] = 0;
    return std::binary_search(patterns.begin(), patterns.end(), SignVector(std::move(signs)));
  };
  int degree = -1;
  for (int j = 0; j < v.rank(); ++j) {
    bool all = true;
    for_each_subset(v.size(), j, [&](const std::vector<int>& s) { all = all && extremal(s); });
    if (!all) break;
    degree = j;
  }
  return degree;
}

int coneighborliness_degree(const VectorConfig& v) {
  const FMatrix f = f_matrix(v);
  int degree = -1;
  for (int t = 0; t <= v.size(); ++t) {
    for (int s = 0; s <= v.sphere_dim(); ++s) {
      if (f.at(s, t) != 0) return degree;
    }
    degree = t;
  }
  return degree;
}

bool is_neighborly(const VectorConfig& v) {
  return neighborliness_degree(v) >= floor_div(v.rank() - 1, 2);
}

bool is_coneighborly(const VectorConfig& v) {
  return coneighborliness_degree(v) >= floor_div(v.size() - v.rank() - 1, 2);
}

}  // namespace levels
