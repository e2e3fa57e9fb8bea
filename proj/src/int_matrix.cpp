#include "levels/int_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "levels/errors.hpp"

namespace levels {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged integer matrix initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

std::int64_t IntMatrix::get(long i, long j) const {
  if (i < 0 || j < 0 || static_cast<std::size_t>(i) >= rows_ || static_cast<std::size_t>(j) >= cols_) return 0;
  return (*this)(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::int64_t x) { return x == 0; });
}

std::int64_t IntMatrix::row_sum(std::size_t i) const {
  const auto first = data_.begin() + static_cast<std::ptrdiff_t>(i * cols_);
  return std::accumulate(first, first + static_cast<std::ptrdiff_t>(cols_), std::int64_t{0});
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix r = *this;
  for (auto& x : r.data_) x = -x;
  return r;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("integer matrix shape mismatch");
  IntMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) { return a + (-b); }

std::string IntMatrix::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace levels
