#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace levels {

/// Shape mismatch or out-of-range size/index.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed textual or JSON input.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Some r-subset of columns is linearly dependent.
class GeneralPositionError : public std::invalid_argument {
 public:
  GeneralPositionError(const std::string& what, std::vector<int> subset)
      : std::invalid_argument(what), subset_(std::move(subset)) {}

  /// 0-based column indices of the dependent subset.
  const std::vector<int>& subset() const noexcept { return subset_; }

 private:
  std::vector<int> subset_;
};

/// Root isolation was asked about the zero polynomial.
class DegeneratePolynomialError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A polynomial vanishes at an endpoint of the isolation range.
class BoundaryRootError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A straight-line motion is not generic (multiple or shared roots).
class GenericityError : public std::runtime_error {
 public:
  GenericityError(const std::string& what, std::vector<std::vector<int>> subsets)
      : std::runtime_error(what), subsets_(std::move(subsets)) {}

  const std::vector<std::vector<int>>& subsets() const noexcept { return subsets_; }

 private:
  std::vector<std::vector<int>> subsets_;
};

/// Matrices handed in as f-matrices cannot come from configurations.
class InconsistentInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A bounded search (resampling, enumeration) ran out of budget.
class BudgetExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace levels
