#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace levels {

/// Element of {-1, 0, +1}^n. Ordered lexicographically with - < 0 < +.
class SignVector {
 public:
  SignVector() = default;
  explicit SignVector(std::vector<std::int8_t> signs);

  /// Parses a string over {'-', '0', '+'}, e.g. "+-0+".
  static SignVector parse(std::string_view text);

  int size() const { return static_cast<int>(signs_.size()); }
  int operator[](int i) const { return signs_[static_cast<std::size_t>(i)]; }
  const std::vector<std::int8_t>& signs() const { return signs_; }

  int zeros() const { return count(0); }
  int minuses() const { return count(-1); }
  int pluses() const { return count(1); }
  bool is_zero() const { return zeros() == size(); }

  SignVector operator-() const;

  /// Conformal order F <= G: F_+ within G_+ and F_- within G_-.
  bool conforms_to(const SignVector& g) const;

  std::string str() const;

  friend auto operator<=>(const SignVector&, const SignVector&) = default;
  friend bool operator==(const SignVector&, const SignVector&) = default;

 private:
  int count(int s) const;
  std::vector<std::int8_t> signs_;
};

}  // namespace levels
