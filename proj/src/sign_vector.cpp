#include "levels/sign_vector.hpp"

#include <algorithm>

#include "levels/errors.hpp"

namespace levels {

SignVector::SignVector(std::vector<std::int8_t> signs) : signs_(std::move(signs)) {
  for (auto s : signs_) {
    if (s < -1 || s > 1) throw std::invalid_argument("sign entries must be -1, 0 or +1");
  }
}

SignVector SignVector::parse(std::string_view text) {
  std::vector<std::int8_t> signs;
  signs.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '-': signs.push_back(-1); break;
      case '0': signs.push_back(0); break;
      case '+': signs.push_back(1); break;
      default: throw ParseError("invalid sign character '" + std::string(1, c) + "'");
    }
  }
  return SignVector(std::move(signs));
}

int SignVector::count(int s) const {
  return static_cast<int>(std::count(signs_.begin(), signs_.end(), static_cast<std::int8_t>(s)));
}

SignVector SignVector::operator-() const {
  SignVector r = *this;
  for (auto& s : r.signs_) s = static_cast<std::int8_t>(-s);
  return r;
}

bool SignVector::conforms_to(const SignVector& g) const {
  if (g.size() != size()) throw DimensionError("sign vector length mismatch");
  for (std::size_t i = 0; i < signs_.size(); ++i) {
    if (signs_[i] != 0 && signs_[i] != g.signs_[i]) return false;
  }
  return true;
}

std::string SignVector::str() const {
  std::string s;
  s.reserve(signs_.size());
  for (auto x : signs_) s.push_back(x < 0 ? '-' : (x > 0 ? '+' : '0'));
  return s;
}

}  // namespace levels
