#include "stereograph/polynomial.hpp"

#include <algorithm>

namespace stereograph {

IntPolynomial::IntPolynomial(std::vector<BigInt> descending) : coeffs_(std::move(descending)) { normalize(); }

void IntPolynomial::normalize() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c != 0; });
  coeffs_.erase(coeffs_.begin(), first);
  if (coeffs_.empty()) coeffs_.push_back(0);
}

IntPolynomial IntPolynomial::from_ascending(std::vector<BigInt> ascending) {
  std::reverse(ascending.begin(), ascending.end());
  return IntPolynomial(std::move(ascending));
}

IntPolynomial IntPolynomial::from_falling_factorial_basis(const std::vector<BigInt>& values) {
  IntPolynomial result;
  IntPolynomial falling(std::vector<BigInt>{1});
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (values[k] != 0) result = result + falling * IntPolynomial(std::vector<BigInt>{values[k]});
    falling = falling * IntPolynomial(std::vector<BigInt>{1, -BigInt(k)});
  }
  return result;
}

BigInt IntPolynomial::from_top(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

BigInt IntPolynomial::of_power(std::size_t power) const {
  if (power > degree()) return 0;
  return coeffs_[degree() - power];
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (const BigInt& c : coeffs_) acc = acc * x + c;
  return acc;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& other) const {
  std::vector<BigInt> out(coeffs_.size() + other.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& other) const {
  const std::size_t len = std::max(coeffs_.size(), other.coeffs_.size());
  std::vector<BigInt> out(len, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[len - coeffs_.size() + i] += coeffs_[i];
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) out[len - other.coeffs_.size() + i] += other.coeffs_[i];
  return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string(std::string_view variable) const {
  if (coeffs_.size() == 1) return coeffs_[0].str();
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    const std::size_t power = degree() - i;
    BigInt magnitude = c < 0 ? BigInt(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (magnitude != 1 || power == 0) out += magnitude.str();
    if (power >= 1) out += variable;
    if (power >= 2) out += "^" + std::to_string(power);
  }
  return out;
}

std::string IntPolynomial::to_coefficient_line() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ' ';
    out += coeffs_[i].str();
  }
  return out;
}

}  // namespace stereograph
