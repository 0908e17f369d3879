#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace stereograph {

using BigInt = boost::multiprecision::cpp_int;

/// Exact integer polynomial, coefficients stored highest degree first:
/// coefficients()[i] multiplies x^(degree - i). The zero polynomial has a
/// single zero coefficient.
class IntPolynomial {
 public:
  IntPolynomial() : coeffs_{0} {}
  explicit IntPolynomial(std::vector<BigInt> descending);

  static IntPolynomial from_ascending(std::vector<BigInt> ascending);
  /// sum_k values[k] * x(x-1)...(x-k+1)
  static IntPolynomial from_falling_factorial_basis(const std::vector<BigInt>& values);

  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }

  /// i-th coefficient counted from the leading one; zero past the end.
  BigInt from_top(std::size_t i) const;
  /// Coefficient of x^power.
  BigInt of_power(std::size_t power) const;

  BigInt evaluate(const BigInt& x) const;

  /// e.g. "x^4 - 4x^3 + 6x^2 - 3x".
  std::string to_string(std::string_view variable = "x") const;
  /// Coefficients separated by single spaces, leading first.
  std::string to_coefficient_line() const;

  IntPolynomial operator*(const IntPolynomial& other) const;
  IntPolynomial operator+(const IntPolynomial& other) const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

}  // namespace stereograph
