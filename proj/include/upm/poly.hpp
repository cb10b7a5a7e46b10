#ifndef UPM_POLY_HPP
#define UPM_POLY_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "upm/bigint.hpp"

namespace upm {

/// Dense univariate polynomial over BigInt, ascending coefficient order:
/// coeffs()[i] is the coefficient of x^i. Always stored in canonical form
/// (no trailing zero coefficient); the zero polynomial holds no coefficients
/// and its degree is the distinguished "minus infinity" (std::nullopt).
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(long constant);  // NOLINT(google-explicit-constructor) constants embed as a ring
  explicit IntPoly(BigInt constant);
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly monomial(std::size_t power, BigInt coefficient = 1);

  bool is_zero() const { return coeffs_.empty(); }
  /// nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  /// Coefficient of x^i; zero beyond the stored degree.
  BigInt coeff(std::size_t i) const;
  BigInt constant_term() const { return coeff(0); }
  BigInt leading_coeff() const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& rhs);
  IntPoly& operator-=(const IntPoly& rhs);
  IntPoly& operator*=(const IntPoly& rhs);
  IntPoly& operator*=(const BigInt& scalar);

  friend IntPoly operator+(IntPoly lhs, const IntPoly& rhs) { return lhs += rhs; }
  friend IntPoly operator-(IntPoly lhs, const IntPoly& rhs) { return lhs -= rhs; }
  friend IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs);
  friend IntPoly operator*(IntPoly lhs, const BigInt& scalar) { return lhs *= scalar; }
  friend IntPoly operator*(const BigInt& scalar, IntPoly rhs) { return rhs *= scalar; }

  friend bool operator==(const IntPoly& lhs, const IntPoly& rhs) {
    return lhs.coeffs_ == rhs.coeffs_;
  }
  friend bool operator!=(const IntPoly& lhs, const IntPoly& rhs) { return !(lhs == rhs); }

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

inline bool is_zero(const IntPoly& p) { return p.is_zero(); }

/// p(x) -> p(-x): coefficient i picks up a factor (-1)^i. Involution and
/// ring homomorphism.
IntPoly substitute_neg(const IntPoly& p);

/// Exact quotient num/den over Z[x]; throws std::logic_error when the
/// division is not exact (a remainder, or a coefficient quotient outside Z).
IntPoly divide_exact(const IntPoly& num, const IntPoly& den);

/// Horner evaluation in double precision.
double eval(const IntPoly& p, double x);

/// Ascending-power rendering, e.g. "1 - 2*x - x^2 + x^3"; zero terms omitted.
std::string to_string(const IntPoly& p, char var = 'x');

}  // namespace upm

#endif
