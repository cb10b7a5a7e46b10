#ifndef UPM_RATFUNC_HPP
#define UPM_RATFUNC_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "upm/poly.hpp"

namespace upm {

/// Rational function num/den over Z[x]. The denominator must have a nonzero
/// constant term so a power-series expansion at 0 exists. Numerator and
/// denominator are kept verbatim (no forced GCD reduction); equality is
/// cross-multiplicative.
class RatFunc {
 public:
  RatFunc(IntPoly num, IntPoly den);

  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }

  /// (n1,d1) == (n2,d2)  iff  n1*d2 == n2*d1.
  friend bool operator==(const RatFunc& lhs, const RatFunc& rhs) {
    return lhs.num_ * rhs.den_ == rhs.num_ * lhs.den_;
  }
  friend bool operator!=(const RatFunc& lhs, const RatFunc& rhs) { return !(lhs == rhs); }

 private:
  IntPoly num_;
  IntPoly den_;
};

/// Power-series division over any commutative ring whose element 0 of `den`
/// is its own inverse (den[0]^2 == 1). Returns the first `order` coefficients
/// c with den * c == num (mod x^order), via the linear recurrence induced by
/// the denominator.
template <class Ring>
std::vector<Ring> series_divide(const std::vector<Ring>& num, const std::vector<Ring>& den,
                                std::size_t order) {
  if (den.empty() || !(den[0] * den[0] == Ring(1)))
    throw std::invalid_argument("series_divide: denominator constant term is not a unit (+1/-1)");
  const Ring& inv0 = den[0];  // self-inverse
  std::vector<Ring> coeffs;
  coeffs.reserve(order);
  for (std::size_t n = 0; n < order; ++n) {
    Ring acc = n < num.size() ? num[n] : Ring(0);
    const std::size_t jmax = n < den.size() - 1 ? n : den.size() - 1;
    for (std::size_t j = 1; j <= jmax; ++j) acc -= den[j] * coeffs[n - j];
    coeffs.push_back(acc * inv0);
  }
  return coeffs;
}

/// First `order` power-series coefficients of f at 0. Requires
/// f.den()(0) in {+1,-1} so that all coefficients are integers;
/// throws std::invalid_argument otherwise.
std::vector<BigInt> series_expand(const RatFunc& f, std::size_t order);

/// "(num)/(den)" with both parts in ascending-power text.
std::string to_string(const RatFunc& f, char var = 'x');

}  // namespace upm

#endif
