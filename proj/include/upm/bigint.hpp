#ifndef UPM_BIGINT_HPP
#define UPM_BIGINT_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace upm {

// Exact signed integer of unbounded precision; the scalar of every ring here.
using BigInt = mpz_class;

inline bool is_zero(const BigInt& a) { return mpz_sgn(a.get_mpz_t()) == 0; }

// Exact quotient a/b. Non-divisibility means an upstream arithmetic bug,
// never bad user input, so it is a logic error.
inline BigInt divide_exact(const BigInt& a, const BigInt& b) {
  if (is_zero(b)) throw std::logic_error("divide_exact: division by zero");
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
    throw std::logic_error("divide_exact: " + a.get_str() + " not divisible by " + b.get_str());
  BigInt q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline std::string to_string(const BigInt& a) { return a.get_str(); }

}  // namespace upm

#endif
