#include "upm/ratfunc.hpp"

#include <utility>

namespace upm {

RatFunc::RatFunc(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (upm::is_zero(den_.constant_term()))
    throw std::invalid_argument("RatFunc: denominator constant term must be nonzero");
}

std::vector<BigInt> series_expand(const RatFunc& f, std::size_t order) {
  const BigInt d0 = f.den().constant_term();
  if (d0 != 1 && d0 != -1)
    throw std::invalid_argument(
        "series_expand: denominator constant term must be +1 or -1 for an integer series");
  return series_divide(f.num().coeffs(), f.den().coeffs(), order);
}

std::string to_string(const RatFunc& f, char var) {
  return "(" + to_string(f.num(), var) + ")/(" + to_string(f.den(), var) + ")";
}

}  // namespace upm
