#include "upm/poly.hpp"

#include <sstream>
#include <utility>

namespace upm {

IntPoly::IntPoly(long constant) {
  if (constant != 0) coeffs_.emplace_back(constant);
}

IntPoly::IntPoly(BigInt constant) {
  if (!upm::is_zero(constant)) coeffs_.push_back(std::move(constant));
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPoly IntPoly::monomial(std::size_t power, BigInt coefficient) {
  IntPoly p;
  if (upm::is_zero(coefficient)) return p;
  p.coeffs_.assign(power + 1, BigInt(0));
  p.coeffs_[power] = std::move(coefficient);
  return p;
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && upm::is_zero(coeffs_.back())) coeffs_.pop_back();
}

std::optional<std::size_t> IntPoly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

BigInt IntPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : BigInt(0);
}

BigInt IntPoly::leading_coeff() const {
  return coeffs_.empty() ? BigInt(0) : coeffs_.back();
}

IntPoly IntPoly::operator-() const {
  IntPoly r(*this);
  for (BigInt& c : r.coeffs_) c = -c;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), BigInt(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), BigInt(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return IntPoly();
  std::vector<BigInt> prod(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (upm::is_zero(lhs.coeffs_[i])) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      prod[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return IntPoly(std::move(prod));
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) { return *this = *this * rhs; }

IntPoly& IntPoly::operator*=(const BigInt& scalar) {
  if (upm::is_zero(scalar)) {
    coeffs_.clear();
    return *this;
  }
  for (BigInt& c : coeffs_) c *= scalar;
  return *this;
}

IntPoly substitute_neg(const IntPoly& p) {
  std::vector<BigInt> cs = p.coeffs();
  for (std::size_t i = 1; i < cs.size(); i += 2) cs[i] = -cs[i];
  return IntPoly(std::move(cs));
}

IntPoly divide_exact(const IntPoly& num, const IntPoly& den) {
  if (den.is_zero()) throw std::logic_error("IntPoly divide_exact: division by zero");
  if (num.is_zero()) return IntPoly();
  const auto dn = *num.degree();
  const auto dd = *den.degree();
  if (dn < dd) throw std::logic_error("IntPoly divide_exact: degree of divisor exceeds dividend");

  std::vector<BigInt> rem = num.coeffs();
  std::vector<BigInt> quot(dn - dd + 1, BigInt(0));
  const BigInt& lead = den.coeffs().back();
  for (std::size_t k = dn - dd + 1; k-- > 0;) {
    BigInt& top = rem[k + dd];
    if (upm::is_zero(top)) continue;
    BigInt q = divide_exact(top, lead);  // throws if non-exact
    quot[k] = q;
    for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= q * den.coeffs()[j];
  }
  for (const BigInt& c : rem)
    if (!upm::is_zero(c)) throw std::logic_error("IntPoly divide_exact: nonzero remainder");
  return IntPoly(std::move(quot));
}

double eval(const IntPoly& p, double x) {
  double acc = 0.0;
  for (std::size_t i = p.coeffs().size(); i-- > 0;) acc = acc * x + p.coeffs()[i].get_d();
  return acc;
}

std::string to_string(const IntPoly& p, char var) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    const BigInt& c = p.coeffs()[i];
    if (upm::is_zero(c)) continue;
    const bool negative = mpz_sgn(c.get_mpz_t()) < 0;
    if (first) {
      if (negative) out << '-';
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    BigInt mag = abs(c);
    if (i == 0) {
      out << mag.get_str();
    } else {
      if (mag != 1) out << mag.get_str() << '*';
      out << var;
      if (i > 1) out << '^' << i;
    }
  }
  return out.str();
}

}  // namespace upm
