#ifndef UPM_MATRIX_HPP
#define UPM_MATRIX_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "upm/bigint.hpp"
#include "upm/poly.hpp"

namespace upm {

/// Dense square matrix over an exact ring (BigInt or IntPoly), row-major.
template <class T>
class Matrix {
 public:
  explicit Matrix(std::size_t n) : n_(n), cells_(n * n, T(0)) {
    if (n == 0) throw std::invalid_argument("Matrix: size must be >= 1");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = T(1);
    return m;
  }

  std::size_t size() const { return n_; }

  T& at(std::size_t i, std::size_t j) { return cells_[i * n_ + j]; }
  const T& at(std::size_t i, std::size_t j) const { return cells_[i * n_ + j]; }

  friend Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
    if (lhs.n_ != rhs.n_) throw std::invalid_argument("Matrix product: size mismatch");
    Matrix prod(lhs.n_);
    for (std::size_t i = 0; i < lhs.n_; ++i)
      for (std::size_t k = 0; k < lhs.n_; ++k) {
        const T& a = lhs.at(i, k);
        if (is_zero(a)) continue;
        for (std::size_t j = 0; j < lhs.n_; ++j) prod.at(i, j) += a * rhs.at(k, j);
      }
    return prod;
  }

  friend bool operator==(const Matrix& lhs, const Matrix& rhs) {
    return lhs.n_ == rhs.n_ && lhs.cells_ == rhs.cells_;
  }
  friend bool operator!=(const Matrix& lhs, const Matrix& rhs) { return !(lhs == rhs); }

 private:
  std::size_t n_;
  std::vector<T> cells_;
};

using IntMatrix = Matrix<BigInt>;
using PolyMatrix = Matrix<IntPoly>;

/// Sum of all entries, s(M) = u^t M u.
template <class T>
T entry_sum(const Matrix<T>& m) {
  T total(0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) total += m.at(i, j);
  return total;
}

/// Exact k-th power by binary exponentiation; k = 0 gives the identity.
template <class T>
Matrix<T> mat_pow(Matrix<T> base, unsigned long k) {
  Matrix<T> acc = Matrix<T>::identity(base.size());
  while (k > 0) {
    if (k & 1UL) acc = acc * base;
    k >>= 1UL;
    if (k > 0) base = base * base;
  }
  return acc;
}

/// Determinant by fraction-free (Bareiss) elimination. Every interior
/// division is exact over the entry ring; a non-exact division indicates an
/// arithmetic bug and raises std::logic_error from divide_exact.
template <class T>
T det(const Matrix<T>& m) {
  const std::size_t n = m.size();
  Matrix<T> a = m;
  T prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(a.at(k, k))) {
      std::size_t pivot = k + 1;
      while (pivot < n && is_zero(a.at(pivot, k))) ++pivot;
      if (pivot == n) return T(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(pivot, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T numer = a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j);
        a.at(i, j) = divide_exact(numer, prev);
      }
      a.at(i, k) = T(0);
    }
    prev = a.at(k, k);
  }
  T d = a.at(n - 1, n - 1);
  return negate ? T(0) - d : d;
}

/// Transpose of the cofactor matrix; satisfies M * adjugate(M) = det(M) * I
/// whether or not M is invertible.
template <class T>
Matrix<T> adjugate(const Matrix<T>& m) {
  const std::size_t n = m.size();
  if (n == 1) return Matrix<T>::identity(1);
  Matrix<T> adj(n);
  Matrix<T> minor(n - 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor.at(rr, cc) = m.at(r, c);
          ++cc;
        }
        ++rr;
      }
      T cof = det(minor);
      adj.at(j, i) = ((i + j) % 2 == 0) ? cof : T(0) - cof;
    }
  return adj;
}

/// M bordered with a zero corner, all-ones top row and negated-ones left
/// column:  ( 0  u^t ; -u  M ).
template <class T>
Matrix<T> bordered(const Matrix<T>& m) {
  Matrix<T> b(m.size() + 1);
  for (std::size_t j = 1; j <= m.size(); ++j) b.at(0, j) = T(1);
  for (std::size_t i = 1; i <= m.size(); ++i) b.at(i, 0) = T(-1);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) b.at(i + 1, j + 1) = m.at(i, j);
  return b;
}

template <class T>
T bordered_det(const Matrix<T>& m) {
  return det(bordered(m));
}

/// Unit-primitive matrix B(m): entry (i,j), 1-indexed, is 1 iff i+j <= m+1.
IntMatrix build_unit_primitive(std::size_t m);

/// Exact inverse of B(m): ones on the anti-diagonal, -1 just left of it in
/// rows 2..m, zeros elsewhere.
IntMatrix unit_primitive_inverse(std::size_t m);

/// I - x*B(m) over Z[x].
PolyMatrix char_matrix(std::size_t m);

struct Lemma1Report {
  bool pass = false;
  BigInt adjugate_sum;
  BigInt bordered_value;
};

/// Checks entry_sum(adjugate(M)) == bordered_det(M), the two sides computed
/// independently.
Lemma1Report verify_lemma1(const IntMatrix& m);

}  // namespace upm

#endif
