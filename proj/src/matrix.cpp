#include "upm/matrix.hpp"

namespace upm {

IntMatrix build_unit_primitive(std::size_t m) {
  if (m == 0) throw std::invalid_argument("build_unit_primitive: m must be >= 1");
  IntMatrix b(m);
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= m; ++j)
      if (i + j <= m + 1) b.at(i - 1, j - 1) = 1;
  return b;
}

IntMatrix unit_primitive_inverse(std::size_t m) {
  if (m == 0) throw std::invalid_argument("unit_primitive_inverse: m must be >= 1");
  IntMatrix inv(m);
  for (std::size_t i = 1; i <= m; ++i) {
    inv.at(i - 1, m + 1 - i - 1) = 1;  // anti-diagonal: i + j = m+1
    if (i >= 2) inv.at(i - 1, m + 2 - i - 1) = -1;
  }
  return inv;
}

PolyMatrix char_matrix(std::size_t m) {
  const IntMatrix b = build_unit_primitive(m);
  PolyMatrix cm(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      IntPoly entry = i == j ? IntPoly(1) : IntPoly(0);
      entry -= IntPoly::monomial(1, b.at(i, j));
      cm.at(i, j) = entry;
    }
  return cm;
}

Lemma1Report verify_lemma1(const IntMatrix& m) {
  Lemma1Report report;
  report.adjugate_sum = entry_sum(adjugate(m));
  report.bordered_value = bordered_det(m);
  report.pass = report.adjugate_sum == report.bordered_value;
  return report;
}

}  // namespace upm
