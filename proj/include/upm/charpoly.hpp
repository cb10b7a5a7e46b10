#ifndef UPM_CHARPOLY_HPP
#define UPM_CHARPOLY_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "upm/matrix.hpp"
#include "upm/poly.hpp"
#include "upm/ratfunc.hpp"

namespace upm {

// The reversed characteristic polynomials Q_m(x) = det(I - x*B(m)) and their
// relatives:
//   R_m(x) = bordered determinant of I - x*B(m),
//   E_m(x) = R_{m+1}/Q_{m+1}  (series coefficients b(n+1, m)),
//   F_m(x) = Q_m(-x)/Q_{m+1}(x)  (series coefficients b(n, m)).
// Each family is computable by two independent routes; the verifiers below
// machine-check the algebraic identities tying them together.

enum class QMethod { recurrence, determinant };
enum class RMethod { bordered, from_q };
enum class FMethod { direct, contfrac };

/// Q_0..Q_max, indexed by m. Construction enforces Q_m(0) = 1 and
/// deg Q_m = m.
struct QFamily {
  std::vector<IntPoly> polys;
  QMethod method = QMethod::recurrence;

  std::size_t max_index() const { return polys.size() - 1; }
  const IntPoly& at(std::size_t m) const;
};

/// Validates and wraps a Q list (polys[m] = Q_m); throws std::logic_error on
/// a family that violates Q_m(0) = 1, deg Q_m = m, Q_0 = 1 or Q_1 = 1 - x.
QFamily make_q_family(std::vector<IntPoly> polys, QMethod method);

/// Q_0..Q_{m_max} from the three-term recurrence
/// Q_m(x) = -x*Q_{m-1}(-x) + Q_{m-2}(x), Q_0 = 1, Q_1 = 1 - x.
QFamily q_by_recurrence(std::size_t m_max);

/// Q_m = det(I - x*B(m)) by fraction-free elimination; m = 0 gives the empty
/// determinant 1.
IntPoly q_by_determinant(std::size_t m);

/// R_1..R_max, indexed by m >= 1.
struct RFamily {
  std::vector<IntPoly> polys;  // polys[0] holds R_1
  RMethod method = RMethod::bordered;

  std::size_t max_index() const { return polys.size(); }
  const IntPoly& at(std::size_t m) const;
};

/// R_m as the bordered determinant of I - x*B(m); m >= 1.
IntPoly r_by_bordered(std::size_t m);

/// R_m = (Q_{m-1}(-x) - Q_m(x)) / x, an exact quotient; throws
/// std::logic_error if the numerator's constant term is nonzero (which would
/// mean the Q family is corrupt).
IntPoly r_from_q(std::size_t m, const QFamily& q);

RFamily r_family_bordered(std::size_t m_max);
RFamily r_family_from_q(const QFamily& q);

/// E_m = R_{m+1}/Q_{m+1}; series coefficients are b(n+1, m).
RatFunc e_rational(std::size_t m);

/// Column generating function F_m(x) = sum_n b(n,m) x^n with its production
/// route. Denominator constant term is 1 and the leading series coefficient
/// is 1 (b(0,m) = 1), enforced at construction.
struct FFunc {
  std::size_t m = 0;
  RatFunc rat;
  FMethod method = FMethod::direct;
};

/// F_m = Q_m(-x)/Q_{m+1}(x); q must cover m and m+1.
FFunc f_rational(std::size_t m, const QFamily& q);

/// F_m built bottom-up from F_0 = 1/(1-x) through the step
/// F_m = 1/(-x + F_{m-1}(-x)), kept as an explicit numerator/denominator
/// pair: (N, D) -> (D(-x), -x*D(-x) + N(-x)).
FFunc f_contfrac(std::size_t m);

/// One verifier outcome: `residual` is left side minus right side; pass means
/// the residual is identically zero.
struct IdentityReport {
  std::string identity;
  std::size_t index = 0;
  IntPoly residual;
  bool pass = false;
};

/// Q_m(x)Q_{m+1}(x) + Q_m(-x)Q_{m+1}(-x) = 2.
IdentityReport verify_identity_2(std::size_t m, const QFamily& q);

/// Sign-flipped variant Q_m(x)Q_{m+1}(x) - Q_m(-x)Q_{m+1}(-x) = 2. This does
/// NOT hold (at m = 0 the left side is -2x); kept as an explicit
/// disconfirmation check.
IdentityReport verify_identity_2_minus(std::size_t m, const QFamily& q);

/// Q_{m+1}(x)Q_{m+1}(-x) - Q_{m+2}(x)Q_m(-x) = x.
IdentityReport verify_identity_3(std::size_t m, const QFamily& q);

/// Q_m(x) + x*R_m(x) = Q_{m-1}(-x); m >= 1.
IdentityReport verify_identity_4(std::size_t m, const QFamily& q, const RFamily& r);

/// Expands (1+t)(1-t^2-xt) / ((1-t^2)^2 + (xt)^2) as a power series in t with
/// IntPoly coefficients and checks that the t^m coefficient equals Q_m for
/// every m <= m_max.
std::vector<IdentityReport> verify_q_ogf(std::size_t m_max, const QFamily& q);

struct TrigReport {
  std::size_t m = 0;
  double x = 0.0;
  double tol = 0.0;
  double rational = 0.0;  // Q_m(-x)/Q_{m+1}(x) in floating point
  double cos_form = 0.0;  // (-1)^{m+1} cos((2m+1)theta/2) / cos((2m+3)theta/2)
  double sin_form = 0.0;  // (-1)^{m+1} (sin (m+1)theta - sin m theta) / (sin (m+2)theta - sin (m+1)theta)
  bool pass = false;
};

/// Evaluates the closed trigonometric forms of F_m at theta =
/// arccos((-1)^m x/2) against the rational value, all in double precision.
/// Requires |x| < 2 and x outside a 1e-6 guard band around denominator
/// roots; throws std::domain_error otherwise. The shared (-1)^{m+1} factor
/// applies to both quotient forms (without it the sin quotient flips sign
/// for even m).
TrigReport trig_check(std::size_t m, double x, double tol = 1e-8);

}  // namespace upm

#endif
