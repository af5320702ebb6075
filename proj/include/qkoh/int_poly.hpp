#pragma once

/**
 * @file int_poly.hpp
 * @brief Dense univariate polynomials in q with arbitrary-precision integer
 * coefficients, plus the structural predicates used throughout qkoh
 * (symmetry, unimodality, nonnegativity) and the truncated first difference
 * / dominance machinery for symmetric polynomials.
 */

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace qkoh {

using Integer = mpz_class;

/// Dense polynomial sum_i coeffs[i] q^i. The stored vector never ends in a
/// zero, so the zero polynomial is the empty vector.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(std::initializer_list<Integer> coeffs);
  explicit IntPoly(std::vector<Integer> coeffs);

  static IntPoly one();
  /// c * q^e
  static IntPoly monomial(const Integer& c, std::size_t e);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const noexcept;
  /// Number of stored coefficients, i.e. degree + 1 (0 for the zero polynomial).
  std::size_t size() const noexcept { return coeffs_.size(); }

  /// Coefficient of q^i; zero past the degree.
  const Integer& coeff(std::size_t i) const noexcept;
  const Integer& operator[](std::size_t i) const noexcept { return coeff(i); }
  std::span<const Integer> coeffs() const noexcept { return coeffs_; }

  IntPoly& operator+=(const IntPoly& rhs);
  IntPoly& operator-=(const IntPoly& rhs);

  friend IntPoly operator+(IntPoly lhs, const IntPoly& rhs) { return lhs += rhs; }
  friend IntPoly operator-(IntPoly lhs, const IntPoly& rhs) { return lhs -= rhs; }
  friend IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs);
  IntPoly operator-() const;

  friend bool operator==(const IntPoly& lhs, const IntPoly& rhs) = default;

 private:
  void normalize();

  std::vector<Integer> coeffs_;
};

IntPoly add(const IntPoly& p, const IntPoly& r);
IntPoly sub(const IntPoly& p, const IntPoly& r);
IntPoly mul(const IntPoly& p, const IntPoly& r);
/// p * q^e
IntPoly shift(const IntPoly& p, std::size_t e);

/// Outcome of a coefficientwise predicate. `first_failure` is the smallest
/// degree at which the predicate is known to fail.
struct Verdict {
  bool holds = true;
  std::optional<std::size_t> first_failure;

  explicit operator bool() const noexcept { return holds; }
};

/// Returns 2 * (center of symmetry), which is the degree, when coeff(i) ==
/// coeff(d - i) for all i; nullopt otherwise. Throws std::domain_error for
/// the zero polynomial.
std::optional<std::size_t> is_symmetric(const IntPoly& p);

/// coeff(i) == coeff(center_twice - i) for every i, with coefficients outside
/// [0, center_twice] required to vanish. Unlike is_symmetric this accepts
/// polynomials whose low coefficients cancelled (e.g. an unshifted
/// difference), and the zero polynomial.
bool is_symmetric_about(const IntPoly& p, std::int64_t center_twice);

/// Weakly increasing then weakly decreasing. A failure is reported at the
/// first strict rise that follows a strict fall. Zero and constants pass.
Verdict is_unimodal(const IntPoly& p);

Verdict is_nonnegative(const IntPoly& p);

/// The first difference (1 - q) p truncated after degree floor(center_twice/2):
/// c_0 = p_0 and c_i = p_i - p_{i-1} for 1 <= i <= floor(center_twice / 2).
/// Throws std::invalid_argument when center_twice is negative.
IntPoly truncated_first_difference(const IntPoly& p, std::int64_t center_twice);

/// p_i >= r_i for all 0 <= i <= upto.
Verdict dominates(const IntPoly& p, const IntPoly& r, std::int64_t upto);

}  // namespace qkoh
