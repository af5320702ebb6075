#pragma once

/**
 * @file conjecture.hpp
 * @brief The symmetric differences
 *
 *   f(k, m, b)(q) = binom(m, k)_q - q^{k(m-b)/2 + b - 2k + 2} binom(b, k-2)_q,
 *
 * their admissible parameters, the predicted set of (k, m, b) for which f
 * fails to be nonnegative and unimodal, and the verification drivers built
 * on top of them (parameter scans, the 2k - 6 reduction inequality, the
 * twelve k = 5 families and the closed-form coefficient formulas used to
 * dominate them).
 */

#include "qkoh/int_poly.hpp"
#include "qkoh/qbinomial.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qkoh {

/// A validated parameter triple. For k = 2 the difference does not depend on
/// b, which is stored as 0.
struct DiffSpec {
  std::int64_t k = 0;
  std::int64_t m = 0;
  std::int64_t b = 0;
  std::int64_t shift_exponent = 0;
  /// k(m - k): twice the degree about which f is symmetric.
  std::int64_t center_twice = 0;

  friend bool operator==(const DiffSpec&, const DiffSpec&) = default;
};

class InvalidSpec : public std::invalid_argument {
 public:
  enum class Violation { Parity, Range };

  InvalidSpec(Violation v, const std::string& what) : std::invalid_argument(what), violation_(v) {}
  Violation violation() const noexcept { return violation_; }

 private:
  Violation violation_;
};

/// Validates k >= 2, m >= k, k - 2 <= b <= (km - 4k + 4)/(k - 2) and k(m - b)
/// even. Throws InvalidSpec naming the violated constraint.
DiffSpec make_diff_spec(std::int64_t k, std::int64_t m, std::int64_t b);

/// Same checks without throwing.
std::optional<DiffSpec> try_diff_spec(std::int64_t k, std::int64_t m, std::int64_t b);

/// Minimal m per k >= 5 from which every non-exceptional f(k, m, b) is
/// expected to be nonnegative and unimodal.
class ThresholdTable {
 public:
  ThresholdTable();

  static ThresholdTable defaults() { return {}; }

  /// Throws std::invalid_argument unless k >= 5 and m >= k.
  void set(std::int64_t k, std::int64_t min_m);
  std::optional<std::int64_t> lookup(std::int64_t k) const;
  const std::map<std::int64_t, std::int64_t>& entries() const noexcept { return table_; }

 private:
  std::map<std::int64_t, std::int64_t> table_;
};

enum class Prediction {
  Holds,        // f expected nonnegative and unimodal
  Exception,    // f expected to fail
  NoPrediction  // k >= 5 below the threshold (or no threshold known)
};

struct PredictionResult {
  Prediction verdict = Prediction::Holds;
  /// Short reason code, e.g. "b=2,m even" or "one-degree shift"; empty when Holds.
  std::string reason;

  bool exception() const noexcept { return verdict == Prediction::Exception; }
};

PredictionResult predicted_exception(const DiffSpec& spec,
                                     const ThresholdTable& thresholds = ThresholdTable::defaults());

/// b = (km - 4k + 2)/(k - 2) when that is an integer, i.e. the b for which
/// the subtracted term starts in degree 1.
std::optional<std::int64_t> one_degree_shift_b(std::int64_t k, std::int64_t m);

IntPoly f_poly(const DiffSpec& spec, QBinomialCache& cache = default_qbinomial_cache());

/// Admissible b for (k, m), ascending; {0} for k = 2.
std::vector<std::int64_t> valid_bs(std::int64_t k, std::int64_t m);

struct CheckReport {
  DiffSpec spec;
  bool nonnegative = true;
  bool unimodal = true;
  bool symmetric = true;
  std::optional<std::int64_t> first_negative_degree;
  std::optional<std::int64_t> first_unimodality_violation;
  PredictionResult prediction;
  bool agrees_with_prediction = true;

  bool passes() const noexcept { return nonnegative && unimodal; }
  bool predicted_exception() const noexcept { return prediction.exception(); }
};

CheckReport check(const DiffSpec& spec, const ThresholdTable& thresholds = ThresholdTable::defaults(),
                  QBinomialCache& cache = default_qbinomial_cache());

struct ScanOptions {
  ThresholdTable thresholds;
  unsigned workers = 1;
  bool only_disagreements = false;
};

/// One report per (m, b), m in [max(m_lo, k), m_hi] ascending and b in
/// valid_bs(k, m) ascending. The output does not depend on `workers`.
std::vector<CheckReport> scan(std::int64_t k, std::int64_t m_lo, std::int64_t m_hi,
                              const ScanOptions& options = {},
                              QBinomialCache& cache = default_qbinomial_cache());

/// Runs `check` on each spec using `workers` threads; results keep input order.
std::vector<CheckReport> check_all(const std::vector<DiffSpec>& specs, const ThresholdTable& thresholds,
                                   unsigned workers, QBinomialCache& cache = default_qbinomial_cache());

/// (1 - q) binom(b, k-2)_q >= (1 - q) q^{2 C(k-2, 2)} binom(b - 2k + 6, k-2)_q,
/// both sides truncated after the middle degree of binom(b, k-2)_q.
/// Requires k >= 4 and b - 2k + 6 >= k - 2.
Verdict reduction_inequality(std::int64_t k, std::int64_t b,
                             QBinomialCache& cache = default_qbinomial_cache());
bool reduction_inequality_holds(std::int64_t k, std::int64_t b);

/// For each residue class of valid b modulo 2k - 6, its largest member other
/// than the one-degree-shift exception; descending. Every other admissible
/// non-exceptional b lies below one of these in steps of 2k - 6. For odd k
/// parity leaves k - 3 classes. Requires k >= 4.
std::vector<std::int64_t> largest_bs(std::int64_t k, std::int64_t m);

/// The twelve k = 5 differences for m = 6n + j, j = 0..5, two per residue:
/// binom(6n+j, 5)_q - q^s binom(t, 3)_q. Requires n >= 4.
std::vector<DiffSpec> twelve_cases(std::int64_t n);

/// Coefficient c_i of (1 - q) q^8 binom(6n-8, 1)_q binom(12n-14, 2)_q, 8 <= i <= 15n - 13.
std::int64_t ci_closed_form(std::int64_t n, std::int64_t i);
/// Coefficient d_i of (1 - q) q^4 binom(10n-8, 3)_q, 0 <= i <= 15n - 13.
std::int64_t di_closed_form(std::int64_t n, std::int64_t i);

/// The truncated first differences the closed forms describe, computed from
/// the q-binomials directly (truncated after degree 15n - 13).
IntPoly ci_direct(std::int64_t n, QBinomialCache& cache = default_qbinomial_cache());
IntPoly di_direct(std::int64_t n, QBinomialCache& cache = default_qbinomial_cache());

/// alpha_{6t-5} - alpha_{6t-6} where binom(12t-1, 3)_q = sum alpha_i q^i: the
/// middle-degree first difference of the (4,1) KOH term of binom(12t+7, 5)_q.
/// Requires t >= 2.
Integer middle_degree_delta(std::int64_t t);

/// Specs with m even, b >= m - 4 and b = m (mod 4); empty for odd m.
std::vector<DiffSpec> reiner_stanton_correspondence(std::int64_t k, std::int64_t m);

}  // namespace qkoh
