#pragma once

/**
 * @file koh.hpp
 * @brief Zeilberger's KOH decomposition of Gaussian polynomials.
 *
 * For a >= 0 and k >= 1,
 *
 *   binom(a + k, k)_q = sum over partitions lambda of k of F_lambda(q),
 *
 *   F_lambda(q) = q^{2 sum_i C(lambda_i, 2)}
 *                 prod_{j >= 1} binom(j(a + 2) - Y_{j-1} - Y_{j+1}, lambda_j - lambda_{j+1})_q
 *
 * with Y_i the partial sums of lambda. Each F_lambda is nonnegative, unimodal
 * and symmetric about degree ak/2, which is what makes the decomposition
 * useful for comparing first differences.
 */

#include "qkoh/int_poly.hpp"
#include "qkoh/qbinomial.hpp"

#include <cstdint>
#include <vector>

namespace qkoh {

/// A weakly decreasing sequence of positive parts, implicitly padded with
/// zeros on the right.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless `parts` is weakly decreasing and positive.
  explicit Partition(std::vector<std::int64_t> parts);

  const std::vector<std::int64_t>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  std::int64_t total() const noexcept { return total_; }

  /// lambda_j, 1-based; zero for j beyond the last part.
  std::int64_t part(std::size_t j) const noexcept;
  /// Y_i = lambda_1 + ... + lambda_i, with Y_0 = 0 and Y_i = total() past the end.
  std::int64_t partial_sum(std::size_t i) const noexcept;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<std::int64_t> parts_;
  std::int64_t total_ = 0;
};

/// Partitions of k, largest first in reverse-lexicographic order:
/// (k), (k-1, 1), ..., (1, ..., 1). Throws for k < 1.
std::vector<Partition> partitions(std::int64_t k);

/// Y_0 .. Y_count.
std::vector<std::int64_t> partial_sums(const Partition& lambda, std::size_t count);

struct BinomialFactor {
  std::int64_t top = 0;
  std::int64_t bottom = 0;

  friend bool operator==(const BinomialFactor&, const BinomialFactor&) = default;
};

struct KohTerm {
  Partition lambda;
  /// 2 * sum_i C(lambda_i, 2)
  std::int64_t leading_exponent = 0;
  /// Factors binom(top, bottom)_q for j = 1 .. length(lambda), in order.
  std::vector<BinomialFactor> factors;
  IntPoly poly;
};

KohTerm koh_term(std::int64_t a, std::int64_t k, const Partition& lambda,
                 QBinomialCache& cache = default_qbinomial_cache());

/// One term per partition of k, in the order of partitions(k). The polys sum
/// to binom(a + k, k)_q.
std::vector<KohTerm> koh_decompose(std::int64_t a, std::int64_t k,
                                   QBinomialCache& cache = default_qbinomial_cache());

IntPoly koh_sum(const std::vector<KohTerm>& terms);

/// One summand of the iterated k = 3 expansion,
///   q^{6i+2} binom(m-4i-4, 1)_q binom(2m-8i-7, 1)_q + q^{6i} binom(3m-12i-8, 1)_q.
struct K3IteratedTerm {
  std::int64_t i = 0;
  std::int64_t pair_exponent = 0;     // 6i + 2
  BinomialFactor pair_first;          // (m - 4i - 4, 1)
  BinomialFactor pair_second;         // (2m - 8i - 7, 1)
  std::int64_t single_exponent = 0;   // 6i
  BinomialFactor single;              // (3m - 12i - 8, 1)
  IntPoly pair_poly;
  IntPoly single_poly;
};

/// binom(m, 3)_q = epsilon q^{(3m-9)/2} + sum_{i < floor(m/4)} (...), obtained by
/// applying the KOH decomposition floor(m/4) times; epsilon = 1 iff m = 3 (mod 4).
struct K3Iterated {
  std::int64_t m = 0;
  int epsilon = 0;
  std::int64_t iterations = 0;
  std::vector<K3IteratedTerm> terms;

  IntPoly assemble() const;
};

/// Requires m >= 3.
K3Iterated k3_iterated(std::int64_t m);

/// Degrees j with 2 <= j <= floor((3m - 9)/2) where binom(m, 3)_q does not
/// strictly increase from j - 1 to j, read off the coefficients. Requires m >= 3.
std::vector<std::int64_t> k3_flat_degrees(std::int64_t m);

/// The flat degrees predicted by the residue of m modulo 4, ascending.
std::vector<std::int64_t> k3_predicted_flat_degrees(std::int64_t m);

}  // namespace qkoh
