#pragma once

#include "qkoh/int_poly.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <shared_mutex>
#include <string>
#include <utility>

namespace qkoh {

/// Memo table for Gaussian polynomials binom(m, k)_q, keyed by the reduced
/// pair (m, min(k, m - k)). Safe for concurrent use: lookups take a shared
/// lock, insertions an exclusive one. Once `capacity` entries are stored,
/// further results are computed but not kept.
class QBinomialCache {
 public:
  static constexpr std::size_t kDefaultCapacity = std::size_t{1} << 20;

  explicit QBinomialCache(std::size_t capacity = kDefaultCapacity) : capacity_(capacity) {}

  QBinomialCache(const QBinomialCache&) = delete;
  QBinomialCache& operator=(const QBinomialCache&) = delete;

  /// binom(m, k)_q; zero whenever m < 0, k < 0 or k > m.
  IntPoly get(std::int64_t m, std::int64_t k);

  std::size_t size() const;
  std::size_t capacity() const noexcept { return capacity_; }
  void clear();

  /// Replaces the contents with the entries of a JSON cache file. Every entry
  /// is validated (degree, symmetry, nonnegativity, value at q = 1); on any
  /// problem the whole file is discarded, the cache is left untouched, and
  /// the reason is written to `warning`.
  bool load(const std::filesystem::path& path, std::string* warning = nullptr);
  /// Writes all stored entries as {"m,k": ["c0", "c1", ...], ...}.
  void save(const std::filesystem::path& path) const;

 private:
  using Key = std::pair<std::int64_t, std::int64_t>;

  bool lookup(std::int64_t m, std::int64_t k, IntPoly& out) const;
  void store(std::int64_t m, std::int64_t k, const IntPoly& p);

  std::size_t capacity_;
  mutable std::shared_mutex mutex_;
  std::map<Key, IntPoly> entries_;
};

/// Process-wide cache used by the convenience overload below.
QBinomialCache& default_qbinomial_cache();

IntPoly qbinomial(std::int64_t m, std::int64_t k);
IntPoly qbinomial(std::int64_t m, std::int64_t k, QBinomialCache& cache);

/// Checks that `p` could be binom(m, k)_q: degree k(m - k), symmetric,
/// nonnegative, and p(1) = C(m, k). Used to vet cache files.
bool plausible_qbinomial(std::int64_t m, std::int64_t k, const IntPoly& p);

/// Number of partitions of i with at most k parts, each at most m - k
/// (partitions fitting in a k x (m - k) box). Computed by a knapsack count
/// over part sizes, independently of the Pascal recurrence.
Integer coeff_by_partition_count(std::int64_t m, std::int64_t k, std::int64_t i);

/// All box-partition counts for i = 0 .. k(m - k) at once.
std::vector<Integer> box_partition_counts(std::int64_t m, std::int64_t k);

}  // namespace qkoh
