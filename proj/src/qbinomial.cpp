#include "qkoh/qbinomial.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "qkoh/serialize.hpp"

namespace qkoh {

namespace {

std::pair<std::int64_t, std::int64_t> canonical(std::int64_t m, std::int64_t k) {
  return {m, std::min(k, m - k)};
}

}  // namespace

bool QBinomialCache::lookup(std::int64_t m, std::int64_t k, IntPoly& out) const {
  std::shared_lock lock(mutex_);
  auto it = entries_.find(canonical(m, k));
  if (it == entries_.end()) return false;
  out = it->second;
  return true;
}

void QBinomialCache::store(std::int64_t m, std::int64_t k, const IntPoly& p) {
  const Key key = canonical(m, k);
  if (key.second <= 0) return;
  std::unique_lock lock(mutex_);
  if (entries_.size() >= capacity_) return;
  entries_.try_emplace(key, p);
}

IntPoly QBinomialCache::get(std::int64_t m, std::int64_t k) {
  if (m < 0 || k < 0 || k > m) return {};
  const std::int64_t kr = std::min(k, m - k);
  if (kr == 0) return IntPoly::one();

  IntPoly hit;
  if (lookup(m, kr, hit)) return hit;

  // Row r of Pascal's q-triangle, columns 0..min(kr, r). Start from the
  // highest row below m that is fully cached, else from row 0.
  std::vector<IntPoly> row;
  std::int64_t r0 = 0;
  for (std::int64_t r = m - 1; r >= 1; --r) {
    const std::int64_t width = std::min(kr, r);
    std::vector<IntPoly> candidate(static_cast<std::size_t>(width) + 1);
    bool complete = true;
    for (std::int64_t j = 0; j <= width && complete; ++j) {
      const std::int64_t jr = std::min(j, r - j);
      if (jr == 0) {
        candidate[static_cast<std::size_t>(j)] = IntPoly::one();
      } else {
        complete = lookup(r, jr, candidate[static_cast<std::size_t>(j)]);
      }
    }
    if (complete) {
      row = std::move(candidate);
      r0 = r;
      break;
    }
  }
  if (row.empty()) row.push_back(IntPoly::one());

  // binom(r, j) = binom(r-1, j-1) + q^j binom(r-1, j)
  for (std::int64_t r = r0 + 1; r <= m; ++r) {
    const std::int64_t width = std::min(kr, r);
    std::vector<IntPoly> next(static_cast<std::size_t>(width) + 1);
    next[0] = IntPoly::one();
    for (std::int64_t j = 1; j <= width; ++j) {
      const auto ju = static_cast<std::size_t>(j);
      IntPoly value = row[ju - 1];
      if (ju < row.size()) value += shift(row[ju], ju);
      if (j <= r - j) store(r, j, value);
      next[ju] = std::move(value);
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(kr)];
}

std::size_t QBinomialCache::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

void QBinomialCache::clear() {
  std::unique_lock lock(mutex_);
  entries_.clear();
}

bool QBinomialCache::load(const std::filesystem::path& path, std::string* warning) {
  auto fail = [&](const std::string& why) {
    if (warning) *warning = "discarding cache file " + path.string() + ": " + why;
    return false;
  };
  std::ifstream in(path);
  if (!in) return fail("cannot open");

  std::map<Key, IntPoly> loaded;
  try {
    const auto doc = nlohmann::json::parse(in);
    if (!doc.is_object()) return fail("top level is not an object");
    for (const auto& [key, value] : doc.items()) {
      const auto comma = key.find(',');
      if (comma == std::string::npos) return fail("bad key '" + key + "'");
      std::size_t used_m = 0;
      std::size_t used_k = 0;
      const std::string ms = key.substr(0, comma);
      const std::string ks = key.substr(comma + 1);
      const std::int64_t m = std::stoll(ms, &used_m);
      const std::int64_t k = std::stoll(ks, &used_k);
      if (used_m != ms.size() || used_k != ks.size()) return fail("bad key '" + key + "'");
      if (m < 0 || k < 0 || k > m) return fail("out-of-range key '" + key + "'");
      IntPoly p = poly_from_json(value);
      if (!plausible_qbinomial(m, k, p)) return fail("entry '" + key + "' is not binom(m,k)_q");
      const Key ck = canonical(m, k);
      if (ck.second > 0) loaded.insert_or_assign(ck, std::move(p));
    }
  } catch (const std::exception& e) {
    return fail(e.what());
  }
  if (loaded.size() > capacity_) return fail("more entries than the cache capacity");

  std::unique_lock lock(mutex_);
  entries_ = std::move(loaded);
  return true;
}

void QBinomialCache::save(const std::filesystem::path& path) const {
  nlohmann::json doc = nlohmann::json::object();
  {
    std::shared_lock lock(mutex_);
    for (const auto& [key, p] : entries_) {
      doc[std::to_string(key.first) + "," + std::to_string(key.second)] = poly_to_json(p);
    }
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write cache file " + path.string());
  out << doc.dump() << '\n';
}

QBinomialCache& default_qbinomial_cache() {
  static QBinomialCache cache;
  return cache;
}

IntPoly qbinomial(std::int64_t m, std::int64_t k) { return default_qbinomial_cache().get(m, k); }

IntPoly qbinomial(std::int64_t m, std::int64_t k, QBinomialCache& cache) { return cache.get(m, k); }

bool plausible_qbinomial(std::int64_t m, std::int64_t k, const IntPoly& p) {
  if (m < 0 || k < 0 || k > m) return p.is_zero();
  if (p.is_zero()) return false;
  if (*p.degree() != static_cast<std::size_t>(k * (m - k))) return false;
  if (!is_symmetric(p) || !is_nonnegative(p)) return false;
  Integer total = 0;
  for (const auto& c : p.coeffs()) total += c;
  Integer expected;
  mpz_bin_uiui(expected.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(k));
  return total == expected;
}

std::vector<Integer> box_partition_counts(std::int64_t m, std::int64_t k) {
  if (m < 0 || k < 0 || k > m) return {};
  const auto parts = static_cast<std::size_t>(k);
  const auto width = static_cast<std::size_t>(m - k);
  const std::size_t total = parts * width;

  // ways[c][t]: partitions of t into exactly c parts, each drawn from the
  // part sizes considered so far.
  std::vector<std::vector<Integer>> ways(parts + 1, std::vector<Integer>(total + 1));
  ways[0][0] = 1;
  for (std::size_t s = 1; s <= width; ++s) {
    for (std::size_t c = 1; c <= parts; ++c) {
      for (std::size_t t = s; t <= total; ++t) {
        if (ways[c - 1][t - s] != 0) ways[c][t] += ways[c - 1][t - s];
      }
    }
  }
  std::vector<Integer> counts(total + 1);
  for (std::size_t c = 0; c <= parts; ++c) {
    for (std::size_t t = 0; t <= total; ++t) counts[t] += ways[c][t];
  }
  return counts;
}

Integer coeff_by_partition_count(std::int64_t m, std::int64_t k, std::int64_t i) {
  if (m < 0 || k < 0 || k > m || i < 0 || i > k * (m - k)) return 0;
  return box_partition_counts(m, k)[static_cast<std::size_t>(i)];
}

}  // namespace qkoh
