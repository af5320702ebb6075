#include "qkoh/conjecture.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <set>
#include <thread>

namespace qkoh {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t mod(std::int64_t a, std::int64_t b) { return ((a % b) + b) % b; }

std::string triple(std::int64_t k, std::int64_t m, std::int64_t b) {
  return "(k,m,b)=(" + std::to_string(k) + "," + std::to_string(m) + "," + std::to_string(b) + ")";
}

}  // namespace

DiffSpec make_diff_spec(std::int64_t k, std::int64_t m, std::int64_t b) {
  using V = InvalidSpec::Violation;
  if (k < 2) throw InvalidSpec(V::Range, "range: k must be at least 2, got " + triple(k, m, b));
  if (m < k) throw InvalidSpec(V::Range, "range: m must be at least k, got " + triple(k, m, b));

  DiffSpec spec;
  spec.k = k;
  spec.m = m;
  spec.center_twice = k * (m - k);
  if (k == 2) {
    spec.b = 0;
    spec.shift_exponent = m - 2;
    return spec;
  }
  const std::int64_t upper = k * m - 4 * k + 4;
  if (b < k - 2 || b * (k - 2) > upper) {
    throw InvalidSpec(V::Range, "range: need k-2 <= b <= (km-4k+4)/(k-2), got " + triple(k, m, b));
  }
  if ((k * (m - b)) % 2 != 0) {
    throw InvalidSpec(V::Parity, "parity: k(m-b) must be even, got " + triple(k, m, b));
  }
  spec.b = b;
  spec.shift_exponent = k * (m - b) / 2 + b - 2 * k + 2;
  return spec;
}

std::optional<DiffSpec> try_diff_spec(std::int64_t k, std::int64_t m, std::int64_t b) {
  try {
    return make_diff_spec(k, m, b);
  } catch (const InvalidSpec&) {
    return std::nullopt;
  }
}

ThresholdTable::ThresholdTable() : table_{{5, 20}, {6, 32}, {7, 18}, {8, 18}, {9, 20}, {10, 24}} {}

void ThresholdTable::set(std::int64_t k, std::int64_t min_m) {
  if (k < 5) throw std::invalid_argument("thresholds apply to k >= 5");
  if (min_m < k) throw std::invalid_argument("threshold for k=" + std::to_string(k) + " must be >= k");
  table_[k] = min_m;
}

std::optional<std::int64_t> ThresholdTable::lookup(std::int64_t k) const {
  auto it = table_.find(k);
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::int64_t> one_degree_shift_b(std::int64_t k, std::int64_t m) {
  if (k < 3) return std::nullopt;
  const std::int64_t num = k * m - 4 * k + 2;
  if (mod(num, k - 2) != 0) return std::nullopt;
  return num / (k - 2);
}

PredictionResult predicted_exception(const DiffSpec& spec, const ThresholdTable& thresholds) {
  const std::int64_t k = spec.k;
  const std::int64_t m = spec.m;
  const std::int64_t b = spec.b;
  auto fails = [](std::string reason) { return PredictionResult{Prediction::Exception, std::move(reason)}; };

  switch (k) {
    case 2:
      if (m % 2 != 0) return fails("m odd");
      return {};
    case 3:
      if (b == 3 * m - 10) return fails("b=3m-10");
      if (m % 2 == 0 && b == 2) return fails("b=2, m even");
      if (m % 4 == 1 && b == 1) return fails("b=1, m=1 mod 4");
      if (m % 4 == 1 && b == 5) return fails("b=5, m=1 mod 4");
      if (m % 4 == 3 && b == 3) return fails("b=3, m=3 mod 4");
      return {};
    case 4:
      if (m == 5) return fails("m=5");
      if (b % 2 != 0) return fails("b odd");
      return {};
    default:
      break;
  }
  const auto threshold = thresholds.lookup(k);
  if (!threshold) return {Prediction::NoPrediction, "no threshold"};
  if (m < *threshold) return {Prediction::NoPrediction, "below threshold"};
  if (one_degree_shift_b(k, m) == b) return fails("one-degree shift");
  return {};
}

IntPoly f_poly(const DiffSpec& spec, QBinomialCache& cache) {
  const IntPoly top = cache.get(spec.m, spec.k);
  const IntPoly bottom = cache.get(spec.b, spec.k - 2);
  return top - shift(bottom, static_cast<std::size_t>(spec.shift_exponent));
}

std::vector<std::int64_t> valid_bs(std::int64_t k, std::int64_t m) {
  if (k < 2 || m < k) return {};
  if (k == 2) return {0};
  std::vector<std::int64_t> out;
  const std::int64_t hi = floor_div(k * m - 4 * k + 4, k - 2);
  for (std::int64_t b = k - 2; b <= hi; ++b) {
    if ((k * (m - b)) % 2 == 0) out.push_back(b);
  }
  return out;
}

CheckReport check(const DiffSpec& spec, const ThresholdTable& thresholds, QBinomialCache& cache) {
  CheckReport r;
  r.spec = spec;
  const IntPoly f = f_poly(spec, cache);

  const Verdict nonneg = is_nonnegative(f);
  r.nonnegative = nonneg.holds;
  if (nonneg.first_failure) r.first_negative_degree = static_cast<std::int64_t>(*nonneg.first_failure);

  const Verdict uni = is_unimodal(f);
  r.unimodal = uni.holds;
  if (uni.first_failure) r.first_unimodality_violation = static_cast<std::int64_t>(*uni.first_failure);

  r.symmetric = is_symmetric_about(f, spec.center_twice);
  r.prediction = predicted_exception(spec, thresholds);
  r.agrees_with_prediction =
      r.prediction.verdict == Prediction::NoPrediction || (r.prediction.exception() != r.passes());
  return r;
}

std::vector<CheckReport> check_all(const std::vector<DiffSpec>& specs, const ThresholdTable& thresholds,
                                   unsigned workers, QBinomialCache& cache) {
  std::vector<CheckReport> out(specs.size());
  const unsigned threads = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(specs.size())));
  if (threads <= 1) {
    for (std::size_t i = 0; i < specs.size(); ++i) out[i] = check(specs[i], thresholds, cache);
    return out;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    try {
      for (std::size_t i = next++; i < specs.size(); i = next++) {
        out[i] = check(specs[i], thresholds, cache);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  pool.clear();
  if (failure) std::rethrow_exception(failure);
  return out;
}

std::vector<CheckReport> scan(std::int64_t k, std::int64_t m_lo, std::int64_t m_hi, const ScanOptions& options,
                              QBinomialCache& cache) {
  std::vector<DiffSpec> specs;
  for (std::int64_t m = std::max(m_lo, k); m <= m_hi; ++m) {
    for (auto b : valid_bs(k, m)) specs.push_back(make_diff_spec(k, m, b));
  }
  auto reports = check_all(specs, options.thresholds, options.workers, cache);
  if (options.only_disagreements) {
    std::erase_if(reports, [](const CheckReport& r) { return r.agrees_with_prediction; });
  }
  return reports;
}

Verdict reduction_inequality(std::int64_t k, std::int64_t b, QBinomialCache& cache) {
  if (k < 4) throw std::invalid_argument("reduction_inequality: k must be at least 4");
  if (b - 2 * k + 6 < k - 2) throw std::invalid_argument("reduction_inequality: need b - 2k + 6 >= k - 2");
  const std::int64_t center_twice = (k - 2) * (b - k + 2);
  const IntPoly lhs = truncated_first_difference(cache.get(b, k - 2), center_twice);
  const IntPoly rhs = truncated_first_difference(
      shift(cache.get(b - 2 * k + 6, k - 2), static_cast<std::size_t>((k - 2) * (k - 3))), center_twice);
  return dominates(lhs, rhs, center_twice / 2);
}

bool reduction_inequality_holds(std::int64_t k, std::int64_t b) { return reduction_inequality(k, b).holds; }

std::vector<std::int64_t> largest_bs(std::int64_t k, std::int64_t m) {
  if (k < 4) throw std::invalid_argument("largest_bs: k must be at least 4");
  const std::int64_t step = 2 * k - 6;
  const auto exception = one_degree_shift_b(k, m);
  auto bs = valid_bs(k, m);
  std::set<std::int64_t> seen;
  std::vector<std::int64_t> out;
  for (auto it = bs.rbegin(); it != bs.rend(); ++it) {
    if (exception == *it) continue;
    if (seen.insert(mod(*it, step)).second) out.push_back(*it);
  }
  return out;
}

std::vector<DiffSpec> twelve_cases(std::int64_t n) {
  if (n < 4) throw std::invalid_argument("twelve_cases: n must be at least 4");
  struct Row {
    std::int64_t j, shift, top_offset;
  };
  // binom(6n+j, 5)_q - q^shift binom(10n + top_offset, 3)_q
  static constexpr Row rows[] = {
      {0, 4, -8}, {0, 7, -10}, {1, 2, -5}, {1, 5, -7}, {2, 0, -2}, {2, 3, -4},
      {3, 4, -3}, {3, 7, -5},  {4, 2, 0},  {4, 5, -2}, {5, 0, 3},  {5, 3, 1},
  };
  std::vector<DiffSpec> out;
  for (const auto& row : rows) {
    DiffSpec spec = make_diff_spec(5, 6 * n + row.j, 10 * n + row.top_offset);
    if (spec.shift_exponent != row.shift) throw std::logic_error("twelve_cases: shift mismatch");
    out.push_back(spec);
  }
  return out;
}

std::int64_t ci_closed_form(std::int64_t n, std::int64_t i) {
  if (n < 4 || i < 8 || i > 15 * n - 13) throw std::out_of_range("ci_closed_form: need n >= 4, 8 <= i <= 15n-13");
  if (i <= 6 * n - 1) return i / 2 - 3;
  if (i <= 12 * n - 8) return 3 * n - 4;
  return 15 * n - 12 - i;
}

std::int64_t di_closed_form(std::int64_t n, std::int64_t i) {
  if (n < 4 || i < 0 || i > 15 * n - 13) throw std::out_of_range("di_closed_form: need n >= 4, 0 <= i <= 15n-13");
  if (i <= 10 * n - 7) return (i + 2) / 6 - (i % 6 == 5 ? 1 : 0);
  // ceil((15n - 13 - i) / 3) for a nonnegative numerator
  return (15 * n - 13 - i + 2) / 3;
}

IntPoly ci_direct(std::int64_t n, QBinomialCache& cache) {
  const IntPoly term = shift(cache.get(6 * n - 8, 1) * cache.get(12 * n - 14, 2), 8);
  return truncated_first_difference(term, 30 * n - 25);
}

IntPoly di_direct(std::int64_t n, QBinomialCache& cache) {
  return truncated_first_difference(shift(cache.get(10 * n - 8, 3), 4), 30 * n - 25);
}

Integer middle_degree_delta(std::int64_t t) {
  if (t < 2) throw std::invalid_argument("middle_degree_delta: t must be at least 2");
  const IntPoly alpha = qbinomial(12 * t - 1, 3);
  return alpha[static_cast<std::size_t>(6 * t - 5)] - alpha[static_cast<std::size_t>(6 * t - 6)];
}

std::vector<DiffSpec> reiner_stanton_correspondence(std::int64_t k, std::int64_t m) {
  std::vector<DiffSpec> out;
  if (m % 2 != 0) return out;
  for (auto b : valid_bs(k, m)) {
    if (b >= m - 4 && mod(b - m, 4) == 0) out.push_back(make_diff_spec(k, m, b));
  }
  return out;
}

}  // namespace qkoh
