#include "qkoh/koh.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace qkoh {

Partition::Partition(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
  for (std::size_t j = 0; j < parts_.size(); ++j) {
    if (parts_[j] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (j > 0 && parts_[j] > parts_[j - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    total_ += parts_[j];
  }
}

std::int64_t Partition::part(std::size_t j) const noexcept {
  return (j >= 1 && j <= parts_.size()) ? parts_[j - 1] : 0;
}

std::int64_t Partition::partial_sum(std::size_t i) const noexcept {
  std::int64_t y = 0;
  for (std::size_t j = 0; j < i && j < parts_.size(); ++j) y += parts_[j];
  return y;
}

namespace {

void emit_partitions(std::int64_t remaining, std::int64_t max_part, std::vector<std::int64_t>& prefix,
                     std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (std::int64_t p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    emit_partitions(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

std::int64_t choose2(std::int64_t n) { return n * (n - 1) / 2; }

}  // namespace

std::vector<Partition> partitions(std::int64_t k) {
  if (k < 1) throw std::invalid_argument("partitions: k must be positive");
  std::vector<Partition> out;
  std::vector<std::int64_t> prefix;
  emit_partitions(k, k, prefix, out);
  return out;
}

std::vector<std::int64_t> partial_sums(const Partition& lambda, std::size_t count) {
  std::vector<std::int64_t> ys(count + 1);
  for (std::size_t i = 1; i <= count; ++i) ys[i] = ys[i - 1] + lambda.part(i);
  return ys;
}

KohTerm koh_term(std::int64_t a, std::int64_t k, const Partition& lambda, QBinomialCache& cache) {
  if (lambda.total() != k) throw std::invalid_argument("koh_term: lambda is not a partition of k");
  if (a < 0) throw std::invalid_argument("koh_term: a must be nonnegative");

  KohTerm term;
  term.lambda = lambda;
  for (auto part : lambda.parts()) term.leading_exponent += 2 * choose2(part);

  const std::size_t len = lambda.length();
  const auto ys = partial_sums(lambda, len + 1);
  IntPoly product = IntPoly::one();
  for (std::size_t j = 1; j <= len; ++j) {
    const BinomialFactor f{static_cast<std::int64_t>(j) * (a + 2) - ys[j - 1] - ys[j + 1],
                           lambda.part(j) - lambda.part(j + 1)};
    term.factors.push_back(f);
    // binom(n, 0)_q = 1; equal consecutive parts leave the product unchanged.
    if (f.bottom == 0) continue;
    if (product.is_zero()) continue;
    product = product * cache.get(f.top, f.bottom);
  }
  term.poly = shift(product, static_cast<std::size_t>(term.leading_exponent));
  return term;
}

std::vector<KohTerm> koh_decompose(std::int64_t a, std::int64_t k, QBinomialCache& cache) {
  std::vector<KohTerm> terms;
  for (const auto& lambda : partitions(k)) terms.push_back(koh_term(a, k, lambda, cache));
  return terms;
}

IntPoly koh_sum(const std::vector<KohTerm>& terms) {
  IntPoly total;
  for (const auto& t : terms) total += t.poly;
  return total;
}

IntPoly K3Iterated::assemble() const {
  IntPoly total;
  if (epsilon != 0) total += IntPoly::monomial(1, static_cast<std::size_t>((3 * m - 9) / 2));
  for (const auto& t : terms) {
    total += t.pair_poly;
    total += t.single_poly;
  }
  return total;
}

K3Iterated k3_iterated(std::int64_t m) {
  if (m < 3) throw std::invalid_argument("k3_iterated: m must be at least 3");
  K3Iterated out;
  out.m = m;
  out.epsilon = (m % 4 == 3) ? 1 : 0;
  out.iterations = m / 4;
  for (std::int64_t i = 0; i < out.iterations; ++i) {
    K3IteratedTerm t;
    t.i = i;
    t.pair_exponent = 6 * i + 2;
    t.pair_first = {m - 4 * i - 4, 1};
    t.pair_second = {2 * m - 8 * i - 7, 1};
    t.single_exponent = 6 * i;
    t.single = {3 * m - 12 * i - 8, 1};
    t.pair_poly = shift(qbinomial(t.pair_first.top, 1) * qbinomial(t.pair_second.top, 1),
                        static_cast<std::size_t>(t.pair_exponent));
    t.single_poly = shift(qbinomial(t.single.top, 1), static_cast<std::size_t>(t.single_exponent));
    out.terms.push_back(std::move(t));
  }
  return out;
}

std::vector<std::int64_t> k3_flat_degrees(std::int64_t m) {
  if (m < 3) throw std::invalid_argument("k3_flat_degrees: m must be at least 3");
  const IntPoly p = qbinomial(m, 3);
  std::vector<std::int64_t> flat;
  for (std::int64_t j = 2; 2 * j <= 3 * m - 9; ++j) {
    const auto ju = static_cast<std::size_t>(j);
    if (p[ju] == p[ju - 1]) flat.push_back(j);
  }
  return flat;
}

std::vector<std::int64_t> k3_predicted_flat_degrees(std::int64_t m) {
  std::vector<std::int64_t> all;
  if (m % 2 == 0) all = {(3 * m - 10) / 2};
  else if (m % 4 == 1) all = {(3 * m - 13) / 2, (3 * m - 9) / 2};
  else all = {(3 * m - 11) / 2};
  // degree 1 is always flat and sits outside the scanned window
  std::erase_if(all, [](std::int64_t j) { return j < 2; });
  return all;
}

}  // namespace qkoh
