#include "qkoh/int_poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace qkoh {

namespace {

const Integer& zero_coeff() {
  static const Integer zero{0};
  return zero;
}

}  // namespace

IntPoly::IntPoly(std::initializer_list<Integer> coeffs) : coeffs_(coeffs) { normalize(); }

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly IntPoly::one() { return IntPoly{Integer{1}}; }

IntPoly IntPoly::monomial(const Integer& c, std::size_t e) {
  if (c == 0) return {};
  std::vector<Integer> v(e + 1);
  v[e] = c;
  return IntPoly(std::move(v));
}

std::optional<std::size_t> IntPoly::degree() const noexcept {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

const Integer& IntPoly::coeff(std::size_t i) const noexcept {
  return i < coeffs_.size() ? coeffs_[i] : zero_coeff();
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Integer> out(lhs.size() + rhs.size() - 1);
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    const Integer& a = lhs.coeffs_[i];
    if (a == 0) continue;
    for (std::size_t j = 0; j < rhs.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.get_mpz_t(), rhs.coeffs_[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-() const {
  IntPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

IntPoly add(const IntPoly& p, const IntPoly& r) { return p + r; }
IntPoly sub(const IntPoly& p, const IntPoly& r) { return p - r; }
IntPoly mul(const IntPoly& p, const IntPoly& r) { return p * r; }

IntPoly shift(const IntPoly& p, std::size_t e) {
  if (p.is_zero() || e == 0) return p;
  std::vector<Integer> v(e + p.size());
  std::copy(p.coeffs().begin(), p.coeffs().end(), v.begin() + static_cast<std::ptrdiff_t>(e));
  return IntPoly(std::move(v));
}

std::optional<std::size_t> is_symmetric(const IntPoly& p) {
  if (p.is_zero()) throw std::domain_error("undefined symmetry: zero polynomial");
  const std::size_t d = *p.degree();
  for (std::size_t i = 0; i < d - i; ++i) {
    if (p[i] != p[d - i]) return std::nullopt;
  }
  return d;
}

bool is_symmetric_about(const IntPoly& p, std::int64_t center_twice) {
  if (p.is_zero()) return true;
  if (center_twice < 0) return false;
  const auto ct = static_cast<std::size_t>(center_twice);
  if (*p.degree() > ct) return false;
  for (std::size_t i = 0; 2 * i <= ct; ++i) {
    if (p[i] != p[ct - i]) return false;
  }
  return true;
}

Verdict is_unimodal(const IntPoly& p) {
  bool fallen = false;
  for (std::size_t i = 1; i < p.size(); ++i) {
    const int c = cmp(p[i], p[i - 1]);
    if (c < 0) {
      fallen = true;
    } else if (c > 0 && fallen) {
      return {false, i};
    }
  }
  return {};
}

Verdict is_nonnegative(const IntPoly& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (sgn(p[i]) < 0) return {false, i};
  }
  return {};
}

IntPoly truncated_first_difference(const IntPoly& p, std::int64_t center_twice) {
  if (center_twice < 0) {
    throw std::invalid_argument("truncated_first_difference: negative center_twice");
  }
  const auto top = static_cast<std::size_t>(center_twice / 2);
  const std::size_t len = std::min(top + 1, p.size() + 1);
  std::vector<Integer> out(len);
  for (std::size_t i = 0; i < len; ++i) {
    out[i] = p[i];
    if (i > 0) out[i] -= p[i - 1];
  }
  return IntPoly(std::move(out));
}

Verdict dominates(const IntPoly& p, const IntPoly& r, std::int64_t upto) {
  if (upto < 0) return {};
  const auto last = static_cast<std::size_t>(upto);
  const std::size_t scan = std::min(last, std::max(p.size(), r.size()));
  for (std::size_t i = 0; i <= scan; ++i) {
    if (p[i] < r[i]) return {false, i};
  }
  return {};
}

}  // namespace qkoh
