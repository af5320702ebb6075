#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "qkoh/conjecture.hpp"
#include "test_util.hpp"

using namespace qkoh;
using qkoh::testing::brute_qbinomial;
using qkoh::testing::poly_of;

namespace {

std::vector<std::int64_t> bs_of(const std::vector<DiffSpec>& specs) {
  std::vector<std::int64_t> out;
  for (const auto& s : specs) out.push_back(s.b);
  return out;
}

}  // namespace

TEST_CASE("make_diff_spec") {
  const DiffSpec s = make_diff_spec(3, 6, 2);
  CHECK(s.shift_exponent == 4);
  CHECK(s.center_twice == 9);

  const DiffSpec two = make_diff_spec(2, 7, 13);
  CHECK(two.b == 0);
  CHECK(two.shift_exponent == 5);

  try {
    make_diff_spec(5, 20, 7);
    FAIL("expected parity violation");
  } catch (const InvalidSpec& e) {
    CHECK(e.violation() == InvalidSpec::Violation::Parity);
    CHECK(std::string(e.what()).find("parity") != std::string::npos);
  }
  try {
    make_diff_spec(5, 20, 30);
    FAIL("expected range violation");
  } catch (const InvalidSpec& e) {
    CHECK(e.violation() == InvalidSpec::Violation::Range);
  }
  CHECK_THROWS_AS(make_diff_spec(5, 4, 3), InvalidSpec);
  CHECK_THROWS_AS(make_diff_spec(4, 8, 1), InvalidSpec);
  CHECK_THROWS_AS(make_diff_spec(1, 8, 1), InvalidSpec);
  CHECK_FALSE(try_diff_spec(5, 20, 7).has_value());

  for (std::int64_t k = 3; k <= 8; ++k) {
    for (std::int64_t m = k; m <= 30; ++m) {
      for (auto b : valid_bs(k, m)) CHECK(make_diff_spec(k, m, b).shift_exponent >= 0);
    }
  }
}

TEST_CASE("f_poly") {
  CHECK(f_poly(make_diff_spec(3, 6, 2)) == poly_of({1, 1, 2, 3, 2, 2, 3, 2, 1, 1}));
  CHECK(f_poly(make_diff_spec(4, 5, 4)) == poly_of({0, 0, -1}));
  CHECK(f_poly(make_diff_spec(2, 4, 0)) == poly_of({1, 1, 1, 1, 1}));

  // independent route: box counts minus shifted box counts
  for (std::int64_t k = 2; k <= 6; ++k) {
    for (std::int64_t m = k; m <= 14; ++m) {
      for (auto b : valid_bs(k, m)) {
        const DiffSpec s = make_diff_spec(k, m, b);
        const IntPoly expect = brute_qbinomial(m, k) - shift(brute_qbinomial(s.b, k - 2),
                                                             static_cast<std::size_t>(s.shift_exponent));
        CHECK(f_poly(s) == expect);
      }
    }
  }
}

TEST_CASE("f is symmetric about k(m-k)/2") {
  for (std::int64_t k = 2; k <= 8; ++k) {
    for (std::int64_t m = k; m <= 60; ++m) {
      for (auto b : valid_bs(k, m)) {
        const DiffSpec s = make_diff_spec(k, m, b);
        CHECK(is_symmetric_about(f_poly(s), s.center_twice));
      }
    }
  }
}

TEST_CASE("valid_bs") {
  CHECK(valid_bs(5, 20) == std::vector<std::int64_t>{4, 6, 8, 10, 12, 14, 16, 18, 20, 22, 24, 26, 28});
  CHECK(valid_bs(4, 6) == std::vector<std::int64_t>{2, 3, 4, 5, 6});
  CHECK(valid_bs(3, 6) == std::vector<std::int64_t>{2, 4, 6, 8, 10});
  CHECK(valid_bs(2, 9) == std::vector<std::int64_t>{0});
  CHECK(valid_bs(5, 4).empty());
}

TEST_CASE("predicted_exception") {
  const auto rs = predicted_exception(make_diff_spec(3, 6, 2));
  CHECK(rs.exception());
  CHECK(rs.reason == "b=2, m even");

  const auto shifted = predicted_exception(make_diff_spec(5, 21, 29));
  CHECK(shifted.exception());
  CHECK(shifted.reason == "one-degree shift");

  CHECK_FALSE(predicted_exception(make_diff_spec(4, 8, 4)).exception());
  CHECK(predicted_exception(make_diff_spec(4, 8, 5)).exception());
  CHECK(predicted_exception(make_diff_spec(4, 5, 4)).reason == "m=5");
  CHECK(predicted_exception(make_diff_spec(2, 5, 0)).exception());
  CHECK_FALSE(predicted_exception(make_diff_spec(2, 6, 0)).exception());
  CHECK(predicted_exception(make_diff_spec(3, 9, 5)).exception());
  CHECK(predicted_exception(make_diff_spec(3, 9, 1)).exception());
  CHECK(predicted_exception(make_diff_spec(3, 11, 3)).exception());
  CHECK(predicted_exception(make_diff_spec(3, 10, 20)).reason == "b=3m-10");

  const auto below = predicted_exception(make_diff_spec(5, 19, 25));
  CHECK(below.verdict == Prediction::NoPrediction);
  CHECK(below.reason == "below threshold");
  CHECK(predicted_exception(make_diff_spec(11, 40, 30)).verdict == Prediction::NoPrediction);

  ThresholdTable loose;
  loose.set(5, 10);
  CHECK(predicted_exception(make_diff_spec(5, 19, 25), loose).verdict == Prediction::Holds);
  CHECK_THROWS_AS(loose.set(4, 10), std::invalid_argument);
  CHECK_THROWS_AS(loose.set(6, 5), std::invalid_argument);
}

TEST_CASE("check") {
  const auto a = check(make_diff_spec(3, 6, 2));
  CHECK(a.nonnegative);
  CHECK_FALSE(a.unimodal);
  CHECK(a.symmetric);
  CHECK(a.first_unimodality_violation == 6);
  CHECK(a.predicted_exception());
  CHECK(a.agrees_with_prediction);

  const auto b = check(make_diff_spec(5, 20, 28));
  CHECK(b.nonnegative);
  CHECK(b.unimodal);
  CHECK_FALSE(b.predicted_exception());
  CHECK(b.agrees_with_prediction);

  const auto c = check(make_diff_spec(2, 5, 0));
  CHECK_FALSE(c.unimodal);
  CHECK(c.predicted_exception());
  CHECK(c.agrees_with_prediction);

  const auto d = check(make_diff_spec(4, 5, 4));
  CHECK_FALSE(d.nonnegative);
  CHECK(d.first_negative_degree == 2);
  CHECK(d.agrees_with_prediction);

  // a below-threshold failure is reported but not a disagreement
  ThresholdTable strict;
  strict.set(5, 100);
  const auto e = check(make_diff_spec(5, 21, 29), strict);
  CHECK_FALSE(e.unimodal);
  CHECK(e.prediction.verdict == Prediction::NoPrediction);
  CHECK(e.agrees_with_prediction);
}

TEST_CASE("scan reports agree with the characterization") {
  for (std::int64_t k = 2; k <= 4; ++k) {
    const auto reports = scan(k, k, 60);
    CHECK(std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.agrees_with_prediction; }));
    CHECK(std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.symmetric; }));
  }
  const auto five = scan(5, 20, 60);
  CHECK(std::all_of(five.begin(), five.end(), [](const CheckReport& r) { return r.agrees_with_prediction; }));

  ScanOptions only;
  only.only_disagreements = true;
  CHECK(scan(3, 3, 60, only).empty());

  // ordering: m ascending then b ascending
  const auto ordered = scan(4, 6, 9);
  for (std::size_t i = 1; i < ordered.size(); ++i) {
    const auto& p = ordered[i - 1].spec;
    const auto& q = ordered[i].spec;
    CHECK((p.m < q.m || (p.m == q.m && p.b < q.b)));
  }
  CHECK(scan(5, 1, 4).empty());
}

TEST_CASE("scan is independent of the worker count") {
  ScanOptions one;
  ScanOptions many;
  many.workers = 6;
  QBinomialCache fresh;
  const auto a = scan(5, 20, 40, one);
  const auto b = scan(5, 20, 40, many, fresh);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].spec == b[i].spec);
    CHECK(a[i].unimodal == b[i].unimodal);
    CHECK(a[i].nonnegative == b[i].nonnegative);
    CHECK(a[i].first_unimodality_violation == b[i].first_unimodality_violation);
  }
}

TEST_CASE("one-degree shift gives 1 + 0q + q^2 + ...") {
  for (std::int64_t k = 5; k <= 8; ++k) {
    for (std::int64_t m = k + 2; m <= 60; ++m) {
      const auto b = one_degree_shift_b(k, m);
      if (!b) continue;
      const auto spec = try_diff_spec(k, m, *b);
      if (!spec) continue;
      CHECK(spec->shift_exponent == 1);
      const IntPoly f = f_poly(*spec);
      if (spec->center_twice < 4) continue;
      CHECK(f[0] == 1);
      CHECK(f[1] == 0);
      CHECK(f[2] >= 1);
      CHECK_FALSE(is_unimodal(f).holds);
    }
  }
}

TEST_CASE("reduction inequality") {
  CHECK(reduction_inequality_holds(4, 8));
  CHECK(reduction_inequality_holds(5, 12));
  CHECK(reduction_inequality_holds(8, 20));
  CHECK_THROWS_AS(reduction_inequality(3, 10), std::invalid_argument);
  CHECK_THROWS_AS(reduction_inequality(5, 6), std::invalid_argument);

  // oracle: left minus right is the first difference of the other KOH terms,
  // which is nonnegative term by term
  for (std::int64_t k = 4; k <= 6; ++k) {
    for (std::int64_t b = 3 * k - 8; b <= 30; ++b) {
      const std::int64_t ct = (k - 2) * (b - k + 2);
      const IntPoly lhs = truncated_first_difference(brute_qbinomial(b, k - 2), ct);
      const IntPoly rhs = truncated_first_difference(
          shift(brute_qbinomial(b - 2 * k + 6, k - 2), static_cast<std::size_t>((k - 2) * (k - 3))), ct);
      CHECK(is_nonnegative(lhs - rhs).holds == reduction_inequality_holds(k, b));
    }
  }
}

TEST_CASE("passing specs stay passing 2k-6 steps down") {
  for (std::int64_t k = 4; k <= 6; ++k) {
    for (std::int64_t m = k; m <= 48; ++m) {
      for (auto b : valid_bs(k, m)) {
        const auto lower = try_diff_spec(k, m, b - (2 * k - 6));
        if (!lower) continue;
        if (check(make_diff_spec(k, m, b)).passes()) CHECK(check(*lower).passes());
      }
    }
  }
}

TEST_CASE("largest_bs") {
  for (std::int64_t n = 4; n <= 10; ++n) {
    const auto cases = twelve_cases(n);
    for (std::int64_t j = 0; j < 6; ++j) {
      const auto top = largest_bs(5, 6 * n + j);
      const auto idx = static_cast<std::size_t>(2 * j);
      CHECK(top == std::vector<std::int64_t>{cases[idx].b, cases[idx + 1].b});
    }
  }
  CHECK(largest_bs(4, 10) == std::vector<std::int64_t>{14, 11});
  for (std::int64_t k = 5; k <= 9; k += 2) {
    for (std::int64_t m = 3 * k; m <= 40; ++m) CHECK(largest_bs(k, m).size() <= static_cast<std::size_t>(k - 3));
  }
  CHECK(largest_bs(6, 40).size() == 6);
  CHECK_THROWS_AS(largest_bs(3, 10), std::invalid_argument);
}

TEST_CASE("twelve_cases") {
  const auto cases = twelve_cases(4);
  REQUIRE(cases.size() == 12);
  CHECK(cases[0] == make_diff_spec(5, 24, 32));
  CHECK(cases[0].shift_exponent == 4);
  CHECK(cases[10].m == 29);
  CHECK(cases[10].b == 43);
  CHECK(cases[10].shift_exponent == 0);
  CHECK(cases[4].m == 26);
  CHECK(cases[4].b == 38);
  CHECK(cases[4].shift_exponent == 0);
  CHECK(f_poly(cases[0]) == qbinomial(24, 5) - shift(qbinomial(32, 3), 4));
  CHECK_THROWS_AS(twelve_cases(3), std::invalid_argument);

  for (std::int64_t n = 4; n <= 7; ++n) {
    for (const auto& s : twelve_cases(n)) CHECK(check(s).passes());
  }
}

TEST_CASE("closed-form coefficients") {
  CHECK(ci_closed_form(4, 8) == 1);
  CHECK(ci_closed_form(4, 24) == 8);
  CHECK(ci_closed_form(4, 47) == 1);
  CHECK(di_closed_form(4, 4) == 1);
  CHECK(di_closed_form(4, 5) == 0);
  CHECK(di_closed_form(4, 40) == 3);
  CHECK_THROWS_AS(ci_closed_form(4, 7), std::out_of_range);
  CHECK_THROWS_AS(ci_closed_form(4, 48), std::out_of_range);
  CHECK_THROWS_AS(di_closed_form(3, 5), std::out_of_range);
  CHECK_THROWS_AS(di_closed_form(4, -1), std::out_of_range);

  for (std::int64_t n = 4; n <= 6; ++n) {
    // d_i straight from the expanded sum: sum_i q^{6i+4} + q^{6i+6} + ... + q^{10n+2i-7}
    const std::int64_t top = 15 * n - 13;
    std::vector<long> d(static_cast<std::size_t>(top) + 1);
    for (std::int64_t i = 0; i < (5 * n) / 2 - 2; ++i) {
      if (6 * i + 4 <= top) d[static_cast<std::size_t>(6 * i + 4)] += 1;
      for (std::int64_t e = 6 * i + 6; e <= std::min(top, 10 * n + 2 * i - 7); ++e) d[static_cast<std::size_t>(e)] += 1;
    }
    const IntPoly direct = di_direct(n);
    for (std::int64_t i = 0; i <= top; ++i) {
      CHECK(direct[static_cast<std::size_t>(i)] == d[static_cast<std::size_t>(i)]);
      CHECK(di_closed_form(n, i) == d[static_cast<std::size_t>(i)]);
    }
  }
}

TEST_CASE("middle_degree_delta") {
  // alpha_i for i <= 12t-4 counts partitions of i into at most 3 parts:
  // round((i+3)^2 / 12)
  auto p3 = [](std::int64_t i) { return ((i + 3) * (i + 3) + 6) / 12; };
  CHECK(middle_degree_delta(2) == 1);
  CHECK(middle_degree_delta(3) == 2);
  CHECK(middle_degree_delta(5) == 4);
  for (std::int64_t t = 2; t <= 10; ++t) {
    CHECK(middle_degree_delta(t) == p3(6 * t - 5) - p3(6 * t - 6));
    // the (4,1) term of binom(12t+7,5)_q really has this first difference at degree 30t+5
    const IntPoly term = shift(qbinomial(12 * t - 1, 3) * qbinomial(24 * t - 1, 1), 12);
    const IntPoly diff = truncated_first_difference(term, 5 * (12 * t + 2));
    CHECK(diff[static_cast<std::size_t>(30 * t + 5)] == middle_degree_delta(t));
  }
  CHECK_THROWS_AS(middle_degree_delta(1), std::invalid_argument);
}

TEST_CASE("Reiner-Stanton correspondence") {
  const auto k3 = bs_of(reiner_stanton_correspondence(3, 6));
  CHECK(std::find(k3.begin(), k3.end(), 2) != k3.end());
  CHECK(bs_of(reiner_stanton_correspondence(5, 20)) == std::vector<std::int64_t>{16, 20, 24, 28});
  CHECK(reiner_stanton_correspondence(4, 7).empty());
}

TEST_CASE("k=4 growth of binom(m,4)_q") {
  for (std::int64_t m = 6; m <= 60; ++m) {
    const IntPoly p = qbinomial(m, 4);
    for (std::int64_t j = 2; j <= 2 * m - 8; j += 2) {
      CHECK(p[static_cast<std::size_t>(j)] > p[static_cast<std::size_t>(j - 1)]);
    }
    CHECK(p[static_cast<std::size_t>(2 * m - 10)] == p[static_cast<std::size_t>(2 * m - 9)]);
  }
}
