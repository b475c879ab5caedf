#include <gtest/gtest.h>

#include <cmath>

#include "gallai/bounds.hpp"
#include "gallai/search.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace gallai;

TEST(Binomial, SmallValues) {
  EXPECT_EQ(binomial(6, 2), 15);
  EXPECT_EQ(binomial(12, 2), 66);
  EXPECT_EQ(binomial(5, 0), 1);
  EXPECT_EQ(binomial(3, 4), 0);
  EXPECT_EQ(binomial(60, 30), BigInt("118264581564861424"));
}

TEST(CompareWithRoot, ExactAtPerfectPowers) {
  EXPECT_EQ(compare_with_root(4, 1, 16, 2), std::strong_ordering::equal);
  EXPECT_EQ(compare_with_root(3, 1, 27, 3), std::strong_ordering::equal);
  EXPECT_EQ(compare_with_root(Rational(3, 2), 1, Rational(9, 4), 2), std::strong_ordering::equal);
  EXPECT_EQ(compare_with_root(4, 1, 15, 2), std::strong_ordering::greater);
  EXPECT_EQ(compare_with_root(4, 1, 17, 2), std::strong_ordering::less);
  EXPECT_EQ(compare_with_root(-1, 1, 2, 2), std::strong_ordering::less);
  EXPECT_EQ(compare_with_root(0, -1, 2, 2), std::strong_ordering::greater);
  EXPECT_EQ(compare_with_root(0, 5, 0, 3), std::strong_ordering::equal);
}

TEST(BracketRoot, ContainsTheRoot) {
  const auto b = bracket_root(2, 3, 2);
  ASSERT_TRUE(b);
  EXPECT_LE(b->lower * b->lower, 12);
  EXPECT_GE(b->upper * b->upper, 12);
  EXPECT_LT(b->upper - b->lower, Rational(1, 100000000000000));
  const auto exact = bracket_root(1, 16, 2, 1);
  EXPECT_EQ(exact->lower, 5);
  EXPECT_EQ(exact->upper, 5);
  EXPECT_FALSE(bracket_root(1, 8, 3));
}

TEST(ZarankiewiczBound, Examples) {
  EXPECT_DOUBLE_EQ(zarankiewicz_bound(4, 4, 2, 2), 10.0);
  for (std::int64_t m = 1; m <= 6; ++m)
    for (std::int64_t n = 1; n <= 6; ++n) EXPECT_DOUBLE_EQ(zarankiewicz_bound(m, n, 2, 1), n);
  EXPECT_NEAR(zarankiewicz_bound(3, 3, 2, 2), 2 * std::sqrt(3.0) + 3, 1e-12);
  test::expect_errc(Errc::invalid_argument, [] { zarankiewicz_bound(3, 3, 1, 2); });
}

TEST(ZarankiewiczBound, ExactComparison) {
  EXPECT_TRUE(below_zarankiewicz_bound(9, 4, 4, 2, 2));
  EXPECT_FALSE(below_zarankiewicz_bound(10, 4, 4, 2, 2));
  EXPECT_TRUE(below_zarankiewicz_bound(6, 3, 3, 2, 2));
  EXPECT_FALSE(below_zarankiewicz_bound(7, 3, 3, 2, 2));
}

// Brute force over all edge subsets, for every non-degenerate shape with at
// most 16 cells. Shapes with m < s or n < t attain the bound (the complete
// graph is K_{s,t}-free), so they are excluded.
TEST(ZarankiewiczBound, StrictlyAboveBruteForce) {
  for (const auto& [s, t] : {std::pair{2, 2}, std::pair{2, 3}}) {
    for (std::int64_t m = s; m <= 5; ++m) {
      for (std::int64_t n = t; n <= 5; ++n) {
        if (m * n > 16) continue;
        const auto z = oracle::zarankiewicz(m, n, s, t);
        EXPECT_TRUE(below_zarankiewicz_bound(z, m, n, s, t)) << m << "x" << n;
        EXPECT_LT(static_cast<double>(z), zarankiewicz_bound(m, n, s, t));
      }
    }
  }
}

TEST(ZarankiewiczBound, DegenerateShapesAttainTheBound) {
  EXPECT_FALSE(below_zarankiewicz_bound(3, 1, 3, 2, 2));
  EXPECT_EQ(zarankiewicz_exact(1, 3, 2, 2), 3u);
}

TEST(SizeBound, Examples) {
  EXPECT_DOUBLE_EQ(size_bound_rhs(4, 3, 2, 2), 4.0);
  EXPECT_DOUBLE_EQ(size_bound_rhs(256, 64, 2, 2), 1008.0);
  EXPECT_NEAR(size_bound_rhs(27, 3, 2, 3), 3.0, 1e-12);
  EXPECT_NEAR(size_bound_rhs(10, 2, 3, 2), std::sqrt(5.0), 1e-12);
}

TEST(SizeBound, MonotoneInMAndK) {
  for (std::int64_t s = 2; s <= 4; ++s) {
    for (std::int64_t t = 1; t <= 3; ++t) {
      for (std::int64_t m = 1; m < 40; ++m) {
        for (std::int64_t k = t; k < 20; ++k) {
          EXPECT_LE(size_bound_rhs(m, k, s, t), size_bound_rhs(m + 1, k, s, t));
          EXPECT_LE(size_bound_rhs(m, k, s, t), size_bound_rhs(m, k + 1, s, t));
        }
      }
    }
  }
}

TEST(LemmaCondition, Examples) {
  EXPECT_TRUE(check_lemma_condition(256, 64, 768, 2, 2));
  EXPECT_FALSE(check_lemma_condition(1, 3, BigInt("1000000000000"), 2, 3));
  EXPECT_FALSE(check_lemma_condition(4, 3, 4, 2, 2));
  EXPECT_TRUE(check_lemma_condition(4, 3, 3, 2, 2));
  test::expect_errc(Errc::invalid_argument, [] { check_lemma_condition(4, 3, 3, 1, 2); });
}

TEST(MainTheorem, Examples) {
  EXPECT_EQ(main_theorem_n(2, 2, 1), 768);
  for (std::int64_t r = 1; r <= 10; ++r) EXPECT_EQ(main_theorem_n(2, 2, r), 768 * r);
  EXPECT_EQ(main_theorem_n(3, 2, 1), 7776);
  const auto md = main_theorem_md(2, 2, 1);
  EXPECT_EQ(md.m, 256);
  EXPECT_EQ(md.d, 64);
}

TEST(MainTheorem, LemmaConditionChain) {
  for (std::int64_t s = 2; s <= 3; ++s) {
    for (std::int64_t t = 2; t <= 3; ++t) {
      for (std::int64_t r = 1; r <= 5; ++r) {
        const auto md = main_theorem_md(s, t, r);
        EXPECT_TRUE(check_lemma_condition(md.m, md.d, main_theorem_n(s, t, r), s, t));
        // n - m r is positive, so the sampling step is well defined
        EXPECT_GT(main_theorem_n(s, t, r), md.m * r);
      }
    }
  }
}

TEST(UnionBound, ClosedForm) {
  EXPECT_EQ(union_bound(2, 2), Rational(3, 4));
  for (std::int64_t s = 1; s <= 5; ++s) {
    for (std::int64_t t = 1; t <= 5; ++t) {
      const auto u = union_bound(s, t);
      EXPECT_EQ(u, Rational(BigInt(2) * binomial(s * t, 2), BigInt(s * s * t * t)));
      EXPECT_LT(u, 1);
      // C(st,2) d / (n - m r) with the theorem's d, m, n
      if (s >= 2) {
        const auto md = main_theorem_md(s, t, 3);
        const Rational direct(binomial(s * t, 2) * md.d, main_theorem_n(s, t, 3) - md.m * 3);
        EXPECT_EQ(direct, u);
      }
    }
  }
}

TEST(StarBound, Examples) {
  EXPECT_EQ(star_bound(2, 2), 2);
  EXPECT_EQ(star_bound(1, 7), 1);
  EXPECT_EQ(star_bound(3, 4), 7);
}

TEST(K2tSizes, Examples) {
  const auto a = k2t_sizes(2, 1);
  EXPECT_EQ(a.n1, 7);
  EXPECT_EQ(a.n2, 37);
  const auto b = k2t_sizes(2, 2);
  EXPECT_EQ(b.n1, 12);
  EXPECT_EQ(b.n2, 40);
  const auto c = k2t_sizes(3, 1);
  EXPECT_EQ(c.n1, 13);
  EXPECT_EQ(c.n2, 277);
  for (std::int64_t r = 1; r <= 10; ++r) {
    const auto k = k2t_sizes(2, r);
    EXPECT_EQ(k.n1, 5 * r + 2);
    EXPECT_EQ(k.n2, 3 * r + 34);
  }
  test::expect_errc(Errc::invalid_argument, [] { k2t_sizes(1, 1); });
}

TEST(LowerBoundSize, Examples) {
  EXPECT_EQ(lower_bound_size(2, 3), 3);
  EXPECT_EQ(lower_bound_size(2, 1), 1);
  EXPECT_EQ(lower_bound_size(4, 2), 6);
}

TEST(EuclidDims, Examples) {
  const std::int64_t one[] = {1, 1};
  EXPECT_EQ(euclid_dims(EuclidKind::simplex_pair, one), 3);
  const std::int64_t prism1[] = {2, 1};
  EXPECT_EQ(euclid_dims(EuclidKind::prism, prism1), 44);
  const std::int64_t prism3[] = {2, 3};
  EXPECT_EQ(euclid_dims(EuclidKind::prism, prism3), 60);
  const std::int64_t product[] = {2, 2, 1};
  EXPECT_EQ(euclid_dims(EuclidKind::product, product), 1536);
}

TEST(EuclidDims, PrismEqualsK2tSum) {
  for (std::int64_t t = 2; t <= 6; ++t) {
    for (std::int64_t r = 1; r <= 10; ++r) {
      const std::int64_t p[] = {t, r};
      const auto k = k2t_sizes(t, r);
      EXPECT_EQ(euclid_dims(EuclidKind::prism, p), k.n1 + k.n2);
      if (t == 2) { EXPECT_EQ(euclid_dims(EuclidKind::prism, p), 8 * r + 36); }
    }
  }
}

TEST(EuclidDims, Errors) {
  test::expect_errc(Errc::unknown_kind, [] { parse_euclid_kind("cube"); });
  EXPECT_EQ(parse_euclid_kind("prism"), EuclidKind::prism);
  const std::int64_t three[] = {1, 2, 3};
  test::expect_errc(Errc::invalid_argument,
                    [&] { euclid_dims(EuclidKind::simplex_pair, three); });
}

TEST(BoundReport, TextStartsWithValues) {
  const std::int64_t in[] = {2, 1};
  const auto report = evaluate_bound(FormulaId::k2t, in);
  const auto text = format_text(report);
  EXPECT_EQ(text.substr(0, text.find('\n')), "n1=7 n2=37");
  EXPECT_NE(text.find("formula"), std::string::npos);
}

TEST(BoundReport, JsonRoundTripForEveryFormula) {
  const std::vector<std::pair<FormulaId, std::vector<std::int64_t>>> cases = {
      {FormulaId::zarankiewicz, {3, 3, 2, 2}},  {FormulaId::zarankiewicz, {5, 4, 2, 3}},
      {FormulaId::size_bound, {256, 64, 2, 2}}, {FormulaId::lemma_condition, {4, 3, 4, 2, 2}},
      {FormulaId::main_n, {3, 3, 5}},           {FormulaId::main_md, {2, 2, 1}},
      {FormulaId::union_bound, {3, 2}},         {FormulaId::star, {3, 4}},
      {FormulaId::k2t, {3, 1}},                 {FormulaId::lower_bound, {4, 2}},
  };
  for (const auto& [id, in] : cases) {
    const auto report = evaluate_bound(id, in);
    EXPECT_EQ(report.inputs.size(), formula_inputs(id).size());
    EXPECT_EQ(report_from_json(to_json(report)), report) << to_json(report);
    EXPECT_EQ(parse_formula_id(to_string(id)), id);
  }
  const std::int64_t p[] = {3, 3, 2};
  const auto dims = evaluate_euclid_dims(EuclidKind::product, p);
  EXPECT_EQ(report_from_json(to_json(dims)), dims);
}

TEST(BoundReport, HugeValuesSurviveJson) {
  const std::int64_t in[] = {9, 9, 1000000};
  const auto report = evaluate_bound(FormulaId::main_n, in);
  EXPECT_EQ(std::get<BigInt>(report.values[0].value), main_theorem_n(9, 9, 1000000));
  EXPECT_EQ(report_from_json(to_json(report)), report);
}

TEST(BoundReport, RealValuesCarryBrackets) {
  const std::int64_t in[] = {3, 3, 2, 2};
  const auto report = evaluate_bound(FormulaId::zarankiewicz, in);
  const auto& v = std::get<RealValue>(report.values[0].value);
  ASSERT_TRUE(v.lower && v.upper);
  EXPECT_LT(*v.lower, *v.upper);
  // the true value is 3 + sqrt(12)
  const Rational lo = *v.lower - 3, hi = *v.upper - 3;
  EXPECT_GT(lo, 0);
  EXPECT_LE(lo * lo, 12);
  EXPECT_GE(hi * hi, 12);
  EXPECT_TRUE(report.strict);
  test::expect_errc(Errc::unknown_kind, [] { parse_formula_id("nope"); });
}
