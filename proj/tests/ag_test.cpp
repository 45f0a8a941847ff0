#include <gtest/gtest.h>

#include <random>

#include "gf25_example.hpp"
#include "hermhull/ag.hpp"
#include "hermhull/grs.hpp"
#include "oracles.hpp"

using namespace hermhull;

namespace {

Place fin(Gf b) { return Place::finite(b); }

std::vector<Gf> subfield_points(const FieldContext& f) {
  std::vector<Gf> u;
  for (Gf x : f.half().sub->elements()) u.push_back(f.half().embed(x));
  return u;
}

// Gram rank of G against itself, computed with oracle arithmetic only.
int oracle_hull_dim(const LinearCode& c) {
  const FieldContext& f = c.field();
  const MatrixGF& g = c.generator();
  MatrixGF gram(g.rows(), g.rows());
  for (Index i = 0; i < g.rows(); ++i)
    for (Index j = 0; j < g.rows(); ++j) gram(i, j) = oracle::herm(g.row(i), g.row(j));
  return static_cast<int>(g.rows()) - oracle::rank(f, gram);
}

// Rows 1, x, ..., x^k, 1/(x - p) evaluated on u and scaled by a.
MatrixGF two_point_rows(const FieldContext& f, std::span<const Gf> u, int k, Gf p, std::span<const Gf> a) {
  const Index n = static_cast<Index>(u.size());
  MatrixGF g(k + 2, n);
  for (Index j = 0; j < n; ++j) {
    Gf x = f.one();
    for (int i = 0; i <= k; ++i) {
      g(i, j) = a[j] * x;
      x *= u[j];
    }
    g(k + 1, j) = a[j] * (u[j] - p).inverse();
  }
  return g;
}

TEST(Divisor, Arithmetic) {
  const auto& f = quadratic_field(3);
  const Divisor o = Divisor::of(Place::at_infinity());
  const Divisor p = Divisor::of(fin(f.exp(2)), 2);
  const Divisor g = 3 * o + p;
  EXPECT_EQ(g.degree(), 5);
  EXPECT_EQ(g[Place::at_infinity()], 3);
  EXPECT_EQ((g - g).support().size(), 0u);
  EXPECT_TRUE(g.geq(o));
  EXPECT_FALSE(o.geq(p));
  EXPECT_EQ(wedge(o, p).degree(), 0);
  EXPECT_EQ(vee(o, p), o + p);
  EXPECT_EQ(rr_dim(g), 6);
  EXPECT_EQ(rr_dim(Divisor() - o), 0);
  EXPECT_EQ(rr_dim(Divisor()), 1);
}

TEST(RationalFunction, DivisorHasDegreeZero) {
  const auto& f = quadratic_field(5);
  const Gf a = f.exp(3), b = f.exp(7);
  // (x - a)^2 / (x - b)
  const Polynomial num = Polynomial::from_roots(f, std::vector<Gf>{a, a});
  const RationalFunction r(num, Polynomial::from_roots(f, std::vector<Gf>{b}));
  EXPECT_EQ(r.valuation(fin(a)), 2);
  EXPECT_EQ(r.valuation(fin(b)), -1);
  EXPECT_EQ(r.valuation(Place::at_infinity()), -1);
  EXPECT_EQ(r.divisor().degree(), 0);
  EXPECT_EQ(r(f.exp(1)), (f.exp(1) - a) * (f.exp(1) - a) * (f.exp(1) - b).inverse());
}

TEST(Lbasis, SizesAndMembership) {
  const auto& f = quadratic_field(5);
  const Divisor o = Divisor::of(Place::at_infinity());
  EXPECT_EQ(lbasis(f, 2 * o).size(), 3u);
  const Divisor g = 3 * o + Divisor::of(fin(f.exp(10)));
  const auto basis = lbasis(f, g);
  ASSERT_EQ(basis.size(), 5u);
  for (const auto& r : basis) EXPECT_TRUE((r.divisor() + g).geq(Divisor()));
}

TEST(EvaluationCode, OnePointIsGrs) {
  const auto& f = quadratic_field(4);
  std::mt19937 rng(3);
  const auto all = f.elements();
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Gf> u(all.begin(), all.end());
    std::shuffle(u.begin(), u.end(), rng);
    u.resize(6 + trial % 5);
    const int k = trial % 4;
    const LinearCode c = evaluation_code(f, u, k * Divisor::of(Place::at_infinity()));
    EXPECT_EQ(c, grs_code(GrsSpec{u, std::vector<Gf>(u.size(), f.one()), k + 1}));
  }
}

TEST(EvaluationCode, RejectsSupportOverlap) {
  const auto& f = quadratic_field(3);
  const auto u = subfield_points(f);
  EXPECT_THROW(evaluation_code(f, u, Divisor::of(fin(u[1]))), std::invalid_argument);
}

TEST(Residues, SumVanishes) {
  std::mt19937 rng(9);
  for (std::uint32_t q : {3u, 4u, 5u, 7u}) {
    const auto& f = quadratic_field(q);
    auto all = f.elements();
    for (int trial = 0; trial < 10; ++trial) {
      std::shuffle(all.begin(), all.end(), rng);
      const std::vector<Gf> u(all.begin(), all.begin() + std::min<std::size_t>(2 + trial, all.size()));
      const DifferentialData d = residues(f, u);
      EXPECT_TRUE(d.residue_sum.is_zero());
      const Polynomial h = Polynomial::from_roots(f, u);
      for (std::size_t i = 0; i < u.size(); ++i) {
        Gf prod = f.one();
        for (std::size_t j = 0; j < u.size(); ++j)
          if (j != i) prod *= u[i] - u[j];
        EXPECT_EQ(d.residues[i] * prod, f.one());
      }
    }
  }
}

TEST(Residues, SubfieldSetHasConstantResidue) {
  // h = x^q - x, so h' = -1 everywhere.
  for (std::uint32_t q : {3u, 5u, 7u, 8u}) {
    const auto& f = quadratic_field(q);
    const DifferentialData d = residues(f, subfield_points(f));
    for (Gf r : d.residues) EXPECT_EQ(r, -f.one());
    ASSERT_TRUE(d.normalizer.has_value());
    EXPECT_TRUE(d.normalizer->is_one());
  }
}

TEST(Residues, WitnessesSolveTheNormEquation) {
  for (auto rule : {WitnessRule::SmallestExponent, WitnessRule::LargestExponent}) {
    const auto& f = quadratic_field(5);
    const DifferentialData d = residues(f, example::points(f), rule);
    ASSERT_TRUE(d.normalizer.has_value());
    for (std::size_t i = 0; i < d.residues.size(); ++i) EXPECT_EQ(d.witnesses[i].pow(6), *d.normalizer * d.residues[i]);
  }
}

TEST(EvaluationSet, Sizes) {
  EXPECT_EQ(evaluation_set(EvalFamily::COR1, {5, 13, 0, 0}).size(), 13u);
  EXPECT_EQ(evaluation_set(EvalFamily::COR2, {3, 0, 2, 0}).size(), 6u);
  EXPECT_EQ(evaluation_set(EvalFamily::COR3, {5, 0, 1, 6}).size(), 13u);
  EXPECT_TRUE(eval_range_violation(EvalFamily::COR1, {5, 30, 0, 0}).has_value());
  for (auto fam : {EvalFamily::COR1, EvalFamily::COR2, EvalFamily::COR3})
    for (std::uint32_t q : {3u, 4u, 5u}) {
      const auto& f = quadratic_field(q);
      for (const auto& p : eval_in_range(fam, q)) {
        std::vector<Gf> u;
        try {
          u = evaluation_set(fam, p);
        } catch (const std::invalid_argument&) {
          continue;
        }
        EXPECT_TRUE(derivative_norm_condition(f, u) || residues(f, u).normalizer.has_value());
      }
    }
}

TEST(TwoPoint, MatchesDirectConstruction) {
  struct Case {
    EvalFamily fam;
    EvalParams p;
    int k, n, d;
  };
  for (const Case& c : {Case{EvalFamily::COR1, {5, 13, 0, 0}, 1, 13, 11}, Case{EvalFamily::COR2, {5, 0, 2, 0}, 1, 10, 8}}) {
    const auto& f = quadratic_field(c.p.q);
    const auto u = evaluation_set(c.fam, c.p);
    const TwoPointCode tp = two_point_code(f, u, c.k);
    EXPECT_EQ(tp.code.length(), c.n);
    EXPECT_EQ(tp.code.dimension(), c.k + 2);
    EXPECT_EQ(oracle::min_weight(f, tp.code.generator()), c.d);
    EXPECT_EQ(tp.code, LinearCode(f, two_point_rows(f, tp.diff.points, c.k, tp.extra_point, tp.diff.witnesses)));
    EXPECT_EQ(oracle_hull_dim(tp.code), c.k);
    EXPECT_EQ(tp.report.verdict(), Verdict::Pass);
  }
}

TEST(TwoPoint, ReferenceExampleOverGf25) {
  const auto& f = quadratic_field(5);
  TwoPointOptions opt;
  opt.extra_point = f.exp(example::kExtraPoint);
  opt.rule = WitnessRule::LargestExponent;
  const TwoPointCode tp = two_point_code(f, example::points(f), example::kDegree, opt);
  EXPECT_EQ(tp.diff.witnesses, example::reference_vector(f));
  EXPECT_EQ(tp.diff.normalizer, f.exp(4));
  EXPECT_EQ(tp.code, LinearCode(f, example::generator(f)));
  EXPECT_EQ(tp.branch, 2);
  EXPECT_EQ(oracle_hull_dim(tp.code), 3);
  const LinearCode hull = hermitian_hull(tp.code);
  EXPECT_EQ(oracle::min_weight(f, hull.generator()), 18);
  EXPECT_EQ(min_distance(tp.code), 16);
  EXPECT_EQ(tp.report.verdict(), Verdict::Pass);
}

TEST(TwoPoint, RandomSmallInstancesAgreeWithOracle) {
  for (std::uint32_t q : {3u, 4u}) {
    const auto& f = quadratic_field(q);
    for (auto fam : {EvalFamily::COR1, EvalFamily::COR2, EvalFamily::COR3})
      for (const auto& p : eval_in_range(fam, q)) {
        std::vector<Gf> u;
        try {
          u = evaluation_set(fam, p);
        } catch (const std::invalid_argument&) {
          continue;
        }
        const int n = static_cast<int>(u.size());
        for (int k = 0; k <= (n - 2) / static_cast<int>(q + 1); ++k) {
          const TwoPointCode tp = two_point_code(f, u, k);
          EXPECT_EQ(oracle_hull_dim(tp.code), static_cast<int>(hull_dim_via_gram(tp.code)));
          EXPECT_EQ(tp.report.verdict(), Verdict::Pass) << to_string(fam) << " q=" << q << " k=" << k;
        }
      }
  }
}

TEST(HullSweep, CoversEveryDimension) {
  const auto& f = quadratic_field(5);
  const TwoPointCode small = two_point_code(f, evaluation_set(EvalFamily::COR2, {5, 0, 2, 0}), 1);
  EXPECT_EQ(hull_sweep(small), (std::vector<int>{1, 0}));
  const TwoPointCode big = two_point_code(f, evaluation_set(EvalFamily::COR2, {5, 0, 4, 0}), 3);
  EXPECT_EQ(hull_sweep(big), (std::vector<int>{3, 2, 1, 0}));
  for (int l = 0; l <= 3; ++l) {
    const LinearCode s = scale_for_hull(big, l);
    EXPECT_EQ(hermitian_hull(s).dimension(), 3 - l);
    EXPECT_EQ(s.dimension(), big.code.dimension());
  }
  EXPECT_THROW(scale_for_hull(big, 4), std::invalid_argument);
  // A norm-one constant preserves every Hermitian product.
  EXPECT_THROW(scale_for_hull(big, 1, f.exp(4)), std::invalid_argument);
}

TEST(Growth, SubfieldStart) {
  const auto& f = quadratic_field(5);
  const GrowthResult r = extend_evaluation_set(f, subfield_points(f), 2);
  ASSERT_EQ(r.steps.size(), 2u);
  EXPECT_EQ(r.steps[0].set.size(), 7u);
  EXPECT_EQ(r.steps[1].set.size(), 9u);
  EXPECT_EQ(r.steps[0].added, std::make_pair(f.exp(1), f.exp(5)));
  EXPECT_EQ(r.steps[1].added, std::make_pair(f.exp(4), f.exp(20)));
  for (const auto& s : r.steps) EXPECT_TRUE(derivative_norm_condition(f, s.set));
  const GrowthResult r7 = extend_evaluation_set(quadratic_field(7), subfield_points(quadratic_field(7)), 3);
  ASSERT_EQ(r7.steps.size(), 3u);
  EXPECT_EQ(r7.steps.back().set.size(), 13u);
}

TEST(Growth, RejectsBadStart) {
  const auto& f = quadratic_field(5);
  EXPECT_THROW(extend_evaluation_set(f, {f.zero(), f.one(), f.exp(1)}, 1), std::invalid_argument);
}

TEST(ExtendedTwoPoint, HasOneMoreCoordinate) {
  const auto& f = quadratic_field(5);
  const auto u = evaluation_set(EvalFamily::COR2, {5, 0, 2, 0});
  const TwoPointCode e = extended_two_point(f, u, 1);
  EXPECT_EQ(e.code.length(), static_cast<Index>(u.size()) + 1);
  EXPECT_EQ(e.report.checks.empty(), false);
}

}  // namespace
