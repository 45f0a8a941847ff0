#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "hermhull/code.hpp"
#include "hermhull/grs.hpp"
#include "oracles.hpp"

using namespace hermhull;

namespace {

const FieldContext& gf9() { return make_field(3, 2); }

MatrixGF identity(const FieldContext& f, Index n) { return LinearCode::full(f, n).generator(); }

LinearCode random_code(const FieldContext& f, Index k, Index n, std::mt19937& rng) {
  while (true) {
    LinearCode c(f, oracle::random_matrix(f, k, n, rng));
    if (c.dimension() == k) return c;
  }
}

TEST(Rref, IdentityAndZero) {
  const auto& f = gf9();
  const MatrixGF id = identity(f, 3);
  const auto r = rref(id);
  EXPECT_EQ(r.pivots.size(), 3u);
  EXPECT_TRUE(r.matrix == id);
  MatrixGF z(2, 4);
  z.setConstant(f.zero());
  EXPECT_EQ(rank(z), 0);
  EXPECT_EQ(rref(z).matrix.rows(), 0);
}

TEST(Rref, RankMatchesRowSpaceEnumeration) {
  const auto& f = gf9();
  std::mt19937 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    MatrixGF m = oracle::random_matrix(f, 4, 6, rng);
    if (trial % 3 == 0) m.row(3) = m.row(0) + f.primitive() * m.row(1);
    const auto r = rref(m);
    EXPECT_EQ(static_cast<int>(r.pivots.size()), oracle::rank(f, m));
    EXPECT_EQ(oracle::span(f, r.matrix), oracle::span(f, m));
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
      EXPECT_TRUE(r.matrix(static_cast<Index>(i), r.pivots[i]).is_one());
      for (Index j = 0; j < r.matrix.rows(); ++j)
        if (j != static_cast<Index>(i)) EXPECT_TRUE(r.matrix(j, r.pivots[i]).is_zero());
    }
  }
}

TEST(LinearCode, EqualityIsRowSpaceEquality) {
  const auto& f = gf9();
  std::mt19937 rng(5);
  const MatrixGF g = oracle::random_matrix(f, 3, 7, rng);
  MatrixGF h = g;
  h.row(0) += f.exp(3) * g.row(2);
  h.row(1) = f.exp(5) * g.row(1);
  EXPECT_EQ(LinearCode(f, g), LinearCode(f, h));
  h.row(2) = h.row(1);
  EXPECT_NE(oracle::span(f, g), oracle::span(f, h));
  EXPECT_FALSE(LinearCode(f, g) == LinearCode(f, h));
}

TEST(Duals, EuclideanDual) {
  const auto& f = gf9();
  EXPECT_EQ(euclidean_dual(LinearCode::full(f, 5)).dimension(), 0);
  std::mt19937 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const LinearCode c = random_code(f, 2, 6, rng);
    const LinearCode d = euclidean_dual(c);
    EXPECT_EQ(d.dimension(), 4);
    for (Index i = 0; i < c.dimension(); ++i)
      for (Index j = 0; j < d.dimension(); ++j)
        EXPECT_TRUE(oracle::eucl(c.generator().row(i), d.generator().row(j)).is_zero());
    EXPECT_EQ(euclidean_dual(d), c);
  }
}

TEST(Duals, GrsDualIsMdsByEnumeration) {
  const auto& f = gf9();
  const auto b = full_evaluation_vector(f);
  for (int n : {5, 7, 9}) {
    for (int k = std::max(1, n - 6); k <= 3; ++k) {
      GrsSpec s{std::vector<Gf>(b.begin(), b.begin() + n), std::vector<Gf>(n, f.one()), k};
      const LinearCode dual = euclidean_dual(grs_code(s));
      // The dual of an MDS code is MDS: d = k + 1.
      EXPECT_EQ(oracle::min_weight(f, dual.generator()), k + 1) << n << " " << k;
    }
  }
}

TEST(Duals, HermitianDualSingleRow) {
  const auto& f = gf9();
  MatrixGF g(1, 2);
  g << f.one(), f.primitive();
  const LinearCode d = hermitian_dual(LinearCode(f, g));
  EXPECT_EQ(d.dimension(), 1);
  const auto brute = oracle::hermitian_dual_vectors(f, g);
  EXPECT_EQ(brute.size(), 9u);
  for (const auto& v : brute) EXPECT_TRUE(d.contains(v));
}

TEST(Duals, HermitianDualMatchesExhaustiveSearch) {
  const auto& f = gf9();
  std::mt19937 rng(8);
  for (int trial = 0; trial < 6; ++trial) {
    const LinearCode c = random_code(f, 2, 4, rng);
    const LinearCode d = hermitian_dual(c);
    EXPECT_EQ(d.dimension(), 2);
    const auto brute = oracle::hermitian_dual_vectors(f, c.generator());
    EXPECT_EQ(brute.size(), 81u);
    for (const auto& v : brute) EXPECT_TRUE(d.contains(v));
    EXPECT_EQ(hermitian_dual(d), c);
  }
  EXPECT_EQ(hermitian_dual(LinearCode::zero(f, 4)), LinearCode::full(f, 4));
}

TEST(Duals, HermitianDualNeedsQuadraticField) {
  const auto& f = make_field(3, 1);
  EXPECT_THROW(hermitian_dual(LinearCode::full(f, 2)), NoQuadraticStructure);
}

TEST(Hull, GramAgreesWithIntersection) {
  const auto& f = gf9();
  std::mt19937 rng(21);
  int nontrivial = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const LinearCode c = random_code(f, 3, 8, rng);
    const LinearCode hull = hermitian_hull(c);
    EXPECT_EQ(hull_dim_via_gram(c), hull.dimension());
    EXPECT_TRUE(c.contains(hull));
    EXPECT_TRUE(hermitian_dual(c).contains(hull));
    EXPECT_EQ(hull, intersection(c, hermitian_dual(c)));
    nontrivial += hull.dimension() > 0;
  }
  EXPECT_GT(nontrivial, 0);
}

TEST(Hull, ExtremalCases) {
  const auto& f = gf9();
  // (1, w) with 1 + w^{q+1} = 0 is self-orthogonal.
  const Gf w = solve_norm(-f.one());
  MatrixGF g(1, 2);
  g << f.one(), w;
  const LinearCode so(f, g);
  EXPECT_TRUE(is_hermitian_self_orthogonal(so));
  EXPECT_EQ(hermitian_hull(so), so);
  EXPECT_EQ(hull_dim_via_gram(so), 1);
  MatrixGF e(1, 2);
  e << f.one(), f.zero();
  EXPECT_EQ(hermitian_hull(LinearCode(f, e)).dimension(), 0);
}

TEST(Hull, FullGrsHullIsGrs) {
  const auto& f = gf9();
  const auto b = full_evaluation_vector(f);
  GrsSpec s{b, std::vector<Gf>(b.size(), f.one()), 3};
  const LinearCode c = grs_code(s);
  const LinearCode hull = hermitian_hull(c);
  EXPECT_EQ(hermitian_dual(c).dimension(), 6);
  EXPECT_EQ(oracle::span(f, hull.generator()), oracle::span(f, grs_generator(s.with_dimension(2))));
  EXPECT_EQ(oracle::min_weight(f, hull.generator()), 8);
  EXPECT_EQ(min_distance(hull), 8);
}

TEST(Distance, MatchesEnumerationOracle) {
  const auto& f = gf9();
  std::mt19937 rng(4);
  MatrixGF ones(1, 5);
  ones.setConstant(f.one());
  EXPECT_EQ(min_distance(LinearCode(f, ones)), 5);
  for (int trial = 0; trial < 30; ++trial) {
    const LinearCode c = random_code(f, 1 + trial % 3, 7, rng);
    EXPECT_EQ(min_distance(c), oracle::min_weight(f, c.generator()));
    EXPECT_EQ(weight_distribution(c), oracle::weights(f, c.generator()));
  }
}

TEST(Distance, ThreadedEnumerationAgrees) {
  const auto& f = make_field(5, 2);
  const auto b = full_evaluation_vector(f);
  GrsSpec s{std::vector<Gf>(b.begin(), b.begin() + 12), std::vector<Gf>(12, f.one()), 3};
  const LinearCode c = grs_code(s);
  EXPECT_EQ(min_distance(c), 10);
  EXPECT_EQ(min_distance(c), oracle::min_weight(f, c.generator()));
  EXPECT_TRUE(is_mds(c));
  EXPECT_TRUE(is_mds_by_minors(c));
}

TEST(Distance, BudgetExceededThrows) {
  const auto& f = make_field(5, 2);
  const LinearCode c = LinearCode::full(f, 8);
  EXPECT_THROW(min_distance(c, 1000), BudgetExceeded);
  const auto b = full_evaluation_vector(f);
  const LinearCode g = grs_code(GrsSpec{std::vector<Gf>(b.begin(), b.begin() + 5), std::vector<Gf>(5, f.one()), 2});
  EXPECT_THROW(is_mds_by_minors(g, 3), BudgetExceeded);
}

TEST(Distance, MinorsTestDetectsNonMds) {
  const auto& f = gf9();
  std::mt19937 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const LinearCode c = random_code(f, 2, 6, rng);
    EXPECT_EQ(is_mds_by_minors(c), oracle::min_weight(f, c.generator()) == 5);
  }
}

TEST(Puncture, Basics) {
  const auto& f = gf9();
  MatrixGF ones(1, 3);
  ones.setConstant(f.one());
  const LinearCode c(f, ones);
  EXPECT_EQ(puncture(c, std::vector<Index>{}), c);
  MatrixGF two(1, 2);
  two.setConstant(f.one());
  EXPECT_EQ(puncture(c, std::vector<Index>{1}), LinearCode(f, two));
  EXPECT_THROW(puncture(c, std::vector<Index>{3}), std::out_of_range);
}

TEST(Puncture, GrsStaysGrs) {
  const auto& f = gf9();
  const auto b = full_evaluation_vector(f);
  GrsSpec s{b, std::vector<Gf>(9, f.one()), 3};
  const std::vector<Index> del{1, 4, 8};
  const LinearCode p = puncture(grs_code(s), del);
  std::vector<Gf> kept;
  for (Index i = 0; i < 9; ++i)
    if (i != 1 && i != 4 && i != 8) kept.push_back(b[i]);
  EXPECT_EQ(p, grs_code(GrsSpec{kept, std::vector<Gf>(6, f.one()), 3}));
  EXPECT_EQ(oracle::min_weight(f, p.generator()), 4);
}

TEST(MonomialScale, PreservesWeights) {
  const auto& f = gf9();
  std::mt19937 rng(9);
  const LinearCode c = random_code(f, 2, 6, rng);
  EXPECT_EQ(monomial_scale(c, std::vector<Gf>(6, f.one())), c);
  std::vector<Gf> a;
  for (int i = 0; i < 6; ++i) a.push_back(f.exp(i + 1));
  const LinearCode s = monomial_scale(c, a);
  EXPECT_EQ(s.dimension(), 2);
  EXPECT_EQ(oracle::weights(f, s.generator()), oracle::weights(f, c.generator()));
  a[2] = f.zero();
  EXPECT_THROW(monomial_scale(c, a), std::invalid_argument);
}

TEST(ExtendSumZero, Basics) {
  const auto& f = make_field(3, 1);
  EXPECT_EQ(extend_sum_zero(LinearCode::zero(f, 4)).length(), 5);
  MatrixGF ones(1, 3);
  ones.setConstant(f.one());
  const LinearCode e = extend_sum_zero(LinearCode(f, ones));
  EXPECT_TRUE(e.generator()(0, 3).is_zero());
  const auto& g = gf9();
  std::mt19937 rng(2);
  const LinearCode c = extend_sum_zero(random_code(g, 2, 5, rng));
  EXPECT_EQ(c.dimension(), 2);
  for (Index i = 0; i < 2; ++i) EXPECT_TRUE(c.generator().row(i).sum().is_zero());
}

TEST(Subfield, SplitAndSubfieldSubcode) {
  const auto& big = gf9();
  MatrixGF ones(1, 4);
  ones.setConstant(big.one());
  const LinearCode c(big, ones);
  const LinearCode sub = subfield_subcode(c);
  EXPECT_EQ(sub.dimension(), 1);
  EXPECT_EQ(sub.field().size(), 3u);
  EXPECT_EQ(embed_code(sub, big), c);
}

}  // namespace
