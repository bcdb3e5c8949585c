#include "gtmono/analysis.hpp"
#include "gtmono/bases.hpp"

#include <gtest/gtest.h>

using namespace gtmono;

namespace {

CliffPoly x(int m, int alg, int i) { return CliffPoly::variable(m, alg, i); }
const GaussianRational I = GaussianRational::i();

std::size_t rank_of(const std::vector<CliffPoly> &polys) {
  CoordinateIndex coords;
  std::vector<SparseVector> v;
  for (const auto &p : polys)
    v.push_back(coords.vectorize(p));
  return rank_exact(v);
}

} // namespace

TEST(Labels, HarmonicEnumeration) {
  const auto l = enumerate_harmonic_labels(3, 1);
  ASSERT_EQ(l.size(), 3u);
  EXPECT_EQ(label_to_string(1, l[0]), "1|1");
  EXPECT_EQ(label_to_string(1, l[1]), "1|-1");
  EXPECT_EQ(label_to_string(1, l[2]), "1|0");
  // dim H_k(R^m) = C(k+m-1, m-1) - C(k+m-3, m-1).
  for (int m = 3; m <= 6; ++m)
    for (unsigned k = 0; k <= 6; ++k) {
      Rational dim = binomial(k + m - 1, m - 1);
      if (k >= 2)
        dim -= binomial(k + m - 3, m - 1);
      EXPECT_EQ(Rational(static_cast<long>(enumerate_harmonic_labels(m, k).size())), dim);
    }
}

TEST(Labels, MonogenicEnumeration) {
  const auto l = enumerate_monogenic_labels(3, 0);
  ASSERT_EQ(l.size(), 1u);
  EXPECT_EQ(label_to_string(0, l[0]), "0|0");
  // |J^m_k| = C(k+m-2, m-2).
  for (int m = 3; m <= 6; ++m)
    for (unsigned k = 0; k <= 6; ++k)
      EXPECT_EQ(Rational(static_cast<long>(enumerate_monogenic_labels(m, k).size())),
                binomial(k + m - 2, m - 2));
  EXPECT_EQ(enumerate_spin_labels(4).size(), 2u);
  EXPECT_EQ(enumerate_spin_labels(4)[0].signs, "+");
  EXPECT_EQ(enumerate_spin_labels(4)[1].signs, "-");
}

TEST(Labels, ParseAndValidate) {
  auto [k, mu] = parse_harmonic_label("3|2,-1", 4);
  EXPECT_EQ(k, 3u);
  EXPECT_EQ(mu.chain, (std::vector<int>{2, -1}));
  EXPECT_EQ(mu.sign(), -1);
  EXPECT_EQ(label_to_string(k, mu), "3|2,-1");
  auto [k2, nu] = parse_monogenic_label("4|3,1", 4);
  EXPECT_EQ(label_to_string(k2, nu), "4|3,1");
  EXPECT_THROW(parse_harmonic_label("1|2", 3), InvalidArgument);
  EXPECT_THROW(parse_harmonic_label("2|-1,1", 4), InvalidArgument);
  EXPECT_THROW(parse_monogenic_label("2|1", 4), InvalidArgument);
  EXPECT_THROW(parse_monogenic_label("2|-1", 3), InvalidArgument);
  EXPECT_THROW(parse_monogenic_label("x|1", 3), InvalidArgument);
  EXPECT_THROW(enumerate_monogenic_labels(2, 1), InvalidArgument);
}

TEST(HarmonicElement, SpecValues) {
  EXPECT_EQ(harmonic_element(3, 1, HarmLabel{{0}}), x(3, 3, 3));
  EXPECT_EQ(harmonic_element(3, 1, HarmLabel{{1}}), x(3, 3, 1) - x(3, 3, 2) * I);
  EXPECT_EQ(harmonic_element(3, 1, HarmLabel{{-1}}), x(3, 3, 1) + x(3, 3, 2) * I);
  EXPECT_EQ(harmonic_element(3, 2, HarmLabel{{0}}),
            x(3, 3, 3) * x(3, 3, 3) -
                (x(3, 3, 1) * x(3, 3, 1) + x(3, 3, 2) * x(3, 3, 2)) *
                    GaussianRational(make_rational(1, 2)));
}

TEST(MonogenicElement, SpecValues) {
  const Multivector e12 = Multivector::blade(3, 0b011);
  EXPECT_EQ(monogenic_element(3, 1, MonoLabel{{1}}),
            x(3, 3, 1) - left_multiply(e12, x(3, 3, 2)));
  const CliffPoly xe = right_multiply(vector_variable(3, 3, 2), Multivector::basis_vector(3, 3));
  EXPECT_EQ(monogenic_element(3, 1, MonoLabel{{0}}),
            x(3, 3, 3) + xe * GaussianRational(make_rational(1, 2)));
  EXPECT_EQ(partial_derivative(monogenic_element(3, 2, MonoLabel{{1}}), 3),
            monogenic_element(3, 1, MonoLabel{{1}}) * GaussianRational(2));
}

TEST(SpinorElement, SpecValues) {
  for (int m = 3; m <= 6; ++m)
    for (const auto &[nu, v] : spinor_generators(m, Chirality::plus))
      EXPECT_EQ(spinor_element(m, 0, MonoLabel{std::vector<unsigned>(m - 2, 0)}, v),
                CliffPoly::constant(m, v));
  const Multivector vp = spinor_generators(4, Chirality::plus).at({"+"});
  const CliffPoly f = spinor_element(4, 1, MonoLabel{{1, 1}}, SpinLabel{"+"}, Chirality::plus);
  EXPECT_EQ(f, right_multiply(x(4, 4, 1) - x(4, 4, 2) * I, vp));
  EXPECT_THROW(spinor_element(4, 1, MonoLabel{{1, 1}}, SpinLabel{"++"}, Chirality::plus),
               InvalidArgument);
}

TEST(Bases, IndependentAndInKernel) {
  for (int m = 3; m <= 5; ++m)
    for (unsigned k = 0; k <= 4; ++k) {
      std::vector<CliffPoly> h;
      for (const auto &mu : enumerate_harmonic_labels(m, k)) {
        h.push_back(harmonic_element(m, k, mu));
        EXPECT_TRUE(is_harmonic(h.back()));
        EXPECT_TRUE(h.back().is_homogeneous(k) || k == 0);
      }
      EXPECT_EQ(rank_of(h), h.size());
      // Right-module independence: f e_A over all blades A.
      std::vector<CliffPoly> f;
      for (const auto &mu : enumerate_monogenic_labels(m, k)) {
        const CliffPoly p = monogenic_element(m, k, mu);
        EXPECT_TRUE(is_monogenic(p));
        for (BladeMask a = 0; a < (BladeMask{1} << m); ++a)
          f.push_back(right_multiply(p, Multivector::blade(m, a)));
      }
      if (m <= 4)
        EXPECT_EQ(rank_of(f), f.size());
    }
}

TEST(Bases, TopDerivativeVanishesExactlyAtTopLevel) {
  for (int m = 3; m <= 5; ++m)
    for (unsigned k = 1; k <= 4; ++k)
      for (const auto &mu : enumerate_monogenic_labels(m, k)) {
        const bool top = mu.level(m - 1) == k;
        EXPECT_EQ(partial_derivative(monogenic_element(m, k, mu), m).is_zero(), top);
      }
}

TEST(BranchDecompose, SpecExamples) {
  const auto parts = branch_decompose_harmonic(x(3, 3, 3), 1);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0], CliffPoly::scalar(2, 3, 1));
  EXPECT_TRUE(parts[1].is_zero());
  for (const auto &p : branch_decompose_harmonic(CliffPoly(3, 3), 2))
    EXPECT_TRUE(p.is_zero());
  EXPECT_THROW(branch_decompose_harmonic(x(3, 3, 1) * x(3, 3, 1), 2), InvalidArgument);
  EXPECT_THROW(branch_decompose_harmonic(x(3, 3, 1), 2), InvalidArgument);
}

TEST(BranchDecompose, BasisElementsHaveSingleComponent) {
  for (int m = 3; m <= 5; ++m)
    for (unsigned k = 0; k <= 3; ++k)
      for (const auto &mu : enumerate_harmonic_labels(m, k)) {
        const auto parts = branch_decompose_harmonic(harmonic_element(m, k, mu), k);
        const unsigned top = mu.level(m - 1);
        for (unsigned j = 0; j <= k; ++j)
          EXPECT_EQ(parts[j].is_zero(), j != top);
        // P_top reassembles the lower label.
        HarmLabel lower{std::vector<int>(mu.chain.begin() + 1, mu.chain.end())};
        const CliffPoly expected = m == 3 ? harmonic_plane_seed(mu.sign(), top, 2, m)
                                          : harmonic_element(m - 1, top, lower, m - 1, m);
        EXPECT_EQ(parts[top], expected);
      }
}

TEST(FischerDecompose, SpecExamplesAndReassembly) {
  const CliffPoly seed = monogenic_plane_seed(2, 2, 3);
  const auto direct = fischer_decompose(seed, 2);
  EXPECT_EQ(direct[2].second, seed);
  EXPECT_TRUE(direct[0].second.is_zero() && direct[1].second.is_zero());

  const CliffPoly xe = right_multiply(vector_variable(2, 3, 2), Multivector::basis_vector(3, 3));
  const auto lin = fischer_decompose(xe, 1);
  EXPECT_EQ(lin[0].second, CliffPoly::scalar(2, 3, 1));
  EXPECT_TRUE(lin[1].second.is_zero());

  // Reassemble a generic homogeneous input.
  for (int d = 2; d <= 3; ++d) {
    const int alg = d + 1;
    const CliffPoly xv = right_multiply(vector_variable(d, alg, d), Multivector::basis_vector(alg, alg));
    CliffPoly p(d, alg);
    GaussianRational w(1);
    for (const auto &ex : monomials_of_degree(d, 2)) {
      p.add_term(ex, Multivector::blade(alg, static_cast<BladeMask>(ex[0] + 2 * ex[1]), w));
      w = w + GaussianRational(make_rational(1, 3), Rational(1));
    }
    CliffPoly sum(d, alg);
    for (const auto &[j, mj] : fischer_decompose(p, 2)) {
      EXPECT_TRUE(is_monogenic(mj));
      sum += power(xv, 2 - j) * mj;
    }
    EXPECT_EQ(sum, p);
  }
  EXPECT_THROW(fischer_decompose(xe + CliffPoly::scalar(2, 3, 1), 1), InvalidArgument);
}
