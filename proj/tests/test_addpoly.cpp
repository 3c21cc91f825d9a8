// Copyright 2026 The aslab Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "aslab/addpoly.hpp"
#include "aslab/error.hpp"
#include "support.hpp"

namespace aslab::addpoly {
namespace {

using testing::gf16;
using gf::Element;
using gf::FiniteField;
using testing::gf4;
using testing::omega;

std::set<std::uint32_t> indices(const std::vector<Element>& xs) {
  std::set<std::uint32_t> out;
  for (const auto& x : xs) out.insert(x.index());
  return out;
}

AdditivePolynomial poly(const FiniteField& f, std::vector<Element> coeffs) {
  return AdditivePolynomial(f, std::move(coeffs));
}

// Gaussian binomial [k choose d]_p: the number of d-dimensional subspaces.
std::uint64_t gaussian_binomial(std::uint64_t p, std::uint32_t k, std::uint32_t d) {
  std::uint64_t num = 1;
  std::uint64_t den = 1;
  for (std::uint32_t i = 0; i < d; ++i) {
    std::uint64_t pk = 1;
    std::uint64_t pi = 1;
    for (std::uint32_t j = 0; j < k - i; ++j) pk *= p;
    for (std::uint32_t j = 0; j < i + 1; ++j) pi *= p;
    num *= pk - 1;
    den *= pi - 1;
  }
  return num / den;
}

TEST(FpSubspace, FromGeneratorsExamples) {
  const auto K = gf4();
  const Element w = omega();
  const Element one = K.one();
  const auto line = FpSubspace::from_generators(K, std::vector{one});
  EXPECT_EQ(line.dim(), 1u);
  EXPECT_EQ(line.basis(), std::vector{one});
  EXPECT_EQ(indices(line.elements()), (std::set<std::uint32_t>{K.zero().index(), one.index()}));

  const auto all = FpSubspace::from_generators(K, std::vector{w, w + one, one});
  EXPECT_EQ(all.dim(), 2u);
  EXPECT_EQ(all, FpSubspace::whole(K));
  EXPECT_EQ(indices(all.elements()).size(), 4u);

  EXPECT_EQ(FpSubspace::from_generators(K, std::vector{K.zero()}).dim(), 0u);
  EXPECT_THROW(FpSubspace::from_generators(K, std::vector{gf16().one()}), FieldMismatch);
}

TEST(FpSubspace, EnumerationCountsMatchGaussianBinomials) {
  for (auto [p, k] : {std::pair{2u, 4u}, {3u, 4u}, {2u, 3u}, {5u, 2u}}) {
    const FiniteField F(p, k);
    const auto subspaces = enumerate_subspaces(F, k);
    std::vector<std::uint64_t> by_dim(k + 1, 0);
    for (const auto& s : subspaces) {
      ++by_dim[s.dim()];
      // Closed under addition and F_p-scaling, with exactly p^dim elements.
      const auto elems = s.elements();
      ASSERT_EQ(indices(elems).size(), s.size());
      for (const auto& x : elems) {
        ASSERT_TRUE(s.contains(x * F.constant(p - 1)));
        for (const auto& y : elems) ASSERT_TRUE(s.contains(x + y));
      }
    }
    for (std::uint32_t d = 0; d <= k; ++d) EXPECT_EQ(by_dim[d], gaussian_binomial(p, k, d)) << p << "^" << k;
  }
}

TEST(FpSubspace, EqualityIsCanonical) {
  const auto K = FiniteField(3, 3);
  const Element g = K.generator();
  const auto a = FpSubspace::from_generators(K, std::vector{g, K.one()});
  const auto b = FpSubspace::from_generators(K, std::vector{g + K.one(), g - K.one(), K.zero()});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.basis(), b.basis());
}

TEST(Complement, Examples) {
  const auto K = gf4();
  const auto H = FpSubspace::whole(K);
  const auto G = FpSubspace::prime_field(K);
  const auto C0 = complement(G, H);
  EXPECT_EQ(C0, FpSubspace::line(omega()));
  EXPECT_EQ(complement(H, H).dim(), 0u);
  EXPECT_EQ(complement(FpSubspace(K), H), H);
  EXPECT_THROW(complement(H, G), InvalidArgument);
}

TEST(Complement, IsAComplementEverywhere) {
  const FiniteField F(2, 4);
  const auto subspaces = enumerate_subspaces(F, 4);
  for (const auto& H : subspaces) {
    for (const auto& G : subspaces) {
      if (!H.contains(G)) continue;
      const auto C0 = complement(G, H);
      ASSERT_EQ(C0.intersect(G).dim(), 0u);
      ASSERT_EQ(C0.sum(G), H);
    }
  }
}

TEST(SubgroupPolynomial, Examples) {
  for (auto [p, k] : {std::pair{2u, 2u}, {3u, 2u}, {5u, 1u}}) {
    const FiniteField F(p, k);
    EXPECT_EQ(f_of_subgroup(FpSubspace::prime_field(F)), AdditivePolynomial::artin_schreier(F));
    EXPECT_EQ(f_of_subgroup(FpSubspace(F)), AdditivePolynomial::identity(F));
  }
  const auto K = gf4();
  EXPECT_EQ(f_of_subgroup(FpSubspace::line(omega())), poly(K, {omega(), K.one()}));
  EXPECT_EQ(f_of_subgroup(FpSubspace::line(omega())).to_string(), "x^2 + [0,1]*x");
}

TEST(SubgroupPolynomial, BoundIsEnforced) {
  const FiniteField big(2, 13);
  EXPECT_THROW(f_of_subgroup(FpSubspace::whole(big)), BoundExceeded);
}

TEST(SubgroupPolynomial, KernelExactnessAndSeparability) {
  for (auto [p, k] : {std::pair{2u, 3u}, {2u, 4u}, {3u, 2u}, {3u, 3u}, {5u, 2u}}) {
    const FiniteField F(p, k);
    const auto id = gf::Embedding::identity(F);
    for (const auto& G : enumerate_subspaces(F, k)) {
      const auto f = f_of_subgroup(G);
      EXPECT_TRUE(f.is_monic());
      EXPECT_EQ(f.p_degree(), G.dim());
      EXPECT_FALSE(f.coeffs().front().is_zero());
      EXPECT_EQ(kernel_in(f, id), G);
    }
  }
}

TEST(Twist, Examples) {
  const auto K = gf4();
  EXPECT_EQ(twist_of_line(K.one()), AdditivePolynomial::artin_schreier(K));
  EXPECT_EQ(twist_of_line(omega()), poly(K, {omega(), K.one()}));
  const FiniteField F3(3, 1);
  // x^3 + 2x, which is x^3 - x over F_3.
  EXPECT_EQ(twist_of_line(F3.constant(2)), poly(F3, {F3.constant(2), F3.one()}));
  EXPECT_EQ(twist_of_line(F3.constant(2)), AdditivePolynomial::artin_schreier(F3));
  EXPECT_THROW(twist_of_line(K.zero()), InvalidArgument);
}

TEST(Twist, MatchesSubgroupPolynomialOfTheLine) {
  for (auto [p, k] : {std::pair{2u, 8u}, {3u, 5u}, {5u, 3u}, {7u, 2u}}) {
    const FiniteField F(p, k);
    for (std::uint32_t i = 1; i < F.order(); ++i) {
      const Element b = F.element(i);
      ASSERT_EQ(twist_of_line(b), f_of_subgroup(FpSubspace::line(b))) << b.to_string();
    }
  }
}

TEST(Eval, Examples) {
  const auto K = gf4();
  EXPECT_EQ(AdditivePolynomial::artin_schreier(K)(omega()), K.one());
  const auto L = gf16();
  const auto e = gf::build_embedding(K, L);
  const Element alpha = testing::gf16_alpha(e);
  const auto f = poly(K, {K.one(), K.zero(), K.one()});  // x^4 + x
  EXPECT_EQ(f.eval(alpha, e), L.one());
  EXPECT_EQ(f.eval(L.zero(), e), L.zero());
  EXPECT_THROW(f(alpha), FieldMismatch);
}

TEST(Eval, AdditivityExhaustive) {
  const auto K = gf4();
  const auto L = FiniteField(2, 8);
  const auto e = gf::build_embedding(K, L);
  const auto f = compose(twist_of_line(omega()), AdditivePolynomial::artin_schreier(K));
  for (const auto& x : L.elements()) {
    for (const auto& y : L.elements()) ASSERT_EQ(f.eval(x + y, e), f.eval(x, e) + f.eval(y, e));
  }
}

TEST(Eval, AdditivitySampled) {
  const FiniteField F(3, 7);  // 2187 elements
  const auto f = f_of_subgroup(FpSubspace::from_generators(F, std::vector{F.one(), F.generator()}));
  std::mt19937_64 rng(7);
  for (int i = 0; i < 10000; ++i) {
    const Element x = F.element(rng() % F.order());
    const Element y = F.element(rng() % F.order());
    ASSERT_EQ(f(x + y), f(x) + f(y));
  }
}

TEST(Compose, Examples) {
  const auto K = gf4();
  const auto wp = AdditivePolynomial::artin_schreier(K);
  EXPECT_EQ(compose(wp, wp), poly(K, {K.one(), K.zero(), K.one()}));
  const auto f = f_of_subgroup(FpSubspace::line(omega()));
  EXPECT_EQ(compose(f, AdditivePolynomial::identity(K)), f);
  EXPECT_EQ(compose(AdditivePolynomial::identity(K), f), f);
  EXPECT_THROW(compose(f, AdditivePolynomial::identity(gf16())), FieldMismatch);
}

TEST(Compose, AgreesWithPointwiseComposition) {
  const FiniteField F(3, 3);
  const auto f = f_of_subgroup(FpSubspace::line(F.generator()));
  const auto g = compose(twist_of_line(F.constant(2) * F.generator()), f);
  const auto h = compose(g, f);
  for (const auto& x : F.elements()) ASSERT_EQ(h(x), g(f(x)));
}

TEST(KernelIn, Examples) {
  const auto K = gf4();
  const auto id = gf::Embedding::identity(K);
  EXPECT_EQ(kernel_in(AdditivePolynomial::artin_schreier(K), id), FpSubspace::prime_field(K));
  EXPECT_EQ(kernel_in(AdditivePolynomial::identity(K), id).dim(), 0u);
  EXPECT_EQ(kernel_in(poly(K, {omega(), K.one()}), id), FpSubspace::line(omega()));
}

TEST(Decompose, Examples) {
  const auto K = gf4();
  const auto H = FpSubspace::whole(K);
  const auto G = FpSubspace::prime_field(K);
  const auto d = decompose(G, H);
  EXPECT_EQ(d.quotient, FpSubspace::prime_field(K));
  EXPECT_EQ(d.f_quotient, AdditivePolynomial::artin_schreier(K));
  EXPECT_EQ(compose(d.f_quotient, f_of_subgroup(G)), f_of_subgroup(H));

  const auto same = decompose(H, H);
  EXPECT_EQ(same.quotient.dim(), 0u);
  EXPECT_EQ(same.f_quotient, AdditivePolynomial::identity(K));

  const auto from_zero = decompose(FpSubspace(K), H);
  EXPECT_EQ(from_zero.quotient, H);
  EXPECT_EQ(from_zero.f_quotient, f_of_subgroup(H));
  EXPECT_THROW(decompose(H, G), InvalidArgument);
}

TEST(ByOne, Examples) {
  const auto K = gf4();
  const auto H = FpSubspace::whole(K);
  EXPECT_EQ(by_one(FpSubspace::prime_field(K), H), K.one());
  const Element w2 = omega() * omega();
  EXPECT_EQ(by_one(FpSubspace::line(omega()), H), w2);
  EXPECT_EQ(compose(twist_of_line(w2), f_of_subgroup(FpSubspace::line(omega()))), f_of_subgroup(H));
  const FiniteField F3(3, 1);
  EXPECT_EQ(by_one(FpSubspace(F3), FpSubspace::prime_field(F3)), F3.one());
  EXPECT_THROW(by_one(FpSubspace(K), H), InvalidArgument);
}

TEST(EvalSubgroupPolynomial, MatchesExpandedPolynomial) {
  const FiniteField F(2, 6);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Element> gens;
    for (int i = 0; i < 4; ++i) gens.push_back(F.element(rng() % F.order()));
    const auto f = f_of_subgroup(FpSubspace::from_generators(F, gens));
    for (const auto& x : F.elements()) ASSERT_EQ(eval_subgroup_polynomial(gens, x), f(x));
  }
}

TEST(Descend, Examples) {
  const auto K = gf4();
  const auto L = gf16();
  const auto e = gf::build_embedding(K, L);
  const Element alpha = testing::gf16_alpha(e);
  const std::vector groups{FpSubspace::prime_field(K), FpSubspace::line(omega())};
  // wp(alpha) = omega lies in K, but alpha^2 + omega alpha does not.
  EXPECT_TRUE(e.contains(f_of_subgroup(groups[0]).eval(alpha, e)));
  EXPECT_FALSE(e.contains(f_of_subgroup(groups[1]).eval(alpha, e)));
  EXPECT_EQ(descend(groups, alpha, e), DescendOutcome::kValueOutsideSubfield);
  EXPECT_EQ(descend(groups, e.apply(omega()), e), DescendOutcome::kInSubfield);

  const std::vector zero{FpSubspace(K)};
  EXPECT_EQ(descend(zero, alpha, e), DescendOutcome::kValueOutsideSubfield);
  EXPECT_EQ(descend(zero, e.apply(K.one()), e), DescendOutcome::kInSubfield);

  const std::vector overlapping{FpSubspace::prime_field(K), FpSubspace::whole(K)};
  EXPECT_EQ(descend(overlapping, alpha, e), DescendOutcome::kIntersectionNonzero);
  EXPECT_STREQ(to_string(DescendOutcome::kInSubfield), "in_subfield");
}

}  // namespace
}  // namespace aslab::addpoly
