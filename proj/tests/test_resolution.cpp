#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "common/support.hpp"
#include "cwl/error.hpp"
#include "cwl/resolution.hpp"
#include "cwl/verify.hpp"

using namespace cwl;
using cwl::testing::I;
using cwl::testing::ring_of;
using cwl::testing::T;

namespace {

const Ring xy = ring_of("x y");
const Ring xyz = ring_of("x y z");
const Ring ab = ring_of("a b");
const Ring abcd = ring_of("a b c d");

MonomialIdeal permute(const MonomialIdeal& ideal, const std::vector<std::size_t>& perm) {
  std::vector<Monomial> gens;
  for (const auto& g : ideal.gens()) {
    std::vector<Exponent> e(ideal.arity());
    for (std::size_t i = 0; i < e.size(); ++i) e[perm[i]] = g[i];
    gens.push_back(Monomial(std::span<const Exponent>(e)));
  }
  return MonomialIdeal(ideal.ring(), std::move(gens));
}

}  // namespace

TEST(Betti, PrincipalIdealIsFree) {
  const auto t = betti(I(xy, "x^3*y^4"));
  ASSERT_EQ(t.entries().size(), 1u);
  EXPECT_EQ(t.rank(0, T(xy, "x^3*y^4")), 1u);
  EXPECT_EQ(t.projective_dimension(), 0u);
  EXPECT_EQ(regularity(t).reg, 7);
}

TEST(Betti, SquareOfMaximalIdealInThreeVariables) {
  const auto t = betti(power(MonomialIdeal::maximal(xyz), 2));
  EXPECT_EQ(t.graded(0, 2), 6u);
  EXPECT_EQ(t.graded(1, 3), 8u);
  EXPECT_EQ(t.graded(2, 4), 3u);
  EXPECT_EQ(t.total(3), 0u);
}

TEST(Betti, CompleteIntersection) {
  const auto t = betti(I(xy, "x^3, y^3"));
  EXPECT_EQ(t.rank(1, T(xy, "x^3*y^3")), 1u);
  EXPECT_EQ(regularity(t).reg, 5);
  EXPECT_FALSE(has_linear_resolution(I(xy, "x^3, y^3")));
}

TEST(Betti, LinearIdealInFourVariables) {
  const auto j = I(abcd, "a^2*b, a*b*c, b*c*d, c*d^2");
  const auto t = betti(j);
  for (const auto& e : t.entries()) EXPECT_EQ(e.multidegree.degree(), 3u + e.homological_degree);
  EXPECT_EQ(regularity(j).reg, 3);
  EXPECT_EQ(t, betti_oracle_lcm_lattice(j));
}

TEST(Betti, AdjacentLcmsInTwoVariables) {
  const auto i = I(xy, "x^3, x*y, y^3");
  const auto t = betti(i);
  EXPECT_EQ(t.total(1), 2u);
  EXPECT_EQ(t.rank(1, T(xy, "x^3*y")), 1u);
  EXPECT_EQ(t.rank(1, T(xy, "x*y^3")), 1u);
  EXPECT_EQ(t, betti_oracle_lcm_lattice(i));
  EXPECT_EQ(t, betti_oracle_dim2(i));
}

TEST(Betti, OracleRoutesAgreeOnSmallEnumeration) {
  for (const auto& i : enumerate_ideals_dim2(3)) {
    const auto t = betti(i);
    ASSERT_EQ(t, betti_oracle_lcm_lattice(i)) << to_string(i);
    ASSERT_EQ(t, betti_oracle_dim2(i)) << to_string(i);
  }
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto i = random_ideal(3 + seed % 2, 4, 8, seed);
    ASSERT_EQ(betti(i), betti_oracle_lcm_lattice(i)) << to_string(i);
  }
}

TEST(Betti, InvariantUnderVariablePermutation) {
  const auto i = I(xyz, "x^2*y, x*y^2, x*y*z^2, y^2*z");
  std::vector<std::size_t> perm{0, 1, 2};
  const auto reference = betti(i);
  do {
    const auto p = permute(i, perm);
    const auto t = betti(p);
    for (unsigned h = 0; h <= 3; ++h)
      for (std::uint64_t d = 0; d <= 8; ++d) ASSERT_EQ(t.graded(h, d), reference.graded(h, d));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST(Betti, ZeroAndUnitRejected) {
  EXPECT_THROW(betti(MonomialIdeal::zero(xy)), Error);
  EXPECT_THROW(betti(MonomialIdeal::unit(xy)), Error);
  EXPECT_THROW(betti_oracle_dim2(I(xyz, "x")), Error);
}

TEST(Regularity, Examples) {
  EXPECT_EQ(regularity(I(ab, "a*b, a^4, b^4")).reg, 4);
  EXPECT_EQ(regularity(I(ab, "a*b, a^5, b^5")).reg, 5);
  EXPECT_EQ(regularity(I(xy, "y^3, x^4, x^3*y, x^2*y^2")).reg, 4);
  // (x*y*z^2, x*y^2*z) = x*y*z (y, z): linear resolution in degree 4.
  EXPECT_EQ(regularity(I(xyz, "x*y*z^2, x*y^2*z")).reg, 4);
  const auto r = regularity(I(xy, "x^3, y^3"));
  EXPECT_EQ(r.witness_homological_degree, 1u);
  EXPECT_EQ(r.witness_multidegree, T(xy, "x^3*y^3"));
}

TEST(Regularity, AtLeastOrderAndEqualsMaxDegreeWhenComponentwiseLinear) {
  for (const auto& i : enumerate_ideals_dim2(4)) {
    const auto reg = regularity(i).reg;
    EXPECT_GE(reg, static_cast<long long>(order(i)));
    if (componentwise_linear(i))
      EXPECT_EQ(reg, static_cast<long long>(max_generator_degree(i))) << to_string(i);
  }
}

TEST(LinearResolution, Examples) {
  EXPECT_TRUE(has_linear_resolution(I(xyz, "y^2*z, y*z^2")));
  EXPECT_FALSE(has_linear_resolution(I(xy, "x^3, y^3")));
  EXPECT_TRUE(has_linear_resolution(power(MonomialIdeal::maximal(xyz), 3)));
  EXPECT_FALSE(has_linear_resolution(I(xy, "x*y, x^3")));
}

TEST(ComponentwiseLinear, Examples) {
  EXPECT_FALSE(componentwise_linear(I(xy, "x^3, y^3, x^2*y^2")));
  EXPECT_TRUE(componentwise_linear(I(xy, "x^2*y, x*y^2, y^3, x^4")));
  EXPECT_FALSE(componentwise_linear(I(xyz, "x^2*y, x*y^2, y^2*z, y*z^2")));
  EXPECT_TRUE(componentwise_linear(I(xy, "x*y, x^3, y^3")));
  EXPECT_TRUE(componentwise_linear(MonomialIdeal::unit(xy)));
  EXPECT_THROW(is_componentwise_linear(MonomialIdeal::zero(xy)), Error);
}

TEST(ComponentwiseLinear, WitnessReproducesTheFailure) {
  const auto v = is_componentwise_linear(I(xyz, "x^2*y, x*y^2, y^2*z, y*z^2"));
  ASSERT_EQ(v.conclusion, Conclusion::False);
  const auto* degree = v.witness("failing degree");
  const auto* comp = v.witness("component");
  ASSERT_TRUE(degree && comp && degree->degree && comp->ideal);
  EXPECT_EQ(*comp->ideal, component(I(xyz, "x^2*y, x*y^2, y^2*z, y*z^2"),
                                    static_cast<std::uint64_t>(*degree->degree)));
  EXPECT_FALSE(has_linear_resolution(*comp->ideal));
  EXPECT_EQ(v.bounds.at("j_min"), 3);
}

TEST(LcmLattice, Example) {
  const auto l = lcm_lattice(I(xy, "x^3, x*y, y^3"));
  // x^3, x*y, y^3, x^3*y, x*y^3, x^3*y^3
  EXPECT_EQ(l.size(), 6u);
}
