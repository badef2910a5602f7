#include <gtest/gtest.h>

#include <random>

#include "common/oracles.hpp"
#include "common/support.hpp"
#include "cwl/verify.hpp"

using namespace cwl;
using cwl::testing::cwl_by_lattice;
using cwl::testing::reg_by_lattice;

namespace {

constexpr int kInstances = 500;

struct Draw {
  std::mt19937_64 rng;
  explicit Draw(std::uint64_t seed) : rng(seed * 0x9e3779b97f4a7c15ULL + 17) {}

  std::size_t arity(std::size_t lo, std::size_t hi) { return lo + rng() % (hi - lo + 1); }
  MonomialIdeal ideal(std::size_t n, std::uint64_t d = 4, std::size_t mu = 5) {
    return random_ideal(n, d, mu, rng());
  }
  MonomialIdeal m_primary(std::size_t n) { return random_m_primary(n, 4, 4, rng()); }
  Monomial monomial(std::size_t n, std::uint64_t max_exp) {
    std::vector<Exponent> e(n);
    for (auto& x : e) x = static_cast<Exponent>(rng() % (max_exp + 1));
    return Monomial(std::span<const Exponent>(e));
  }
};

std::uint64_t lcm_degree(std::initializer_list<MonomialIdeal> ideals) {
  Monomial l(std::data(ideals)->arity());
  for (const auto& i : ideals)
    for (const auto& g : i.gens()) l = lcm(l, g);
  return l.degree();
}

}  // namespace

TEST(Properties, IntersectionOfScaledIdeals) {
  for (int k = 0; k < kInstances; ++k) {
    Draw d(k);
    const auto n = d.arity(2, 4);
    const auto i = d.ideal(n), j = d.ideal(n);
    const auto f = d.monomial(n, 2), g = d.monomial(n, 2);
    const auto l = lcm(f, g);
    const auto fi = scale(f, i), gj = scale(g, j);
    const auto lhs = oracle_op(OracleKind::Intersect, fi, gj, lcm_degree({fi, gj}));
    const auto rhs = scale(l, intersect(colon(i, l / f), colon(j, l / g)));
    ASSERT_EQ(lhs, rhs) << "instance " << k;
  }
}

TEST(Properties, IntersectionDistributesOverSum) {
  for (int k = 0; k < kInstances; ++k) {
    Draw d(1000 + k);
    const auto n = d.arity(2, 4);
    const auto a = d.ideal(n), b = d.ideal(n), c = d.ideal(n);
    const auto lhs = intersect(sum(a, b), c);
    ASSERT_EQ(lhs, sum(intersect(a, c), intersect(b, c))) << "instance " << k;
    ASSERT_EQ(lhs, oracle_op(OracleKind::Intersect, sum(a, b), c, lcm_degree({a, b, c})));
  }
}

TEST(Properties, ColonIsAssociative) {
  for (int k = 0; k < kInstances; ++k) {
    Draw d(2000 + k);
    const auto n = d.arity(2, 4);
    const auto i = d.ideal(n);
    const auto f = d.monomial(n, 2), g = d.monomial(n, 2);
    const auto joint = colon(i, f * g);
    ASSERT_EQ(colon(colon(i, f), g), joint) << "instance " << k;
    ASSERT_EQ(oracle_op(OracleKind::Colon, i, f * g, lcm_degree({i})), joint);
  }
}

TEST(Properties, ComponentInvariants) {
  for (int k = 0; k < kInstances; ++k) {
    Draw d(3000 + k);
    const auto n = d.arity(1, 4);
    const auto i = d.ideal(n);
    const auto m = MonomialIdeal::maximal(i.ring());
    const std::uint64_t deg = 1 + d.rng() % 6;
    const auto c = component(i, deg);
    ASSERT_TRUE(i.contains(c));
    for (const auto& g : c.gens()) ASSERT_EQ(g.degree(), deg);
    for (const auto& mono : monomials_of_degree(n, deg)) ASSERT_EQ(c.contains(mono), i.contains(mono));
    ASSERT_EQ(graded_dimension(c, deg), graded_dimension(i, deg));
    if (deg >= max_generator_degree(i)) ASSERT_EQ(component(i, deg + 1), product(m, c));
  }
}

TEST(Properties, OrdersOfSumsIntersectionsAndProducts) {
  for (int k = 0; k < kInstances; ++k) {
    Draw d(4000 + k);
    const auto n = d.arity(1, 4);
    const auto i = d.ideal(n), j = d.ideal(n);
    ASSERT_EQ(order(sum(i, j)), std::min(order(i), order(j)));
    ASSERT_GE(order(intersect(i, j)), std::max(order(i), order(j)));
    ASSERT_LE(order(intersect(i, j)), order(i) + order(j));
    ASSERT_EQ(order(product(i, j)), order(i) + order(j));
  }
}

TEST(Properties, BettiRoutesAgree) {
  for (int k = 0; k < kInstances; ++k) {
    Draw d(5000 + k);
    const auto n = d.arity(2, 3);
    const auto i = d.ideal(n, 4, 5);
    const auto t = betti(i);
    ASSERT_EQ(t, betti_oracle_lcm_lattice(i)) << to_string(i);
    if (n == 2) ASSERT_EQ(t, betti_oracle_dim2(i)) << to_string(i);
  }
}

TEST(Properties, RegularityOfIntersectionWhenSumIsComponentwiseLinear) {
  int used = 0;
  for (int k = 0; used < kInstances; ++k) {
    ASSERT_LT(k, 200 * kInstances);
    Draw d(6000 + k);
    const auto n = d.arity(2, 3);
    const auto i = d.ideal(n, 3, 4), j = d.ideal(n, 3, 4);
    if (!cwl_by_lattice(sum(i, j))) continue;
    ++used;
    ASSERT_LE(reg_by_lattice(intersect(i, j)), std::max(reg_by_lattice(i), reg_by_lattice(j)) + 1)
        << to_string(i) << " / " << to_string(j);
  }
}

TEST(Properties, ColonRegularityAgainstDegreeForPrimaryIdeals) {
  for (int k = 0; k < kInstances; ++k) {
    Draw d(7000 + k);
    const auto n = d.arity(2, 3);
    const auto i = d.m_primary(n);
    const long long reg = reg_by_lattice(i);
    const auto f = d.monomial(n, static_cast<std::uint64_t>(reg) / n + 2);
    const auto q = colon(i, f);
    const long long lhs = (q.is_unit() ? 0 : reg_by_lattice(q)) + static_cast<long long>(f.degree());
    ASSERT_EQ(lhs <= reg, static_cast<long long>(f.degree()) <= reg)
        << to_string(i) << " f degree " << f.degree();
  }
}

TEST(Properties, RegularityOfIntersectionOfPrimaryIdeals) {
  for (int k = 0; k < kInstances; ++k) {
    Draw d(8000 + k);
    const auto n = d.arity(2, 3);
    const auto i = d.m_primary(n), j = d.m_primary(n);
    ASSERT_LE(reg_by_lattice(intersect(i, j)), std::max(reg_by_lattice(i), reg_by_lattice(j)));
  }
}

TEST(Properties, NonPrincipalIntersectionInTwoVariables) {
  int used = 0;
  for (int k = 0; used < kInstances; ++k) {
    ASSERT_LT(k, 200 * kInstances);
    Draw d(9000 + k);
    const auto i = scale(d.monomial(2, 2), d.ideal(2));
    const auto j = scale(d.monomial(2, 2), d.ideal(2));
    const auto meet = intersect(i, j);
    if (meet.is_principal()) continue;
    ++used;
    ASSERT_LE(reg_by_lattice(meet), std::max(reg_by_lattice(i), reg_by_lattice(j)));
  }
}
