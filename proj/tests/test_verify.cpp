#include <gtest/gtest.h>

#include <algorithm>
#include <set>

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

// Counts antichains of monomials of degree 1..D in k[x,y] by checking every
// subset for divisibility pairs.
std::size_t count_antichains(std::uint64_t max_degree) {
  std::vector<Monomial> mons;
  for (std::uint64_t d = 1; d <= max_degree; ++d)
    for (const auto& m : monomials_of_degree(2, d)) mons.push_back(m);
  const std::size_t n = mons.size();
  std::vector<std::uint32_t> comparable(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && (mons[a].divides(mons[b]) || mons[b].divides(mons[a]))) comparable[a] |= 1u << b;
  std::size_t count = 0;
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    bool ok = true;
    for (std::uint32_t rest = s; rest && ok; rest &= rest - 1)
      ok = (comparable[__builtin_ctz(rest)] & s) == 0;
    count += ok;
  }
  return count;
}

}  // namespace

TEST(Oracle, AgreesWithIdealOperations) {
  const auto a = I(xy, "x^2, y");
  const auto b = I(xy, "x, y^2");
  EXPECT_EQ(oracle_op(OracleKind::Intersect, a, b, 6), I(xy, "x^2, x*y, y^2"));
  EXPECT_EQ(oracle_op(OracleKind::Sum, a, b, 6), I(xy, "x, y"));
  EXPECT_EQ(oracle_op(OracleKind::Colon, I(xy, "x^3, x*y, y^3"), T(xy, "x*y"), 6), MonomialIdeal::unit(xy));
  EXPECT_EQ(oracle_op(OracleKind::Colon, I(xy, "x^3, x^2*y^2"), T(xy, "y^4"), 6), I(xy, "x^2"));
  EXPECT_EQ(oracle_op(OracleKind::Colon, I(xy, "x^3, x^2*y^2"), I(xy, "x, y"), 6), I(xy, "x^3, x^2*y"));
  EXPECT_EQ(oracle_op(OracleKind::Component, I(xy, "x^2, y^3"), std::uint64_t{3}, 6),
            I(xy, "x^3, x^2*y, y^3"));

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto i = random_ideal(2 + seed % 2, 4, 4, 2 * seed);
    const auto j = random_ideal(2 + seed % 2, 4, 4, 2 * seed + 1);
    ASSERT_EQ(oracle_op(OracleKind::Intersect, i, j, 9), intersect(i, j));
    ASSERT_EQ(oracle_op(OracleKind::Sum, i, j, 9), sum(i, j));
    ASSERT_EQ(oracle_op(OracleKind::Colon, i, j, 9), colon(i, j));
    ASSERT_EQ(oracle_op(OracleKind::Component, i, std::uint64_t{3}, 9), component(i, 3));
  }
}

TEST(Oracle, RaisesWhenTheBoundIsTooSmall) {
  try {
    oracle_op(OracleKind::Intersect, I(xy, "x^3"), I(xy, "y^3"), 5);
    FAIL() << "expected OracleBound";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OracleBound);
  }
  EXPECT_NO_THROW(oracle_op(OracleKind::Intersect, I(xy, "x^3"), I(xy, "y^3"), 6));
}

TEST(Enumeration, CountsMatchBruteForce) {
  const std::vector<std::size_t> known{3, 12, 40, 130, 427};
  for (std::uint64_t d = 1; d <= 5; ++d) {
    const auto ideals = enumerate_ideals_dim2(d);
    EXPECT_EQ(ideals.size(), count_antichains(d)) << "D=" << d;
    EXPECT_EQ(ideals.size(), known[d - 1]);
    std::set<std::vector<std::string>> seen;
    for (const auto& i : ideals) {
      EXPECT_TRUE(seen.insert(generator_strings(i)).second) << to_string(i);
      EXPECT_LE(max_generator_degree(i), d);
      EXPECT_FALSE(i.is_unit());
    }
  }
  std::size_t visited = 0;
  for_each_ideal_dim2(4, [&](const MonomialIdeal&) { ++visited; });
  EXPECT_EQ(visited, 130u);
}

TEST(RandomIdeal, DeterministicAndWithinBounds) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t arity = 1 + seed % 4;
    const auto i = random_ideal(arity, 4, 6, seed);
    ASSERT_EQ(i, random_ideal(arity, 4, 6, seed));
    ASSERT_EQ(i.arity(), arity);
    ASSERT_GE(i.mu(), 1u);
    ASSERT_LE(i.mu(), 6u);
    ASSERT_LE(max_generator_degree(i), 4u);
    ASSERT_GE(order(i), 1u);
    const auto p = random_m_primary(arity, 4, 6, seed);
    ASSERT_EQ(p, random_m_primary(arity, 4, 6, seed));
    ASSERT_TRUE(stats(p).is_m_primary);
    ASSERT_LE(max_generator_degree(p), 4u);
  }
  std::set<std::vector<std::string>> distinct;
  for (std::uint64_t seed = 0; seed < 50; ++seed) distinct.insert(generator_strings(random_ideal(3, 4, 6, seed)));
  EXPECT_GT(distinct.size(), 40u);
}

TEST(Campaign, RegistryAndErrors) {
  const auto& ids = campaign_ids();
  for (const char* id : {"full-sum", "order-gap", "order-length", "linear-quotients", "full-mfull-cwl",
                         "betti-oracles", "scaled-intersection", "distributivity", "reg-cwl-sum",
                         "reg-colon-degree", "reg-primary-intersection", "reg-nonprincipal-intersection",
                         "fullset-assembly"})
    EXPECT_NE(std::find(ids.begin(), ids.end(), id), ids.end()) << id;
  EXPECT_THROW(run_campaign("no-such-campaign"), Error);
  EXPECT_EQ(default_params("full-sum").max_gen_degree, 4u);
  EXPECT_EQ(default_params("linear-quotients").max_gen_degree, 6u);
}

TEST(Campaign, DeterministicAcrossWorkerCounts) {
  CampaignParams p;
  p.count = 60;
  p.seed = 5;
  p.workers = 1;
  const auto a = run_campaign("scaled-intersection", p);
  p.workers = 4;
  const auto b = run_campaign("scaled-intersection", p);
  EXPECT_TRUE(a.same_outcome(b));
  EXPECT_TRUE(a.passed());
  EXPECT_EQ(a.checked, 60u);

  CampaignParams e;
  e.max_gen_degree = 3;
  e.workers = 3;
  const auto c = run_campaign("full-sum", e);
  e.workers = 1;
  EXPECT_TRUE(c.same_outcome(run_campaign("full-sum", e)));
  std::size_t cwl_count = 0;
  for (const auto& i : enumerate_ideals_dim2(3)) cwl_count += componentwise_linear(i);
  EXPECT_EQ(c.population_size, cwl_count * cwl_count);
  EXPECT_TRUE(c.passed());
}
