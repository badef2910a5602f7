#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "cwl/ideal.hpp"

namespace cwl {

enum class OracleKind { Intersect, Colon, Component, Sum };

const char* to_string(OracleKind kind);

/// Second operand: an ideal (intersect, sum, colon), a monomial (colon) or
/// a degree (component).
using OracleOperand = std::variant<MonomialIdeal, Monomial, std::uint64_t>;

/// Recomputes an ideal operation from membership alone: every monomial of
/// degree <= d_max is tested against the defining predicate and the minimal
/// generators are the members none of whose one-variable divisors is a
/// member. Degree d_max + 1 is probed as well; a minimal generator there
/// means d_max was too small and raises OracleBound.
MonomialIdeal oracle_op(OracleKind kind, const MonomialIdeal& ideal, const OracleOperand& operand,
                        std::uint64_t d_max);

/// Calls `visit` once for every monomial ideal of k[x,y] other than 0 and
/// (1) whose minimal generators all have degree <= max_gen_degree. Ideals
/// come out as staircases: exponents of x strictly decreasing, of y strictly
/// increasing.
void for_each_ideal_dim2(std::uint64_t max_gen_degree,
                         const std::function<void(const MonomialIdeal&)>& visit);
std::vector<MonomialIdeal> enumerate_ideals_dim2(std::uint64_t max_gen_degree);

/// Draws k uniformly from [1, mu_target], then k monomials uniformly from
/// all monomials of degree 1..max_gen_degree, and minimalizes. The result
/// has between 1 and mu_target generators.
MonomialIdeal random_ideal(std::size_t arity, std::uint64_t max_gen_degree,
                           std::size_t mu_target, std::uint64_t seed);

/// Adds x_i^{a_i} for every variable so the result is m-primary; each a_i
/// is drawn from [1, max_gen_degree].
MonomialIdeal random_m_primary(std::size_t arity, std::uint64_t max_gen_degree,
                               std::size_t mu_target, std::uint64_t seed);

struct CampaignParams {
  /// Degree bound for enumeration (arity 2) or sampling.
  std::uint64_t max_gen_degree = 0;
  /// Number of sampled instances; ignored by exhaustive campaigns.
  std::size_t count = 0;
  std::uint64_t seed = 1;
  std::size_t min_arity = 0;
  std::size_t max_arity = 0;
  std::size_t mu_max = 0;
  /// 0 picks the hardware concurrency.
  std::size_t workers = 0;
};

struct CampaignReport {
  std::string campaign;
  std::string population;
  std::size_t min_arity = 0;
  std::size_t max_arity = 0;
  std::uint64_t max_gen_degree = 0;
  std::size_t population_size = 0;
  std::size_t checked = 0;
  std::vector<std::string> violations;
  double wall_seconds = 0.0;
  std::map<std::string, long long> bounds;

  bool passed() const noexcept { return violations.empty(); }
  /// Equality ignoring wall time.
  bool same_outcome(const CampaignReport& other) const;
};

/// Campaign ids accepted by run_campaign.
const std::vector<std::string>& campaign_ids();

/// Parameters used for fields left at zero (enumerations run in arity 2).
CampaignParams default_params(const std::string& id);

/// Runs one validation sweep. Every instance is checked; violations are
/// collected (in population order) and never stop the run. Unknown ids
/// raise InvalidArgument.
CampaignReport run_campaign(const std::string& id, CampaignParams params = {});

}  // namespace cwl
