#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cwl/ideal.hpp"
#include "cwl/verdict.hpp"

namespace cwl {

struct BettiEntry {
  unsigned homological_degree = 0;
  Monomial multidegree;
  std::uint64_t rank = 0;

  friend bool operator==(const BettiEntry&, const BettiEntry&) = default;
};

/// Multigraded Betti numbers beta_{i,a}(I) of a monomial ideal I (not of
/// S/I): beta_0 sits at the minimal generators. Only nonzero ranks are
/// stored, sorted by homological degree and then canonically by multidegree.
class BettiTable {
 public:
  BettiTable(MonomialIdeal subject, std::vector<BettiEntry> entries);

  const MonomialIdeal& subject() const noexcept { return subject_; }
  const std::vector<BettiEntry>& entries() const noexcept { return entries_; }

  std::uint64_t rank(unsigned i, const Monomial& a) const;
  /// Graded Betti number beta_{i,j}: sum of ranks with deg(a) = j.
  std::uint64_t graded(unsigned i, std::uint64_t j) const;
  /// Total Betti number beta_i.
  std::uint64_t total(unsigned i) const;
  unsigned projective_dimension() const;

  friend bool operator==(const BettiTable& a, const BettiTable& b) {
    return a.subject_ == b.subject_ && a.entries_ == b.entries_;
  }

 private:
  MonomialIdeal subject_;
  std::vector<BettiEntry> entries_;
};

struct RegularityReport {
  long long reg = 0;
  unsigned pd = 0;
  unsigned witness_homological_degree = 0;
  Monomial witness_multidegree;
};

/// Elements of the lcm lattice of G(I) other than the bottom element 1,
/// canonically sorted.
std::vector<Monomial> lcm_lattice(const MonomialIdeal& ideal);

/// Upper Koszul route: beta_{i,a}(I) = dim H~_{i-1}(K^a(I)) where K^a(I) is
/// the complex of squarefree b with x^(a-b) in I, over every a in the lcm
/// lattice. Throws for the zero and unit ideals.
BettiTable betti(const MonomialIdeal& ideal);

/// Independent route through the lcm lattice L: beta_{i,m}(I) is
/// dim H~_{i-1} of the order complex of the open interval (1, m) in L.
/// Beat points are stripped from each interval first, which preserves its
/// homotopy type. Meant for small ideals (mu up to about 12).
BettiTable betti_oracle_lcm_lattice(const MonomialIdeal& ideal);

/// Two variables only: generators sorted by decreasing x-exponent, with
/// syzygies exactly at the lcms of neighbours.
BettiTable betti_oracle_dim2(const MonomialIdeal& ideal);

RegularityReport regularity(const MonomialIdeal& ideal);
RegularityReport regularity(const BettiTable& table);

/// True iff I is generated in one degree d and reg I = d.
bool has_linear_resolution(const MonomialIdeal& ideal);

/// Checks that I_<j> has a linear resolution for every j in [o(I), reg I];
/// beyond reg I every component is linear. The first failing degree is
/// reported as a witness.
Verdict is_componentwise_linear(const MonomialIdeal& ideal);

/// Boolean shorthand for is_componentwise_linear. The zero and unit ideals
/// count as componentwise linear here (their resolutions are trivially
/// linear), which the full-set machinery relies on.
bool componentwise_linear(const MonomialIdeal& ideal);

}  // namespace cwl
