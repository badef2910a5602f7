#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "cwl/ideal.hpp"
#include "cwl/verdict.hpp"

namespace cwl {

/// A finite set of non-unit squarefree monomials. It is a *full set* when
/// it is lcm-closed and every divisibility pair f | g is joined by a full
/// path f = g_1, g_2 = z_2 g_1, ..., g_l = g inside the set (each z_j a
/// variable); `is_full` decides that.
class SquarefreeSet {
 public:
  /// Throws InvalidArgument for unit or non-squarefree elements.
  SquarefreeSet(Ring ring, std::vector<Monomial> elements);

  const Ring& ring() const noexcept { return ring_; }
  const std::vector<Monomial>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool contains(const Monomial& m) const;

  friend bool operator==(const SquarefreeSet&, const SquarefreeSet&) = default;

 private:
  Ring ring_;
  std::vector<Monomial> elements_;  // canonical order, no duplicates
};

/// f -> I_f.
using Assignment = std::map<Monomial, MonomialIdeal, CanonicalLess>;
/// f -> a_f, read as I_f = <supp f>^(a_f - deg f).
using PowerAssignment = std::map<Monomial, long long, CanonicalLess>;

Verdict is_full(const SquarefreeSet& set);

/// Smallest lcm-closed superset. Full-path gaps are left alone.
SquarefreeSet lcm_closure(const SquarefreeSet& set);

/// Divisibility pairs (f, g) with no full path between them.
std::vector<std::pair<Monomial, Monomial>> full_path_gaps(const SquarefreeSet& set);

/// Checks that each I_f is componentwise linear, that G(I_f) only involves
/// variables of f (condition 1) and that I_f ⊆ m I_{zf} whenever zf is in
/// the set (condition 2). The derived inclusion I_f ⊆ I_g for f | g is
/// reported as the diagnostic flag "condition_2_prime". Throws
/// InvalidArgument if an element has no assigned ideal.
Verdict validate_assignment(const SquarefreeSet& set, const Assignment& assignment);

/// Sum of f * I_f. Refuses (Precondition) unless validation passes or
/// `force` is set; forced assembly exists to reproduce counterexamples.
MonomialIdeal assemble(const SquarefreeSet& set, const Assignment& assignment,
                       bool force = false);

/// I_f = <supp f>^(a_f - deg f). Throws Precondition on a_f < deg f or on a
/// monotonicity violation f | g, a_f < a_g (the pair is named in the
/// message).
Assignment power_assignment(const SquarefreeSet& set, const PowerAssignment& powers);

MonomialIdeal assemble_powers(const SquarefreeSet& set, const PowerAssignment& powers);

/// For f of minimal degree, compares (sum over g != f of g I_g) ∩ f I_f
/// with n f I_f, n = <z : zf in the set>. Needs at least two elements.
Verdict check_intersection_identity(const SquarefreeSet& set, const Assignment& assignment);

struct PowerInstance {
  SquarefreeSet set;
  PowerAssignment powers;
};

/// A random full set with a monotone power assignment: a few random
/// squarefree seeds, lcm-closed, full paths repaired by inserting
/// intermediate monomials (repeated to a fixpoint), then powers assigned
/// from the top down with a_f >= max(deg f, a_g for multiples g).
/// Deterministic in `seed`.
PowerInstance random_power_instance(std::size_t arity, std::uint64_t seed,
                                    long long max_slack = 2);

}  // namespace cwl
