#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "cwl/ideal.hpp"
#include "cwl/verdict.hpp"

namespace cwl {

/// Dimensions of the graded pieces of a graded subspace of the ring, for
/// degrees 0..d_max.
struct GradedDims {
  std::vector<std::uint64_t> dims;
  std::uint64_t d_max = 0;

  std::uint64_t at(std::uint64_t d) const { return dims.at(d); }
  friend bool operator==(const GradedDims&, const GradedDims&) = default;
};

/// Graded dimensions of (I : z) where z is the sum of all variables.
///
/// A monomial ideal is fixed by the torus, so every linear form with all
/// coefficients nonzero gives the same dimensions as z; those forms are
/// dense, so z realises the general linear form. In degree d, (I : z)_d is
/// the kernel of multiplication by z from S_d to (S/I)_{d+1}, whose rank is
/// computed exactly over Q.
GradedDims graded_colon_linear(const MonomialIdeal& ideal, std::uint64_t d_max);

/// dim_k I_d for d = 0..d_max.
GradedDims graded_dims(const MonomialIdeal& ideal, std::uint64_t d_max);

/// Full (I : z = I : m) and m-full (mI : z = I), compared degree by degree
/// up to d_max (default reg I + 2; both colons agree with I from degree
/// reg I + 1 on). In two variables both must agree with componentwise
/// linearity; disagreement sets `mismatch`. Flags: "full", "m_full",
/// "componentwise_linear". The conclusion is the fullness verdict.
Verdict fullness_checks(const MonomialIdeal& ideal,
                        std::optional<std::uint64_t> d_max = std::nullopt);

/// o(I ∩ J) = max{o(I), o(J)} + length((I+J):z / (I:m + J:m)) for full I, J
/// in two variables. Both sides are computed; the conclusion is whether they
/// agree. The length is summed over degrees up to
/// max(reg I + reg J + 2, reg(I+J) + 1), past which the two ideals coincide.
Verdict order_length_formula(const MonomialIdeal& i, const MonomialIdeal& j);

/// Both sides of the order/length formula without checking fullness.
struct OrderLengthSides {
  long long meet_order = 0;
  long long max_order = 0;
  long long length = 0;
  long long d_max = 0;

  bool equal() const noexcept { return meet_order == max_order + length; }
};
OrderLengthSides order_length_sides(const MonomialIdeal& i, const MonomialIdeal& j);

/// For componentwise linear I, J in k[x,y]: I + J is componentwise linear
/// iff o(I ∩ J) = max{o(I), o(J)}, or o(I ∩ J) = max + 1 and
/// (I+J):m != I:m + J:m. Also checks 0 <= o(I ∩ J) - max <= 1 whenever the
/// sum is componentwise linear (flag "order_gap").
Verdict full_sum_verdict(const MonomialIdeal& i, const MonomialIdeal& j);

/// For full I, J with mu(I+J) = mu(I) + mu(J): I + J is full iff
/// o(I ∩ J) <= max{o(I), o(J)} + 1.
Verdict mu_additive_verdict(const MonomialIdeal& i, const MonomialIdeal& j);

/// For full I and a monomial f with deg f >= o(I), f not in I and
/// mu(I + (f)) = mu(I) + 1: I + (f) is full iff I : f contains a variable,
/// and then I : f is generated by that single variable. Flags:
/// "colon_has_variable", "sum_full", "colon_principal_variable".
Verdict linear_colon_tests(const MonomialIdeal& ideal, const Monomial& f);

struct OrderingFailure {
  /// 1-based position that could not be filled.
  std::size_t step = 0;
  std::vector<Monomial> remaining;
  /// Result of the direct test on the input, separating "not componentwise
  /// linear" from an internal failure.
  bool input_componentwise_linear = false;
};

/// A generator ordering f_1..f_s with nondecreasing degrees such that each
/// colon (f_1..f_j) : f_{j+1} is generated by the variable z_j.
struct OrderingCertificate {
  MonomialIdeal ideal;
  std::vector<Monomial> order;
  /// colon_variables[j] is the index of z_{j+1}.
  std::vector<std::size_t> colon_variables;
  /// prefix_cwl[j]: (f_1..f_{j+1}) passed the direct componentwise test.
  std::vector<bool> prefix_cwl;
  std::optional<OrderingFailure> failure;

  bool ok() const noexcept { return !failure.has_value(); }
};

/// Builds the ordering greedily: f_1 is a generator of least degree, then
/// repeatedly a generator of least remaining degree whose product with some
/// variable lies in the current prefix ideal. Ties go to the earliest
/// generator in canonical order. Two variables only.
OrderingCertificate cwl_ordering(const MonomialIdeal& ideal);

/// Independently re-checks a certificate: it lists G(I) exactly once, the
/// degrees are nondecreasing, every colon is the recorded single variable
/// and every prefix is componentwise linear.
Verdict validate_certificate(const OrderingCertificate& certificate);

/// I = f I', J = g J' (factor_gcd), lcm(f, g) = f f' = g g'. Under
/// reg(I ∩ J) = max{reg I, reg J} + 1 (which forces I ∩ J principal), I + J
/// is componentwise linear iff (m^{s+1}I' : f') ∩ (m^{s+1}J' : g') ⊆ m^s for
/// all s. Default s_max = reg I' + reg J' + 2.
Verdict reg_plus_one_verdict(const MonomialIdeal& i, const MonomialIdeal& j,
                             std::optional<long long> s_max = std::nullopt);

/// The two colon ideals (m^{s+1}I' : f', m^{s+1}J' : g') for a single s.
std::pair<MonomialIdeal, MonomialIdeal> reg_plus_one_colons(const MonomialIdeal& i,
                                                            const MonomialIdeal& j, long long s);

}  // namespace cwl
