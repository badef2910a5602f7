#pragma once

#include <cstdint>
#include <optional>

#include "cwl/ideal.hpp"
#include "cwl/verdict.hpp"

namespace cwl {

/// Criteria for a sum I + J of componentwise linear monomial ideals to be
/// componentwise linear. Every check runs the direct componentwise
/// linearity test of the sum (or product) as a cross-check and records it
/// in Verdict::direct; sufficient criteria raise Verdict::mismatch if they
/// certify something the direct test rejects.
///
/// Checks that quantify over all t or s >= 0 scan a finite range. The
/// bound actually used is always reported in Verdict::bounds; a failure
/// inside the range is definitive, a clean scan is reported as true.

/// I, J with t-linear resolutions: I + J has a t-linear resolution iff
/// reg(I ∩ J) <= t + 1.
Verdict check_lin_plus_lin(const MonomialIdeal& i, const MonomialIdeal& j, long long t);

/// I componentwise linear, J with linear resolution, reg J >= reg I: if
/// reg(I ∩ J) = reg J + 1 the sum is componentwise linear. Otherwise
/// inconclusive.
Verdict check_cwl_plus_linear(const MonomialIdeal& i, const MonomialIdeal& j);

/// I + J is componentwise linear iff reg(I_<t> ∩ J_<t>) <= t + 1 for all t.
/// Default t_max = reg I + reg J.
Verdict check_componentwise_criterion(const MonomialIdeal& i, const MonomialIdeal& j,
                                      std::optional<long long> t_max = std::nullopt);

/// Under I ∩ J ⊆ mI ∩ mJ: I + J is componentwise linear iff I ∩ J is and
/// m^{s+1}I ∩ m^{s+1}J = m^s(I ∩ J) for all s. The one-sided sufficient
/// conditions are evaluated as well (flag "one_sided_sufficient").
/// Default s_max = reg I + reg J + 2.
Verdict check_m_power_criterion(const MonomialIdeal& i, const MonomialIdeal& j,
                                std::optional<long long> s_max = std::nullopt);

/// n J is componentwise linear when n is the monomial prime on
/// `prime_vars` (bit mask) and Supp(n) ∩ Supp(J) = ∅. With overlapping
/// supports the verdict is not applicable but the direct check is still
/// reported.
Verdict check_prime_product(std::uint32_t prime_vars, const MonomialIdeal& j);

/// I ∩ J ⊆ mI and I ∩ J = nJ for a monomial prime n disjoint from Supp(J)
/// imply I + J componentwise linear. The prime is searched among subsets of
/// variables outside Supp(J), smallest first; the one found is reported.
Verdict check_nJ_sum(const MonomialIdeal& i, const MonomialIdeal& j);

}  // namespace cwl
