#include "cwl/criteria.hpp"

#include <algorithm>
#include <bit>
#include <vector>

#include "cwl/error.hpp"
#include "cwl/resolution.hpp"

namespace cwl {

namespace {

// reg of a possibly trivial ideal; nullopt stands for the zero ideal
// (no Betti numbers at all), the unit ideal has regularity 0.
std::optional<long long> reg_or_none(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return std::nullopt;
  if (ideal.is_unit()) return 0;
  return regularity(ideal).reg;
}

long long reg_of(const MonomialIdeal& ideal) {
  auto r = reg_or_none(ideal);
  if (!r) throw Error(ErrorCode::ZeroIdeal, "regularity of the zero ideal");
  return *r;
}

bool is_proper_nonzero(const MonomialIdeal& ideal) {
  return !ideal.is_zero() && !ideal.is_unit();
}

Verdict start(const char* name, const MonomialIdeal& i, const MonomialIdeal& j) {
  require_same_ring(i.ring(), j.ring());
  Verdict v;
  v.criterion = name;
  v.applicable = true;
  v.inputs.emplace_back("I", i);
  v.inputs.emplace_back("J", j);
  return v;
}

// For criteria that characterise (iff) rather than merely certify.
void cross_check_iff(Verdict& v, bool direct) {
  v.direct = direct;
  if (v.conclusion == Conclusion::True && !direct) v.mismatch = true;
  if (v.conclusion == Conclusion::False && direct) v.mismatch = true;
}

void cross_check_sufficient(Verdict& v, bool direct) {
  v.direct = direct;
  if (v.conclusion == Conclusion::True && !direct) v.mismatch = true;
}

}  // namespace

Verdict check_lin_plus_lin(const MonomialIdeal& i, const MonomialIdeal& j, long long t) {
  Verdict v = start("lin+lin", i, j);
  v.bounds["t"] = t;
  auto t_linear = [t](const MonomialIdeal& x) {
    return is_proper_nonzero(x) && static_cast<long long>(x.gens().front().degree()) == t &&
           has_linear_resolution(x);
  };
  if (!t_linear(i) || !t_linear(j)) {
    v.reject("I and J must both have a " + std::to_string(t) + "-linear resolution");
    return v;
  }
  const auto meet = intersect(i, j);
  const auto r = reg_of(meet);
  v.add_witness("I ∩ J", meet);
  v.add_witness("reg(I ∩ J)", r);
  v.conclusion = conclude(r <= t + 1);
  cross_check_iff(v, has_linear_resolution(sum(i, j)));
  return v;
}

Verdict check_cwl_plus_linear(const MonomialIdeal& i, const MonomialIdeal& j) {
  Verdict v = start("cwl+linear", i, j);
  if (!is_proper_nonzero(i) || !is_proper_nonzero(j)) {
    v.reject("I and J must be nonzero proper ideals");
    return v;
  }
  const auto whole = sum(i, j);
  v.direct = componentwise_linear(whole);
  const long long reg_i = reg_of(i), reg_j = reg_of(j);
  v.add_witness("reg I", reg_i);
  v.add_witness("reg J", reg_j);
  if (!componentwise_linear(i)) {
    v.reject("I is not componentwise linear");
    return v;
  }
  if (!has_linear_resolution(j)) {
    v.reject("J does not have a linear resolution");
    return v;
  }
  if (reg_j < reg_i) {
    v.reject("reg J < reg I");
    return v;
  }
  const auto meet = intersect(i, j);
  const long long r = reg_of(meet);
  v.add_witness("I ∩ J", meet);
  v.add_witness("reg(I ∩ J)", r);
  v.conclusion = (r == reg_j + 1) ? Conclusion::True : Conclusion::Inconclusive;
  cross_check_sufficient(v, *v.direct);
  return v;
}

Verdict check_componentwise_criterion(const MonomialIdeal& i, const MonomialIdeal& j,
                                      std::optional<long long> t_max) {
  Verdict v = start("componentwise", i, j);
  if (!is_proper_nonzero(i) || !is_proper_nonzero(j) || !componentwise_linear(i) ||
      !componentwise_linear(j)) {
    v.reject("I and J must be componentwise linear nonzero proper ideals");
    return v;
  }
  const long long t_lo = static_cast<long long>(std::min(order(i), order(j)));
  const long long t_hi = t_max.value_or(reg_of(i) + reg_of(j));
  v.bounds["t_min"] = t_lo;
  v.bounds["t_max"] = t_hi;
  v.conclusion = Conclusion::True;
  for (long long t = t_lo; t <= t_hi; ++t) {
    const auto meet = intersect(component(i, static_cast<std::uint64_t>(t)),
                                component(j, static_cast<std::uint64_t>(t)));
    const auto r = reg_or_none(meet);
    if (r && *r > t + 1) {
      v.conclusion = Conclusion::False;
      v.add_witness("failing t", t);
      v.add_witness("I_<t> ∩ J_<t>", meet);
      v.add_witness("reg(I_<t> ∩ J_<t>)", *r);
      break;
    }
  }
  cross_check_iff(v, componentwise_linear(sum(i, j)));
  return v;
}

Verdict check_m_power_criterion(const MonomialIdeal& i, const MonomialIdeal& j,
                           std::optional<long long> s_max) {
  Verdict v = start("m_power", i, j);
  const auto whole = sum(i, j);
  if (!is_proper_nonzero(i) || !is_proper_nonzero(j)) {
    v.reject("I and J must be nonzero proper ideals");
    return v;
  }
  v.direct = componentwise_linear(whole);
  const auto m = MonomialIdeal::maximal(i.ring());
  const auto meet = intersect(i, j);
  const auto mi = product(m, i), mj = product(m, j);
  if (!mi.contains(meet) || !mj.contains(meet)) {
    v.add_witness("I ∩ J", meet);
    v.reject("I ∩ J is not contained in mI ∩ mJ");
    return v;
  }
  if (!componentwise_linear(i) || !componentwise_linear(j)) {
    v.reject("I and J must be componentwise linear");
    return v;
  }
  const long long s_hi = s_max.value_or(reg_of(i) + reg_of(j) + 2);
  v.bounds["s_max"] = s_hi;

  const bool meet_cwl = componentwise_linear(meet);
  v.set_flag("intersection_cwl", meet_cwl);

  bool equality = true, one_sided = true;
  auto ms = MonomialIdeal::unit(i.ring());  // m^s
  auto ms1_i = mi, ms1_j = mj;              // m^{s+1} I, m^{s+1} J
  for (long long s = 0; s <= s_hi; ++s) {
    const auto rhs = product(ms, meet);
    const auto lhs = intersect(ms1_i, ms1_j);
    if (equality && !(lhs == rhs)) {
      equality = false;
      v.add_witness("failing s", s);
      v.add_witness("m^{s+1}I ∩ m^{s+1}J", lhs);
      v.add_witness("m^s(I ∩ J)", rhs);
    }
    const bool left = intersect(meet, ms1_i) == rhs && intersect(j, ms1_i) == rhs;
    const bool right = intersect(meet, ms1_j) == rhs && intersect(i, ms1_j) == rhs;
    if (!left && !right) one_sided = false;
    ms = product(ms, m);
    ms1_i = product(ms1_i, m);
    ms1_j = product(ms1_j, m);
  }
  v.set_flag("equality_all_s", equality);
  v.set_flag("one_sided_sufficient", one_sided);
  v.conclusion = conclude(meet_cwl && equality);
  cross_check_iff(v, *v.direct);
  if (meet_cwl && one_sided && !*v.direct) v.mismatch = true;
  return v;
}

Verdict check_prime_product(std::uint32_t prime_vars, const MonomialIdeal& j) {
  if (prime_vars == 0)
    throw Error(ErrorCode::InvalidArgument, "the prime needs at least one variable");
  if (j.arity() < 32 && (prime_vars >> j.arity()) != 0)
    throw Error(ErrorCode::InvalidArgument, "prime variable outside the ring");
  const auto n = MonomialIdeal::prime(j.ring(), prime_vars);
  Verdict v;
  v.criterion = "prime-product";
  v.applicable = true;
  v.inputs.emplace_back("n", n);
  v.inputs.emplace_back("J", j);
  if (!is_proper_nonzero(j)) {
    v.reject("J must be a nonzero proper ideal");
    return v;
  }
  const auto nj = product(n, j);
  v.add_witness("nJ", nj);
  v.direct = componentwise_linear(nj);
  if (!componentwise_linear(j)) {
    v.reject("J is not componentwise linear");
    return v;
  }
  if ((prime_vars & support_mask(j)) != 0) {
    v.reject("Supp(n) meets Supp(J)");
    return v;
  }
  v.conclusion = Conclusion::True;
  cross_check_sufficient(v, *v.direct);
  return v;
}

Verdict check_nJ_sum(const MonomialIdeal& i, const MonomialIdeal& j) {
  Verdict v = start("nJ-sum", i, j);
  if (!is_proper_nonzero(i) || !is_proper_nonzero(j)) {
    v.reject("I and J must be nonzero proper ideals");
    return v;
  }
  v.direct = componentwise_linear(sum(i, j));
  const auto meet = intersect(i, j);
  v.add_witness("I ∩ J", meet);
  if (!componentwise_linear(i) || !componentwise_linear(j)) {
    v.reject("I and J must be componentwise linear");
    return v;
  }
  if (!product(MonomialIdeal::maximal(i.ring()), i).contains(meet)) {
    v.reject("I ∩ J is not contained in mI");
    return v;
  }
  const std::uint32_t all = (1u << i.arity()) - 1;
  const std::uint32_t free_vars = all & ~support_mask(j);
  std::vector<std::uint32_t> candidates;
  for (std::uint32_t mask = free_vars; mask != 0; mask = (mask - 1) & free_vars)
    candidates.push_back(mask);
  std::sort(candidates.begin(), candidates.end(), [](std::uint32_t a, std::uint32_t b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  for (auto mask : candidates) {
    const auto n = MonomialIdeal::prime(i.ring(), mask);
    if (product(n, j) == meet) {
      v.add_witness("prime n", n);
      v.conclusion = Conclusion::True;
      cross_check_sufficient(v, *v.direct);
      return v;
    }
  }
  v.reject("no monomial prime n disjoint from Supp(J) with I ∩ J = nJ");
  return v;
}

}  // namespace cwl
