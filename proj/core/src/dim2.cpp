#include "cwl/dim2.hpp"

#include <algorithm>
#include <unordered_map>

#include "cwl/error.hpp"
#include "cwl/linalg.hpp"
#include "cwl/resolution.hpp"

namespace cwl {

namespace {

void require_two_variables(const MonomialIdeal& ideal) {
  if (ideal.arity() != 2) throw Error(ErrorCode::Precondition, "needs the ring k[x,y]");
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

// First degree at which two dimension sequences differ.
std::optional<std::uint64_t> first_difference(const GradedDims& a, const GradedDims& b) {
  for (std::uint64_t d = 0; d <= std::min(a.d_max, b.d_max); ++d)
    if (a.at(d) != b.at(d)) return d;
  return std::nullopt;
}

std::uint64_t graded_colon_dimension(const MonomialIdeal& ideal, std::uint64_t d) {
  const auto source = monomials_of_degree(ideal.arity(), d);
  std::unordered_map<Monomial, std::size_t, MonomialHash> row_of;
  for (const auto& w : monomials_of_degree(ideal.arity(), d + 1))
    if (!ideal.contains(w)) row_of.emplace(w, row_of.size());
  if (row_of.empty()) return source.size();
  IntMatrix mult(row_of.size(), source.size());
  for (std::size_t col = 0; col < source.size(); ++col)
    for (std::size_t i = 0; i < ideal.arity(); ++i) {
      auto it = row_of.find(source[col] * Monomial::variable(ideal.arity(), i));
      if (it != row_of.end()) mult(it->second, col) = 1;
    }
  return source.size() - rank_over_rationals(mult);
}

}  // namespace

GradedDims graded_colon_linear(const MonomialIdeal& ideal, std::uint64_t d_max) {
  if (ideal.is_zero()) throw Error(ErrorCode::ZeroIdeal, "graded colon of the zero ideal");
  GradedDims out;
  out.d_max = d_max;
  for (std::uint64_t d = 0; d <= d_max; ++d) out.dims.push_back(graded_colon_dimension(ideal, d));
  return out;
}

GradedDims graded_dims(const MonomialIdeal& ideal, std::uint64_t d_max) {
  GradedDims out;
  out.d_max = d_max;
  for (std::uint64_t d = 0; d <= d_max; ++d) out.dims.push_back(graded_dimension(ideal, d));
  return out;
}

Verdict fullness_checks(const MonomialIdeal& ideal, std::optional<std::uint64_t> d_max) {
  if (ideal.is_zero()) throw Error(ErrorCode::ZeroIdeal, "fullness of the zero ideal");
  if (ideal.is_unit()) throw Error(ErrorCode::UnitIdeal, "fullness of the unit ideal");
  Verdict v;
  v.criterion = "fullness";
  v.applicable = true;
  v.inputs.emplace_back("I", ideal);
  const auto reg = regularity(ideal).reg;
  const std::uint64_t bound = d_max.value_or(static_cast<std::uint64_t>(reg) + 2);
  v.bounds["d_max"] = static_cast<long long>(bound);

  const auto colon_z = graded_colon_linear(ideal, bound);
  const auto colon_m = graded_dims(colon_maximal(ideal), bound);
  const auto full_gap = first_difference(colon_z, colon_m);
  const bool full = !full_gap;
  if (full_gap) v.add_witness("degree where I:z and I:m differ", static_cast<long long>(*full_gap));

  const auto m_times = product(MonomialIdeal::maximal(ideal.ring()), ideal);
  const auto mcolon_z = graded_colon_linear(m_times, bound);
  const auto own = graded_dims(ideal, bound);
  const auto mfull_gap = first_difference(mcolon_z, own);
  const bool m_full = !mfull_gap;
  if (mfull_gap)
    v.add_witness("degree where mI:z and I differ", static_cast<long long>(*mfull_gap));

  const bool cwl = is_componentwise_linear(ideal).conclusion == Conclusion::True;
  v.set_flag("full", full);
  v.set_flag("m_full", m_full);
  v.set_flag("componentwise_linear", cwl);
  v.conclusion = conclude(full);
  v.direct = cwl;
  if (m_full && !full) v.mismatch = true;
  if (ideal.arity() == 2 && (full != m_full || full != cwl)) v.mismatch = true;
  return v;
}

Verdict order_length_formula(const MonomialIdeal& i, const MonomialIdeal& j) {
  Verdict v = start("order-length", i, j);
  require_two_variables(i);
  if (!is_proper_nonzero(i) || !is_proper_nonzero(j)) {
    v.reject("I and J must be nonzero proper ideals");
    return v;
  }
  if (fullness_checks(i).conclusion != Conclusion::True ||
      fullness_checks(j).conclusion != Conclusion::True) {
    v.reject("I and J must be full");
    return v;
  }
  const auto sides = order_length_sides(i, j);
  v.bounds["d_max"] = sides.d_max;
  v.add_witness("o(I ∩ J)", sides.meet_order);
  v.add_witness("max order", sides.max_order);
  v.add_witness("length", sides.length);
  v.conclusion = conclude(sides.equal());
  if (v.conclusion == Conclusion::False) v.mismatch = true;
  return v;
}

OrderLengthSides order_length_sides(const MonomialIdeal& i, const MonomialIdeal& j) {
  require_same_ring(i.ring(), j.ring());
  const auto whole = sum(i, j);
  OrderLengthSides out;
  out.d_max = std::max(regularity(i).reg + regularity(j).reg + 2, regularity(whole).reg + 1);
  const auto top = static_cast<std::uint64_t>(out.d_max);
  const auto colon_z = graded_colon_linear(whole, top);
  const auto lower = graded_dims(sum(colon_maximal(i), colon_maximal(j)), top);
  for (std::uint64_t d = 0; d <= top; ++d)
    out.length += static_cast<long long>(colon_z.at(d)) - static_cast<long long>(lower.at(d));
  out.meet_order = static_cast<long long>(order(intersect(i, j)));
  out.max_order = static_cast<long long>(std::max(order(i), order(j)));
  return out;
}

Verdict full_sum_verdict(const MonomialIdeal& i, const MonomialIdeal& j) {
  Verdict v = start("full_sum", i, j);
  require_two_variables(i);
  if (!is_proper_nonzero(i) || !is_proper_nonzero(j) || !componentwise_linear(i) ||
      !componentwise_linear(j)) {
    v.reject("I and J must be componentwise linear nonzero proper ideals");
    return v;
  }
  const auto whole = sum(i, j);
  const long long meet_order = static_cast<long long>(order(intersect(i, j)));
  const long long max_order = static_cast<long long>(std::max(order(i), order(j)));
  const auto sum_colon = colon_maximal(whole);
  const auto colon_sum = sum(colon_maximal(i), colon_maximal(j));
  v.add_witness("o(I ∩ J)", meet_order);
  v.add_witness("max order", max_order);
  v.add_witness("(I+J):m", sum_colon);
  v.add_witness("I:m + J:m", colon_sum);
  const bool cond1 = meet_order == max_order;
  const bool cond2 = meet_order == max_order + 1 && !(sum_colon == colon_sum);
  v.set_flag("condition_1", cond1);
  v.set_flag("condition_2", cond2);
  v.conclusion = conclude(cond1 || cond2);

  const bool direct = componentwise_linear(whole);
  v.direct = direct;
  v.mismatch = (v.conclusion == Conclusion::True) != direct;
  const long long gap = meet_order - max_order;
  const bool order_gap = !direct || (gap >= 0 && gap <= 1);
  v.set_flag("order_gap", order_gap);
  if (!order_gap) v.mismatch = true;
  return v;
}

Verdict mu_additive_verdict(const MonomialIdeal& i, const MonomialIdeal& j) {
  Verdict v = start("mu-additive", i, j);
  require_two_variables(i);
  if (!is_proper_nonzero(i) || !is_proper_nonzero(j) || !componentwise_linear(i) ||
      !componentwise_linear(j)) {
    v.reject("I and J must be full nonzero proper ideals");
    return v;
  }
  const auto whole = sum(i, j);
  v.add_witness("mu(I+J)", static_cast<long long>(whole.mu()));
  v.add_witness("mu(I) + mu(J)", static_cast<long long>(i.mu() + j.mu()));
  if (whole.mu() != i.mu() + j.mu()) {
    v.reject("mu(I+J) != mu(I) + mu(J)");
    return v;
  }
  const long long meet_order = static_cast<long long>(order(intersect(i, j)));
  const long long max_order = static_cast<long long>(std::max(order(i), order(j)));
  v.add_witness("o(I ∩ J)", meet_order);
  v.add_witness("max order", max_order);
  v.conclusion = conclude(meet_order <= max_order + 1);
  const bool direct = componentwise_linear(whole);
  v.direct = direct;
  v.mismatch = (v.conclusion == Conclusion::True) != direct;
  return v;
}

Verdict linear_colon_tests(const MonomialIdeal& ideal, const Monomial& f) {
  require_two_variables(ideal);
  const auto principal = MonomialIdeal::principal(ideal.ring(), f);
  Verdict v = start("linear-colon", ideal, principal);
  if (!is_proper_nonzero(ideal) || !componentwise_linear(ideal)) {
    v.reject("I must be a full nonzero proper ideal");
    return v;
  }
  if (f.degree() < order(ideal)) {
    v.reject("deg f < o(I)");
    return v;
  }
  if (ideal.contains(f)) {
    v.reject("f lies in I");
    return v;
  }
  const auto whole = sum(ideal, principal);
  if (whole.mu() != ideal.mu() + 1) {
    v.reject("mu(I + (f)) != mu(I) + 1");
    return v;
  }
  const auto quotient = colon(ideal, f);
  v.add_witness("I : f", quotient);
  const bool has_variable = std::any_of(quotient.gens().begin(), quotient.gens().end(),
                                        [](const Monomial& g) { return g.degree() == 1; });
  const bool sum_full = fullness_checks(whole).conclusion == Conclusion::True;
  const bool principal_variable = quotient.mu() == 1 && quotient.gens().front().degree() == 1;
  v.set_flag("colon_has_variable", has_variable);
  v.set_flag("sum_full", sum_full);
  v.set_flag("colon_principal_variable", principal_variable);
  v.conclusion = conclude(sum_full);
  v.direct = componentwise_linear(whole);
  v.mismatch = has_variable != sum_full || (sum_full && !principal_variable) ||
               sum_full != *v.direct;
  return v;
}

OrderingCertificate cwl_ordering(const MonomialIdeal& ideal) {
  require_two_variables(ideal);
  if (!is_proper_nonzero(ideal))
    throw Error(ErrorCode::Precondition, "ordering needs a nonzero proper ideal");
  OrderingCertificate cert{ideal, {}, {}, {}, std::nullopt};
  std::vector<Monomial> remaining(ideal.gens().begin(), ideal.gens().end());

  cert.order.push_back(remaining.front());
  remaining.erase(remaining.begin());
  auto prefix = MonomialIdeal::principal(ideal.ring(), cert.order.front());
  cert.prefix_cwl.push_back(componentwise_linear(prefix));

  while (!remaining.empty()) {
    const auto least = remaining.front().degree();
    std::optional<std::size_t> chosen;
    std::size_t variable = 0;
    for (std::size_t k = 0; k < remaining.size() && remaining[k].degree() == least; ++k) {
      for (std::size_t z = 0; z < ideal.arity() && !chosen; ++z)
        if (prefix.contains(remaining[k] * Monomial::variable(ideal.arity(), z))) {
          chosen = k;
          variable = z;
        }
      if (chosen) break;
    }
    if (!chosen) {
      cert.failure = OrderingFailure{cert.order.size() + 1, remaining,
                                     componentwise_linear(ideal)};
      return cert;
    }
    const Monomial next = remaining[*chosen];
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(*chosen));
    cert.colon_variables.push_back(variable);
    cert.order.push_back(next);
    prefix = sum(prefix, MonomialIdeal::principal(ideal.ring(), next));
    cert.prefix_cwl.push_back(componentwise_linear(prefix));
  }
  return cert;
}

Verdict validate_certificate(const OrderingCertificate& cert) {
  const auto& ideal = cert.ideal;
  Verdict v;
  v.criterion = "ordering-certificate";
  v.inputs.emplace_back("I", ideal);
  if (!cert.ok()) {
    v.reject("ordering construction failed at step " + std::to_string(cert.failure->step));
    return v;
  }
  v.applicable = true;
  auto fail = [&v](std::string why) {
    v.conclusion = Conclusion::False;
    v.add_note("invalid certificate", std::move(why));
    return v;
  };

  std::vector<Monomial> sorted = cert.order;
  std::sort(sorted.begin(), sorted.end(), CanonicalLess{});
  if (!std::equal(sorted.begin(), sorted.end(), ideal.gens().begin(), ideal.gens().end()))
    return fail("order is not a permutation of G(I)");
  if (cert.colon_variables.size() + 1 != cert.order.size())
    return fail("wrong number of colon variables");
  for (std::size_t k = 1; k < cert.order.size(); ++k)
    if (cert.order[k].degree() < cert.order[k - 1].degree())
      return fail("degrees decrease at position " + std::to_string(k + 1));

  auto prefix = MonomialIdeal::principal(ideal.ring(), cert.order.front());
  if (!componentwise_linear(prefix)) return fail("first prefix not componentwise linear");
  for (std::size_t k = 1; k < cert.order.size(); ++k) {
    const auto expected = MonomialIdeal::principal(
        ideal.ring(), Monomial::variable(ideal.arity(), cert.colon_variables[k - 1]));
    const auto actual = colon(prefix, cert.order[k]);
    if (!(actual == expected)) {
      v.add_witness("colon", actual);
      return fail("colon at position " + std::to_string(k + 1) + " is not a single variable");
    }
    prefix = sum(prefix, MonomialIdeal::principal(ideal.ring(), cert.order[k]));
    if (!componentwise_linear(prefix))
      return fail("prefix of length " + std::to_string(k + 1) + " is not componentwise linear");
  }
  v.conclusion = Conclusion::True;
  return v;
}

std::pair<MonomialIdeal, MonomialIdeal> reg_plus_one_colons(const MonomialIdeal& i,
                                                            const MonomialIdeal& j, long long s) {
  require_same_ring(i.ring(), j.ring());
  const auto [f, i_rest] = factor_gcd(i);
  const auto [g, j_rest] = factor_gcd(j);
  const Monomial l = lcm(f, g);
  const auto ms1 = power(MonomialIdeal::maximal(i.ring()), s + 1);
  return {colon(product(ms1, i_rest), l / f), colon(product(ms1, j_rest), l / g)};
}

Verdict reg_plus_one_verdict(const MonomialIdeal& i, const MonomialIdeal& j,
                             std::optional<long long> s_max) {
  Verdict v = start("reg-plus-one", i, j);
  require_two_variables(i);
  if (!is_proper_nonzero(i) || !is_proper_nonzero(j) || !componentwise_linear(i) ||
      !componentwise_linear(j)) {
    v.reject("I and J must be componentwise linear nonzero proper ideals");
    return v;
  }
  const auto meet = intersect(i, j);
  const long long reg_i = regularity(i).reg, reg_j = regularity(j).reg;
  const long long reg_meet = regularity(meet).reg;
  v.add_witness("reg(I ∩ J)", reg_meet);
  v.add_witness("max regularity", std::max(reg_i, reg_j));
  v.direct = componentwise_linear(sum(i, j));
  if (reg_meet != std::max(reg_i, reg_j) + 1) {
    v.reject("reg(I ∩ J) != max{reg I, reg J} + 1");
    return v;
  }
  if (!meet.is_principal()) {
    v.reject("I ∩ J is not principal");
    return v;
  }
  const auto [f, i_rest] = factor_gcd(i);
  const auto [g, j_rest] = factor_gcd(j);
  auto reg0 = [](const MonomialIdeal& x) { return x.is_unit() ? 0LL : regularity(x).reg; };
  const long long s_hi = s_max.value_or(reg0(i_rest) + reg0(j_rest) + 2);
  v.bounds["s_max"] = s_hi;
  v.conclusion = Conclusion::True;
  for (long long s = 0; s <= s_hi; ++s) {
    const auto [left, right] = reg_plus_one_colons(i, j, s);
    const auto meet_s = intersect(left, right);
    if (!power(MonomialIdeal::maximal(i.ring()), s).contains(meet_s)) {
      v.conclusion = Conclusion::False;
      v.add_witness("failing s", s);
      v.add_witness("(m^{s+1}I' : f')", left);
      v.add_witness("(m^{s+1}J' : g')", right);
      break;
    }
  }
  v.mismatch = (v.conclusion == Conclusion::True) != *v.direct;
  return v;
}

}  // namespace cwl
