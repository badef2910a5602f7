#include "cwl/ideal.hpp"

#include <algorithm>
#include <unordered_set>

#include "cwl/error.hpp"

namespace cwl {

namespace {

void require_arity(const Monomial& m, const Ring& ring) {
  if (m.arity() != ring.arity())
    throw Error(ErrorCode::MixedRing, "monomial arity does not match ring");
}

// Generators sorted canonically have every proper divisor earlier, so one
// forward pass against the kept prefix is enough.
std::vector<Monomial> minimal_antichain(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), CanonicalLess{});
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  kept.reserve(gens.size());
  for (const auto& g : gens) {
    bool redundant = std::any_of(kept.begin(), kept.end(),
                                 [&](const Monomial& k) { return k.divides(g); });
    if (!redundant) kept.push_back(g);
  }
  return kept;
}

}  // namespace

MonomialIdeal::MonomialIdeal(Ring ring, std::vector<Monomial> generators)
    : ring_(std::move(ring)) {
  for (const auto& g : generators) require_arity(g, ring_);
  gens_ = minimal_antichain(std::move(generators));
}

MonomialIdeal MonomialIdeal::zero(Ring ring) { return MonomialIdeal(std::move(ring), {}); }

MonomialIdeal MonomialIdeal::unit(Ring ring) {
  const auto n = ring.arity();
  return MonomialIdeal(std::move(ring), {Monomial(n)});
}

MonomialIdeal MonomialIdeal::maximal(Ring ring) {
  return prime(ring, (ring.arity() >= 32 ? ~0u : (1u << ring.arity()) - 1));
}

MonomialIdeal MonomialIdeal::prime(Ring ring, std::uint32_t mask) {
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < ring.arity(); ++i)
    if (mask >> i & 1u) gens.push_back(Monomial::variable(ring.arity(), i));
  return MonomialIdeal(std::move(ring), std::move(gens));
}

MonomialIdeal MonomialIdeal::principal(Ring ring, const Monomial& generator) {
  return MonomialIdeal(std::move(ring), {generator});
}

bool MonomialIdeal::contains(const Monomial& m) const {
  require_arity(m, ring_);
  return std::any_of(gens_.begin(), gens_.end(),
                     [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  require_same_ring(ring_, other.ring_);
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [&](const Monomial& g) { return contains(g); });
}

MonomialIdeal minimalize(std::vector<Monomial> gens, const Ring& ring) {
  return MonomialIdeal(ring, std::move(gens));
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Monomial> gens(a.gens().begin(), a.gens().end());
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Monomial> gens;
  gens.reserve(a.mu() * b.mu());
  for (const auto& g : a.gens())
    for (const auto& h : b.gens()) gens.push_back(g * h);
  return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal scale(const Monomial& f, const MonomialIdeal& ideal) {
  require_arity(f, ideal.ring());
  std::vector<Monomial> gens;
  gens.reserve(ideal.mu());
  for (const auto& g : ideal.gens()) gens.push_back(f * g);
  // Multiplying by a monomial preserves both minimality and canonical order.
  return MonomialIdeal(ideal.ring(), std::move(gens), MonomialIdeal::Minimal{});
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Monomial> gens;
  gens.reserve(a.mu() * b.mu());
  for (const auto& g : a.gens())
    for (const auto& h : b.gens()) gens.push_back(lcm(g, h));
  return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& f) {
  require_arity(f, ideal.ring());
  std::vector<Monomial> gens;
  gens.reserve(ideal.mu());
  for (const auto& g : ideal.gens()) gens.push_back(g / gcd(g, f));
  return MonomialIdeal(ideal.ring(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& ideal, const MonomialIdeal& by) {
  require_same_ring(ideal.ring(), by.ring());
  if (by.is_zero()) throw Error(ErrorCode::ZeroIdeal, "colon by the zero ideal");
  auto result = colon(ideal, by.gens().front());
  for (const auto& h : by.gens().subspan(1)) result = intersect(result, colon(ideal, h));
  return result;
}

MonomialIdeal colon_maximal(const MonomialIdeal& ideal) {
  return colon(ideal, MonomialIdeal::maximal(ideal.ring()));
}

MonomialIdeal component(const MonomialIdeal& ideal, std::uint64_t degree) {
  std::unordered_set<Monomial, MonomialHash> seen;
  for (const auto& g : ideal.gens()) {
    if (g.degree() > degree) continue;
    for (const auto& u : monomials_of_degree(ideal.arity(), degree - g.degree()))
      seen.insert(g * u);
  }
  return MonomialIdeal(ideal.ring(), std::vector<Monomial>(seen.begin(), seen.end()));
}

MonomialIdeal power(const MonomialIdeal& ideal, long long exponent) {
  if (exponent < 0) throw Error(ErrorCode::InvalidArgument, "negative ideal power");
  auto result = MonomialIdeal::unit(ideal.ring());
  for (long long k = 0; k < exponent; ++k) result = product(result, ideal);
  return result;
}

std::uint64_t order(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw Error(ErrorCode::ZeroIdeal, "order of the zero ideal");
  return ideal.gens().front().degree();
}

std::uint64_t max_generator_degree(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw Error(ErrorCode::ZeroIdeal, "zero ideal has no generators");
  return ideal.gens().back().degree();
}

std::uint32_t support_mask(const MonomialIdeal& ideal) {
  std::uint32_t mask = 0;
  for (const auto& g : ideal.gens()) mask |= g.support_mask();
  return mask;
}

IdealStats stats(const MonomialIdeal& ideal) {
  IdealStats s;
  s.order = order(ideal);
  s.mu = ideal.mu();
  s.max_gen_degree = max_generator_degree(ideal);
  const auto mask = support_mask(ideal);
  for (std::size_t i = 0; i < ideal.arity(); ++i)
    if (mask >> i & 1u) s.support.push_back(i);
  s.is_m_primary = true;
  for (std::size_t i = 0; i < ideal.arity() && s.is_m_primary; ++i) {
    s.is_m_primary = std::any_of(ideal.gens().begin(), ideal.gens().end(),
                                 [&](const Monomial& g) {
                                   return g.support_mask() == (1u << i) || g.is_unit();
                                 });
  }
  return s;
}

std::pair<Monomial, MonomialIdeal> factor_gcd(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw Error(ErrorCode::ZeroIdeal, "gcd of the zero ideal");
  Monomial f = ideal.gens().front();
  for (const auto& g : ideal.gens().subspan(1)) f = gcd(f, g);
  std::vector<Monomial> rest;
  for (const auto& g : ideal.gens()) rest.push_back(g / f);
  return {f, MonomialIdeal(ideal.ring(), std::move(rest))};
}

std::uint64_t graded_dimension(const MonomialIdeal& ideal, std::uint64_t degree) {
  if (ideal.is_zero()) return 0;
  std::uint64_t count = 0;
  for (const auto& u : monomials_of_degree(ideal.arity(), degree))
    if (ideal.contains(u)) ++count;
  return count;
}

std::vector<std::string> generator_strings(const MonomialIdeal& ideal) {
  std::vector<std::string> out;
  for (const auto& g : ideal.gens()) out.push_back(to_string(g, ideal.ring()));
  return out;
}

std::string to_string(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return "0";
  std::string s;
  for (const auto& g : generator_strings(ideal)) {
    if (!s.empty()) s += ", ";
    s += g;
  }
  return s;
}

}  // namespace cwl
