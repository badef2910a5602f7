#include "cwl/fullset.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>

#include "cwl/error.hpp"
#include "cwl/resolution.hpp"

namespace cwl {

namespace {

std::string render(const Monomial& m, const Ring& r) { return to_string(m, r); }

bool has_full_path(const SquarefreeSet& set, const Monomial& from, const Monomial& to) {
  std::deque<Monomial> queue{from};
  std::set<Monomial, CanonicalLess> seen{from};
  while (!queue.empty()) {
    const Monomial cur = queue.front();
    queue.pop_front();
    if (cur == to) return true;
    for (std::size_t v = 0; v < cur.arity(); ++v) {
      if (cur[v] != 0 || to[v] == 0) continue;
      const Monomial next = cur.with(v, 1);
      if (set.contains(next) && seen.insert(next).second) queue.push_back(next);
    }
  }
  return false;
}

const MonomialIdeal& lookup(const Assignment& a, const Monomial& f, const Ring& ring) {
  auto it = a.find(f);
  if (it == a.end())
    throw Error(ErrorCode::InvalidArgument, "no ideal assigned to " + render(f, ring));
  return it->second;
}

}  // namespace

SquarefreeSet::SquarefreeSet(Ring ring, std::vector<Monomial> elements) : ring_(std::move(ring)) {
  for (const auto& e : elements) {
    if (e.arity() != ring_.arity())
      throw Error(ErrorCode::MixedRing, "element arity does not match ring");
    if (e.is_unit()) throw Error(ErrorCode::InvalidArgument, "full sets exclude the unit monomial");
    if (!e.is_squarefree())
      throw Error(ErrorCode::InvalidArgument, render(e, ring_) + " is not squarefree");
  }
  std::sort(elements.begin(), elements.end(), CanonicalLess{});
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  elements_ = std::move(elements);
}

bool SquarefreeSet::contains(const Monomial& m) const {
  return std::binary_search(elements_.begin(), elements_.end(), m, CanonicalLess{});
}

Verdict is_full(const SquarefreeSet& set) {
  Verdict v;
  v.criterion = "full-set";
  v.applicable = true;
  v.conclusion = Conclusion::True;
  const auto& el = set.elements();
  for (std::size_t a = 0; a < el.size(); ++a)
    for (std::size_t b = a + 1; b < el.size(); ++b) {
      const Monomial l = lcm(el[a], el[b]);
      if (!set.contains(l)) {
        v.conclusion = Conclusion::False;
        v.add_note("missing lcm",
                   render(el[a], set.ring()) + " , " + render(el[b], set.ring()) + " -> " +
                       render(l, set.ring()));
        v.add_witness("missing lcm monomial", l, set.ring());
        v.set_flag("lcm_closed", false);
        return v;
      }
    }
  v.set_flag("lcm_closed", true);
  const auto gaps = full_path_gaps(set);
  if (!gaps.empty()) {
    v.conclusion = Conclusion::False;
    v.add_note("no full path", render(gaps.front().first, set.ring()) + " -> " +
                                   render(gaps.front().second, set.ring()));
    v.add_witness("path start", gaps.front().first, set.ring());
    v.add_witness("path end", gaps.front().second, set.ring());
  }
  v.set_flag("full_paths", gaps.empty());
  return v;
}

SquarefreeSet lcm_closure(const SquarefreeSet& set) {
  std::vector<Monomial> el = set.elements();
  std::set<Monomial, CanonicalLess> all(el.begin(), el.end());
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Monomial> snapshot(all.begin(), all.end());
    for (std::size_t a = 0; a < snapshot.size(); ++a)
      for (std::size_t b = a + 1; b < snapshot.size(); ++b)
        grew |= all.insert(lcm(snapshot[a], snapshot[b])).second;
  }
  return SquarefreeSet(set.ring(), std::vector<Monomial>(all.begin(), all.end()));
}

std::vector<std::pair<Monomial, Monomial>> full_path_gaps(const SquarefreeSet& set) {
  std::vector<std::pair<Monomial, Monomial>> gaps;
  for (const auto& f : set.elements())
    for (const auto& g : set.elements())
      if (!(f == g) && f.divides(g) && !has_full_path(set, f, g)) gaps.emplace_back(f, g);
  return gaps;
}

Verdict validate_assignment(const SquarefreeSet& set, const Assignment& assignment) {
  const Ring& ring = set.ring();
  Verdict v;
  v.criterion = "fullset-assignment";
  v.applicable = true;
  for (const auto& f : set.elements()) {
    const auto& ideal = lookup(assignment, f, ring);
    require_same_ring(ideal.ring(), ring);
    v.inputs.emplace_back("I_" + render(f, ring), ideal);
  }
  const bool full = is_full(set).conclusion == Conclusion::True;
  v.set_flag("full_set", full);

  bool cwl = true, cond1 = true, cond2 = true, cond2p = true;
  const auto m = MonomialIdeal::maximal(ring);
  for (const auto& f : set.elements()) {
    const auto& ideal = assignment.at(f);
    if (cwl && !componentwise_linear(ideal)) {
      cwl = false;
      v.add_witness("not componentwise linear: I_" + render(f, ring), ideal);
    }
    const auto allowed = f.support_mask();
    for (const auto& g : ideal.gens())
      if (cond1 && (g.support_mask() & ~allowed) != 0) {
        cond1 = false;
        v.add_witness("condition 1 violated by generator of I_" + render(f, ring), g, ring);
      }
    for (std::size_t z = 0; z < ring.arity(); ++z) {
      if (f[z] != 0) continue;
      const Monomial zf = f.with(z, 1);
      if (!set.contains(zf)) continue;
      if (cond2 && !product(m, assignment.at(zf)).contains(ideal)) {
        cond2 = false;
        v.add_note("condition 2 violated",
                   "I_" + render(f, ring) + " not in m*I_" + render(zf, ring));
        v.add_witness("condition 2 lhs", ideal);
        v.add_witness("condition 2 rhs", product(m, assignment.at(zf)));
      }
    }
    for (const auto& g : set.elements())
      if (cond2p && !(f == g) && f.divides(g) && !assignment.at(g).contains(ideal)) {
        cond2p = false;
        v.add_note("condition 2' fails", "I_" + render(f, ring) + " not in I_" + render(g, ring));
      }
  }
  v.set_flag("componentwise_linear", cwl);
  v.set_flag("condition_1", cond1);
  v.set_flag("condition_2", cond2);
  v.set_flag("condition_2_prime", cond2p);
  v.conclusion = conclude(full && cwl && cond1 && cond2);
  // Fullness and condition 2 force condition 2'.
  if (v.conclusion == Conclusion::True && !cond2p) v.mismatch = true;
  return v;
}

MonomialIdeal assemble(const SquarefreeSet& set, const Assignment& assignment, bool force) {
  if (!force) {
    const auto v = validate_assignment(set, assignment);
    if (v.conclusion != Conclusion::True) {
      std::string why;
      for (const auto& w : v.witnesses) why += "; " + w.description + ": " + w.value;
      throw Error(ErrorCode::Precondition, "invalid full-set assignment" + why);
    }
  }
  auto total = MonomialIdeal::zero(set.ring());
  for (const auto& f : set.elements())
    total = sum(total, scale(f, lookup(assignment, f, set.ring())));
  return total;
}

Assignment power_assignment(const SquarefreeSet& set, const PowerAssignment& powers) {
  const Ring& ring = set.ring();
  for (const auto& f : set.elements()) {
    auto it = powers.find(f);
    if (it == powers.end())
      throw Error(ErrorCode::InvalidArgument, "no power assigned to " + render(f, ring));
    if (it->second < static_cast<long long>(f.degree()))
      throw Error(ErrorCode::Precondition, "a_f < deg f for f = " + render(f, ring));
  }
  for (const auto& f : set.elements())
    for (const auto& g : set.elements())
      if (!(f == g) && f.divides(g) && powers.at(f) < powers.at(g))
        throw Error(ErrorCode::Precondition, "monotonicity violated: a_" + render(f, ring) +
                                                 " < a_" + render(g, ring) + " (" +
                                                 render(f, ring) + ", " + render(g, ring) + ")");
  Assignment out;
  for (const auto& f : set.elements()) {
    const auto prime = MonomialIdeal::prime(ring, f.support_mask());
    out.emplace(f, power(prime, powers.at(f) - static_cast<long long>(f.degree())));
  }
  return out;
}

MonomialIdeal assemble_powers(const SquarefreeSet& set, const PowerAssignment& powers) {
  return assemble(set, power_assignment(set, powers));
}

Verdict check_intersection_identity(const SquarefreeSet& set, const Assignment& assignment) {
  Verdict v;
  v.criterion = "fullset-intersection";
  if (set.size() < 2) {
    v.reject("needs at least two elements");
    return v;
  }
  v.applicable = true;
  const Ring& ring = set.ring();
  const Monomial f = set.elements().front();  // canonical order: minimal degree first
  auto rest = MonomialIdeal::zero(ring);
  std::uint32_t n_mask = 0;
  for (const auto& g : set.elements()) {
    if (g == f) continue;
    rest = sum(rest, scale(g, lookup(assignment, g, ring)));
  }
  for (std::size_t z = 0; z < ring.arity(); ++z)
    if (f[z] == 0 && set.contains(f.with(z, 1))) n_mask |= 1u << z;
  const auto f_part = scale(f, lookup(assignment, f, ring));
  const auto lhs = intersect(rest, f_part);
  const auto rhs = product(MonomialIdeal::prime(ring, n_mask), f_part);
  v.add_witness("minimal-degree element", f, ring);
  v.add_witness("lhs", lhs);
  v.add_witness("rhs", rhs);
  v.conclusion = conclude(n_mask == 0 ? lhs.is_zero() : lhs == rhs);
  return v;
}

PowerInstance random_power_instance(std::size_t arity, std::uint64_t seed, long long max_slack) {
  if (arity == 0 || arity > 8) throw Error(ErrorCode::InvalidArgument, "arity must be in 1..8");
  std::mt19937_64 rng(seed);
  const Ring ring = Ring::standard(arity);
  const std::uint32_t full_mask = (1u << arity) - 1;
  std::uniform_int_distribution<std::uint32_t> pick_mask(1, full_mask);
  std::uniform_int_distribution<int> pick_count(1, 3);

  std::set<std::uint32_t> masks;
  for (int k = pick_count(rng); k > 0; --k) masks.insert(pick_mask(rng));

  for (bool changed = true; changed;) {
    changed = false;
    // lcm closure on masks is bitwise or.
    for (bool grew = true; grew;) {
      grew = false;
      const std::vector<std::uint32_t> snap(masks.begin(), masks.end());
      for (auto a : snap)
        for (auto b : snap) grew |= masks.insert(a | b).second;
      changed |= grew;
    }
    std::vector<Monomial> mono;
    for (auto mk : masks) mono.push_back(Monomial::from_mask(arity, mk));
    const SquarefreeSet current(ring, mono);
    // Close every gap f | g with the chain that adds the missing variables
    // of g one at a time, lowest index first.
    for (const auto& [f, g] : full_path_gaps(current)) {
      std::uint32_t step = f.support_mask();
      for (std::uint32_t missing = g.support_mask() & ~step; missing; missing &= missing - 1) {
        step |= missing & (~missing + 1);
        changed |= masks.insert(step).second;
      }
    }
  }

  std::vector<Monomial> elements;
  for (auto mk : masks) elements.push_back(Monomial::from_mask(arity, mk));
  SquarefreeSet set(ring, elements);

  std::uniform_int_distribution<long long> slack(0, max_slack);
  PowerAssignment powers;
  // Larger degree first, so all proper multiples are assigned before f.
  std::vector<Monomial> order = set.elements();
  std::reverse(order.begin(), order.end());
  for (const auto& f : order) {
    long long lower = static_cast<long long>(f.degree());
    for (const auto& [g, a] : powers)
      if (f.divides(g)) lower = std::max(lower, a);
    powers[f] = lower + slack(rng);
  }
  return {std::move(set), std::move(powers)};
}

}  // namespace cwl
