#include "cwl/resolution.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <unordered_set>

#include "cwl/error.hpp"
#include "cwl/homology.hpp"

namespace cwl {

namespace {

void require_proper_nonzero(const MonomialIdeal& ideal, const char* what) {
  if (ideal.is_zero())
    throw Error(ErrorCode::ZeroIdeal, std::string(what) + " of the zero ideal");
  if (ideal.is_unit())
    throw Error(ErrorCode::UnitIdeal, std::string(what) + " of the unit ideal");
}

bool entry_less(const BettiEntry& a, const BettiEntry& b) {
  if (a.homological_degree != b.homological_degree)
    return a.homological_degree < b.homological_degree;
  return canonical_less(a.multidegree, b.multidegree);
}

// Reduced homology of the upper Koszul complex K^a(I); entry i is
// dim H~_{i-1}, i.e. beta_{i,a}(I).
std::vector<std::size_t> koszul_homology(const MonomialIdeal& ideal, const Monomial& a) {
  std::vector<std::size_t> vars;
  for (std::size_t i = 0; i < a.arity(); ++i)
    if (a[i] > 0) vars.push_back(i);
  const std::size_t k = vars.size();
  std::vector<std::uint8_t> present(std::size_t{1} << k, 0);
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    Monomial shifted = a;
    for (std::size_t v = 0; v < k; ++v)
      if (mask >> v & 1u) shifted = shifted.with(vars[v], a[vars[v]] - 1);
    present[mask] = ideal.contains(shifted) ? 1 : 0;
  }
  return reduced_betti_of_mask_complex(present, k);
}

// Scans the lcm lattice and returns the first Betti position whose
// degree - homological degree exceeds `bound`, or nullopt.
std::optional<BettiEntry> first_entry_above(const MonomialIdeal& ideal, long long bound) {
  for (const auto& a : lcm_lattice(ideal)) {
    const long long deg = static_cast<long long>(a.degree());
    const bool generator = std::find(ideal.gens().begin(), ideal.gens().end(), a) !=
                           ideal.gens().end();
    if (deg - (generator ? 0 : 1) <= bound) continue;
    const auto h = koszul_homology(ideal, a);
    for (std::size_t i = 0; i < h.size(); ++i)
      if (h[i] != 0 && deg - static_cast<long long>(i) > bound)
        return BettiEntry{static_cast<unsigned>(i), a, h[i]};
  }
  return std::nullopt;
}

}  // namespace

BettiTable::BettiTable(MonomialIdeal subject, std::vector<BettiEntry> entries)
    : subject_(std::move(subject)), entries_(std::move(entries)) {
  entries_.erase(std::remove_if(entries_.begin(), entries_.end(),
                                [](const BettiEntry& e) { return e.rank == 0; }),
                 entries_.end());
  std::sort(entries_.begin(), entries_.end(), entry_less);
}

std::uint64_t BettiTable::rank(unsigned i, const Monomial& a) const {
  for (const auto& e : entries_)
    if (e.homological_degree == i && e.multidegree == a) return e.rank;
  return 0;
}

std::uint64_t BettiTable::graded(unsigned i, std::uint64_t j) const {
  std::uint64_t total = 0;
  for (const auto& e : entries_)
    if (e.homological_degree == i && e.multidegree.degree() == j) total += e.rank;
  return total;
}

std::uint64_t BettiTable::total(unsigned i) const {
  std::uint64_t t = 0;
  for (const auto& e : entries_)
    if (e.homological_degree == i) t += e.rank;
  return t;
}

unsigned BettiTable::projective_dimension() const {
  unsigned pd = 0;
  for (const auto& e : entries_) pd = std::max(pd, e.homological_degree);
  return pd;
}

std::vector<Monomial> lcm_lattice(const MonomialIdeal& ideal) {
  std::unordered_set<Monomial, MonomialHash> seen(ideal.gens().begin(), ideal.gens().end());
  std::vector<Monomial> frontier(ideal.gens().begin(), ideal.gens().end());
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const auto& e : frontier)
      for (const auto& g : ideal.gens()) {
        Monomial l = lcm(e, g);
        if (seen.insert(l).second) next.push_back(l);
      }
    frontier = std::move(next);
  }
  std::vector<Monomial> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

BettiTable betti(const MonomialIdeal& ideal) {
  require_proper_nonzero(ideal, "betti");
  std::vector<BettiEntry> entries;
  for (const auto& a : lcm_lattice(ideal)) {
    const auto h = koszul_homology(ideal, a);
    for (std::size_t i = 0; i < h.size(); ++i)
      if (h[i] != 0) entries.push_back({static_cast<unsigned>(i), a, h[i]});
  }
  return BettiTable(ideal, std::move(entries));
}

namespace {

constexpr std::size_t kMaxOrderComplexFaces = 2'000'000;

// Removes up and down beat points (an element whose strict upper set has a
// minimum, or whose strict lower set has a maximum) until none remain.
std::vector<Monomial> strip_beat_points(std::vector<Monomial> poset) {
  bool changed = true;
  while (changed && poset.size() > 1) {
    changed = false;
    for (std::size_t idx = 0; idx < poset.size(); ++idx) {
      const Monomial& e = poset[idx];
      std::optional<std::size_t> lowest_above, highest_below;
      std::vector<std::size_t> above, below;
      for (std::size_t j = 0; j < poset.size(); ++j) {
        if (j == idx) continue;
        if (e.divides(poset[j])) {
          above.push_back(j);
          if (!lowest_above || poset[j].degree() < poset[*lowest_above].degree())
            lowest_above = j;
        } else if (poset[j].divides(e)) {
          below.push_back(j);
          if (!highest_below || poset[j].degree() > poset[*highest_below].degree())
            highest_below = j;
        }
      }
      const bool up_beat =
          lowest_above && std::all_of(above.begin(), above.end(), [&](std::size_t j) {
            return poset[*lowest_above].divides(poset[j]);
          });
      const bool down_beat =
          highest_below && std::all_of(below.begin(), below.end(), [&](std::size_t j) {
            return poset[j].divides(poset[*highest_below]);
          });
      if (up_beat || down_beat) {
        poset.erase(poset.begin() + static_cast<std::ptrdiff_t>(idx));
        changed = true;
        break;
      }
    }
  }
  return poset;
}

SimplicialComplex order_complex(const std::vector<Monomial>& poset) {
  // Sorted canonically, a divisor always precedes its multiples.
  SimplicialComplex complex;
  complex.add_face({});
  std::size_t faces = 1;
  std::vector<std::uint32_t> chain;
  auto extend = [&](auto&& self, std::size_t from) -> void {
    for (std::size_t j = from; j < poset.size(); ++j) {
      if (!chain.empty() && !poset[chain.back()].divides(poset[j])) continue;
      chain.push_back(static_cast<std::uint32_t>(j));
      complex.add_face(chain);
      if (++faces > kMaxOrderComplexFaces)
        throw Error(ErrorCode::InvalidArgument, "lcm-lattice interval too large for the oracle");
      self(self, j + 1);
      chain.pop_back();
    }
  };
  extend(extend, 0);
  return complex;
}

}  // namespace

BettiTable betti_oracle_lcm_lattice(const MonomialIdeal& ideal) {
  require_proper_nonzero(ideal, "betti");
  const auto lattice = lcm_lattice(ideal);
  std::vector<BettiEntry> entries;
  for (const auto& m : lattice) {
    std::vector<Monomial> interval;
    for (const auto& e : lattice)
      if (!(e == m) && e.divides(m)) interval.push_back(e);
    interval = strip_beat_points(std::move(interval));
    const auto h = order_complex(interval).reduced_betti();
    for (std::size_t i = 0; i < h.size(); ++i)
      if (h[i] != 0) entries.push_back({static_cast<unsigned>(i), m, h[i]});
  }
  return BettiTable(ideal, std::move(entries));
}

BettiTable betti_oracle_dim2(const MonomialIdeal& ideal) {
  if (ideal.arity() != 2)
    throw Error(ErrorCode::Precondition, "Hilbert-Burch oracle needs two variables");
  require_proper_nonzero(ideal, "betti");
  std::vector<Monomial> gens(ideal.gens().begin(), ideal.gens().end());
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return a[0] > b[0]; });
  std::vector<BettiEntry> entries;
  for (const auto& g : gens) entries.push_back({0, g, 1});
  for (std::size_t k = 0; k + 1 < gens.size(); ++k)
    entries.push_back({1, lcm(gens[k], gens[k + 1]), 1});
  return BettiTable(ideal, std::move(entries));
}

RegularityReport regularity(const BettiTable& table) {
  if (table.entries().empty()) throw Error(ErrorCode::Internal, "empty Betti table");
  RegularityReport r;
  bool first = true;
  for (const auto& e : table.entries()) {
    const long long v = static_cast<long long>(e.multidegree.degree()) - e.homological_degree;
    if (first || v > r.reg) {
      r.reg = v;
      r.witness_homological_degree = e.homological_degree;
      r.witness_multidegree = e.multidegree;
      first = false;
    }
  }
  r.pd = table.projective_dimension();
  return r;
}

RegularityReport regularity(const MonomialIdeal& ideal) { return regularity(betti(ideal)); }

bool has_linear_resolution(const MonomialIdeal& ideal) {
  require_proper_nonzero(ideal, "linear resolution test");
  const auto d = ideal.gens().front().degree();
  if (ideal.gens().back().degree() != d) return false;
  return !first_entry_above(ideal, static_cast<long long>(d)).has_value();
}

Verdict is_componentwise_linear(const MonomialIdeal& ideal) {
  require_proper_nonzero(ideal, "componentwise linearity test");
  Verdict v;
  v.criterion = "componentwise-linear";
  v.applicable = true;
  v.inputs.emplace_back("I", ideal);
  const auto lo = order(ideal);
  const auto reg = regularity(ideal).reg;
  v.bounds["j_min"] = static_cast<long long>(lo);
  v.bounds["j_max"] = reg;
  for (long long j = static_cast<long long>(lo); j <= reg; ++j) {
    const auto comp = component(ideal, static_cast<std::uint64_t>(j));
    const auto excess = first_entry_above(comp, j);
    if (excess) {
      v.conclusion = Conclusion::False;
      v.add_witness("failing degree", j);
      v.add_witness("component", comp);
      v.add_witness("nonlinear syzygy multidegree", excess->multidegree, ideal.ring());
      v.add_witness("homological degree", excess->homological_degree);
      return v;
    }
  }
  v.conclusion = Conclusion::True;
  return v;
}

bool componentwise_linear(const MonomialIdeal& ideal) {
  if (ideal.is_zero() || ideal.is_unit()) return true;
  return is_componentwise_linear(ideal).conclusion == Conclusion::True;
}

}  // namespace cwl
