#include "cwl/verify.hpp"

#include <algorithm>
#include <chrono>
#include <memory>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "cwl/criteria.hpp"
#include "cwl/dim2.hpp"
#include "cwl/error.hpp"
#include "cwl/fullset.hpp"
#include "cwl/resolution.hpp"

namespace cwl {

const char* to_string(OracleKind kind) {
  switch (kind) {
    case OracleKind::Intersect: return "intersect";
    case OracleKind::Colon: return "colon";
    case OracleKind::Component: return "component";
    case OracleKind::Sum: return "sum";
  }
  return "?";
}

MonomialIdeal oracle_op(OracleKind kind, const MonomialIdeal& ideal, const OracleOperand& operand,
                        std::uint64_t d_max) {
  const std::size_t n = ideal.arity();
  std::function<bool(const Monomial&)> member;
  switch (kind) {
    case OracleKind::Intersect:
    case OracleKind::Sum: {
      const auto* other = std::get_if<MonomialIdeal>(&operand);
      if (!other) throw Error(ErrorCode::InvalidArgument, "operand must be an ideal");
      require_same_ring(ideal.ring(), other->ring());
      if (kind == OracleKind::Intersect)
        member = [&ideal, other](const Monomial& m) {
          return ideal.contains(m) && other->contains(m);
        };
      else
        member = [&ideal, other](const Monomial& m) {
          return ideal.contains(m) || other->contains(m);
        };
      break;
    }
    case OracleKind::Colon: {
      if (const auto* f = std::get_if<Monomial>(&operand)) {
        if (f->arity() != n) throw Error(ErrorCode::MixedRing, "colon by a foreign monomial");
        member = [&ideal, f](const Monomial& m) { return ideal.contains(m * *f); };
      } else if (const auto* by = std::get_if<MonomialIdeal>(&operand)) {
        require_same_ring(ideal.ring(), by->ring());
        if (by->is_zero()) throw Error(ErrorCode::ZeroIdeal, "colon by the zero ideal");
        member = [&ideal, by](const Monomial& m) {
          return std::all_of(by->gens().begin(), by->gens().end(),
                             [&](const Monomial& g) { return ideal.contains(m * g); });
        };
      } else {
        throw Error(ErrorCode::InvalidArgument, "colon needs a monomial or an ideal");
      }
      break;
    }
    case OracleKind::Component: {
      const auto* j = std::get_if<std::uint64_t>(&operand);
      if (!j) throw Error(ErrorCode::InvalidArgument, "component needs a degree");
      const auto pieces = std::make_shared<std::vector<Monomial>>();
      for (const auto& u : monomials_of_degree(n, *j))
        if (ideal.contains(u)) pieces->push_back(u);
      member = [pieces](const Monomial& m) {
        return std::any_of(pieces->begin(), pieces->end(),
                           [&](const Monomial& u) { return u.divides(m); });
      };
      break;
    }
  }

  std::vector<Monomial> gens;
  for (std::uint64_t d = 0; d <= d_max + 1; ++d) {
    for (const auto& m : monomials_of_degree(n, d)) {
      if (!member(m)) continue;
      bool minimal = true;
      for (std::size_t i = 0; i < n && minimal; ++i)
        if (m[i] > 0 && member(m.with(i, m[i] - 1))) minimal = false;
      if (!minimal) continue;
      if (d == d_max + 1)
        throw Error(ErrorCode::OracleBound,
                    "minimal generator above the degree bound: " + to_string(m, ideal.ring()));
      gens.push_back(m);
    }
  }
  return MonomialIdeal(ideal.ring(), std::move(gens));
}

void for_each_ideal_dim2(std::uint64_t max_gen_degree,
                         const std::function<void(const MonomialIdeal&)>& visit) {
  if (max_gen_degree < 1) throw Error(ErrorCode::InvalidArgument, "max_gen_degree must be >= 1");
  const Ring ring = Ring::standard(2);
  // Candidates by decreasing x exponent; an antichain is a chain in this
  // list with y exponents strictly increasing.
  std::vector<Monomial> candidates;
  for (std::uint64_t d = 1; d <= max_gen_degree; ++d)
    for (std::uint64_t a = 0; a <= d; ++a)
      candidates.push_back(Monomial{static_cast<Exponent>(a), static_cast<Exponent>(d - a)});
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Monomial& p, const Monomial& q) { return p[0] > q[0]; });

  std::vector<Monomial> chosen;
  std::function<void(std::size_t)> extend = [&](std::size_t from) {
    for (std::size_t k = from; k < candidates.size(); ++k) {
      const auto& c = candidates[k];
      if (!chosen.empty() && (c[0] >= chosen.back()[0] || c[1] <= chosen.back()[1])) continue;
      chosen.push_back(c);
      visit(MonomialIdeal(ring, chosen));
      extend(k + 1);
      chosen.pop_back();
    }
  };
  extend(0);
}

std::vector<MonomialIdeal> enumerate_ideals_dim2(std::uint64_t max_gen_degree) {
  std::vector<MonomialIdeal> out;
  for_each_ideal_dim2(max_gen_degree, [&](const MonomialIdeal& i) { out.push_back(i); });
  std::sort(out.begin(), out.end(), [](const MonomialIdeal& a, const MonomialIdeal& b) {
    return std::lexicographical_compare(a.gens().begin(), a.gens().end(), b.gens().begin(),
                                        b.gens().end(), CanonicalLess{});
  });
  return out;
}

namespace {

// Uniform over monomials of degree 1..max_degree: the degree is drawn with
// weight equal to the number of monomials of that degree, then a uniform
// stars-and-bars composition.
Monomial random_monomial(std::size_t arity, std::uint64_t max_degree, std::mt19937_64& rng) {
  std::vector<double> weights;
  for (std::uint64_t d = 1; d <= max_degree; ++d)
    weights.push_back(static_cast<double>(count_monomials(arity, d)));
  std::discrete_distribution<std::uint64_t> pick_degree(weights.begin(), weights.end());
  const std::uint64_t d = pick_degree(rng) + 1;
  std::vector<std::uint64_t> slots(d + arity - 1);
  std::iota(slots.begin(), slots.end(), 0);
  std::vector<std::uint64_t> bars;
  std::sample(slots.begin(), slots.end(), std::back_inserter(bars), arity - 1, rng);
  std::vector<Exponent> exps(arity);
  std::uint64_t prev = 0;
  for (std::size_t i = 0; i + 1 < arity; ++i) {
    exps[i] = static_cast<Exponent>(bars[i] - prev);
    prev = bars[i] + 1;
  }
  exps[arity - 1] = static_cast<Exponent>(d + arity - 1 - prev);
  return Monomial(std::span<const Exponent>(exps));
}

Monomial random_monomial_upto(std::size_t arity, std::uint64_t max_degree, std::mt19937_64& rng) {
  if (max_degree == 0 || rng() % (max_degree + 1) == 0) return Monomial(arity);
  return random_monomial(arity, max_degree, rng);
}

void check_sampling_args(std::size_t arity, std::uint64_t max_gen_degree, std::size_t mu_target) {
  if (arity < 1 || arity > kMaxArity) throw Error(ErrorCode::InvalidArgument, "bad arity");
  if (max_gen_degree < 1) throw Error(ErrorCode::InvalidArgument, "max_gen_degree must be >= 1");
  if (mu_target < 1) throw Error(ErrorCode::InvalidArgument, "mu_target must be >= 1");
}

}  // namespace

MonomialIdeal random_ideal(std::size_t arity, std::uint64_t max_gen_degree,
                           std::size_t mu_target, std::uint64_t seed) {
  check_sampling_args(arity, max_gen_degree, mu_target);
  std::mt19937_64 rng(seed);
  const std::size_t k = 1 + rng() % mu_target;
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < k; ++i) gens.push_back(random_monomial(arity, max_gen_degree, rng));
  return MonomialIdeal(Ring::standard(arity), std::move(gens));
}

MonomialIdeal random_m_primary(std::size_t arity, std::uint64_t max_gen_degree,
                               std::size_t mu_target, std::uint64_t seed) {
  const auto base = random_ideal(arity, max_gen_degree, mu_target, seed);
  std::mt19937_64 rng(seed ^ 0x5bd1e995u);
  std::vector<Monomial> gens(base.gens().begin(), base.gens().end());
  for (std::size_t i = 0; i < arity; ++i)
    gens.push_back(Monomial::variable(arity, i, static_cast<Exponent>(1 + rng() % max_gen_degree)));
  return MonomialIdeal(base.ring(), std::move(gens));
}

bool CampaignReport::same_outcome(const CampaignReport& other) const {
  return campaign == other.campaign && population == other.population &&
         min_arity == other.min_arity && max_arity == other.max_arity &&
         max_gen_degree == other.max_gen_degree && population_size == other.population_size &&
         checked == other.checked && violations == other.violations && bounds == other.bounds;
}

namespace {

struct Outcome {
  bool checked = false;
  std::vector<std::string> violations;

  void expect(bool ok, const std::string& what) {
    checked = true;
    if (!ok) violations.push_back(what);
  }
};

using Task = std::function<void(std::size_t, Outcome&)>;

std::size_t worker_count(std::size_t requested) {
  if (requested) return requested;
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

// Evaluates indices [begin, end) with a strided split across workers.
// Results land in index order, so the merge does not depend on timing.
std::vector<Outcome> sweep(std::size_t begin, std::size_t end, std::size_t workers,
                           const Task& task) {
  std::vector<Outcome> out(end - begin);
  auto run = [&](std::size_t w, std::size_t stride) {
    for (std::size_t k = begin + w; k < end; k += stride) {
      auto& slot = out[k - begin];
      try {
        task(k, slot);
      } catch (const std::exception& e) {
        slot.checked = true;
        slot.violations.push_back("instance " + std::to_string(k) + ": exception: " + e.what());
      }
    }
  };
  const std::size_t n = std::min(workers, std::max<std::size_t>(1, end - begin));
  if (n == 1) {
    run(0, 1);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < n; ++w) threads.emplace_back(run, w, n);
    for (auto& t : threads) t.join();
  }
  return out;
}

void merge(CampaignReport& report, std::vector<Outcome>&& outcomes, std::size_t limit) {
  for (auto& o : outcomes) {
    if (!o.checked) continue;
    if (report.checked >= limit) break;
    ++report.checked;
    for (auto& v : o.violations) report.violations.push_back(std::move(v));
  }
}

// Exhaustive sweep: every index is one instance.
void exhaustive(CampaignReport& report, std::size_t size, std::size_t workers, const Task& task) {
  report.population_size = size;
  merge(report, sweep(0, size, workers, task), size);
}

// Sampled sweep: instances whose premise fails are not counted; indices are
// consumed in batches until `count` instances were checked (or the attempt
// budget runs out, which leaves checked < count in the report).
void sampled(CampaignReport& report, std::size_t count, std::size_t workers, const Task& task) {
  const std::size_t budget = count * 200;
  std::size_t next = 0;
  while (report.checked < count && next < budget) {
    const std::size_t batch = std::min(budget - next, std::max<std::size_t>(count, 64));
    merge(report, sweep(next, next + batch, workers, task), count);
    next += batch;
  }
  report.population_size = next;
}

std::uint64_t instance_seed(std::uint64_t seed, std::size_t k) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (k + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

struct Sampler {
  std::mt19937_64 rng;
  const CampaignParams& p;

  Sampler(const CampaignParams& params, std::size_t k)
      : rng(instance_seed(params.seed, k)), p(params) {}

  std::size_t arity() {
    return p.min_arity + static_cast<std::size_t>(rng() % (p.max_arity - p.min_arity + 1));
  }
  MonomialIdeal ideal(std::size_t n) { return random_ideal(n, p.max_gen_degree, p.mu_max, rng()); }
  MonomialIdeal m_primary(std::size_t n) {
    return random_m_primary(n, p.max_gen_degree, p.mu_max, rng());
  }
  Monomial monomial(std::size_t n, std::uint64_t max_degree) {
    return random_monomial_upto(n, max_degree, rng);
  }
};

std::string show(const MonomialIdeal& i) { return "(" + to_string(i) + ")"; }

std::string show_pair(const MonomialIdeal& i, const MonomialIdeal& j) {
  return "I = " + show(i) + ", J = " + show(j);
}

long long reg_or_zero(const MonomialIdeal& i) { return i.is_unit() ? 0 : regularity(i).reg; }


// Enumerated ideals with their componentwise-linearity flag, computed once.
struct Population {
  std::vector<MonomialIdeal> ideals;
  std::vector<char> cwl;
  std::vector<std::size_t> cwl_index;
};

Population population_dim2(std::uint64_t degree, std::size_t workers) {
  Population pop;
  pop.ideals = enumerate_ideals_dim2(degree);
  pop.cwl.assign(pop.ideals.size(), 0);
  sweep(0, pop.ideals.size(), workers, [&](std::size_t k, Outcome&) {
    pop.cwl[k] = componentwise_linear(pop.ideals[k]) ? 1 : 0;
  });
  for (std::size_t k = 0; k < pop.ideals.size(); ++k)
    if (pop.cwl[k]) pop.cwl_index.push_back(k);
  return pop;
}

// Ordered pairs of componentwise linear ideals.
void cwl_pairs(CampaignReport& report, const CampaignParams& p,
               const std::function<void(const MonomialIdeal&, const MonomialIdeal&, Outcome&)>& f) {
  const auto pop = population_dim2(p.max_gen_degree, p.workers);
  const std::size_t n = pop.cwl_index.size();
  report.population = "ordered pairs of componentwise linear ideals of k[x,y], generator degree <= " +
                      std::to_string(p.max_gen_degree);
  report.bounds["enumerated_ideals"] = static_cast<long long>(pop.ideals.size());
  exhaustive(report, n * n, p.workers, [&](std::size_t k, Outcome& out) {
    f(pop.ideals[pop.cwl_index[k / n]], pop.ideals[pop.cwl_index[k % n]], out);
  });
}

using Runner = std::function<void(CampaignReport&, const CampaignParams&)>;

struct CampaignSpec {
  CampaignParams defaults;
  Runner run;
};

CampaignParams enumerated(std::uint64_t degree) {
  CampaignParams p;
  p.max_gen_degree = degree;
  return p;
}

CampaignParams sampled_params(std::size_t count, std::size_t lo, std::size_t hi,
                              std::uint64_t degree, std::size_t mu) {
  CampaignParams p;
  p.count = count;
  p.min_arity = lo;
  p.max_arity = hi;
  p.max_gen_degree = degree;
  p.mu_max = mu;
  return p;
}

const std::map<std::string, CampaignSpec>& registry() {
  static const std::map<std::string, CampaignSpec> table = {
      {"full-sum",
       {enumerated(4),
        [](CampaignReport& r, const CampaignParams& p) {
          cwl_pairs(r, p, [](const MonomialIdeal& i, const MonomialIdeal& j, Outcome& out) {
            const auto v = full_sum_verdict(i, j);
            out.expect(v.applicable && !v.mismatch,
                       show_pair(i, j) + ": criterion " + to_string(v.conclusion) +
                           ", direct " + (v.direct.value_or(false) ? "true" : "false"));
          });
        }}},
      {"order-gap",
       {enumerated(4),
        [](CampaignReport& r, const CampaignParams& p) {
          cwl_pairs(r, p, [](const MonomialIdeal& i, const MonomialIdeal& j, Outcome& out) {
            if (!componentwise_linear(sum(i, j))) return;
            const auto gap = static_cast<long long>(order(intersect(i, j))) -
                             static_cast<long long>(std::max(order(i), order(j)));
            out.expect(gap >= 0 && gap <= 1,
                       show_pair(i, j) + ": o(I ∩ J) - max order = " + std::to_string(gap));
          });
        }}},
      {"order-length",
       {enumerated(4),
        [](CampaignReport& r, const CampaignParams& p) {
          const auto ideals = enumerate_ideals_dim2(p.max_gen_degree);
          std::vector<char> full(ideals.size(), 0);
          sweep(0, ideals.size(), p.workers, [&](std::size_t k, Outcome&) {
            full[k] = fullness_checks(ideals[k]).conclusion == Conclusion::True ? 1 : 0;
          });
          std::vector<std::size_t> idx;
          for (std::size_t k = 0; k < ideals.size(); ++k)
            if (full[k]) idx.push_back(k);
          const std::size_t n = idx.size();
          r.population = "ordered pairs of full ideals of k[x,y], generator degree <= " +
                         std::to_string(p.max_gen_degree);
          exhaustive(r, n * n, p.workers, [&](std::size_t k, Outcome& out) {
            const auto& i = ideals[idx[k / n]];
            const auto& j = ideals[idx[k % n]];
            const auto s = order_length_sides(i, j);
            out.expect(s.equal(), show_pair(i, j) + ": o(I ∩ J) = " +
                                      std::to_string(s.meet_order) + ", max order + length = " +
                                      std::to_string(s.max_order + s.length));
          });
        }}},
      {"linear-quotients",
       {enumerated(6),
        [](CampaignReport& r, const CampaignParams& p) {
          const auto ideals = enumerate_ideals_dim2(p.max_gen_degree);
          r.population = "ideals of k[x,y], generator degree <= " + std::to_string(p.max_gen_degree);
          exhaustive(r, ideals.size(), p.workers, [&](std::size_t k, Outcome& out) {
            const auto& i = ideals[k];
            const bool cwl = componentwise_linear(i);
            const auto cert = cwl_ordering(i);
            if (cwl) {
              const bool ok = cert.ok() && validate_certificate(cert).holds();
              out.expect(ok, show(i) + ": componentwise linear but no valid certificate");
            } else {
              out.expect(!cert.ok() && !cert.failure->input_componentwise_linear,
                         show(i) + ": not componentwise linear but ordering succeeded");
            }
          });
        }}},
      {"full-mfull-cwl",
       {enumerated(5),
        [](CampaignReport& r, const CampaignParams& p) {
          const auto ideals = enumerate_ideals_dim2(p.max_gen_degree);
          r.population = "ideals of k[x,y], generator degree <= " + std::to_string(p.max_gen_degree);
          exhaustive(r, ideals.size(), p.workers, [&](std::size_t k, Outcome& out) {
            const auto v = fullness_checks(ideals[k]);
            const bool full = *v.flag("full"), m_full = *v.flag("m_full");
            const bool cwl = *v.flag("componentwise_linear");
            out.expect(full == m_full && full == cwl,
                       show(ideals[k]) + ": full " + std::to_string(full) + ", m-full " +
                           std::to_string(m_full) + ", cwl " + std::to_string(cwl));
          });
        }}},
      {"betti-oracles",
       {[] {
          auto q = sampled_params(200, 3, 4, 4, 8);
          q.max_gen_degree = 5;
          return q;
        }(),
        [](CampaignReport& r, const CampaignParams& p) {
          const auto ideals = enumerate_ideals_dim2(p.max_gen_degree);
          r.population = "ideals of k[x,y] with generator degree <= " +
                         std::to_string(p.max_gen_degree) + ", plus " + std::to_string(p.count) +
                         " random ideals in arity " + std::to_string(p.min_arity) + ".." +
                         std::to_string(p.max_arity) + " (degree <= 4, mu <= " +
                         std::to_string(p.mu_max) + ")";
          exhaustive(r, ideals.size() + p.count, p.workers, [&](std::size_t k, Outcome& out) {
            if (k < ideals.size()) {
              const auto& i = ideals[k];
              const auto koszul = betti(i);
              out.expect(koszul == betti_oracle_lcm_lattice(i), show(i) + ": lcm-lattice differs");
              out.expect(koszul == betti_oracle_dim2(i), show(i) + ": Hilbert-Burch differs");
            } else {
              Sampler s(p, k);
              const auto i = random_ideal(s.arity(), 4, p.mu_max, s.rng());
              out.expect(betti(i) == betti_oracle_lcm_lattice(i),
                         "arity " + std::to_string(i.arity()) + " " + show(i) +
                             ": lcm-lattice differs");
            }
          });
        }}},
      {"scaled-intersection",
       {sampled_params(500, 2, 4, 4, 5),
        [](CampaignReport& r, const CampaignParams& p) {
          r.population = "random I, J, f, g";
          sampled(r, p.count, p.workers, [&](std::size_t k, Outcome& out) {
            Sampler s(p, k);
            const auto n = s.arity();
            const auto i = s.ideal(n), j = s.ideal(n);
            const auto f = s.monomial(n, 3), g = s.monomial(n, 3);
            const auto l = lcm(f, g);
            const auto lhs = intersect(scale(f, i), scale(g, j));
            const auto rhs = scale(l, intersect(colon(i, l / f), colon(j, l / g)));
            out.expect(lhs == rhs, show_pair(i, j) + ", f = " + to_string(f, i.ring()) +
                                       ", g = " + to_string(g, i.ring()));
          });
        }}},
      {"distributivity",
       {sampled_params(500, 2, 4, 4, 5),
        [](CampaignReport& r, const CampaignParams& p) {
          r.population = "random A, B, C";
          sampled(r, p.count, p.workers, [&](std::size_t k, Outcome& out) {
            Sampler s(p, k);
            const auto n = s.arity();
            const auto a = s.ideal(n), b = s.ideal(n), c = s.ideal(n);
            out.expect(intersect(sum(a, b), c) == sum(intersect(a, c), intersect(b, c)),
                       "A = " + show(a) + ", B = " + show(b) + ", C = " + show(c));
          });
        }}},
      {"colon-assoc",
       {sampled_params(500, 2, 4, 4, 5),
        [](CampaignReport& r, const CampaignParams& p) {
          r.population = "random I, f, g";
          sampled(r, p.count, p.workers, [&](std::size_t k, Outcome& out) {
            Sampler s(p, k);
            const auto n = s.arity();
            const auto i = s.ideal(n);
            const auto f = s.monomial(n, 3), g = s.monomial(n, 3);
            out.expect(colon(colon(i, f), g) == colon(i, f * g),
                       "I = " + show(i) + ", f = " + to_string(f, i.ring()) +
                           ", g = " + to_string(g, i.ring()));
          });
        }}},
      {"oracle-ops",
       {sampled_params(500, 1, 3, 4, 4),
        [](CampaignReport& r, const CampaignParams& p) {
          r.population = "random I, J, f, j";
          sampled(r, p.count, p.workers, [&](std::size_t k, Outcome& out) {
            Sampler s(p, k);
            const auto n = s.arity();
            const auto i = s.ideal(n), j = s.ideal(n);
            const auto f = s.monomial(n, 3);
            const std::uint64_t deg = 1 + s.rng() % 6;
            auto lcm_all = [](const MonomialIdeal& x) {
              Monomial out(x.arity());
              for (const auto& g : x.gens()) out = lcm(out, g);
              return out;
            };
            const std::uint64_t bound = lcm(lcm_all(i), lcm_all(j)).degree();
            const auto who = show_pair(i, j);
            out.expect(oracle_op(OracleKind::Intersect, i, j, bound) == intersect(i, j),
                       who + ": intersect");
            out.expect(oracle_op(OracleKind::Sum, i, j, bound) == sum(i, j), who + ": sum");
            out.expect(oracle_op(OracleKind::Colon, i, f, bound) == colon(i, f),
                       who + ": colon by " + to_string(f, i.ring()));
            out.expect(oracle_op(OracleKind::Colon, i, j, bound) == colon(i, j),
                       who + ": colon by J");
            out.expect(oracle_op(OracleKind::Component, i, deg, deg) == component(i, deg),
                       who + ": component " + std::to_string(deg));
          });
        }}},
      {"reg-cwl-sum",
       {sampled_params(500, 2, 3, 4, 4),
        [](CampaignReport& r, const CampaignParams& p) {
          r.population = "random I, J with I + J componentwise linear";
          sampled(r, p.count, p.workers, [&](std::size_t k, Outcome& out) {
            Sampler s(p, k);
            const auto n = s.arity();
            const auto i = s.ideal(n), j = s.ideal(n);
            const auto meet = intersect(i, j);
            if (!componentwise_linear(sum(i, j))) return;
            const long long bound = std::max(regularity(i).reg, regularity(j).reg) + 1;
            const long long reg = regularity(meet).reg;
            out.expect(reg <= bound, show_pair(i, j) + ": reg(I ∩ J) = " + std::to_string(reg));
          });
        }}},
      {"reg-colon-degree",
       {sampled_params(500, 2, 3, 4, 4),
        [](CampaignReport& r, const CampaignParams& p) {
          r.population = "random m-primary I and monomial f";
          sampled(r, p.count, p.workers, [&](std::size_t k, Outcome& out) {
            Sampler s(p, k);
            const auto n = s.arity();
            const auto i = s.m_primary(n);
            const long long reg = regularity(i).reg;
            const auto f = s.monomial(n, static_cast<std::uint64_t>(reg) + 2);
            const long long lhs = reg_or_zero(colon(i, f)) + static_cast<long long>(f.degree());
            const bool inequality = lhs <= reg;
            const bool degree_ok = static_cast<long long>(f.degree()) <= reg;
            out.expect(inequality == degree_ok,
                       "I = " + show(i) + ", f = " + to_string(f, i.ring()));
          });
        }}},
      {"reg-primary-intersection",
       {sampled_params(500, 2, 3, 4, 4),
        [](CampaignReport& r, const CampaignParams& p) {
          r.population = "random m-primary I, J";
          sampled(r, p.count, p.workers, [&](std::size_t k, Outcome& out) {
            Sampler s(p, k);
            const auto n = s.arity();
            const auto i = s.m_primary(n), j = s.m_primary(n);
            const long long reg = regularity(intersect(i, j)).reg;
            out.expect(reg <= std::max(regularity(i).reg, regularity(j).reg),
                       show_pair(i, j) + ": reg(I ∩ J) = " + std::to_string(reg));
          });
        }}},
      {"reg-nonprincipal-intersection",
       {sampled_params(500, 2, 2, 4, 4),
        [](CampaignReport& r, const CampaignParams& p) {
          r.population = "random f I', g J' in k[x,y] with I ∩ J not principal";
          sampled(r, p.count, p.workers, [&](std::size_t k, Outcome& out) {
            Sampler s(p, k);
            const auto i = scale(s.monomial(2, 2), s.ideal(2));
            const auto j = scale(s.monomial(2, 2), s.ideal(2));
            const auto meet = intersect(i, j);
            if (meet.is_principal()) return;
            const long long reg = regularity(meet).reg;
            out.expect(reg <= std::max(regularity(i).reg, regularity(j).reg),
                       show_pair(i, j) + ": reg(I ∩ J) = " + std::to_string(reg));
          });
        }}},
      {"fullset-assembly",
       {sampled_params(1000, 2, 4, 0, 0),
        [](CampaignReport& r, const CampaignParams& p) {
          r.population = "random full sets with monotone power assignments";
          sampled(r, p.count, p.workers, [&](std::size_t k, Outcome& out) {
            Sampler s(p, k);
            const auto inst = random_power_instance(s.arity(), s.rng());
            const auto assignment = power_assignment(inst.set, inst.powers);
            std::string who = "set {";
            for (const auto& [f, a] : inst.powers)
              who += " " + to_string(f, inst.set.ring()) + ":" + std::to_string(a);
            who += " }";
            out.expect(is_full(inst.set).holds(), who + ": generated set is not full");
            out.expect(validate_assignment(inst.set, assignment).holds(),
                       who + ": generated assignment is invalid");
            const auto ideal = assemble(inst.set, assignment);
            out.expect(componentwise_linear(ideal),
                       who + ": assembled " + show(ideal) + " is not componentwise linear");
            if (inst.set.size() >= 2)
              out.expect(check_intersection_identity(inst.set, assignment).holds(),
                         who + ": intersection identity fails");
          });
        }}},
      {"mu-additive",
       {enumerated(4),
        [](CampaignReport& r, const CampaignParams& p) {
          cwl_pairs(r, p, [](const MonomialIdeal& i, const MonomialIdeal& j, Outcome& out) {
            if (sum(i, j).mu() != i.mu() + j.mu()) return;
            const auto v = mu_additive_verdict(i, j);
            out.expect(v.applicable && !v.mismatch, show_pair(i, j));
          });
        }}},
      {"reg-plus-one",
       {enumerated(4),
        [](CampaignReport& r, const CampaignParams& p) {
          cwl_pairs(r, p, [](const MonomialIdeal& i, const MonomialIdeal& j, Outcome& out) {
            const auto v = reg_plus_one_verdict(i, j);
            if (!v.applicable) return;
            out.expect(!v.mismatch, show_pair(i, j) + ": criterion " + to_string(v.conclusion));
          });
        }}},
      {"linear-colon",
       {enumerated(4),
        [](CampaignReport& r, const CampaignParams& p) {
          const auto pop = population_dim2(p.max_gen_degree, p.workers);
          r.population = "componentwise linear I of k[x,y] and monomials f of degree o(I).." +
                         std::to_string(p.max_gen_degree + 1);
          exhaustive(r, pop.cwl_index.size(), p.workers, [&](std::size_t k, Outcome& out) {
            const auto& i = pop.ideals[pop.cwl_index[k]];
            for (auto d = order(i); d <= p.max_gen_degree + 1; ++d)
              for (const auto& f : monomials_of_degree(2, d)) {
                if (i.contains(f)) continue;
                if (sum(i, MonomialIdeal::principal(i.ring(), f)).mu() != i.mu() + 1) continue;
                const auto v = linear_colon_tests(i, f);
                out.expect(v.applicable && !v.mismatch,
                           show(i) + ", f = " + to_string(f, i.ring()));
              }
          });
        }}},
      {"componentwise",
       {sampled_params(200, 2, 3, 3, 4),
        [](CampaignReport& r, const CampaignParams& p) {
          r.population = "random componentwise linear I, J";
          sampled(r, p.count, p.workers, [&](std::size_t k, Outcome& out) {
            Sampler s(p, k);
            const auto n = s.arity();
            const auto i = s.ideal(n), j = s.ideal(n);
            if (!componentwise_linear(i) || !componentwise_linear(j)) return;
            const auto v = check_componentwise_criterion(i, j);
            out.expect(!v.mismatch, show_pair(i, j) + ": criterion " + to_string(v.conclusion));
          });
        }}},
      {"m-power",
       {sampled_params(200, 2, 3, 3, 4),
        [](CampaignReport& r, const CampaignParams& p) {
          r.population = "random componentwise linear I, J with I ∩ J ⊆ mI ∩ mJ";
          sampled(r, p.count, p.workers, [&](std::size_t k, Outcome& out) {
            Sampler s(p, k);
            const auto n = s.arity();
            const auto i = s.ideal(n), j = s.ideal(n);
            if (!componentwise_linear(i) || !componentwise_linear(j)) return;
            const auto v = check_m_power_criterion(i, j);
            if (!v.applicable) return;
            out.expect(!v.mismatch, show_pair(i, j) + ": criterion " + to_string(v.conclusion));
          });
        }}},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& campaign_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [id, entry] : registry()) out.push_back(id);
    return out;
  }();
  return ids;
}

CampaignParams default_params(const std::string& id) {
  const auto it = registry().find(id);
  if (it == registry().end()) throw Error(ErrorCode::InvalidArgument, "unknown campaign: " + id);
  return it->second.defaults;
}

CampaignReport run_campaign(const std::string& id, CampaignParams params) {
  const auto it = registry().find(id);
  if (it == registry().end()) throw Error(ErrorCode::InvalidArgument, "unknown campaign: " + id);
  const auto& d = it->second.defaults;
  if (params.max_gen_degree == 0) params.max_gen_degree = d.max_gen_degree;
  if (params.count == 0) params.count = d.count;
  if (params.mu_max == 0) params.mu_max = d.mu_max;
  if (params.min_arity == 0) params.min_arity = d.min_arity ? d.min_arity : 2;
  if (params.max_arity == 0) params.max_arity = std::max(params.min_arity, d.max_arity);
  if (params.min_arity < 1 || params.max_arity < params.min_arity ||
      params.max_arity > kMaxArity)
    throw Error(ErrorCode::InvalidArgument, "bad arity range");
  params.workers = worker_count(params.workers);

  CampaignReport report;
  report.campaign = id;
  report.min_arity = params.min_arity;
  report.max_arity = params.max_arity;
  report.max_gen_degree = params.max_gen_degree;
  if (params.count) report.bounds["count"] = static_cast<long long>(params.count);
  report.bounds["seed"] = static_cast<long long>(params.seed);
  const auto start = std::chrono::steady_clock::now();
  it->second.run(report, params);
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace cwl
