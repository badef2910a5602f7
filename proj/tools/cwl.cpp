// Command-line front end. Exit codes: 0 completed, 1 usage or other error,
// 2 parse error, 3 precondition failure (or an inapplicable verdict with
// --strict), 4 internal cross-check mismatch.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cwl/criteria.hpp"
#include "cwl/dim2.hpp"
#include "cwl/document.hpp"
#include "cwl/error.hpp"
#include "cwl/fullset.hpp"
#include "cwl/report.hpp"
#include "cwl/resolution.hpp"
#include "cwl/verify.hpp"

namespace {

using namespace cwl;

enum Exit { kOk = 0, kOther = 1, kParse = 2, kPrecondition = 3, kMismatch = 4 };

struct Options {
  std::string file;
  std::string expr;
  std::string ring;
  bool json = false;
  bool strict = false;
  std::optional<long long> t_max;
  std::optional<long long> s_max;
  std::optional<std::uint64_t> d_max;
  std::uint64_t seed = 1;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// The input document: a file, -e text, or just a ring from --ring.
IdealDocument load(const Options& o) {
  if (!o.file.empty()) return parse(read_file(o.file));
  if (!o.expr.empty()) return parse(o.expr);
  if (!o.ring.empty()) return parse("ring " + o.ring + ";");
  throw Error(ErrorCode::InvalidArgument, "no input: give a file, -e TEXT or --ring NAMES");
}

// An operand is an ideal name from the document, @m for the maximal ideal,
// or an inline generator list.
MonomialIdeal operand(const IdealDocument& doc, const std::string& text) {
  if (const auto* i = doc.ideal(text)) return *i;
  if (text == "@m") return MonomialIdeal::maximal(doc.ring);
  return parse_ideal(text, doc.ring);
}

class Runner {
 public:
  explicit Runner(const Options& o) : o_(o) {}

  int verdict(const Verdict& v) {
    if (o_.json) {
      std::cout << dump(to_json(v)) << "\n";
    } else {
      std::cout << v.criterion << ": "
                << (v.applicable ? to_string(v.conclusion) : "not applicable") << "\n";
      if (v.direct) std::cout << "  direct check: " << (*v.direct ? "true" : "false") << "\n";
      for (const auto& w : v.witnesses) std::cout << "  " << w.description << ": " << w.value << "\n";
      for (const auto& [k, b] : v.bounds) std::cout << "  bound " << k << " = " << b << "\n";
      for (const auto& [k, f] : v.flags) std::cout << "  " << k << ": " << (f ? "true" : "false") << "\n";
      if (v.mismatch) std::cout << "  MISMATCH with the direct check\n";
    }
    return code(v);
  }

  int code(const Verdict& v) const {
    if (v.mismatch) return kMismatch;
    if (o_.strict && !v.applicable) return kPrecondition;
    return kOk;
  }

  int verdicts(const std::vector<Verdict>& vs) {
    int worst = kOk;
    if (o_.json) {
      Json arr = Json::array();
      for (const auto& v : vs) arr.push_back(to_json(v));
      std::cout << dump(arr) << "\n";
      for (const auto& v : vs) worst = std::max(worst, code(v));
      return worst;
    }
    for (const auto& v : vs) worst = std::max(worst, verdict(v));
    return worst;
  }

  int ideal(const MonomialIdeal& i) {
    if (o_.json) std::cout << dump(to_json(i)) << "\n";
    else std::cout << (i.is_zero() ? "0" : to_string(i)) << "\n";
    return kOk;
  }

 private:
  const Options& o_;
};

int run(int argc, char** argv) {
  CLI::App app{"Componentwise linearity of sums of monomial ideals"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("-f,--file", o.file, "input document");
  app.add_option("-e,--expr", o.expr, "input document given inline");
  app.add_option("--ring", o.ring, "variable names when no document is given, e.g. \"x y\"");
  app.add_flag("--json", o.json, "JSON output");
  app.add_flag("--strict", o.strict, "exit 3 when a criterion does not apply");
  app.add_option("--t-max", o.t_max, "last t scanned by the componentwise criterion");
  app.add_option("--s-max", o.s_max, "last s scanned by s-indexed criteria");
  app.add_option("--d-max", o.d_max, "last degree compared by graded checks");
  app.add_option("--seed", o.seed, "campaign seed");

  Runner out(o);
  std::function<int()> action;
  std::string a, b, id, criteria = "all", oracle = "koszul";
  std::uint64_t degree = 0;
  std::size_t count = 0, workers = 0;
  bool force = false;

  auto* cwl_cmd = app.add_subcommand("check-cwl", "componentwise linearity of an ideal");
  cwl_cmd->add_option("ideal", a)->required();
  cwl_cmd->callback([&] {
    action = [&] { return out.verdict(is_componentwise_linear(operand(load(o), a))); };
  });

  auto* betti_cmd = app.add_subcommand("betti", "multigraded Betti numbers");
  betti_cmd->add_option("ideal", a)->required();
  betti_cmd->add_option("--oracle", oracle, "koszul, lattice or dim2")
      ->check(CLI::IsMember({"koszul", "lattice", "dim2"}));
  betti_cmd->callback([&] {
    action = [&] {
      const auto i = operand(load(o), a);
      const auto t = oracle == "koszul"   ? betti(i)
                     : oracle == "lattice" ? betti_oracle_lcm_lattice(i)
                                           : betti_oracle_dim2(i);
      if (o.json) {
        std::cout << dump(to_json(t)) << "\n";
      } else {
        for (const auto& e : t.entries())
          std::cout << "beta_" << e.homological_degree << "," << to_string(e.multidegree, i.ring())
                    << " = " << e.rank << "\n";
      }
      return int{kOk};
    };
  });

  auto* reg_cmd = app.add_subcommand("reg", "Castelnuovo-Mumford regularity");
  reg_cmd->add_option("ideal", a)->required();
  reg_cmd->callback([&] {
    action = [&] {
      const auto i = operand(load(o), a);
      const auto r = regularity(i);
      if (o.json) std::cout << dump(to_json(r, i.ring())) << "\n";
      else std::cout << r.reg << "\n";
      return int{kOk};
    };
  });

  for (const char* name : {"intersect", "colon", "sum"}) {
    auto* cmd = app.add_subcommand(name, std::string(name) + " of two ideals");
    cmd->add_option("a", a)->required();
    cmd->add_option("b", b)->required();
    cmd->callback([&, n = std::string(name)] {
      action = [&, n] {
        const auto doc = load(o);
        const auto x = operand(doc, a), y = operand(doc, b);
        return out.ideal(n == "intersect" ? intersect(x, y) : n == "sum" ? sum(x, y) : colon(x, y));
      };
    });
  }

  auto* comp_cmd = app.add_subcommand("component", "ideal generated by the degree-j part");
  comp_cmd->add_option("ideal", a)->required();
  comp_cmd->add_option("degree", degree)->required();
  comp_cmd->callback([&] {
    action = [&] { return out.ideal(component(operand(load(o), a), degree)); };
  });

  auto* sum_cmd = app.add_subcommand("sum-check", "criteria for I + J");
  sum_cmd->add_option("i", a)->required();
  sum_cmd->add_option("j", b)->required();
  sum_cmd->add_option("--criteria", criteria, "full_sum, m_power, componentwise or all")
      ->check(CLI::IsMember({"full_sum", "m_power", "componentwise", "all"}));
  sum_cmd->callback([&] {
    action = [&] {
      const auto doc = load(o);
      const auto i = operand(doc, a), j = operand(doc, b);
      std::vector<Verdict> vs;
      if (criteria == "full_sum" || (criteria == "all" && i.arity() == 2))
        vs.push_back(full_sum_verdict(i, j));
      if (criteria == "m_power" || criteria == "all") vs.push_back(check_m_power_criterion(i, j, o.s_max));
      if (criteria == "componentwise" || criteria == "all")
        vs.push_back(check_componentwise_criterion(i, j, o.t_max));
      return out.verdicts(vs);
    };
  });

  auto* order_cmd = app.add_subcommand("order", "linear-quotients ordering certificate (k[x,y])");
  order_cmd->add_option("ideal", a)->required();
  order_cmd->callback([&] {
    action = [&] {
      const auto cert = cwl_ordering(operand(load(o), a));
      const auto check = validate_certificate(cert);
      if (o.json) {
        Json j = to_json(cert);
        j["validation"] = to_json(check);
        std::cout << dump(j) << "\n";
      } else if (cert.ok()) {
        const auto& ring = cert.ideal.ring();
        std::cout << "order:";
        for (const auto& f : cert.order) std::cout << " " << to_string(f, ring);
        std::cout << "\ncolon variables:";
        for (auto z : cert.colon_variables) std::cout << " " << ring.name(z);
        std::cout << "\nvalid: " << to_string(check.conclusion) << "\n";
      } else {
        std::cout << "no ordering: stuck at step " << cert.failure->step
                  << "; ideal componentwise linear: "
                  << (cert.failure->input_componentwise_linear ? "true" : "false") << "\n";
      }
      if (cert.ok() && check.conclusion != Conclusion::True) return int{kMismatch};
      if (!cert.ok() && cert.failure->input_componentwise_linear) return int{kMismatch};
      if (!cert.ok() && o.strict) return int{kPrecondition};
      return int{kOk};
    };
  });

  auto* fs_cmd = app.add_subcommand("fullset", "full-set assignments");
  fs_cmd->require_subcommand(1);
  auto* fs_validate = fs_cmd->add_subcommand("validate", "check a full set and its assignment");
  fs_validate->add_option("name", a)->required();
  fs_validate->callback([&] {
    action = [&] {
      const auto doc = load(o);
      const auto* set = doc.fullset(a);
      if (!set) throw Error(ErrorCode::InvalidArgument, "no full set named " + a);
      return out.verdicts({is_full(*set), validate_assignment(*set, doc.assignment(a))});
    };
  });
  auto* fs_assemble = fs_cmd->add_subcommand("assemble", "sum of f * I_f");
  fs_assemble->add_option("name", a)->required();
  fs_assemble->add_flag("--force", force, "assemble even if the assignment is invalid");
  fs_assemble->callback([&] {
    action = [&] {
      const auto doc = load(o);
      const auto* set = doc.fullset(a);
      if (!set) throw Error(ErrorCode::InvalidArgument, "no full set named " + a);
      return out.ideal(assemble(*set, doc.assignment(a), force));
    };
  });

  auto* camp_cmd = app.add_subcommand("campaign", "run a validation campaign");
  camp_cmd->add_option("id", id)->required()->check(CLI::IsMember(campaign_ids()));
  camp_cmd->add_option("--degree", degree, "generator degree bound");
  camp_cmd->add_option("--count", count, "sampled instances");
  camp_cmd->add_option("--workers", workers, "worker threads (0 = all cores)");
  camp_cmd->callback([&] {
    action = [&] {
      CampaignParams p;
      p.max_gen_degree = degree;
      p.count = count;
      p.seed = o.seed;
      p.workers = workers;
      const auto r = run_campaign(id, p);
      if (o.json) {
        std::cout << dump(to_json(r)) << "\n";
      } else {
        std::cout << r.campaign << ": " << r.checked << " checked, " << r.violations.size()
                  << " violations (" << r.wall_seconds << " s)\n";
        for (const auto& v : r.violations) std::cout << "  " << v << "\n";
      }
      return r.passed() ? int{kOk} : int{kMismatch};
    };
  });

  auto* full_cmd = app.add_subcommand("full-check", "full, m-full and componentwise linear");
  full_cmd->add_option("ideal", a)->required();
  full_cmd->callback([&] {
    action = [&] { return out.verdict(fullness_checks(operand(load(o), a), o.d_max)); };
  });

  auto* expect_cmd = app.add_subcommand("expect", "evaluate the expectations of a document");
  expect_cmd->callback([&] {
    action = [&] {
      const auto doc = load(o);
      int failures = 0;
      for (const auto* e : doc.expectations()) {
        const auto got = evaluate(doc, *e);
        const bool ok = got == e->expected;
        if (!ok) ++failures;
        std::cout << (ok ? "ok   " : "FAIL ") << to_string(*e, doc.ring);
        if (!ok) std::cout << "  (got " << to_string(got, doc.ring) << ")";
        std::cout << "\n";
      }
      return failures ? int{kMismatch} : int{kOk};
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kOther;
  }
  try {
    return action ? action() : kOther;
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    if (e.is_parse_error()) return kParse;
    switch (e.code()) {
      case ErrorCode::Precondition:
      case ErrorCode::ZeroIdeal:
      case ErrorCode::UnitIdeal:
      case ErrorCode::MixedRing:
        return kPrecondition;
      default:
        return kOther;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kOther;
  }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
