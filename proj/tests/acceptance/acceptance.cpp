// One PASS/FAIL line per acceptance criterion. Thresholds are fixed here:
// exact equality everywhere, wall-clock limits as listed per criterion.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "common/cli.hpp"
#include "common/support.hpp"
#include "cwl/error.hpp"
#include "cwl/fullset.hpp"
#include "cwl/resolution.hpp"
#include "cwl/verify.hpp"

using namespace cwl;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

struct Result {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

std::string fmt(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<fs::path> corpus_files() {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(CWL_CORPUS_DIR))
    if (e.path().extension() == ".ideal") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

// Runs campaigns with default parameters; each must pass, check at least
// `min_checked` instances and finish within `limit` seconds.
Result campaigns(const std::vector<std::string>& ids, std::size_t min_checked, double limit) {
  Result r;
  for (const auto& id : ids) {
    const auto rep = run_campaign(id);
    const bool ok = rep.passed() && rep.checked >= min_checked && rep.wall_seconds < limit;
    r.pass = r.pass && ok;
    r.detail += (r.detail.empty() ? "" : "; ") + id + " checked " + std::to_string(rep.checked) +
                " violations " + std::to_string(rep.violations.size()) + " in " + fmt(rep.wall_seconds);
    if (!rep.violations.empty()) r.detail += " first: " + rep.violations.front();
  }
  return r;
}

Result corpus() {
  Result r;
  const auto files = corpus_files();
  std::size_t expectations = 0;
  double slowest = 0;
  for (const auto& f : files) {
    const auto start = Clock::now();
    const auto doc = parse(slurp(f));
    for (const auto* e : doc.expectations()) {
      ++expectations;
      if (!(evaluate(doc, *e) == e->expected)) {
        r.pass = false;
        r.detail += f.filename().string() + ": " + to_string(*e, doc.ring) + " failed; ";
      }
    }
    slowest = std::max(slowest, seconds_since(start));
  }
  r.pass = r.pass && files.size() >= 12 && slowest < 1.0;
  r.detail += std::to_string(files.size()) + " documents, " + std::to_string(expectations) +
              " expectations, slowest " + fmt(slowest);
  return r;
}

Result fullset_assembly() {
  Result r = campaigns({"fullset-assembly"}, 1000, 900.0);
  const Ring xy = cwl::testing::ring_of("x y");
  const SquarefreeSet set(xy, {cwl::testing::T(xy, "x"), cwl::testing::T(xy, "y"),
                               cwl::testing::T(xy, "x*y")});
  for (long long a_xy : {4LL, 5LL}) {
    Assignment bad;
    bad.insert_or_assign(cwl::testing::T(xy, "x*y"), power(MonomialIdeal::maximal(xy), a_xy - 2));
    bad.insert_or_assign(cwl::testing::T(xy, "x"), cwl::testing::I(xy, "x^2"));
    bad.insert_or_assign(cwl::testing::T(xy, "y"), cwl::testing::I(xy, "y^2"));
    const bool invalid = validate_assignment(set, bad).fails();
    const auto forced = assemble(set, bad, true);
    const bool not_cwl = !componentwise_linear(forced);
    r.pass = r.pass && invalid && not_cwl;
    r.detail += "; a_xy=" + std::to_string(a_xy) + " forced (" + to_string(forced) + ")" +
                (invalid ? " invalid" : " VALID") + (not_cwl ? " not cwl" : " CWL");
  }
  return r;
}

Result parser_and_cli() {
  Result r;
  std::size_t round_trips = 0;
  for (const auto& f : corpus_files()) {
    const auto text = slurp(f);
    const auto doc = parse(text);
    const bool ok = print(doc) == text && parse(print(doc)) == doc;
    r.pass = r.pass && ok;
    round_trips += ok;
  }
  std::size_t codes = 0;
  for (const auto& [text, code] : cwl::testing::malformed_inputs()) {
    try {
      parse(text);
    } catch (const ParseError& e) {
      codes += e.code() == code;
    }
  }
  const auto n = cwl::testing::malformed_inputs().size();
  r.pass = r.pass && n >= 20 && codes == n;

  using cwl::testing::run_cli;
  using cwl::testing::shell_quote;
  const std::string doc = shell_quote("ring x y; ideal I = x^3, x*y, y^3;");
  const int ok = run_cli("-e " + doc + " check-cwl I").code;
  const int parse_err = run_cli("-e " + shell_quote("ring x y; ideal I = x2y;") + " reg I").code;
  const int strict = run_cli("--strict --ring 'x y' sum-check x^2 x^2 --criteria m_power").code;
  const int mismatch =
      run_cli("-e " + shell_quote("ring x y; ideal I = x^3, x*y, y^3; expect cwl(I) = false;") + " expect").code;
  r.pass = r.pass && ok == 0 && parse_err == 2 && strict == 3 && mismatch == 4;
  r.detail = std::to_string(round_trips) + " round trips, " + std::to_string(codes) + "/" +
             std::to_string(n) + " malformed inputs with the right code, exit codes " +
             std::to_string(ok) + "/" + std::to_string(parse_err) + "/" + std::to_string(strict) +
             "/" + std::to_string(mismatch) + " (want 0/2/3/4)";
  return r;
}

}  // namespace

int main() {
  const std::vector<std::pair<int, std::function<Result()>>> criteria = {
      {1, corpus},
      {2, [] { return campaigns({"betti-oracles"}, 427 + 200, 600.0); }},
      {3, [] { return campaigns({"full-sum"}, 1, 300.0); }},
      {4, [] { return campaigns({"linear-quotients"}, 1428, 600.0); }},
      {5, [] { return campaigns({"full-mfull-cwl"}, 427, 600.0); }},
      {6, [] { return campaigns({"order-length", "order-gap"}, 1, 600.0); }},
      {7, fullset_assembly},
      {8, [] {
         return campaigns({"scaled-intersection", "distributivity", "reg-cwl-sum", "reg-colon-degree", "reg-primary-intersection", "reg-nonprincipal-intersection"},
                          500, 600.0);
       }},
      {9, parser_and_cli},
  };
  bool all = true;
  for (const auto& [n, run] : criteria) {
    const auto start = Clock::now();
    Result r;
    try {
      r = run();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    all = all && r.pass;
    std::cout << "criterion " << n << ": " << (r.pass ? "PASS" : "FAIL") << "  [" << fmt(seconds_since(start))
              << "] " << r.detail << std::endl;
  }
  return all ? 0 : 1;
}
