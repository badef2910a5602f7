#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "common/cli.hpp"
#include "common/support.hpp"
#include "cwl/dim2.hpp"
#include "cwl/error.hpp"
#include "cwl/report.hpp"
#include "cwl/resolution.hpp"
#include "cwl/verify.hpp"

using namespace cwl;
using cwl::testing::I;
using cwl::testing::malformed_inputs;
using cwl::testing::ring_of;
using cwl::testing::run_cli;
using cwl::testing::shell_quote;
using cwl::testing::T;

namespace fs = std::filesystem;

namespace {

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

MonomialIdeal rehome(const MonomialIdeal& i, const Ring& ring) {
  return MonomialIdeal(ring, std::vector<Monomial>(i.gens().begin(), i.gens().end()));
}

// A random document built directly from the data types.
IdealDocument random_document(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Ring ring = ring_of(seed % 2 ? "x y z" : "u v");
  IdealDocument doc{ring, {}, {}, {}};
  if (rng() % 2) doc.ring_trivia = {"# generated " + std::to_string(seed), ""};
  const std::size_t ideals = 1 + rng() % 4;
  for (std::size_t k = 0; k < ideals; ++k) {
    std::vector<std::string> trivia;
    if (rng() % 3 == 0) trivia = {"# ideal " + std::to_string(k)};
    if (rng() % 4 == 0) trivia.push_back("");
    const auto ideal = rehome(random_ideal(ring.arity(), 4, 5, rng()), ring);
    doc.statements.push_back(Statement{std::move(trivia), IdealDecl{"I" + std::to_string(k), ideal}, 0});
  }
  const auto inst = random_power_instance(ring.arity(), rng());
  std::vector<Monomial> elements(inst.set.elements().begin(), inst.set.elements().end());
  const SquarefreeSet set(ring, elements);
  doc.statements.push_back(Statement{{}, FullsetDecl{"L", set}, 0});
  const auto assignment = power_assignment(inst.set, inst.powers);
  for (const auto& [f, ideal] : assignment)
    doc.statements.push_back(Statement{{}, AssignDecl{"L", f, rehome(ideal, ring)}, 0});

  const auto& first = std::get<IdealDecl>(doc.statements.front().body);
  std::vector<Expectation> ex;
  ex.push_back({"cwl", {ExpectArg{std::string("I0")}}, ExpectValue{std::string(rng() % 2 ? "true" : "false")}});
  ex.push_back({"betti", {ExpectArg{std::string("I0")}, ExpectArg{1LL}}, ExpectValue{static_cast<long long>(rng() % 9)}});
  ex.push_back({"colon_by", {ExpectArg{std::string("I0")}, ExpectArg{Monomial::variable(ring.arity(), 0, 2)}},
                ExpectValue{first.ideal}});
  ex.push_back({"assemble", {ExpectArg{std::string("L")}}, ExpectValue{std::string("precondition")}});
  ex.push_back({"mu", {ExpectArg{std::string("I0")}}, ExpectValue{3LL}});
  if (ring.arity() == 2)
    ex.push_back({"order_of", {ExpectArg{std::string("I0")}},
                  ExpectValue{std::vector<Monomial>(first.ideal.gens().begin(), first.ideal.gens().end())}});
  for (auto& e : ex) doc.statements.push_back(Statement{{}, std::move(e), 0});
  if (rng() % 2) doc.trailing_trivia = {"", "# end"};
  return doc;
}

}  // namespace

TEST(Parse, Examples) {
  const auto doc = parse("ring x y; ideal I = x^3, x*y, y^3;");
  ASSERT_NE(doc.ideal("I"), nullptr);
  EXPECT_EQ(doc.ring.arity(), 2u);
  EXPECT_EQ(generator_strings(*doc.ideal("I")), (std::vector<std::string>{"x*y", "x^3", "y^3"}));

  const auto cd = parse("ring a b c d; ideal J = a^2*b, a*b*c, b*c*d, c*d^2;");
  EXPECT_EQ(cd.ideal("J")->mu(), 4u);
  EXPECT_EQ(cd.ideal("J")->gens()[0].degree(), 3u);

  const auto with_set = parse("ring x y;\n# comment\nfullset L = { x, x*y };\nassign L[x] = x^2;\nassign L[x*y] = x, y;\n");
  ASSERT_NE(with_set.fullset("L"), nullptr);
  EXPECT_EQ(with_set.fullset("L")->size(), 2u);
  EXPECT_EQ(with_set.assignment("L").size(), 2u);
  EXPECT_EQ(with_set.statements.front().trivia, (std::vector<std::string>{"# comment"}));
  EXPECT_EQ(with_set.statements.front().line, 3u);

  EXPECT_EQ(parse_ideal("0", ring_of("x y")), MonomialIdeal::zero(ring_of("x y")));
  EXPECT_EQ(parse_ideal("1", ring_of("x y")), MonomialIdeal::unit(ring_of("x y")));
  EXPECT_EQ(parse_term("x^2*y*x", ring_of("x y")), Monomial({3, 1}));
}

TEST(Parse, MalformedInputsCarryTheirErrorCodes) {
  ASSERT_GE(malformed_inputs().size(), 20u);
  for (const auto& [text, code] : malformed_inputs()) {
    try {
      parse(text);
      ADD_FAILURE() << "accepted: " << text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.code(), code) << text << " -> " << e.what();
      EXPECT_TRUE(e.is_parse_error());
    }
  }
}

TEST(Parse, ErrorsAreSourceLocated) {
  try {
    parse("ring x y;\nideal I = x,\n  q;");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 3u);
    EXPECT_EQ(std::string(e.what()).rfind("3:3:", 0), 0u) << e.what();
  }
}

TEST(RoundTrip, PrintOfParseIsIdentityOnCorpus) {
  const auto files = corpus_files();
  ASSERT_GE(files.size(), 12u);
  for (const auto& f : files) {
    const auto text = slurp(f);
    EXPECT_EQ(print(parse(text)), text) << f;
  }
}

TEST(RoundTrip, ParseOfPrintIsIdentityOnGeneratedDocuments) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto doc = random_document(seed);
    const auto text = print(doc);
    ASSERT_EQ(parse(text), doc) << text;
  }
}

TEST(Json, FullSumVerdict) {
  const Ring xy = ring_of("x y");
  const auto v = full_sum_verdict(I(xy, "x^4, x^2*y^2, x^3*y, y^3"), I(xy, "x^4, x^2*y, x*y^2, y^4"));
  const auto j = to_json(v);
  std::vector<std::string> keys;
  for (const auto& [k, _] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"criterion", "applicable", "conclusion", "direct", "mismatch",
                                            "witnesses", "bounds", "flags", "inputs"}));
  EXPECT_EQ(j["conclusion"], true);
  EXPECT_EQ(j["applicable"], true);
  bool found = false;
  for (const auto& w : j["witnesses"])
    if (w["description"] == "(I+J):m") {
      found = true;
      EXPECT_EQ(w["ideal"], Json::array({"x*y", "y^2", "x^3"}));
    }
  EXPECT_TRUE(found);
  EXPECT_TRUE(j["inputs"].is_object());

  const auto n = to_json(full_sum_verdict(I(xy, "x^3, x^2*y^2, y^3"), I(xy, "x")));
  EXPECT_EQ(n["conclusion"], "inapplicable");
  EXPECT_EQ(n["applicable"], false);
}

TEST(Json, PrincipalBettiTable) {
  const Ring xy = ring_of("x y");
  const auto j = to_json(betti(I(xy, "x^3*y^4")));
  ASSERT_TRUE(j.contains("entries"));
  EXPECT_EQ(j["entries"].size(), 1u);
}

TEST(Json, CampaignRoundTrip) {
  CampaignParams p;
  p.max_gen_degree = 3;
  const auto report = run_campaign("full-mfull-cwl", p);
  const auto back = campaign_from_json(Json::parse(dump(to_json(report))));
  EXPECT_TRUE(back.same_outcome(report));
  EXPECT_DOUBLE_EQ(back.wall_seconds, report.wall_seconds);
  EXPECT_THROW(campaign_from_json(Json::parse(R"({"campaign": 3})")), Error);
}

TEST(Cli, ExitCodes) {
  const std::string doc = shell_quote("ring x y; ideal I = x^3, x*y, y^3; ideal B = x^3, x^2*y^2, y^3;");
  const auto ok = run_cli("-e " + doc + " check-cwl I");
  EXPECT_EQ(ok.code, 0);
  EXPECT_NE(ok.out.find("true"), std::string::npos);
  // A false verdict still completes normally.
  EXPECT_EQ(run_cli("-e " + doc + " check-cwl B").code, 0);
  EXPECT_EQ(run_cli("-e " + doc + " --json reg I").code, 0);

  EXPECT_EQ(run_cli("-e " + shell_quote("ring x y; ideal I = x2y;") + " reg I").code, 2);
  EXPECT_EQ(run_cli("-e " + shell_quote("ideal I = x;") + " reg I").code, 2);

  EXPECT_EQ(run_cli("--ring 'x y' reg 0").code, 3);
  EXPECT_EQ(run_cli("--strict --ring 'x y' sum-check x^2 x^2 --criteria m_power").code, 3);
  EXPECT_EQ(run_cli("--ring 'x y' sum-check x^2 x^2 --criteria m_power").code, 0);

  EXPECT_EQ(run_cli("-e " + shell_quote("ring x y; ideal I = x^3, x*y, y^3; expect cwl(I) = false;") + " expect").code, 4);
  EXPECT_EQ(run_cli("-e " + shell_quote("ring x y; ideal I = x^3, x*y, y^3; expect cwl(I) = true;") + " expect").code, 0);

  EXPECT_EQ(run_cli("no-such-command").code, 1);
}

TEST(Cli, JsonOutputParses) {
  const auto r = run_cli("--json --ring 'x y' sum-check 'x^4, x^2*y^2, x^3*y, y^3' 'x^4, x^2*y, x*y^2, y^4' --criteria full_sum");
  ASSERT_EQ(r.code, 0);
  const auto j = Json::parse(r.out);
  ASSERT_TRUE(j.is_array());
  EXPECT_EQ(j[0]["criterion"], "full_sum");
  EXPECT_EQ(j[0]["conclusion"], true);
}
