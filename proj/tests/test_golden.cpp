#include <gtest/gtest.h>

#include <chrono>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cwl/document.hpp"

using namespace cwl;
namespace fs = std::filesystem;

namespace {

std::vector<std::string> corpus_names() {
  std::vector<std::string> out;
  for (const auto& e : fs::directory_iterator(CWL_CORPUS_DIR))
    if (e.path().extension() == ".ideal") out.push_back(e.path().stem().string());
  std::sort(out.begin(), out.end());
  return out;
}

class Golden : public ::testing::TestWithParam<std::string> {};

}  // namespace

TEST_P(Golden, EveryExpectationHolds) {
  std::ifstream in(fs::path(CWL_CORPUS_DIR) / (GetParam() + ".ideal"));
  std::stringstream ss;
  ss << in.rdbuf();
  const auto start = std::chrono::steady_clock::now();
  const auto doc = parse(ss.str());
  const auto expectations = doc.expectations();
  ASSERT_FALSE(expectations.empty());
  for (const auto* e : expectations)
    EXPECT_EQ(evaluate(doc, *e), e->expected) << to_string(*e, doc.ring) << "  got "
                                              << to_string(evaluate(doc, *e), doc.ring);
  const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
  EXPECT_LT(took.count(), 1.0);
}

INSTANTIATE_TEST_SUITE_P(Corpus, Golden, ::testing::ValuesIn(corpus_names()),
                         [](const auto& info) { return info.param; });

TEST(GoldenCorpus, HasAtLeastTwelveDocuments) { EXPECT_GE(corpus_names().size(), 12u); }
