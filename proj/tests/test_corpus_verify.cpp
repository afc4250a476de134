#include <algorithm>
#include <set>

#include <nlohmann/json.hpp>

#include "doctest.h"
#include "helpers.hpp"
#include "matroidal/corpus.hpp"
#include "matroidal/resolution.hpp"
#include "matroidal/verify.hpp"

using namespace matroidal;
using namespace testutil;

TEST_SUITE("corpus") {

TEST_CASE("the bundled corpus is well formed") {
  auto corpus = bundled_corpus();
  CHECK(corpus.size() == 30);
  std::set<std::string> names;
  std::set<std::string> keys;
  for (const auto& e : corpus) {
    CHECK(names.insert(e.name).second);
    keys.insert(e.matroid.canonical_key());
    CHECK(!e.matroid.bases().empty());
    CHECK(popcount(e.matroid.ground()) <= 7);
  }
  // Distinct names may repeat a matroid only through different constructions;
  // the corpus still spans many distinct isomorphism-free keys.
  CHECK(keys.size() >= 28);
}

TEST_CASE("sample matroids match their stated basis sets") {
  Matroid a = sample_matroid_a();
  CHECK(a.labels() == std::vector<std::string>{"a", "b", "c", "d", "e"});
  CHECK(a.rank() == 3);
  std::vector<Mask> expect_a = {mk({0, 1, 2}), mk({0, 1, 3}), mk({0, 1, 4}),
                                mk({0, 2, 3}), mk({0, 2, 4}), mk({1, 2, 3}),
                                mk({1, 3, 4}), mk({2, 3, 4})};
  std::sort(expect_a.begin(), expect_a.end());
  auto ba = a.bases();
  std::sort(ba.begin(), ba.end());
  CHECK(ba == expect_a);

  Matroid b = sample_matroid_b();
  CHECK(b.rank() == 3);
  for (Mask basis : b.bases()) {
    CHECK(popcount(basis) == 3);
    CHECK(popcount(basis & mk({0, 1, 2})) >= 2);
  }
  CHECK(b.bases().size() == 7);
}

TEST_CASE("seeded corpora are reproducible and valid") {
  auto first = random_corpus(11, 12);
  auto second = random_corpus(11, 12);
  REQUIRE(first.size() == 12);
  REQUIRE(second.size() == 12);
  std::set<std::string> keys;
  for (size_t i = 0; i < first.size(); ++i) {
    CHECK(first[i].matroid.canonical_key() == second[i].matroid.canonical_key());
    CHECK(keys.insert(first[i].matroid.canonical_key()).second);
    CHECK(first[i].matroid.loopless());
    CHECK(popcount(first[i].matroid.ground()) <= 7);
  }
  auto other = random_corpus(12, 12);
  bool any_difference = false;
  for (size_t i = 0; i < other.size(); ++i)
    any_difference |= other[i].matroid.canonical_key() != first[i].matroid.canonical_key();
  CHECK(any_difference);
}

TEST_CASE("seeded negative controls fail the circuit axioms") {
  auto ideals = random_non_matroidal_ideals(5, 10);
  REQUIRE(ideals.size() == 10);
  for (const auto& j : ideals) {
    CHECK(j.is_squarefree());
    CHECK(j.gens().size() >= 2);
    CHECK(height(j) >= 2);
    std::vector<Mask> supports;
    for (const auto& g : j.gens()) supports.push_back(g.support());
    CHECK(!circuit_axioms_hold(supports));
    CHECK(!matroidal_check(j).matroidal);
  }
  auto again = random_non_matroidal_ideals(5, 10);
  CHECK(again == ideals);
}

}  // TEST_SUITE

TEST_SUITE("verification") {

TEST_CASE("the verification run passes on a small corpus") {
  std::vector<CorpusEntry> corpus;
  for (auto& e : bundled_corpus())
    if (popcount(e.matroid.ground()) <= 5) corpus.push_back(e);
  VerificationReport r = run_verification(corpus, {"A", "B", "C"}, 3, "unit");
  CHECK(r.pass());
  CHECK(r.corpus_id == "unit");
  CHECK(r.seed == 3);
  REQUIRE(r.outcomes.size() == 3);
  for (const auto& o : r.outcomes) {
    CHECK(o.pass);
    CHECK(o.checked > 0);
    CHECK(o.notes.empty());
  }
  CHECK(r.elapsed_ms >= 0);
  CHECK(!r.notes.empty());
}

TEST_CASE("unknown theorem selectors are rejected") {
  CHECK(thrown_code([] {
          return run_verification(bundled_corpus(), {"D"}, 1, "x");
        }) == Errc::invalid_argument);
}

TEST_CASE("the report serializes to machine-readable json") {
  std::vector<CorpusEntry> corpus = {{"triangle", Matroid::uniform(2, 3)}};
  VerificationReport r = run_verification(corpus, {"A"}, 9, "tiny");
  nlohmann::json j = nlohmann::json::parse(report_to_json(r));
  CHECK(j["corpus"] == "tiny");
  CHECK(j["seed"] == 9);
  CHECK(j["pass"] == true);
  REQUIRE(j["theorems"].is_array());
  CHECK(j["theorems"][0]["theorem"] == "A");
  CHECK(j["theorems"][0]["checked"].get<int>() >= 1);
}

}  // TEST_SUITE
