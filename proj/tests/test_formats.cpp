#include <algorithm>
#include <cstdlib>

#include "doctest.h"
#include "helpers.hpp"
#include "matroidal/corpus.hpp"
#include "matroidal/formats.hpp"

using namespace matroidal;
using namespace testutil;

namespace {

Errc schema_code(const std::string& text) {
  try {
    parse_matroid_expr(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected a parse failure");
  return Errc::invalid_argument;
}

std::string schema_where(const std::string& text) {
  try {
    parse_matroid_expr(text);
  } catch (const Error& e) {
    return e.where();
  }
  return "";
}

}  // namespace

TEST_SUITE("formats") {

TEST_CASE("matroid expressions evaluate") {
  Matroid u = parse_matroid_expr(R"({"op":"uniform","r":2,"n":4})");
  CHECK(u.canonical_key() == Matroid::uniform(2, 4).canonical_key());

  Matroid f = parse_matroid_expr(R"({"op":"fano"})");
  CHECK(f.rank() == 3);
  CHECK(f.bases().size() == 28);

  Matroid b = parse_matroid_expr(
      R"({"op":"bases","labels":["a","b","c"],"bases":[["a","b"],["a","c"]]})");
  CHECK(b.rank() == 2);
  CHECK(b.bases() == std::vector<Mask>{mk({0, 1}), mk({0, 2})});
  CHECK(b.labels() == std::vector<std::string>{"a", "b", "c"});

  Matroid by_index = parse_matroid_expr(R"({"op":"bases","n":3,"bases":[[1,2],[1,3]]})");
  CHECK(by_index.bases() == b.bases());

  Matroid d = parse_matroid_expr(R"({"op":"dual","of":{"op":"uniform","r":1,"n":3}})");
  CHECK(d.canonical_key() == Matroid::uniform(2, 3).canonical_key());

  Matroid c = parse_matroid_expr(
      R"({"op":"contract","of":{"op":"uniform","r":2,"n":4},"set":[1]})");
  CHECK(c.ground() == mk({1, 2, 3}));
  CHECK(c.rank() == 1);

  Matroid t = parse_matroid_expr(
      R"({"op":"truncate","of":{"op":"uniform","r":3,"n":5},"rank":2})");
  CHECK(t.canonical_key() == Matroid::uniform(2, 5).canonical_key());

  Matroid s = parse_matroid_expr(
      R"({"op":"direct_sum","left":{"op":"uniform","r":1,"n":2},)"
      R"("right":{"op":"bases","labels":["y1","y2","y3"],)"
      R"("bases":[["y1","y2"],["y1","y3"],["y2","y3"]]}})");
  CHECK(s.n() == 5);
  CHECK(s.rank() == 3);
  // Summands reuse the default labels, so the sum must be spelled with
  // explicitly distinct names.
  CHECK(schema_code(
            R"({"op":"direct_sum","left":{"op":"uniform","r":1,"n":2},)"
            R"("right":{"op":"uniform","r":2,"n":3}})") == Errc::invalid_argument);

  Matroid del = parse_matroid_expr(
      R"({"op":"delete","of":{"op":"uniform","r":2,"n":4},"set":[4]})");
  CHECK(del.ground() == mk({0, 1, 2}));
  CHECK(del.rank() == 2);
}

TEST_CASE("schema errors carry json pointers") {
  CHECK(schema_code("{") == Errc::schema_error);
  CHECK(schema_code(R"({"op":"nope"})") == Errc::schema_error);
  CHECK(schema_code(R"({"op":"uniform","r":2})") == Errc::schema_error);
  CHECK(schema_code(R"({"op":"uniform","r":5,"n":3})") == Errc::schema_error);
  CHECK(schema_code(R"({"op":"bases","n":3,"bases":[]})") == Errc::empty_basis_set);
  CHECK(schema_code(R"({"op":"bases","n":3,"bases":[[1],[2,3]]})") ==
        Errc::exchange_axiom_violation);
  CHECK(schema_code(R"({"op":"bases","n":3,"bases":[[4]]})") == Errc::schema_error);
  CHECK(schema_where(R"({"op":"dual","of":{"op":"uniform","r":2}})")
            .find("/of") != std::string::npos);
  CHECK(schema_code(R"({"op":"contract","of":{"op":"uniform","r":2,"n":4},"set":[1,2,3]})") ==
        Errc::contract_dependent_set);
}

TEST_CASE("ground set cap is enforced and adjustable") {
  CHECK(ground_set_cap() == 12);
  CHECK(schema_code(R"({"op":"uniform","r":2,"n":13})") == Errc::size_bound_exceeded);
  setenv("MR_MAX_GROUND_SET", "14", 1);
  CHECK(ground_set_cap() == 14);
  CHECK_NOTHROW(parse_matroid_expr(R"({"op":"uniform","r":1,"n":13})"));
  setenv("MR_MAX_GROUND_SET", "999", 1);
  CHECK(ground_set_cap() == 31);  // clamped to the mask width
  unsetenv("MR_MAX_GROUND_SET");
  CHECK(ground_set_cap() == 12);
}

TEST_CASE("matroid serialization round-trips") {
  for (const auto& e : bundled_corpus()) {
    Matroid back = parse_matroid_expr(matroid_to_json(e.matroid));
    CHECK(back.n() == e.matroid.n());
    CHECK(back.ground() == e.matroid.ground());
    CHECK(back.bases() == e.matroid.bases());
    CHECK(back.labels() == e.matroid.labels());
  }
}

TEST_CASE("monomial text round-trips") {
  auto names = default_names(4);
  CHECK(names == std::vector<std::string>{"x1", "x2", "x3", "x4"});
  CHECK(parse_monomial("x1^2*x3", names) == mono(4, "x1^2*x3"));
  CHECK(monomial_to_text(mono(4, "x1^2*x3"), names) == "x1^2*x3");
  CHECK(monomial_to_text(Monomial::one(4), names) == "1");
  CHECK(parse_monomial("1", names) == Monomial::one(4));
  std::vector<std::string> ab = {"a", "b"};
  CHECK(monomial_to_text(parse_monomial("a*b^3", ab), ab) == "a*b^3");
  CHECK(thrown_code([&] { parse_monomial("x5", names); }) == Errc::schema_error);
  CHECK(parse_monomial("x1^0*x2", names) == mono(4, "x2"));
  CHECK(thrown_code([&] { parse_monomial("x1^-1", names); }) == Errc::schema_error);
}

TEST_CASE("ideal text round-trips and infers the variable count") {
  MonomialIdeal i = ideal_from_text("x1*x2, x3^2");
  CHECK(i.n() == 3);
  CHECK(i == ideal(3, "x1*x2, x3^2"));
  CHECK(ideal_from_text("0").is_zero());
  CHECK(ideal_from_text("1", default_names(2)) == MonomialIdeal::unit(2));
  CHECK(ideal_to_text(ideal(3, "x1*x2, x3^2")) == "x1*x2, x3^2");
  CHECK(ideal_to_text(MonomialIdeal::zero(2)) == "0");
  CHECK(ideal_from_text("x1*x2\nx3^2") == i);

  for (const auto& e : bundled_corpus()) {
    MonomialIdeal j = cover_ideal(e.matroid);
    CHECK(ideal_from_json(ideal_to_json(j)) == j);
    if (!j.is_zero())
      CHECK(ideal_from_text(ideal_to_text(j, e.matroid.labels()), e.matroid.labels()) == j);
  }
}

TEST_CASE("betti tables round-trip through json") {
  BettiTable t(3);
  t.add(1, mono(3, "x1*x2"));
  t.add(1, mono(3, "x1*x3"));
  t.add(2, mono(3, "x1*x2*x3"), 2);
  CHECK(betti_from_json(betti_to_json(t)) == t);

  std::string text = betti_to_text(t);
  CHECK(text.find("x1*x2*x3") != std::string::npos);
  CHECK(text.find('2') != std::string::npos);
  // An empty table still prints its header row.
  std::string header_only = betti_to_text(BettiTable(2));
  CHECK(header_only.find("multidegree") != std::string::npos);
  CHECK(std::count(header_only.begin(), header_only.end(), '\n') == 1);
}

TEST_CASE("serialized output is byte-stable") {
  Matroid m = sample_matroid_a();
  CHECK(matroid_to_json(m) == matroid_to_json(m));
  std::string once = ideal_to_json(cover_ideal(m));
  CHECK(once == ideal_to_json(cover_ideal(sample_matroid_a())));
}

}  // TEST_SUITE
