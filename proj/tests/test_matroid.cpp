#include <algorithm>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "matroidal/corpus.hpp"

using namespace matroidal;
using namespace testutil;

namespace {

long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace

TEST_SUITE("matroid") {

TEST_CASE("uniform matroids have all r-subsets as bases") {
  for (int n = 1; n <= 6; ++n)
    for (int r = 1; r <= n; ++r) {
      Matroid m = Matroid::uniform(r, n);
      CHECK(m.rank() == r);
      CHECK((long)m.bases().size() == binom(n, r));
      CHECK(m.loopless());
      CHECK(m.ground() == full_mask(n));
    }
}

TEST_CASE("exchange axiom violations are rejected with a witness") {
  auto code = thrown_code([] {
    Matroid::from_bases(4, {mk({0, 1}), mk({2, 3})});
  });
  REQUIRE(code.has_value());
  CHECK(*code == Errc::exchange_axiom_violation);
  CHECK(thrown_code([] { Matroid::from_bases(3, {}); }) == Errc::empty_basis_set);
  CHECK(thrown_code([] {
          Matroid::from_bases(3, {mk({0, 1}), mk({2})});
        }) == Errc::exchange_axiom_violation);
}

TEST_CASE("fano plane invariants") {
  Matroid f = Matroid::fano();
  CHECK(f.n() == 7);
  CHECK(f.rank() == 3);
  CHECK(f.bases().size() == 28);  // 35 triples minus 7 lines
  auto circuits = f.circuits();
  int three = 0, four = 0;
  for (Mask c : circuits) {
    if (popcount(c) == 3) ++three;
    if (popcount(c) == 4) ++four;
  }
  CHECK(three == 7);
  CHECK(four == 7);
  CHECK(circuits.size() == 14);
  for (Mask h : f.hyperplanes()) CHECK(popcount(h) == 3);
  CHECK(f.hyperplanes().size() == 7);
}

TEST_CASE("dual is an involution and swaps circuits with cocircuits") {
  for (const auto& e : bundled_corpus()) {
    Matroid d = e.matroid.dual();
    CHECK(d.dual() == e.matroid);
    CHECK(d.rank() == popcount(e.matroid.ground()) - e.matroid.rank());
    CHECK(d.circuits() == e.matroid.cocircuits());
    CHECK(d.cocircuits() == e.matroid.circuits());
  }
}

TEST_CASE("rank function is monotone and submodular") {
  for (const Matroid& m : {Matroid::uniform(2, 4), sample_matroid_a(), Matroid::fano()}) {
    for_each_subset(m.ground(), [&](Mask a) {
      for_each_subset(m.ground(), [&](Mask b) {
        CHECK(m.rank(a | b) + m.rank(a & b) <= m.rank(a) + m.rank(b));
        if ((a & ~b) == 0) CHECK(m.rank(a) <= m.rank(b));
      });
    });
  }
}

TEST_CASE("deletion keeps the ambient universe and adds no loops") {
  Matroid m = Matroid::uniform(2, 4);
  Matroid d = m.deletion(bit(3));
  CHECK(d.n() == 4);
  CHECK(d.ground() == mk({0, 1, 2}));
  CHECK(d.loops() == 0);
  CHECK(d.rank() == 2);
  // A deleted vertex is gone from the ground set, not dependent in it.
  CHECK(!has_bit(d.ground(), 3));
  CHECK(d.bases() == Matroid::uniform(2, 3).bases());
}

TEST_CASE("contraction drops the contracted vertices from the ground set") {
  Matroid a = sample_matroid_a();
  Matroid c = a.contract(bit(0));
  CHECK(c.rank() == 2);
  CHECK(c.ground() == mk({1, 2, 3, 4}));
  std::vector<Mask> expect = {mk({1, 2}), mk({1, 3}), mk({2, 3}), mk({1, 4}), mk({2, 4})};
  CHECK(c.bases() == expect);
  CHECK(thrown_code([&] { a.contract(mk({0, 3, 4})); }) == Errc::contract_dependent_set);
}

TEST_CASE("restriction can create a rank drop but never invents bases") {
  Matroid m = Matroid::uniform(2, 4);
  Matroid r = m.restrict_to(mk({0}));
  CHECK(r.rank() == 1);
  CHECK(r.bases() == std::vector<Mask>{mk({0})});
}

TEST_CASE("truncation caps the rank") {
  Matroid m = Matroid::uniform(3, 5);
  Matroid t = m.truncate(2);
  CHECK(t == Matroid::uniform(2, 5));
  Matroid a = sample_matroid_a();
  CHECK(a.truncate(a.rank()) == a);
  CHECK(a.truncate(1).bases().size() == 5);  // loopless rank-1 truncation
  CHECK(thrown_code([&] { a.truncate(4); }) == Errc::invalid_argument);
}

TEST_CASE("direct sum concatenates and rejects label clashes") {
  Matroid right = Matroid::from_bases(3, {mk({0, 1}), mk({0, 2}), mk({1, 2})},
                                      {"y1", "y2", "y3"});
  Matroid s = Matroid::direct_sum(Matroid::uniform(1, 2), right);
  CHECK(s.n() == 5);
  CHECK(s.rank() == 3);
  CHECK(s.bases().size() == 2 * 3);
  CHECK(s.labels() == std::vector<std::string>{"x1", "x2", "y1", "y2", "y3"});
  CHECK(thrown_code([] {
          Matroid::direct_sum(Matroid::uniform(1, 2), Matroid::uniform(1, 2));
        }) == Errc::invalid_argument);
}

TEST_CASE("from_bases_on_ground round-trips minors") {
  Matroid c = sample_matroid_a().contract(bit(0));
  Matroid again = Matroid::from_bases_on_ground(c.n(), c.ground(), c.bases(), c.labels());
  CHECK(again == c);
  CHECK(again.canonical_key() == c.canonical_key());
}

TEST_CASE("independent sets agree with rank") {
  Matroid m = sample_matroid_b();
  auto ind = m.independent_sets();
  std::set<Mask> inds(ind.begin(), ind.end());
  for_each_subset(m.ground(), [&](Mask a) {
    CHECK(inds.count(a) == (m.rank(a) == popcount(a) ? 1u : 0u));
  });
}

TEST_CASE("loops are the vertices missing from every basis") {
  Matroid m = Matroid::from_bases(3, {mk({0, 1})});
  CHECK(m.loops() == mk({2}));
  CHECK(!m.loopless());
  CHECK(Matroid::uniform(2, 4).loopless());
}

TEST_CASE("canonical key ignores labels but distinguishes grounds") {
  Matroid a = Matroid::from_bases(3, {mk({0, 1}), mk({0, 2})}, {"a", "b", "c"});
  Matroid b = Matroid::from_bases(3, {mk({0, 1}), mk({0, 2})});
  CHECK(a.canonical_key() == b.canonical_key());
  CHECK(!(a == b));  // labels differ
  Matroid c = Matroid::uniform(2, 3);
  CHECK(c.restrict_to(mk({0, 1})).canonical_key() !=
        Matroid::uniform(2, 2).canonical_key());
}

TEST_CASE("cocircuits meet every basis") {
  for (const auto& e : bundled_corpus())
    for (Mask c : e.matroid.cocircuits())
      for (Mask b : e.matroid.bases()) CHECK((c & b) != 0);
}

}  // TEST_SUITE
