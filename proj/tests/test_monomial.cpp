#include <algorithm>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "matroidal/corpus.hpp"

using namespace matroidal;
using namespace testutil;

TEST_SUITE("monomial") {

TEST_CASE("basic monomial arithmetic") {
  Monomial a = mono(4, "x1^2*x2");
  Monomial b = mono(4, "x2*x3");
  CHECK(a.deg() == 3);
  CHECK(a.times(b) == mono(4, "x1^2*x2^2*x3"));
  CHECK(a.lcm(b) == mono(4, "x1^2*x2*x3"));
  CHECK(a.gcd(b) == mono(4, "x2"));
  CHECK(a.colon(b) == mono(4, "x1^2"));   // truncated exponent subtraction
  CHECK(b.colon(a) == mono(4, "x3"));
  CHECK(a.power(2) == mono(4, "x1^4*x2^2"));
  CHECK(a.squarefree_part() == mono(4, "x1*x2"));
  CHECK(mono(4, "x2").divides(a));
  CHECK(!a.divides(b));
  CHECK(a.support() == mk({0, 1}));
  CHECK(a.value_on(mk({0, 2})) == 2);
  CHECK(!a.is_squarefree());
  CHECK(b.is_squarefree());
}

TEST_CASE("generator order is degree-then-lexicographic") {
  MonomialIdeal j = cover_ideal(Matroid::uniform(3, 4));
  std::vector<Monomial> expect = {
      mono(4, "x1*x2"), mono(4, "x1*x3"), mono(4, "x1*x4"),
      mono(4, "x2*x3"), mono(4, "x2*x4"), mono(4, "x3*x4")};
  CHECK(j.gens() == expect);
}

TEST_CASE("minimalization removes divisible generators") {
  MonomialIdeal i = ideal(3, "x1*x2, x1*x2*x3, x1^2*x2, x3");
  CHECK(i == ideal(3, "x3, x1*x2"));
  CHECK(i.is_minimal_generator(mono(3, "x3")));
  CHECK(!i.is_minimal_generator(mono(3, "x1*x2*x3")));
  CHECK(i.contains(mono(3, "x1*x2*x3")));
  CHECK(!i.contains(mono(3, "x1")));
}

TEST_CASE("colon, sum, intersection, and restriction") {
  MonomialIdeal j = cover_ideal(Matroid::uniform(2, 3));
  CHECK(ideal_colon(j, mono(3, "x3")) == ideal(3, "x1, x2"));
  CHECK(ideal_sum(ideal(3, "x1"), ideal(3, "x2^2")) == ideal(3, "x1, x2^2"));
  CHECK(ideal_intersect(ideal(3, "x1"), ideal(3, "x2")) == ideal(3, "x1*x2"));
  CHECK(ideal_restrict(j, mk({0, 1})) == ideal(3, "x1*x2"));
  CHECK(ideal_colon(j, j) == MonomialIdeal::unit(3));
}

TEST_CASE("restriction of a cover ideal can be smaller than the minor's cover ideal") {
  MonomialIdeal j = cover_ideal(Matroid::uniform(2, 4));
  CHECK(ideal_restrict(j, mk({0, 1})).is_zero());
  MonomialIdeal restricted_cover = cover_ideal(Matroid::uniform(2, 4).restrict_to(mk({0, 1})));
  CHECK(restricted_cover == ideal(4, "x1, x2"));
  // Height of the restricted ideal matches the smallest basis trace.
  MonomialIdeal j3 = ideal_restrict(j, mk({0, 1, 2}));
  CHECK(j3 == ideal(4, "x1*x2*x3"));
  Matroid u24 = Matroid::uniform(2, 4);
  int smallest_trace = 4;
  for (Mask b : u24.bases())
    smallest_trace = std::min(smallest_trace, popcount(b & mk({0, 1, 2})));
  CHECK(height(j3) == smallest_trace);
}

TEST_CASE("restriction does not commute with colon in general") {
  MonomialIdeal j = cover_ideal(Matroid::uniform(2, 3));
  Mask a = mk({0, 1});
  Monomial n = mono(3, "x3");
  CHECK(ideal_colon(ideal_restrict(j, a), n) == ideal(3, "x1*x2"));
  CHECK(ideal_restrict(ideal_colon(j, n), a) == ideal(3, "x1, x2"));
}

TEST_CASE("contraction cover ideal equals the generator restriction") {
  Matroid a = sample_matroid_a();
  MonomialIdeal j = cover_ideal(a);
  CHECK(j == ideal_from_text("a*d, b*c, a*b*e, a*c*e, b*d*e, c*d*e", a.labels()));
  MonomialIdeal contracted = cover_ideal(a.contract(bit(0)));
  CHECK(contracted == ideal_restrict(j, mk({1, 2, 3, 4})));
  CHECK(contracted == ideal_from_text("b*c, b*d*e, c*d*e", a.labels()));
}

TEST_CASE("minimal primes of a cover ideal are the bases") {
  for (const auto& e : {sample_matroid_a(), Matroid::uniform(2, 4), Matroid::fano()}) {
    auto primes = min_primes(cover_ideal(e));
    auto bases = e.bases();
    std::sort(primes.begin(), primes.end());
    std::sort(bases.begin(), bases.end());
    CHECK(primes == bases);
    CHECK(height(cover_ideal(e)) == e.rank());
  }
}

TEST_CASE("minimal primes of a non-matroidal ideal") {
  MonomialIdeal j = ideal(5, "x1*x2, x1*x3, x3*x4, x4*x5, x2*x3*x5");
  auto primes = min_primes(j);
  std::vector<Mask> expect = {mk({0, 1, 3}), mk({0, 2, 3}), mk({0, 2, 4}),
                              mk({0, 3, 4}), mk({1, 2, 3}), mk({1, 2, 4})};
  std::sort(primes.begin(), primes.end());
  std::sort(expect.begin(), expect.end());
  CHECK(primes == expect);
  CHECK(height(j) == 3);
  CHECK(thrown_code([] { min_primes(MonomialIdeal::zero(2)); }) == Errc::zero_ideal);
}

TEST_CASE("standard form splits a monomial into nested squarefree parts") {
  Monomial m = mono(3, "x1^3*x2*x3^2");
  StandardForm f = standard_form(m);
  REQUIRE(f.parts.size() == 3);
  CHECK(f.parts[0] == mono(3, "x1*x2*x3"));
  CHECK(f.parts[1] == mono(3, "x1*x3"));
  CHECK(f.parts[2] == mono(3, "x1"));
  CHECK(f.product(3) == m);
  CHECK(standard_form(Monomial::one(3)).parts.empty());
}

TEST_CASE("lcm, gcd, and colon act partwise on standard forms") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> ea(5), eb(5);
    for (int v = 0; v < 5; ++v) {
      ea[v] = (int)(rng() % 5);
      eb[v] = (int)(rng() % 5);
    }
    Monomial a = Monomial::from_exponents(ea);
    Monomial b = Monomial::from_exponents(eb);
    auto fa = standard_form(a).parts;
    auto fb = standard_form(b).parts;
    size_t s = std::max(fa.size(), fb.size());
    fa.resize(s, Monomial::one(5));
    fb.resize(s, Monomial::one(5));
    Monomial l = Monomial::one(5), g = Monomial::one(5), c = Monomial::one(5);
    for (size_t i = 0; i < s; ++i) {
      l = l.times(fa[i].lcm(fb[i]));
      g = g.times(fa[i].gcd(fb[i]));
      c = c.times(fa[i].colon(fb[i]));
    }
    CHECK(l == a.lcm(b));
    CHECK(g == a.gcd(b));
    CHECK(c == a.colon(b));
    // The partwise lcm factors are exactly the standard form of the lcm.
    auto fl = standard_form(a.lcm(b)).parts;
    fl.resize(s, Monomial::one(5));
    for (size_t i = 0; i < s; ++i) CHECK(fl[i] == fa[i].lcm(fb[i]));
  }
}

TEST_CASE("symbolic square of the triangle cover ideal") {
  Matroid m = Matroid::uniform(2, 3);
  MonomialIdeal sym = symbolic_power(m, 2, SymPowerMethod::covers);
  CHECK(sym == ideal(3, "x1*x2*x3, x1^2*x2^2, x1^2*x3^2, x2^2*x3^2"));
  CHECK(sym == symbolic_power(m, 2, SymPowerMethod::structure));
  CHECK(sf_part(sym) == ideal(3, "x1*x2*x3"));
  CHECK(sym.msupp() == mk({0, 1, 2}));
  // Minimal primes live on the radical, which is the cover ideal itself.
  auto primes = min_primes(cover_ideal(m));
  std::sort(primes.begin(), primes.end());
  CHECK(primes == std::vector<Mask>{mk({0, 1}), mk({0, 2}), mk({1, 2})});
  // The symbolic square is the intersection of the squared minimal primes.
  MonomialIdeal meet = MonomialIdeal::unit(3);
  for (Mask p : primes) {
    std::vector<Monomial> lin;
    for (int v = 0; v < 3; ++v)
      if (p & bit(v)) lin.push_back(Monomial::from_mask(3, bit(v)));
    std::vector<Monomial> sq;
    for (size_t a = 0; a < lin.size(); ++a)
      for (size_t b = a; b < lin.size(); ++b) sq.push_back(lin[a].times(lin[b]));
    meet = ideal_intersect(meet, MonomialIdeal::from_gens(3, std::move(sq)));
  }
  CHECK(sym == meet);
}

TEST_CASE("symbolic powers by covers and by structure agree") {
  for (const Matroid& m : {Matroid::uniform(2, 4), Matroid::uniform(3, 5),
                           sample_matroid_a(), sample_matroid_b(),
                           sample_matroid_a().contract(bit(0))}) {
    for (int ell = 1; ell <= m.rank() + 2; ++ell)
      CHECK(symbolic_power(m, ell, SymPowerMethod::covers) ==
            symbolic_power(m, ell, SymPowerMethod::structure));
  }
}

TEST_CASE("symbolic powers restrict along contractions") {
  for (const Matroid& m : {Matroid::uniform(2, 4), sample_matroid_a()}) {
    for (int v : bits_of(m.ground())) {
      if (!m.independent(bit(v))) continue;
      Matroid c = m.contract(bit(v));
      for (int ell = 1; ell <= 3; ++ell) {
        MonomialIdeal whole = symbolic_power(m, ell, SymPowerMethod::covers);
        std::vector<Monomial> kept;
        for (const auto& g : whole.gens())
          if (!has_bit(g.support(), v)) kept.push_back(g);
        CHECK(MonomialIdeal::from_gens(m.n(), kept) ==
              symbolic_power(c, ell, SymPowerMethod::covers));
      }
    }
  }
}

TEST_CASE("squarefree symbolic parts are truncation cover ideals") {
  Matroid m = sample_matroid_a();
  CHECK(sf_ell(m, 1) == cover_ideal(m));
  CHECK(sf_ell(m, 2) == cover_ideal(m.truncate(2)));
  CHECK(sf_ell(m, 3) == cover_ideal(m.truncate(1)));
  CHECK(sf_ell(m, 4).is_zero());
  for (int ell = 1; ell <= 3; ++ell)
    CHECK(sf_ell(m, ell) == sf_part(symbolic_power(m, ell, SymPowerMethod::covers)));
}

TEST_CASE("squarefree level map is additive with a shift") {
  Matroid m = Matroid::uniform(3, 5);
  MonomialIdeal j = cover_ideal(m);
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; a + b - 1 <= 3; ++b)
      CHECK(sf_level_of_squarefree(sf_ell(m, a), b) == sf_ell(m, a + b - 1));
  CHECK(sf_level_of_squarefree(j, 1) == j);
  CHECK(sf_level_of_squarefree(j, 4).is_zero());
}

TEST_CASE("symbolic type of generators") {
  Matroid m = Matroid::uniform(2, 3);
  CHECK(symbolic_type(m, mono(3, "x1*x2*x3")) == SymbolicType{2});
  CHECK(symbolic_type(m, mono(3, "x1^2*x2^2")) == SymbolicType{1, 1});
  CHECK(symbolic_type(m, mono(3, "x1^2*x2^2*x3")) == SymbolicType{2, 1});
  CHECK(thrown_code([&] { symbolic_type(m, Monomial::one(3)); }) ==
        Errc::not_a_generator);
}

TEST_CASE("divisors of a chosen sub-partition type") {
  Matroid m = Matroid::uniform(2, 3);
  Monomial big = mono(3, "x1^2*x2^2*x3");
  CHECK(divisor_of_type(m, big, {2, 1}) == big);
  CHECK(divisor_of_type(m, big, {1, 1}) == mono(3, "x1^2*x2^2"));
  CHECK(divisor_of_type(m, big, {2}) == mono(3, "x1*x2*x3"));
  CHECK(divisor_of_type(m, big, {1}) == mono(3, "x2*x3"));
  CHECK(thrown_code([&] { divisor_of_type(m, big, {3}); }) == Errc::not_a_sub_partition);
  for (SymbolicType c : {SymbolicType{2, 1}, SymbolicType{1, 1}, SymbolicType{2}}) {
    Monomial d = divisor_of_type(m, big, c);
    CHECK(d.divides(big));
    CHECK(symbolic_type(m, d) == c);
  }
}

TEST_CASE("cover ideal vs stanley-reisner duality") {
  for (const auto& e : bundled_corpus()) {
    CHECK(cover_ideal(e.matroid) == stanley_reisner_ideal(e.matroid.dual()));
    CHECK(stanley_reisner_ideal(e.matroid) == cover_ideal(e.matroid.dual()));
  }
}

}  // TEST_SUITE
