#pragma once

#include <vector>

#include "matroidal/matroid.hpp"
#include "matroidal/monomial.hpp"

namespace matroidal {

// An integer vertex weighting gamma together with the level ell it is a cover
// for. gamma(F) >= ell over every facet makes it an ell-cover; pointwise
// minimal ell-covers ("basic") biject with the minimal generators of the
// ell-th symbolic power of the cover ideal.
struct Cover {
  std::vector<int> gamma;
  int level = 1;

  int n() const { return (int)gamma.size(); }
  Mask support() const;
  int value_on(Mask s) const;  // gamma(F)
  Monomial monomial() const { return Monomial::from_exponents(gamma); }
  static Cover from_monomial(const Monomial& m, int level);
  bool is_squarefree() const;

  bool operator==(const Cover& o) const = default;
};

// Cover tests against a matroid (facets = bases) or an explicit facet list.
bool is_cover(const Matroid& m, const Cover& c);
bool is_cover(const std::vector<Mask>& facets, const Cover& c);
// Basic: an ell-cover where every supported vertex lies on a facet of value
// exactly ell (equivalently, no single decrement stays a cover).
bool is_basic_cover(const Matroid& m, const Cover& c);
bool is_basic_cover(const std::vector<Mask>& facets, const Cover& c);

// All basic ell-covers of a loopless matroid, in increasing monomial order of
// their exponent vectors.
std::vector<Cover> enumerate_basic_covers(const Matroid& m, int ell);

// Facets on which the cover is tight (value exactly c.level). For a matroid's
// bases this is the basis list of the focal matroid; for a general facet list
// it is the focal subcomplex, which need not be pure or matroidal.
std::vector<Mask> focal_facets(const std::vector<Mask>& facets, const Cover& c);

// The focal matroid of a basic cover, split along the level sets of gamma.
struct FocalDecomposition {
  Cover cover;
  Matroid focal;          // bases of value exactly level; same rank as the host
  Matroid zero_part;      // focal restricted to the complement of supp(gamma)
  Matroid positive_part;  // focal restricted to supp(gamma)
  std::vector<Mask> level_blocks;  // block i = gamma^{-1}(i) within ground

  // Restriction of the focal matroid to level block i.
  Matroid block_restriction(int i) const { return focal.restrict_to(level_blocks[i]); }
};

// Builds the decomposition and asserts its structural facts: the focal bases
// satisfy the exchange axiom, the focal rank equals the host rank, and the
// focal matroid is the direct sum of its level-block restrictions.
FocalDecomposition focal_matroid(const Matroid& m, const Cover& c);

// The cofocal matroid: the focal matroid restricted off supp(gamma). Verifies
// that contracting any basis of the positive part out of the focal matroid
// yields the same basis set, and that those bases are exactly the independent
// H inside supp(gamma) with gamma(H) = level. For squarefree covers also
// verifies that the restriction off the support agrees with the host's.
Matroid cofocal_matroid(const Matroid& m, const Cover& c);

// For n a minimal generator of the ell-th symbolic power (ell detected as the
// minimum of gamma_n over the bases), the k-th symbolic power of its focal
// matroid's cover ideal. Asserts the colon identity
//   result == symbolic_power(m, k * (ell + 1)) : n^k
// (at k = 1 this is the colon of the (ell+1)-st power by n) and that L*n^k is
// a minimal generator of both the focal and host k*(ell+1)-th symbolic powers
// for every generator L of the result.
MonomialIdeal focal_cover_ideal(const Matroid& m, const Monomial& n, int k);

// Summand i-1 of the cover ideal of a focal matroid: the colon of a squarefree
// part of a support-restricted cover ideal, supported on one level block.
struct DecompositionSummand {
  Mask block;
  MonomialIdeal ideal;
};

// Writes the cover ideal of the focal matroid of generator n as a sum of
// support-disjoint summands, one per level block. Asserts both equalities:
// the summands add up to the focal cover ideal, and summand i equals the
// cover ideal of the focal matroid restricted to block i.
std::vector<DecompositionSummand> focal_ideal_decomposition(const Matroid& m,
                                                            const Monomial& n);

// The level of a generator: the minimum of gamma_n over the bases. Fails with
// NotAGenerator unless gamma_n is a basic cover at that level.
int detect_cover_level(const Matroid& m, const Monomial& n);

// Exhaustive exchange checks between each tight basis F of an ell-cover and
// every basis G: along any multi-exchange (F-A)|B the cover value cannot drop
// and support containment is preserved; some bijective single-step exchange
// exists and every one is value-monotone; when G is tight too, the exchanged
// values are equal. Throws DecompositionFailure on any violation.
void check_focal_exchange(const Matroid& m, const Cover& c);

}  // namespace matroidal
