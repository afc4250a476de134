#pragma once

#include <vector>

#include "matroidal/betti.hpp"
#include "matroidal/matroid.hpp"
#include "matroidal/monomial.hpp"

namespace matroidal {

// A simplicial complex by its facets. The void complex (no faces at all,
// empty facet list) and the irrelevant complex {∅} (single empty facet) are
// distinct values.
struct SimplicialComplex {
  int n = 0;
  std::vector<Mask> facets;  // sorted, pairwise incomparable

  // Keeps the maximal sets only.
  static SimplicialComplex from_facets(int n, std::vector<Mask> facets);
  static SimplicialComplex void_complex(int n) { return SimplicialComplex{n, {}}; }
  static SimplicialComplex irrelevant_complex(int n) { return SimplicialComplex{n, {0}}; }

  bool is_void() const { return facets.empty(); }
  // Downward closure, sorted by cardinality then value. Empty for the void complex.
  std::vector<Mask> faces() const;
  SimplicialComplex restrict_to(Mask s) const;

  bool operator==(const SimplicialComplex& o) const = default;
};

// Reduced rational homology ranks, indexed by d+1 so that entry 0 is the rank
// of H~_{-1} (1 exactly for the irrelevant complex). Empty for the void complex.
std::vector<long> reduced_homology(const SimplicialComplex& c);

// Multigraded Betti numbers of R/i over a characteristic-zero field for a
// squarefree ideal i, by reduced homology of vertex-restricted complexes of
// the complex whose minimal non-faces are the generator supports. For
// non-matroidal inputs the table is the characteristic-zero one.
BettiTable hochster_betti(const MonomialIdeal& i);

// Minimal elements under divisibility of the pairwise generator lcms: the
// homological degree 2 multidegree support of the Taylor complex.
std::vector<Monomial> lcm2_shifts(const MonomialIdeal& i);

// Symbolic power of a cover ideal by unpruned exhaustive cover enumeration;
// independent oracle for the pruned and structure-theorem routes.
MonomialIdeal brute_symbolic(const Matroid& m, int ell);

namespace detail {
// Reduced homology ranks from an explicit face list (downward closed).
std::vector<long> homology_of_faces(const std::vector<Mask>& faces);
// Exact rank of an integer matrix via fraction-free elimination.
long integer_matrix_rank(std::vector<std::vector<long long>> rows);
}  // namespace detail

}  // namespace matroidal
