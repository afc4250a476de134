#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "matroidal/matroid.hpp"
#include "matroidal/monomial.hpp"

namespace matroidal {

struct CorpusEntry {
  std::string name;
  Matroid matroid;
};

// Rank-3 matroid on {a,...,e} whose cover ideal is (ad, ace, abe, bc, bde, cde).
Matroid sample_matroid_a();

// Rank-3 matroid on [5]: bases are the triples containing at least two of {1,2,3}.
Matroid sample_matroid_b();

// Uniform matroids with 1 <= r <= n <= 6, the Fano plane and its dual, the two
// sample matroids with their duals and one-vertex contractions, and a
// contraction of the Fano plane.
std::vector<CorpusEntry> bundled_corpus();

// Seeded loopless matroids with n <= 7, built by closing random basis sets
// under the exchange axiom (resampling when repair degenerates).
std::vector<CorpusEntry> random_corpus(std::uint64_t seed, int count);

// Seeded squarefree ideals of height >= 2 whose generator supports fail the
// circuit axioms.
std::vector<MonomialIdeal> random_non_matroidal_ideals(std::uint64_t seed, int count);

}  // namespace matroidal
