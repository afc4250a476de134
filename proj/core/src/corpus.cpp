#include "matroidal/corpus.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "matroidal/error.hpp"
#include "matroidal/resolution.hpp"

namespace matroidal {

namespace {

Mask mask_of(std::initializer_list<int> verts) {
  Mask m = 0;
  for (int v : verts) m |= bit(v);
  return m;
}

// Deterministic Fisher-Yates (std::shuffle is implementation-defined).
template <class T>
void seeded_shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng() % i]);
}

std::vector<Mask> subsets_of_size(int n, int r) {
  std::vector<Mask> out;
  for (Mask s = 0; s < (Mask(1) << n); ++s)
    if (popcount(s) == r) out.push_back(s);
  return out;
}

// Closes a basis set under the exchange axiom by inserting repaired bases.
// Returns an empty vector when a repair candidate leaves the rank profile.
std::vector<Mask> exchange_closure(int n, std::vector<Mask> bases,
                                   std::mt19937_64& rng) {
  std::set<Mask> have(bases.begin(), bases.end());
  bool changed = true;
  while (changed) {
    changed = false;
    for (Mask b1 : have) {
      for (Mask b2 : have) {
        for (int x : bits_of(b1 & ~b2)) {
          bool ok = false;
          for (int y : bits_of(b2 & ~b1))
            if (have.count((b1 & ~bit(x)) | bit(y))) {
              ok = true;
              break;
            }
          if (ok) continue;
          auto swaps = bits_of(b2 & ~b1);
          if (swaps.empty()) return {};
          Mask repaired = (b1 & ~bit(x)) | bit(swaps[rng() % swaps.size()]);
          have.insert(repaired);
          changed = true;
        }
        if (changed) break;
      }
      if (changed) break;
    }
  }
  return std::vector<Mask>(have.begin(), have.end());
}

}  // namespace

Matroid sample_matroid_a() {
  return Matroid::from_bases(
      5,
      {mask_of({0, 1, 2}), mask_of({0, 1, 3}), mask_of({0, 1, 4}),
       mask_of({0, 2, 3}), mask_of({0, 2, 4}), mask_of({1, 2, 3}),
       mask_of({1, 3, 4}), mask_of({2, 3, 4})},
      {"a", "b", "c", "d", "e"});
}

Matroid sample_matroid_b() {
  std::vector<Mask> bases;
  for (Mask s : subsets_of_size(5, 3))
    if (popcount(s & mask_of({0, 1, 2})) >= 2) bases.push_back(s);
  return Matroid::from_bases(5, std::move(bases));
}

std::vector<CorpusEntry> bundled_corpus() {
  std::vector<CorpusEntry> out;
  for (int n = 1; n <= 6; ++n)
    for (int r = 1; r <= n; ++r)
      out.push_back({"uniform-" + std::to_string(r) + "-" + std::to_string(n),
                     Matroid::uniform(r, n)});
  out.push_back({"fano", Matroid::fano()});
  out.push_back({"fano-dual", Matroid::fano().dual()});
  out.push_back({"fano-contract-1", Matroid::fano().contract(bit(0))});

  Matroid a = sample_matroid_a();
  out.push_back({"sample-a", a});
  out.push_back({"sample-a-dual", a.dual()});
  out.push_back({"sample-a-contract-a", a.contract(bit(0))});

  Matroid b = sample_matroid_b();
  out.push_back({"sample-b", b});
  out.push_back({"sample-b-dual", b.dual()});
  out.push_back({"sample-b-contract-1", b.contract(bit(0))});
  return out;
}

std::vector<CorpusEntry> random_corpus(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<CorpusEntry> out;
  std::set<std::string> seen;
  while ((int)out.size() < count) {
    int n = 4 + (int)(rng() % 4);
    int max_r = std::min(4, n - 1);
    int r = 2 + (int)(rng() % (max_r - 1));
    auto pool = subsets_of_size(n, r);
    seeded_shuffle(pool, rng);
    int k = 2 + (int)(rng() % 4);
    std::vector<Mask> start(pool.begin(), pool.begin() + std::min((size_t)k, pool.size()));
    std::vector<Mask> closed = exchange_closure(n, start, rng);
    if (closed.empty()) continue;

    Mask covered = 0;
    for (Mask b : closed) covered |= b;
    if (covered != full_mask(n)) continue;

    Matroid m = Matroid::from_bases(n, closed);
    if (!seen.insert(m.canonical_key()).second) continue;
    out.push_back({"random-" + std::to_string(out.size() + 1), std::move(m)});
  }
  return out;
}

std::vector<MonomialIdeal> random_non_matroidal_ideals(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<MonomialIdeal> out;
  std::set<std::string> seen;
  while ((int)out.size() < count) {
    int n = 4 + (int)(rng() % 3);
    int k = 3 + (int)(rng() % 4);
    std::vector<Monomial> gens;
    for (int i = 0; i < k; ++i) {
      int size = 2 + (int)(rng() % 2);
      Mask s = 0;
      while (popcount(s) < size) s |= bit((int)(rng() % n));
      gens.push_back(Monomial::from_mask(n, s));
    }
    MonomialIdeal ideal = MonomialIdeal::from_gens(n, std::move(gens));
    if (ideal.gens().size() < 2) continue;
    if (height(ideal) < 2) continue;

    std::vector<Mask> supports;
    for (const auto& g : ideal.gens()) supports.push_back(g.support());
    if (circuit_axioms_hold(supports)) continue;

    std::string key = std::to_string(ideal.n());
    for (const auto& g : ideal.gens()) key += "|" + std::to_string(g.support());
    if (!seen.insert(key).second) continue;
    out.push_back(std::move(ideal));
  }
  return out;
}

}  // namespace matroidal
