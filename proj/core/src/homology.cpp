#include "matroidal/homology.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <boost/multiprecision/cpp_int.hpp>

namespace matroidal {

using boost::multiprecision::cpp_int;

SimplicialComplex SimplicialComplex::from_facets(int n, std::vector<Mask> facets) {
  if (n < 0 || n > 31) fail(Errc::invalid_argument, "vertex count out of range");
  for (Mask f : facets)
    if ((f & ~full_mask(n)) != 0)
      fail(Errc::invalid_argument, "facet leaves the vertex set");
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  std::vector<Mask> maximal;
  for (Mask f : facets) {
    bool dominated = false;
    for (Mask g : facets)
      if (g != f && (f & ~g) == 0) {
        dominated = true;
        break;
      }
    if (!dominated) maximal.push_back(f);
  }
  return SimplicialComplex{n, std::move(maximal)};
}

std::vector<Mask> SimplicialComplex::faces() const {
  std::set<Mask> all;
  for (Mask f : facets) for_each_subset(f, [&](Mask s) { all.insert(s); });
  std::vector<Mask> out(all.begin(), all.end());
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
    return popcount(a) < popcount(b) || (popcount(a) == popcount(b) && a < b);
  });
  return out;
}

SimplicialComplex SimplicialComplex::restrict_to(Mask s) const {
  std::vector<Mask> cut;
  cut.reserve(facets.size());
  for (Mask f : facets) cut.push_back(f & s);
  return from_facets(n, std::move(cut));
}

namespace detail {

long integer_matrix_rank(std::vector<std::vector<long long>> rows) {
  if (rows.empty() || rows[0].empty()) return 0;
  int nr = (int)rows.size(), nc = (int)rows[0].size();
  std::vector<std::vector<cpp_int>> a(nr, std::vector<cpp_int>(nc));
  for (int r = 0; r < nr; ++r)
    for (int c = 0; c < nc; ++c) a[r][c] = rows[r][c];

  int rank = 0;
  cpp_int prev = 1;
  for (int col = 0; col < nc && rank < nr; ++col) {
    int pivot = -1;
    for (int r = rank; r < nr; ++r)
      if (a[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[pivot], a[rank]);
    for (int r = rank + 1; r < nr; ++r) {
      for (int c = col + 1; c < nc; ++c)
        a[r][c] = (a[rank][col] * a[r][c] - a[r][col] * a[rank][c]) / prev;
      a[r][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

std::vector<long> homology_of_faces(const std::vector<Mask>& faces) {
  if (faces.empty()) return {};
  int top = 0;
  for (Mask f : faces) top = std::max(top, popcount(f));
  std::vector<std::vector<Mask>> by_size(top + 1);
  for (Mask f : faces) by_size[popcount(f)].push_back(f);
  std::vector<std::map<Mask, int>> index(top + 1);
  for (int s = 0; s <= top; ++s) {
    std::sort(by_size[s].begin(), by_size[s].end());
    for (int i = 0; i < (int)by_size[s].size(); ++i) index[s][by_size[s][i]] = i;
  }

  // ranks[s] = rank of the boundary map from size-s faces to size-(s-1) faces.
  std::vector<long> ranks(top + 2, 0);
  for (int s = 1; s <= top; ++s) {
    std::vector<std::vector<long long>> mat(by_size[s].size(),
                                            std::vector<long long>((size_t)by_size[s - 1].size(), 0));
    for (int i = 0; i < (int)by_size[s].size(); ++i) {
      Mask f = by_size[s][i];
      int sign = 1;
      for (int v : bits_of(f)) {
        auto it = index[s - 1].find(f & ~bit(v));
        if (it == index[s - 1].end())
          fail(Errc::invalid_argument, "face list is not downward closed");
        mat[i][it->second] = sign;
        sign = -sign;
      }
    }
    ranks[s] = integer_matrix_rank(std::move(mat));
  }

  std::vector<long> out(top + 1, 0);
  for (int s = 0; s <= top; ++s)
    out[s] = (long)by_size[s].size() - ranks[s] - ranks[s + 1];
  return out;
}

}  // namespace detail

std::vector<long> reduced_homology(const SimplicialComplex& c) {
  if (c.n > 16) fail(Errc::size_bound_exceeded, "homology is bounded to 16 vertices");
  return detail::homology_of_faces(c.faces());
}

BettiTable hochster_betti(const MonomialIdeal& i) {
  if (!i.is_squarefree())
    fail(Errc::invalid_argument, "the homology oracle expects a squarefree ideal");
  if (i.is_unit())
    fail(Errc::invalid_argument, "the unit ideal has no minimal resolution shifts");
  BettiTable table(i.n());
  if (i.is_zero()) return table;
  if (popcount(i.msupp()) > 16)
    fail(Errc::size_bound_exceeded, "the homology oracle is bounded to 16 used variables");

  std::vector<Mask> sup;
  sup.reserve(i.gens().size());
  for (const auto& g : i.gens()) sup.push_back(g.support());

  // Multidegrees with nonzero entries are unions of generator supports.
  std::set<Mask> sigmas(sup.begin(), sup.end());
  std::vector<Mask> queue(sigmas.begin(), sigmas.end());
  while (!queue.empty()) {
    Mask cur = queue.back();
    queue.pop_back();
    for (Mask s : sup) {
      Mask u = cur | s;
      if (sigmas.insert(u).second) queue.push_back(u);
    }
  }

  for (Mask sigma : sigmas) {
    std::vector<Mask> faces;
    for_each_subset(sigma, [&](Mask s) {
      for (Mask g : sup)
        if ((g & ~s) == 0) return;
      faces.push_back(s);
    });
    std::vector<long> ranks = detail::homology_of_faces(faces);
    int size = popcount(sigma);
    for (int h = 1; h <= size; ++h) {
      int idx = size - h;  // dimension (size - h - 1), shifted by one
      if (idx < (int)ranks.size() && ranks[idx] > 0)
        table.add(h, Monomial::from_mask(i.n(), sigma), ranks[idx]);
    }
  }
  return table;
}

std::vector<Monomial> lcm2_shifts(const MonomialIdeal& i) {
  if (i.gens().size() < 2) return {};  // no pairs, no second shifts
  std::vector<Monomial> all;
  for (size_t a = 0; a < i.gens().size(); ++a)
    for (size_t b = a + 1; b < i.gens().size(); ++b)
      all.push_back(i.gens()[a].lcm(i.gens()[b]));
  std::sort(all.begin(), all.end(), GrlexLess{});
  all.erase(std::unique(all.begin(), all.end()), all.end());
  std::vector<Monomial> out;
  for (const auto& m : all) {
    bool divisible = false;
    for (const auto& kept : out)
      if (kept.divides(m)) {
        divisible = true;
        break;
      }
    if (!divisible) out.push_back(m);
  }
  return out;
}

MonomialIdeal brute_symbolic(const Matroid& m, int ell) {
  if (ell < 1) fail(Errc::invalid_argument, "symbolic power needs ell >= 1");
  if (!m.loopless())
    fail(Errc::loop_present, "symbolic powers here expect a loopless matroid");
  auto gammas = detail::basic_cover_gammas(m.n(), m.ground(), m.bases(), ell, false);
  std::vector<Monomial> gens;
  gens.reserve(gammas.size());
  for (auto& g : gammas) gens.push_back(Monomial::from_exponents(std::move(g)));
  return MonomialIdeal::from_gens(m.n(), std::move(gens));
}

}  // namespace matroidal
