#include "matroidal/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace matroidal {

Monomial Monomial::from_mask(int n, Mask s) {
  Monomial m(n);
  for (int i : bits_of(s)) m.e_[i] = 1;
  return m;
}

Monomial Monomial::from_exponents(std::vector<int> e) {
  Monomial m;
  m.e_ = std::move(e);
  return m;
}

int Monomial::deg() const { return std::accumulate(e_.begin(), e_.end(), 0); }

Mask Monomial::support() const {
  Mask s = 0;
  for (int i = 0; i < n(); ++i)
    if (e_[i] > 0) s |= bit(i);
  return s;
}

bool Monomial::is_squarefree() const {
  return std::all_of(e_.begin(), e_.end(), [](int v) { return v <= 1; });
}

Monomial Monomial::times(const Monomial& o) const {
  Monomial m(n());
  for (int i = 0; i < n(); ++i) m.e_[i] = e_[i] + o.e_[i];
  return m;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial m(n());
  for (int i = 0; i < n(); ++i) m.e_[i] = std::max(e_[i], o.e_[i]);
  return m;
}

Monomial Monomial::gcd(const Monomial& o) const {
  Monomial m(n());
  for (int i = 0; i < n(); ++i) m.e_[i] = std::min(e_[i], o.e_[i]);
  return m;
}

Monomial Monomial::colon(const Monomial& o) const {
  Monomial m(n());
  for (int i = 0; i < n(); ++i) m.e_[i] = std::max(0, e_[i] - o.e_[i]);
  return m;
}

Monomial Monomial::power(int k) const {
  Monomial m(n());
  for (int i = 0; i < n(); ++i) m.e_[i] = e_[i] * k;
  return m;
}

bool Monomial::divides(const Monomial& o) const {
  for (int i = 0; i < n(); ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

int Monomial::value_on(Mask a) const {
  int s = 0;
  for (int i : bits_of(a)) s += e_[i];
  return s;
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
  if (a.deg() != b.deg()) return a.deg() < b.deg();
  return a.exponents() > b.exponents();
}

MonomialIdeal MonomialIdeal::from_gens(int n, std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), GrlexLess{});
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& k : kept)
      if (k.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) kept.push_back(g);
  }
  return MonomialIdeal(n, std::move(kept));
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(),
                     [](const Monomial& g) { return g.is_squarefree(); });
}

Mask MonomialIdeal::msupp() const {
  Mask s = 0;
  for (const auto& g : gens_) s |= g.support();
  return s;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  for (const auto& g : gens_)
    if (g.divides(m)) return true;
  return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& o) const {
  for (const auto& g : o.gens_)
    if (!contains(g)) return false;
  return true;
}

bool MonomialIdeal::is_minimal_generator(const Monomial& m) const {
  return std::find(gens_.begin(), gens_.end(), m) != gens_.end();
}

MonomialIdeal ideal_minimalize(int n, std::vector<Monomial> gens) {
  return MonomialIdeal::from_gens(n, std::move(gens));
}

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<Monomial> gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return MonomialIdeal::from_gens(a.n(), std::move(gens));
}

MonomialIdeal ideal_intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<Monomial> gens;
  for (const auto& x : a.gens())
    for (const auto& y : b.gens()) gens.push_back(x.lcm(y));
  return MonomialIdeal::from_gens(a.n(), std::move(gens));
}

MonomialIdeal ideal_colon(const MonomialIdeal& i, const Monomial& m) {
  std::vector<Monomial> gens;
  gens.reserve(i.gens().size());
  for (const auto& g : i.gens()) gens.push_back(g.colon(m));
  return MonomialIdeal::from_gens(i.n(), std::move(gens));
}

MonomialIdeal ideal_colon(const MonomialIdeal& i, const MonomialIdeal& j) {
  if (j.is_zero()) return MonomialIdeal::unit(i.n());
  bool first = true;
  MonomialIdeal acc;
  for (const auto& g : j.gens()) {
    MonomialIdeal part = ideal_colon(i, g);
    acc = first ? part : ideal_intersect(acc, part);
    first = false;
  }
  return acc;
}

MonomialIdeal ideal_restrict(const MonomialIdeal& i, Mask a) {
  std::vector<Monomial> gens;
  for (const auto& g : i.gens())
    if ((g.support() & ~a) == 0) gens.push_back(g);
  return MonomialIdeal::from_gens(i.n(), std::move(gens));
}

Monomial StandardForm::product(int n) const {
  Monomial m = Monomial::one(n);
  for (const auto& p : parts) m = m.times(p);
  return m;
}

StandardForm standard_form(const Monomial& m) {
  StandardForm sf;
  int top = 0;
  for (int i = 0; i < m.n(); ++i) top = std::max(top, m.exp(i));
  for (int level = 1; level <= top; ++level) {
    Mask s = 0;
    for (int i = 0; i < m.n(); ++i)
      if (m.exp(i) >= level) s |= bit(i);
    sf.parts.push_back(Monomial::from_mask(m.n(), s));
  }
  return sf;
}

MonomialIdeal cover_ideal(const Matroid& m) {
  std::vector<Monomial> gens;
  for (Mask c : m.cocircuits()) gens.push_back(Monomial::from_mask(m.n(), c));
  return MonomialIdeal::from_gens(m.n(), std::move(gens));
}

MonomialIdeal stanley_reisner_ideal(const Matroid& m) {
  std::vector<Monomial> gens;
  for (Mask c : m.circuits()) gens.push_back(Monomial::from_mask(m.n(), c));
  return MonomialIdeal::from_gens(m.n(), std::move(gens));
}

std::vector<Mask> min_primes(const MonomialIdeal& i) {
  if (i.is_zero()) fail(Errc::zero_ideal, "the zero ideal has no minimal primes here");
  if (!i.is_squarefree()) fail(Errc::invalid_argument, "minimal primes need a squarefree ideal");
  std::vector<Mask> supports;
  for (const auto& g : i.gens()) supports.push_back(g.support());
  std::vector<Mask> candidates;
  for_each_subset(i.msupp(), [&](Mask s) { candidates.push_back(s); });
  std::sort(candidates.begin(), candidates.end(), [](Mask a, Mask b) {
    return popcount(a) < popcount(b) || (popcount(a) == popcount(b) && a < b);
  });
  std::vector<Mask> out;
  for (Mask s : candidates) {
    bool hits = true;
    for (Mask t : supports)
      if ((s & t) == 0) {
        hits = false;
        break;
      }
    if (!hits) continue;
    bool minimal = true;
    for (Mask kept : out)
      if ((kept & ~s) == 0) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int height(const MonomialIdeal& i) {
  auto mp = min_primes(i);
  if (mp.empty()) fail(Errc::invalid_argument, "the unit ideal has no height");
  int h = popcount(mp.front());
  for (Mask f : mp) h = std::min(h, popcount(f));
  return h;
}

namespace detail {

bool gamma_is_cover(const std::vector<int>& gamma, const std::vector<Mask>& facets, int ell) {
  for (Mask f : facets) {
    int s = 0;
    for (int v : bits_of(f)) s += gamma[v];
    if (s < ell) return false;
  }
  return true;
}

// Pointwise minimality: no single decrement stays a cover. Equivalently every
// supported vertex lies on a facet of value exactly ell.
bool gamma_is_basic(const std::vector<int>& gamma, const std::vector<Mask>& facets, int ell) {
  if (!gamma_is_cover(gamma, facets, ell)) return false;
  for (int v = 0; v < (int)gamma.size(); ++v) {
    if (gamma[v] == 0) continue;
    bool tight = false;
    for (Mask f : facets) {
      if (!has_bit(f, v)) continue;
      int s = 0;
      for (int w : bits_of(f)) s += gamma[w];
      if (s == ell) {
        tight = true;
        break;
      }
    }
    if (!tight) return false;
  }
  return true;
}

namespace {

struct CoverSearch {
  int ell;
  const std::vector<Mask>& facets;
  std::vector<int> verts;                  // assignment order
  std::vector<std::vector<int>> touching;  // vertex -> facet indices
  std::vector<int> cur;                    // facet value so far
  std::vector<int> avail;                  // max value still addable per facet
  int unsat = 0;
  std::vector<int> gamma;
  std::vector<std::vector<int>>* out;

  void run(int idx) {
    if (unsat == 0) {
      out->push_back(gamma);  // zero tail: positive extensions cannot be minimal
      return;
    }
    if (idx == (int)verts.size()) return;
    int v = verts[idx];
    for (int val = 0; val <= ell; ++val) {
      bool dead = false;
      for (int f : touching[v]) {
        if (cur[f] < ell && val > 0) {
          if (cur[f] + val >= ell) --unsat;
        }
        cur[f] += val;
        avail[f] -= ell;
        if (cur[f] + avail[f] < ell) dead = true;
      }
      // vertices not on any remaining facet never go positive: facets not
      // touched by v are unaffected, so only v's facets need the bound check
      if (!dead) {
        gamma[v] = val;
        run(idx + 1);
        gamma[v] = 0;
      }
      for (int f : touching[v]) {
        avail[f] += ell;
        cur[f] -= val;
        if (cur[f] < ell && val > 0 && cur[f] + val >= ell) ++unsat;
      }
    }
  }
};

}  // namespace

std::vector<std::vector<int>> basic_cover_gammas(int n, Mask verts,
                                                 const std::vector<Mask>& facets,
                                                 int ell, bool pruned) {
  Mask facet_union = 0;
  for (Mask f : facets) facet_union |= f;
  std::vector<int> assign = bits_of(verts & facet_union);
  std::vector<std::vector<int>> candidates;

  if (pruned) {
    CoverSearch cs{ell, facets, assign, {}, {}, {}, 0, std::vector<int>(n, 0), &candidates};
    cs.touching.resize(n);
    for (int fi = 0; fi < (int)facets.size(); ++fi)
      for (int v : bits_of(facets[fi]))
        if (std::find(assign.begin(), assign.end(), v) != assign.end())
          cs.touching[v].push_back(fi);
    cs.cur.assign(facets.size(), 0);
    cs.avail.assign(facets.size(), 0);
    for (int fi = 0; fi < (int)facets.size(); ++fi) {
      int cnt = popcount(facets[fi] & verts & facet_union);
      cs.avail[fi] = ell * cnt;
    }
    cs.unsat = 0;
    bool feasible = true;
    for (int fi = 0; fi < (int)facets.size(); ++fi) {
      if (0 < ell) ++cs.unsat;
      if (cs.avail[fi] < ell) feasible = false;
    }
    if (cs.unsat == 0) {
      candidates.push_back(std::vector<int>(n, 0));
    } else if (feasible) {
      cs.run(0);
    }
  } else {
    // Full box scan over [0,ell]^assign, maintaining facet sums across
    // odometer steps; only pointwise-minimal covers are kept.
    double box = 1;
    for (size_t i = 0; i < assign.size(); ++i) box *= (ell + 1);
    if (box > double(1u << 27))
      fail(Errc::size_bound_exceeded, "exhaustive cover enumeration box too large");
    std::vector<std::vector<int>> touching(n);
    for (int fi = 0; fi < (int)facets.size(); ++fi)
      for (int v : bits_of(facets[fi])) touching[v].push_back(fi);
    std::vector<int> sum(facets.size(), 0);
    int unsat = ell > 0 ? (int)facets.size() : 0;
    std::vector<int> gamma(n, 0);
    auto bump = [&](int v, int delta) {
      for (int fi : touching[v]) {
        bool was = sum[fi] >= ell;
        sum[fi] += delta;
        bool now = sum[fi] >= ell;
        if (was && !now) ++unsat;
        if (!was && now) --unsat;
      }
    };
    while (true) {
      if (unsat == 0) {
        bool basic = true;
        for (int v : assign) {
          if (gamma[v] == 0) continue;
          bool tight = false;
          for (int fi : touching[v])
            if (sum[fi] == ell) {
              tight = true;
              break;
            }
          if (!tight) {
            basic = false;
            break;
          }
        }
        if (basic) candidates.push_back(gamma);
      }
      int k = 0;
      while (k < (int)assign.size() && gamma[assign[k]] == ell) {
        bump(assign[k], -ell);
        gamma[assign[k++]] = 0;
      }
      if (k == (int)assign.size()) break;
      bump(assign[k], 1);
      ++gamma[assign[k]];
    }
  }

  std::vector<std::vector<int>> out;
  for (auto& g : candidates) {
    if (!gamma_is_basic(g, facets, ell)) continue;
    // Enumeration bound check: basic covers never exceed ell anywhere.
    for (int v : g)
      if (v > ell)
        fail(Errc::decomposition_failure, "basic cover exceeded the value bound");
    out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace detail

MonomialIdeal symbolic_power(const Matroid& m, int ell, SymPowerMethod method) {
  if (ell < 1) fail(Errc::invalid_argument, "symbolic power needs ell >= 1");
  if (!m.loopless())
    fail(Errc::loop_present, "symbolic powers here expect a loopless matroid; "
                             "restrict away the loops first");
  if (method == SymPowerMethod::covers) {
    auto gammas = detail::basic_cover_gammas(m.n(), m.ground(), m.bases(), ell, true);
    std::vector<Monomial> gens;
    gens.reserve(gammas.size());
    for (auto& g : gammas) gens.push_back(Monomial::from_exponents(g));
    auto ideal = MonomialIdeal::from_gens(m.n(), gens);
    if (ideal.gens().size() != gammas.size())
      fail(Errc::decomposition_failure,
           "basic covers must biject with minimal generators");
    return ideal;
  }

  // Structure route: products of SF-part generators over partitions of ell
  // with nested supports.
  int top = std::min(ell, m.rank());
  std::vector<MonomialIdeal> sf(top + 1, MonomialIdeal::zero(m.n()));
  for (int c = 1; c <= top; ++c) sf[c] = sf_ell(m, c);

  std::set<Monomial> products;
  std::vector<int> partition;
  auto emit = [&](const std::vector<int>& parts) {
    // Depth-first choice of one generator per part, supports nested downward.
    auto rec = [&](auto&& self, size_t level, Mask prev_supp, const Monomial& acc) -> void {
      if (level == parts.size()) {
        products.insert(acc);
        return;
      }
      for (const auto& g : sf[parts[level]].gens()) {
        Mask s = g.support();
        if (level > 0 && (s & ~prev_supp) != 0) continue;
        self(self, level + 1, s, acc.times(g));
      }
    };
    rec(rec, 0, 0, Monomial::one(m.n()));
  };
  auto rec_parts = [&](auto&& self, int remaining, int maxpart) -> void {
    if (remaining == 0) {
      emit(partition);
      return;
    }
    for (int p = std::min(maxpart, remaining); p >= 1; --p) {
      partition.push_back(p);
      self(self, remaining - p, p);
      partition.pop_back();
    }
  };
  rec_parts(rec_parts, ell, top);
  return MonomialIdeal::from_gens(m.n(), std::vector<Monomial>(products.begin(), products.end()));
}

MonomialIdeal sf_part(const MonomialIdeal& i) {
  std::vector<Monomial> gens;
  for (const auto& g : i.gens())
    if (g.is_squarefree()) gens.push_back(g);
  return MonomialIdeal::from_gens(i.n(), std::move(gens));
}

MonomialIdeal sf_ell(const Matroid& m, int a) {
  if (a < 1) fail(Errc::invalid_argument, "squarefree part level needs a >= 1");
  int k = m.rank() - a + 1;
  if (k < 0) return MonomialIdeal::zero(m.n());
  return cover_ideal(m.truncate(k));
}

MonomialIdeal sf_level_of_squarefree(const MonomialIdeal& i, int a) {
  if (a < 1) fail(Errc::invalid_argument, "squarefree part level needs a >= 1");
  auto primes = min_primes(i);
  std::vector<Monomial> gens;
  std::vector<Mask> found;
  std::vector<Mask> candidates;
  for_each_subset(i.msupp(), [&](Mask s) { candidates.push_back(s); });
  std::sort(candidates.begin(), candidates.end(), [](Mask x, Mask y) {
    return popcount(x) < popcount(y) || (popcount(x) == popcount(y) && x < y);
  });
  for (Mask s : candidates) {
    bool deep = true;
    for (Mask f : primes)
      if (popcount(s & f) < a) {
        deep = false;
        break;
      }
    if (!deep) continue;
    bool minimal = true;
    for (Mask kept : found)
      if ((kept & ~s) == 0) {
        minimal = false;
        break;
      }
    if (minimal) {
      found.push_back(s);
      gens.push_back(Monomial::from_mask(i.n(), s));
    }
  }
  return MonomialIdeal::from_gens(i.n(), std::move(gens));
}

SymbolicType symbolic_type(const Matroid& m, const Monomial& n) {
  auto sf = standard_form(n);
  if (sf.parts.empty()) fail(Errc::not_a_generator, "the unit monomial is never a minimal generator");
  SymbolicType type;
  for (const auto& part : sf.parts) {
    int order = m.rank();
    for (Mask b : m.bases()) order = std::min(order, popcount(part.support() & b));
    if (order < 1) fail(Errc::not_a_generator, "a standard part misses some basis entirely");
    if (!sf_ell(m, order).is_minimal_generator(part))
      fail(Errc::not_a_generator, "a standard part is not a minimal squarefree-part generator");
    type.push_back(order);
  }
  for (size_t i = 1; i < type.size(); ++i)
    if (type[i] > type[i - 1])
      fail(Errc::not_a_generator, "part orders are not non-increasing");
  int ell = std::accumulate(type.begin(), type.end(), 0);
  if (!detail::gamma_is_basic(n.exponents(), m.bases(), ell))
    fail(Errc::not_a_generator, "not a minimal symbolic power generator");
  return type;
}

Monomial divisor_of_type(const Matroid& m, const Monomial& mono, const SymbolicType& c) {
  if (c.empty()) fail(Errc::not_a_sub_partition, "empty type");
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] < 1) fail(Errc::not_a_sub_partition, "type parts must be positive");
    if (i > 0 && c[i] > c[i - 1]) fail(Errc::not_a_sub_partition, "type must be non-increasing");
  }
  auto sf = standard_form(mono);
  if (c.size() > sf.parts.size())
    fail(Errc::not_a_sub_partition, "type longer than the standard form");
  for (size_t i = 0; i < c.size(); ++i) {
    int order = m.rank();
    for (Mask b : m.bases()) order = std::min(order, popcount(sf.parts[i].support() & b));
    if (c[i] > order)
      fail(Errc::not_a_sub_partition, "type exceeds a part's symbolic order");
  }

  std::vector<MonomialIdeal> sfi;
  sfi.reserve(c.size());
  for (int ci : c) sfi.push_back(sf_ell(m, ci));

  bool have = false;
  Monomial best;
  auto rec = [&](auto&& self, size_t level, Mask prev_supp, const Monomial& acc) -> void {
    if (level == c.size()) {
      if (!have || acc.exponents() < best.exponents()) {
        best = acc;
        have = true;
      }
      return;
    }
    Mask inside = sf.parts[level].support();
    for (const auto& g : sfi[level].gens()) {
      Mask s = g.support();
      if ((s & ~inside) != 0) continue;
      if (level > 0 && (s & ~prev_supp) != 0) continue;
      self(self, level + 1, s, acc.times(g));
    }
  };
  rec(rec, 0, 0, Monomial::one(m.n()));
  if (!have)
    fail(Errc::decomposition_failure, "no divisor of the requested type exists");
  return best;
}

}  // namespace matroidal
